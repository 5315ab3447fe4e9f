"""Exception types shared across zeckwin."""


class ZeckwinError(Exception):
    """Base class for every error the CLI reports with exit code 1."""


class DomainError(ZeckwinError, ValueError):
    """An argument lies outside an operation's mathematical domain."""


class FormatError(ZeckwinError, ValueError):
    """A text or digit form violates its format rules."""


class ThetaConflicted(ZeckwinError):
    """The sampled window map is not a function; oracle mode is required."""


class ThetaIncomplete(ZeckwinError):
    """The orbit reached a window the sampled window map never saw."""
