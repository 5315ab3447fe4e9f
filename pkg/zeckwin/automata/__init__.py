from .avoidance import (
    ALPHABET,
    AvoidanceDFA,
    ForbiddenFamily,
    avoids,
    build_avoidance_dfa,
    naive_avoids,
    parse_family,
)

__all__ = [
    "ALPHABET",
    "AvoidanceDFA",
    "ForbiddenFamily",
    "avoids",
    "build_avoidance_dfa",
    "naive_avoids",
    "parse_family",
]
