"""
Normalization of general Fibonacci digit strings into Zeckendorf form.

Digit position p (LSD-first) weighs F_{p+2}. The rewriting path applies the
local rules

    p = 0:   2·F_2     -> F_3
    p = 1:   2·F_3     -> F_4 + F_2
    p >= 2:  2·F_{p+2} -> F_{p+3} + F_p
    any p:   F_{p+2} + F_{p+3} -> F_{p+4}

lowest position first until no rule applies. Every rule preserves the value
and the rule set always terminates, so the fixpoint is the Zeckendorf form.
"""
import heapq
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from zeckwin.config.settings import settings
from zeckwin.errors import DomainError, FormatError
from zeckwin.numeration.zeckendorf import ZeckWord, digit_value, zeck_encode

logger = logging.getLogger(__name__)


@dataclass
class RewriteOutcome:
    ok: bool
    steps: int
    # "frozen" | "digit_bound" | "step_cap" when ok is False
    reason: Optional[str] = None
    position: Optional[int] = None


def _ensure(digits: List[int], index: int) -> None:
    if index >= len(digits):
        digits.extend([0] * (index + 1 - len(digits)))


def rewrite_in_place(
    digits: List[int],
    dirty: Sequence[int],
    *,
    floor: int = 0,
    digit_bound: Optional[int] = None,
    step_cap: Optional[int] = None,
) -> RewriteOutcome:
    """Apply the rewriting rules starting from the dirty positions.

    Positions below ``floor`` are frozen: a rule that would change one stops
    the run with reason "frozen" and leaves ``digits`` part-way rewritten.
    """
    heap = sorted(set(p for p in dirty if p >= 0))
    queued = set(heap)
    steps = 0

    def touch(*positions: int) -> None:
        for p in positions:
            for q in (p - 1, p, p + 1):
                if q >= 0 and q not in queued:
                    queued.add(q)
                    heapq.heappush(heap, q)

    while heap:
        p = heapq.heappop(heap)
        queued.discard(p)
        if p >= len(digits):
            continue
        d = digits[p]
        if d == 0:
            continue

        if d >= 2:
            if p == 0:
                targets = (1,)
            elif p == 1:
                targets = (2, 0)
            else:
                targets = (p + 1, p - 2)
            if p < floor or min(targets) < floor:
                return RewriteOutcome(False, steps, "frozen", p)
            digits[p] -= 2
            for t in targets:
                _ensure(digits, t)
                digits[t] += 1
            changed = (p,) + targets
        else:
            _ensure(digits, p + 1)
            if digits[p + 1] >= 1:
                low = p
            elif p >= 1 and digits[p - 1] >= 1:
                low = p - 1
            else:
                continue
            if low < floor:
                return RewriteOutcome(False, steps, "frozen", low)
            digits[low] -= 1
            digits[low + 1] -= 1
            _ensure(digits, low + 2)
            digits[low + 2] += 1
            changed = (low, low + 1, low + 2)

        steps += 1
        if digit_bound is not None:
            for t in changed:
                if digits[t] > digit_bound:
                    return RewriteOutcome(False, steps, "digit_bound", t)
        if step_cap is not None and steps > step_cap:
            return RewriteOutcome(False, steps, "step_cap", p)
        touch(*changed)

    return RewriteOutcome(True, steps)


def default_step_cap(digits: Sequence[int]) -> int:
    size = len(digits) + 2 * sum(digits) + 8
    return 4 * size * size


def digits_to_word(digits: Sequence[int]) -> ZeckWord:
    """MSD-first word of a normalized LSD-first digit list."""
    top = len(digits)
    while top > 0 and digits[top - 1] == 0:
        top -= 1
    return "".join(str(d) for d in reversed(digits[:top]))


def _check_digits(digits: Sequence[int], bound: Optional[int]) -> None:
    if any(d < 0 for d in digits):
        raise FormatError(f"digit string has a negative digit: {list(digits)}")
    if bound is not None and any(d > bound for d in digits):
        raise DomainError(f"digit string exceeds the digit bound {bound}: {list(digits)}")


def normalize_by_value(digits: Sequence[int]) -> ZeckWord:
    value = digit_value(digits)
    if value == 0:
        raise DomainError("digit string has value 0, which has no Zeckendorf word")
    return zeck_encode(value)


def normalize_by_rewriting(digits: Sequence[int]) -> Optional[ZeckWord]:
    """Rewriting-rule normalization; None if the step cap was reached."""
    work = list(digits)
    outcome = rewrite_in_place(work, range(len(work)), step_cap=default_step_cap(digits))
    if not outcome.ok:
        return None
    word = digits_to_word(work)
    if not word:
        raise DomainError("digit string has value 0, which has no Zeckendorf word")
    return word


def normalize(digits: Sequence[int], bound: Optional[int] = None) -> ZeckWord:
    """Zeckendorf word with the same value as the LSD-first digit string."""
    if bound is None:
        bound = settings.NORMALIZE_DIGIT_BOUND
    _check_digits(digits, bound)
    word = normalize_by_rewriting(digits)
    if word is None:
        logger.warning("Rewriting hit its step cap on %s; using the value path", list(digits))
        return normalize_by_value(digits)
    return word
