"""
Multiplication by a fixed q on Zeckendorf words.

Three paths compute Z(qN):

* ``mul_oracle``          exact big-integer product, then greedy encoding;
* ``stream_multiply``     LSD-first machine with a bounded digit buffer and a
                          bounded emission delay, which either reproduces the
                          oracle or returns a ``StreamFailure``;
* ``mul_addition_chain``  doubling and adding along the binary expansion of q.
"""
import logging
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field, model_validator

from zeckwin.errors import DomainError
from zeckwin.numeration.arithmetic import zeck_add, zeck_double
from zeckwin.numeration.normalize import digits_to_word, rewrite_in_place
from zeckwin.numeration.zeckendorf import ZeckWord, c_of_q, lsd_digits, zeck_encode

logger = logging.getLogger(__name__)

_FAILURE_REASONS = {
    "frozen": "delay_bound",
    "digit_bound": "carry_bound",
    "step_cap": "step_cap",
}


class MultiplierSpec(BaseModel):
    q: int = Field(ge=2)
    c_bound: int = 0
    carry_bound: Optional[int] = Field(default=None, ge=0)
    delay_cap: Optional[int] = Field(default=None, ge=1)

    model_config = {"frozen": True}

    @model_validator(mode="before")
    @classmethod
    def _fill_bounds(cls, data):
        if isinstance(data, dict) and data.get("q") is not None and data["q"] >= 2:
            c = c_of_q(data["q"])
            data = dict(data)
            data["c_bound"] = c
            if data.get("carry_bound") is None:
                data["carry_bound"] = data["q"] + c
            if data.get("delay_cap") is None:
                data["delay_cap"] = c + 2
        return data

    @classmethod
    def for_q(cls, q: int, carry_bound: Optional[int] = None) -> "MultiplierSpec":
        if q < 2:
            raise DomainError(f"multiplier q must be >= 2, got {q}")
        if carry_bound is not None and carry_bound < 0:
            raise DomainError(f"carry bound must be >= 0, got {carry_bound}")
        return cls(q=q, carry_bound=carry_bound)


class StreamState(BaseModel):
    # carry digits on the two positions just above the read head
    pending: Tuple[int, int] = (0, 0)
    position: int = 0
    emitted_delay: int = 0


class StreamFailure(BaseModel):
    reason: str
    q: int
    n: int
    position: int
    state: StreamState

    def __str__(self) -> str:
        return (
            f"stream failure ({self.reason}) for {self.n}*{self.q} at position "
            f"{self.position}: pending={self.state.pending} delay={self.state.emitted_delay}"
        )


def mul_oracle(n: int, q: int) -> ZeckWord:
    """Z(qN) from the exact product."""
    if q < 2:
        raise DomainError(f"multiplier q must be >= 2, got {q}")
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    return zeck_encode(q * n)


def _state(digits: List[int], head: int, base: int) -> StreamState:
    def at(i: int) -> int:
        return digits[i] if i < len(digits) else 0

    return StreamState(
        pending=(at(head + 1), at(head + 2)),
        position=head,
        emitted_delay=head - base + 1,
    )


def stream_multiply(n: int, spec: MultiplierSpec) -> Union[ZeckWord, StreamFailure]:
    """Multiply by spec.q reading rev(Z(n)) one digit at a time.

    Digits below ``base`` have been emitted and are final. A rewrite that would
    touch one of them, or a digit above ``carry_bound``, ends the run with a
    StreamFailure instead of an answer.
    """
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    q = spec.q
    digits: List[int] = []
    base = 0

    def fail(reason: str, head: int) -> StreamFailure:
        failure = StreamFailure(reason=reason, q=q, n=n, position=head, state=_state(digits, head, base))
        logger.debug("%s", failure)
        return failure

    stream = lsd_digits(n)
    for head, symbol in enumerate(stream):
        if head >= len(digits):
            digits.extend([0] * (head + 1 - len(digits)))
        digits[head] += q * int(symbol)
        if digits[head] > spec.carry_bound:
            return fail("carry_bound", head)

        outcome = rewrite_in_place(
            digits,
            [head],
            floor=base,
            digit_bound=spec.carry_bound,
            step_cap=64 * (len(digits) + q) ** 2,
        )
        if not outcome.ok:
            return fail(_FAILURE_REASONS[outcome.reason], head)

        while head - base + 1 > spec.delay_cap:
            base += 1

    # input exhausted: the rest of the stream is padding, flush the buffer
    head = len(stream) - 1
    outcome = rewrite_in_place(
        digits,
        range(base, len(digits)),
        floor=base,
        digit_bound=spec.carry_bound,
        step_cap=64 * (len(digits) + q) ** 2,
    )
    if not outcome.ok:
        return fail(_FAILURE_REASONS[outcome.reason], head)
    return digits_to_word(digits)


def mul_addition_chain(n: int, q: int) -> ZeckWord:
    """Z(qN) by double-and-add over the bits of q, all in Zeckendorf form."""
    if q < 2:
        raise DomainError(f"multiplier q must be >= 2, got {q}")
    x = zeck_encode(n)
    acc = x
    for bit in bin(q)[3:]:
        acc = zeck_double(acc)
        if bit == "1":
            acc = zeck_add(acc, x)
    return acc
