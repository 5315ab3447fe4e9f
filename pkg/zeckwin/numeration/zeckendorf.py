"""
Zeckendorf encoding and decoding, and LSD-first padded windows.

Indexing follows F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n. A Zeckendorf
word is written MSD-first: Z(N) = e_k ... e_2 with e_k = 1. Windows read the
same digits LSD-first (e_2 first) and pad with ``#``.
"""
import threading
from bisect import bisect_right
from typing import Iterator, List, Optional, Sequence

from zeckwin.errors import DomainError, FormatError

ZeckWord = str
Window = str

PAD = "#"
WINDOW_ALPHABET = frozenset("01#")

_FIB: List[int] = [0, 1]
_FIB_LOCK = threading.Lock()


def _extend_to_index(i: int) -> None:
    if i < len(_FIB):
        return
    with _FIB_LOCK:
        while len(_FIB) <= i:
            _FIB.append(_FIB[-1] + _FIB[-2])


def _extend_to_value(n: int) -> None:
    """Grow the table until its last entry exceeds n."""
    if _FIB[-1] > n:
        return
    with _FIB_LOCK:
        while _FIB[-1] <= n:
            _FIB.append(_FIB[-1] + _FIB[-2])


def fib(i: int) -> int:
    """Return F_i exactly."""
    if i < 0:
        raise DomainError(f"Fibonacci index must be >= 0, got {i}")
    _extend_to_index(i)
    return _FIB[i]


def leading_index(n: int) -> int:
    """Return k >= 2 with F_k <= n < F_{k+1}."""
    if n < 1:
        raise DomainError(f"Zeckendorf representation needs N >= 1, got {n}")
    _extend_to_value(n)
    # F_1 = F_2 = 1; bisect lands on the last equal entry, which is >= 2
    return bisect_right(_FIB, n) - 1


def zeck_encode(n: int) -> ZeckWord:
    """Greedy Zeckendorf expansion of n, MSD-first."""
    k = leading_index(n)
    digits = ["1"]
    rest = n - _FIB[k]
    i = k - 1
    while i >= 2:
        if rest == 0:
            digits.append("0" * (i - 1))
            break
        j = bisect_right(_FIB, rest, 2, i + 1) - 1
        digits.append("0" * (i - j))
        digits.append("1")
        rest -= _FIB[j]
        i = j - 1
        # the digit just below a 1 is always 0
        if i >= 2:
            digits.append("0")
            i -= 1
    return "".join(digits)


def validate_zeck_word(w: str) -> ZeckWord:
    if not w:
        raise FormatError("Zeckendorf word must be non-empty")
    if set(w) - {"0", "1"}:
        raise FormatError(f"Zeckendorf word must be binary: {w!r}")
    if w[0] != "1":
        raise FormatError(f"Zeckendorf word has a leading zero: {w!r}")
    if "11" in w:
        raise FormatError(f"Zeckendorf word contains adjacent ones: {w!r}")
    return w


parse_zeck_word = validate_zeck_word


def zeck_decode(w: ZeckWord) -> int:
    """Exact value of a canonical Zeckendorf word."""
    validate_zeck_word(w)
    k = len(w) + 1
    _extend_to_index(k)
    return sum(_FIB[k - i] for i, d in enumerate(w) if d == "1")


def lsd_digits(n: int) -> str:
    """rev(Z(n)): the digit stream without padding."""
    return zeck_encode(n)[::-1]


def pad_window(stream: str, m: int) -> Window:
    if len(stream) >= m:
        return stream[:m]
    return stream + PAD * (m - len(stream))


def lsd_prefix(n: int, m: int) -> Window:
    """pref_M(rev(Z(n)) #^omega)."""
    if m < 1:
        raise DomainError(f"window length must be >= 1, got {m}")
    return pad_window(lsd_digits(n), m)


def validate_window(v: str, m: Optional[int] = None) -> Window:
    if not v:
        raise FormatError("window must be non-empty")
    bad = set(v) - WINDOW_ALPHABET
    if bad:
        raise FormatError(f"window {v!r} uses symbols outside {{0,1,#}}: {sorted(bad)}")
    if m is not None and len(v) != m:
        raise FormatError(f"window {v!r} has length {len(v)}, expected {m}")
    return v


parse_window = validate_window


def c_of_q(q: int) -> int:
    """C(q) = min{c >= 1 : F_c >= q}."""
    if q < 2:
        raise DomainError(f"multiplier q must be >= 2, got {q}")
    c = 1
    while fib(c) < q:
        c += 1
    return c


def digit_value(digits: Sequence[int]) -> int:
    """Value of an LSD-first general digit string, digit i weighing F_{i+2}."""
    _extend_to_index(len(digits) + 2)
    return sum(d * _FIB[i + 2] for i, d in enumerate(digits) if d)


def parse_digit_string(text: str) -> List[int]:
    """Parse the comma-separated LSD-first form, e.g. ``"0,1,1"``."""
    try:
        digits = [int(part) for part in text.split(",")]
    except ValueError:
        raise FormatError(f"digit string must be comma-separated integers: {text!r}")
    if any(d < 0 for d in digits):
        raise FormatError(f"digit string has a negative digit: {text!r}")
    return digits


def _no_adjacent_ones(length: int) -> Iterator[str]:
    if length == 0:
        yield ""
        return
    stack = [""]
    while stack:
        prefix = stack.pop()
        if len(prefix) == length:
            yield prefix
            continue
        stack.append(prefix + "0")
        if not prefix.endswith("1"):
            stack.append(prefix + "1")


def reachable_windows(m: int) -> List[Window]:
    """Every window lsd_prefix can produce for length m, sorted.

    Full windows are any binary word without ``11``; padded windows end their
    digit block with the leading 1. There are F_{m+3} - 1 of them.
    """
    if m < 1:
        raise DomainError(f"window length must be >= 1, got {m}")
    windows = set(_no_adjacent_ones(m))
    for a in range(1, m):
        for word in _no_adjacent_ones(a):
            if word.endswith("1"):
                windows.add(word + PAD * (m - a))
    return sorted(windows)
