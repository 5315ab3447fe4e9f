from .zeckendorf import (
    PAD,
    Window,
    ZeckWord,
    c_of_q,
    digit_value,
    fib,
    leading_index,
    lsd_digits,
    lsd_prefix,
    pad_window,
    parse_digit_string,
    parse_window,
    parse_zeck_word,
    reachable_windows,
    validate_window,
    validate_zeck_word,
    zeck_decode,
    zeck_encode,
)
from .normalize import normalize, normalize_by_rewriting, normalize_by_value, rewrite_in_place
from .arithmetic import zeck_add, zeck_double

__all__ = [
    "PAD",
    "Window",
    "ZeckWord",
    "c_of_q",
    "digit_value",
    "fib",
    "leading_index",
    "lsd_digits",
    "lsd_prefix",
    "pad_window",
    "parse_digit_string",
    "parse_window",
    "parse_zeck_word",
    "reachable_windows",
    "validate_window",
    "validate_zeck_word",
    "zeck_decode",
    "zeck_encode",
    "normalize",
    "normalize_by_rewriting",
    "normalize_by_value",
    "rewrite_in_place",
    "zeck_add",
    "zeck_double",
]
