"""Addition on Zeckendorf words by digitwise sum plus normalization."""
from itertools import zip_longest

from zeckwin.numeration.normalize import digits_to_word, rewrite_in_place
from zeckwin.numeration.zeckendorf import ZeckWord, validate_zeck_word


def zeck_add(a: ZeckWord, b: ZeckWord) -> ZeckWord:
    validate_zeck_word(a)
    validate_zeck_word(b)
    digits = [int(x) + int(y) for x, y in zip_longest(a[::-1], b[::-1], fillvalue="0")]
    # digits are at most 2, so no step cap is needed
    rewrite_in_place(digits, range(len(digits)))
    return digits_to_word(digits)


def zeck_double(w: ZeckWord) -> ZeckWord:
    return zeck_add(w, w)
