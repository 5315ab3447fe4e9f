import numpy as np
import pytest

from zeckwin.errors import DomainError, FormatError
from zeckwin.numeration import (
    digit_value,
    normalize,
    normalize_by_rewriting,
    normalize_by_value,
    parse_digit_string,
    zeck_add,
    zeck_double,
    zeck_encode,
)


@pytest.mark.parametrize(
    "digits,word",
    [([0, 1, 1], "1000"), ([2], "10"), ([1, 1, 1, 1], "10100"), ([0, 0, 3], "10001"), ([5], "1000")],
)
def test_normalize_examples(digits, word):
    assert normalize(digits) == word


def test_rewriting_matches_value_path():
    rng = np.random.default_rng(3)
    for _ in range(10_000):
        length = int(rng.integers(1, 31))
        digits = [int(d) for d in rng.integers(0, 6, size=length)]
        if digit_value(digits) == 0:
            continue
        assert normalize_by_rewriting(digits) == normalize_by_value(digits), digits


def test_normalize_rejects_bad_digits():
    with pytest.raises(FormatError):
        normalize([1, -1])
    with pytest.raises(DomainError):
        normalize([9], bound=5)
    with pytest.raises(DomainError):
        normalize([0, 0])


def test_parse_digit_string():
    assert parse_digit_string("1,1,1,1") == [1, 1, 1, 1]
    with pytest.raises(FormatError):
        parse_digit_string("1,x")
    with pytest.raises(FormatError):
        parse_digit_string("1,-2")


def test_addition_matches_integers():
    rng = np.random.default_rng(5)
    for a, b in rng.integers(1, 10**6, size=(1_000, 2)):
        a, b = int(a), int(b)
        assert zeck_add(zeck_encode(a), zeck_encode(b)) == zeck_encode(a + b)


def test_double():
    for n in range(1, 500):
        assert zeck_double(zeck_encode(n)) == zeck_encode(2 * n)
