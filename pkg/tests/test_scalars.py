from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilgca.scalars import (
    GaussianRational,
    I,
    ONE,
    ZERO,
    format_gaussian,
    parse_gaussian,
    scalar,
)

rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(3, 4))
    b = GaussianRational(2, -1)
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(-1, 4))
    assert a - a == ZERO
    assert a * ONE == a
    assert I * I == -ONE
    assert (a * b) / b == a
    assert -(-a) == a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_conjugation_and_predicates():
    a = GaussianRational(1, 2)
    assert a.conjugate() == GaussianRational(1, -2)
    assert (a * a.conjugate()).is_real()
    assert ZERO.is_zero() and not ONE.is_zero()
    assert not bool(ZERO) and bool(I)


def test_mixed_scalar_types():
    assert ONE + 1 == GaussianRational(2)
    assert 2 * I == GaussianRational(0, 2)
    assert Fraction(1, 2) + ONE == GaussianRational(Fraction(3, 2))
    assert 1 - I == GaussianRational(1, -1)


@pytest.mark.parametrize("text,expected", [
    ("0", ZERO),
    ("7", GaussianRational(7)),
    ("-3/4", GaussianRational(Fraction(-3, 4))),
    ("i", I),
    ("-i", -I),
    ("2i", GaussianRational(0, 2)),
    ("3/4i", GaussianRational(0, Fraction(3, 4))),
    ("1/2+3/4i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
    ("1-i", GaussianRational(1, -1)),
    ("1/2+3/4 i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
])
def test_parse(text, expected):
    assert parse_gaussian(text) == expected


@pytest.mark.parametrize("text", ["", "--1", "1+1", "i+i", "1/0", "x"])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_gaussian(text)


@given(gaussians)
def test_format_parse_roundtrip(x):
    assert parse_gaussian(format_gaussian(x)) == x


@given(gaussians, gaussians)
def test_field_axioms_sample(a, b):
    assert a + b == b + a
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a


def test_scalar_coercion():
    assert scalar("1/2+3/4i") == GaussianRational(Fraction(1, 2), Fraction(3, 4))
    assert scalar(5) == GaussianRational(5)
    with pytest.raises(TypeError):
        scalar(1.5)


def test_hashable():
    assert len({ONE, GaussianRational(1), I}) == 2
