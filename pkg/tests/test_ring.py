"""Scalar ring invariants: canonical rationals, dense polynomial arithmetic,
and the text renderings the CLI relies on."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from degenbell.ring import (
    LambdaPoly,
    format_rational,
    parse_rational,
    poly_to_coeff_strings,
    poly_to_plain,
)

F = Fraction

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)
polys = st.lists(rationals, max_size=6).map(LambdaPoly)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3", F(3)),
        ("-7", F(-7)),
        ("0", F(0)),
        ("-4/6", F(-2, 3)),
        (" 7/2 ", F(7, 2)),
        ("+5/10", F(1, 2)),
    ],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "a", "1/0", "1/-2", "", "1/2/3", "2 /3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational_suppresses_unit_denominator():
    assert format_rational(F(-1)) == "-1"
    assert format_rational(F(1, 2)) == "1/2"
    assert format_rational(F(0)) == "0"


@given(a=rationals, b=rationals)
def test_rational_ops_stay_canonical(a, b):
    for value in (a + b, a - b, a * b):
        assert math.gcd(value.numerator, value.denominator) == 1
        assert value.denominator > 0


def test_trailing_zeros_stripped():
    assert LambdaPoly([1, 0, 0]).coeffs == (F(1),)
    assert LambdaPoly([0, 0]).coeffs == ()


def test_zero_polynomial():
    zero = LambdaPoly.zero()
    assert zero.degree is None
    assert zero.is_zero()
    assert not zero
    assert zero == LambdaPoly([])


def test_degree_and_coeff_access():
    p = LambdaPoly([F(1, 4), 0, 2])
    assert p.degree == 2
    assert p.coeff(0) == F(1, 4)
    assert p.coeff(1) == 0
    assert p.coeff(17) == 0
    with pytest.raises(ValueError):
        p.coeff(-1)


def test_hand_product():
    # (1/2 - L) * (1/2 - 2L) expands to 1/4 - 3/2 L + 2 L^2.
    a = LambdaPoly([F(1, 2), -1])
    b = LambdaPoly([F(1, 2), -2])
    assert a * b == LambdaPoly([F(1, 4), F(-3, 2), 2])


def test_eval_anchor():
    assert LambdaPoly([F(1, 4), 0, 2]).eval(1) == F(9, 4)
    assert LambdaPoly([F(1, 4), 0, 2]).eval(0) == F(1, 4)


def test_monomial_and_lam():
    assert LambdaPoly.monomial(F(3), 2) == LambdaPoly([0, 0, 3])
    assert LambdaPoly.monomial(0, 5) == LambdaPoly.zero()
    assert LambdaPoly.lam() == LambdaPoly([0, 1])
    with pytest.raises(ValueError):
        LambdaPoly.monomial(1, -1)


def test_scalar_multiplication():
    p = LambdaPoly([1, 2])
    assert p * F(1, 2) == LambdaPoly([F(1, 2), 1])
    assert F(1, 2) * p == LambdaPoly([F(1, 2), 1])
    assert p * 0 == LambdaPoly.zero()


def test_pow_small_cases():
    lam = LambdaPoly.lam()
    assert lam**0 == LambdaPoly.one()
    assert lam**3 == LambdaPoly.monomial(1, 3)
    p = LambdaPoly([1, 1])
    assert p**2 == LambdaPoly([1, 2, 1])
    with pytest.raises(ValueError):
        p ** (-1)


@given(a=polys, b=polys, c=polys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LambdaPoly.zero() == a
    assert a * LambdaPoly.one() == a
    assert a - a == LambdaPoly.zero()


@given(a=polys, b=polys, x=rationals)
@settings(max_examples=60)
def test_eval_is_ring_homomorphism(a, b, x):
    assert (a + b).eval(x) == a.eval(x) + b.eval(x)
    assert (a * b).eval(x) == a.eval(x) * b.eval(x)


@given(a=polys, e=st.integers(min_value=0, max_value=4))
@settings(max_examples=40)
def test_pow_matches_repeated_multiplication(a, e):
    expected = LambdaPoly.one()
    for _ in range(e):
        expected = expected * a
    assert a**e == expected


def test_immutable_and_hashable():
    p = LambdaPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()
    assert hash(p) == hash(LambdaPoly([1, 2]))
    assert p == LambdaPoly([F(1), F(2)])


@pytest.mark.parametrize(
    "coeffs,expected",
    [
        ([], "0"),
        ([0, -1], "-1*L"),
        ([F(1, 4), F(-3, 2), 2], "1/4 - 3/2*L + 2*L^2"),
        ([0, 0, 1], "1*L^2"),
        ([5], "5"),
        ([F(-1, 2), 0, 0, 3], "-1/2 + 3*L^3"),
    ],
)
def test_plain_rendering(coeffs, expected):
    assert poly_to_plain(LambdaPoly(coeffs)) == expected


def test_coeff_strings():
    assert poly_to_coeff_strings(LambdaPoly([F(1, 4), 0, 2])) == ["1/4", "0", "2"]
    assert poly_to_coeff_strings(LambdaPoly.zero()) == []
    assert poly_to_coeff_strings(LambdaPoly([0, -1])) == ["0", "-1"]
