from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symprod.exactalg import (
    ONE,
    ZERO,
    Poly,
    TruncSeries,
    YPOLY,
    format_laurent,
    format_rational,
    laurent,
    laurent_from_json,
    laurent_substitute,
    laurent_to_json,
    parse_laurent,
    parse_rational,
    poly_from_json,
    poly_to_json,
    series_exp,
    series_from_json,
    series_log,
    series_to_json,
)

from conftest import laurents, rationals, sparse_polys

p1, p2 = Poly.var(("p", 1)), Poly.var(("p", 2))


def series(*coeffs, order=None):
    coeffs = list(coeffs)
    return TruncSeries(coeffs, len(coeffs) - 1 if order is None else order)


def test_laurent_substitute_examples():
    assert laurent_substitute(ONE + YPOLY, 2) == ONE + YPOLY ** 2
    assert laurent_substitute(YPOLY ** -1, 3) == YPOLY ** -3
    assert laurent_substitute(Poly.const(2), 5) == 2
    with pytest.raises(ValueError):
        laurent_substitute(YPOLY, 0)


@given(laurents, st.integers(1, 4), st.integers(1, 4))
def test_laurent_substitute_composes(f, r, s):
    assert laurent_substitute(laurent_substitute(f, r), s) == laurent_substitute(f, r * s)


def test_exp_examples():
    t1 = series(ZERO, p1, ZERO)
    assert series_exp(t1, 2) == series(ONE, p1, p1 * p1 / 2)
    gen = series(ZERO, p1, p2 / 2)
    assert series_exp(gen, 2)[2] == (p1 * p1 + p2) / 2
    assert series_exp(TruncSeries.zero(4), 4) == TruncSeries.one(4)


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(series(ONE, ZERO), 1)


def test_log_examples():
    geometric = series(*[ONE] * 4)
    assert series_log(geometric, 3) == series(ZERO, ONE, ONE / 2, ONE / 3)
    assert series_log(TruncSeries.one(3), 3) == TruncSeries.zero(3)
    f = series(ZERO, p1, p2, ZERO)
    assert series_log(series_exp(f, 3), 3) == f
    with pytest.raises(ValueError):
        series_log(series(Poly.const(2), ZERO), 1)


zero_const_series = st.lists(sparse_polys, min_size=3, max_size=3).map(lambda cs: series(ZERO, *cs))


@given(zero_const_series, zero_const_series)
def test_exp_is_a_homomorphism(f, g):
    N = 3
    assert series_exp(f + g, N) == series_exp(f, N) * series_exp(g, N)


@given(zero_const_series)
def test_exp_log_roundtrip(f):
    assert series_log(series_exp(f, 3), 3) == f


@given(rationals, rationals, rationals, rationals)
def test_rational_sum_two_ways(a, b, c, d):
    lhs = Poly.const(a) * b + Poly.const(c) * d
    rhs = Fraction(a.numerator * b.numerator * c.denominator * d.denominator
                   + c.numerator * d.numerator * a.denominator * b.denominator,
                   a.denominator * b.denominator * c.denominator * d.denominator)
    assert lhs == rhs


@given(sparse_polys, sparse_polys, sparse_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


def test_no_zero_terms_stored():
    f = (ONE + YPOLY) - YPOLY
    assert f.terms == {(): 1}
    assert laurent({3: 0, 1: Fraction(1, 2)}) == YPOLY / 2


def test_rational_text():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    with pytest.raises(ValueError):
        parse_rational("1/0")


@pytest.mark.parametrize("text, expected", [
    ("1+y", ONE + YPOLY),
    ("y^-1+2y^3", YPOLY ** -1 + YPOLY ** 3 * 2),
    ("-(1/2)*y^2", -(YPOLY ** 2) / 2),
    ("1/2y^2", YPOLY ** 2 / 2),
    ("y - y", ZERO),
    ("-3", Poly.const(-3)),
])
def test_parse_laurent(text, expected):
    assert parse_laurent(text) == expected


@pytest.mark.parametrize("bad", ["", "1+", "x", "y^", "(1+y", "1/0"])
def test_parse_laurent_rejects(bad):
    with pytest.raises(ValueError):
        parse_laurent(bad)


@given(laurents)
def test_laurent_text_roundtrip(f):
    assert parse_laurent(format_laurent(f)) == f


@given(laurents)
def test_laurent_json_roundtrip(f):
    assert laurent_from_json(laurent_to_json(f)) == f


@given(sparse_polys)
def test_poly_json_roundtrip(f):
    assert poly_from_json(poly_to_json(f)) == f


def test_generator_json_roundtrip():
    g = Poly.var(("A", 2, "v", 1)) * Poly.var(("Delta", 1, "b1", 0), 2) * p2
    assert poly_from_json(poly_to_json(g)) == g
    s = series(ONE, g, g * g)
    assert series_from_json(series_to_json(s)) == s


def test_series_order_is_explicit():
    with pytest.raises(ValueError):
        series(ONE, ONE) + series(ONE, ONE, ONE)
    assert len(series(ONE, ONE, order=4)) == 5
