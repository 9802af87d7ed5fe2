from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalan_tasep.polyring import (
    ALPHA, BETA, ONE, ZERO, BivarPoly, ParseError, QPoly, monomial, parse, parse_rat,
)

exps = st.tuples(st.integers(0, 5), st.integers(0, 5))
polys = st.dictionaries(exps, st.integers(-50, 50), max_size=6).map(BivarPoly)
rats = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p and p * ONE == p
    assert p - p == ZERO


@given(polys, polys, rats, rats)
def test_eval_is_a_homomorphism(p, q, a, b):
    assert (p + q).eval(a, b) == p.eval(a, b) + q.eval(a, b)
    assert (p * q).eval(a, b) == p.eval(a, b) * q.eval(a, b)


@given(polys, st.sampled_from(["qq", "q1", "1q"]), rats)
def test_substitute_commutes_with_eval(p, mode, x):
    a, b = {"qq": (x, x), "q1": (x, 1), "1q": (1, x)}[mode]
    assert p.substitute(mode).eval(x) == p.eval(a, b)


@given(polys)
def test_format_parse_roundtrip(p):
    assert parse(p.format()) == p
    assert BivarPoly.from_json(p.to_json()) == p
    assert hash(parse(p.format())) == hash(p)


@given(polys, polys)
def test_exact_division(p, q):
    if q:
        assert (p * q).exact_div(q) == p


def test_known_values():
    p = (ALPHA + BETA) ** 2
    assert p.format() == "a^2 + 2*a*b + b^2"
    assert p.eval(Fraction(1, 2), Fraction(1, 3)) == Fraction(25, 36)
    assert parse("3a^2b - b + 1") == monomial(2, 1, 3) - BETA + ONE
    assert parse("a−b") == ALPHA - BETA
    assert ZERO.format() == "0"
    assert parse_rat("2/6") == Fraction(1, 3)
    assert parse_rat("7") == 7


def test_shift_is_exact():
    assert monomial(3, 2).shift(-3, -1) == BETA
    with pytest.raises(ValueError):
        monomial(1, 0).shift(-2, 0)


@pytest.mark.parametrize("bad", ["a^", "2**a", "a +", "b^x", "c"])
def test_parse_errors_report_position(bad):
    with pytest.raises(ParseError) as info:
        parse(bad)
    assert 0 <= info.value.pos <= len(bad)


def test_qpoly_format_and_parse():
    q = QPoly([1, 6, 0, 0, 3, 2])
    assert q.format() == "2q^5 + 3q^4 + 6q + 1"
    assert QPoly.parse("2q^5 +3q^4+ 6q + 1") == q
    assert q.eval(1) == 12
    with pytest.raises(ValueError):
        QPoly.parse("2q 3")
