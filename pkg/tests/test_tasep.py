from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from catalan_tasep.determinants import genfun
from catalan_tasep.shapes import state_to_shape
from catalan_tasep.tableaux import enumerate_staircase
from catalan_tasep.polyring import ZERO
from catalan_tasep.tasep import (
    RateSpec, StateBoundError, check_balance, distribution_to_json, formula_distribution,
    generator, locations_shape, prob_k_particles, prob_locations, prob_state, simulate,
    stationary, transitions, tv_distance,
)

pos_rats = st.fractions(min_value=Fraction(1, 8), max_value=5, max_denominator=9)


def test_single_site_analytic():
    a, b = Fraction(1, 2), Fraction(1, 3)
    pi = stationary(RateSpec(1, a, b))
    assert pi == {"0": b / (a + b), "1": a / (a + b)}
    assert prob_state("1", a, b) == a / (a + b)


def test_transitions():
    assert sorted(transitions("101", 2, 3)) == [("011", 1), ("100", 3)]
    assert sorted(transitions("010", 2, 3)) == [("001", 1), ("110", 2)]


@given(st.integers(1, 5), pos_rats, pos_rats)
def test_generator_rows_sum_to_zero(n, a, b):
    Q = generator(RateSpec(n, a, b))
    assert all(sum(row.values()) == 0 for row in Q.values())


@given(st.integers(1, 5), pos_rats, pos_rats)
def test_exact_solve_matches_formula(n, a, b):
    spec = RateSpec(n, a, b)
    pi = stationary(spec)
    assert check_balance(spec, pi)
    assert pi == formula_distribution(spec)
    for k in range(n + 1):
        assert sum(p for s, p in pi.items() if s.count("1") == k) == prob_k_particles(n, k, a, b)


@pytest.mark.parametrize("n", range(1, 7))
def test_staircase_types_give_state_weights(n):
    by_type = {}
    for t in enumerate_staircase(n):
        by_type[t.type] = by_type.get(t.type, ZERO) + t.weight()
    for word, w in by_type.items():
        assert w == genfun(state_to_shape(word))


@pytest.mark.parametrize("n", range(1, 8))
def test_location_determinant(n):
    for k in range(n + 1):
        for sites in combinations(range(1, n + 1), k):
            shape = locations_shape(n, sites)
            assert prob_locations(n, sites) == genfun(shape).shift(-shape.k, -shape.cols)


def test_guards():
    with pytest.raises(ValueError):
        RateSpec(0, 1, 1)
    with pytest.raises(ValueError):
        RateSpec(2, 0, 1)
    with pytest.raises(StateBoundError):
        stationary(RateSpec(11, 1, 1))
    with pytest.raises(ValueError):
        locations_shape(4, [3, 2])
    with pytest.raises(ValueError):
        prob_state("0120")


def test_distribution_json():
    spec = RateSpec(2, Fraction(1, 2), Fraction(1, 3))
    doc = distribution_to_json(spec, stationary(spec))
    assert doc["alpha"] == "1/2" and doc["pi"]["11"] == "3/8"
    assert sum(Fraction(v) for v in doc["pi"].values()) == 1


def test_simulation_is_deterministic():
    spec = RateSpec(3, 1, 1)
    r1, r2 = simulate(spec, 20_000, seed=7), simulate(spec, 20_000, seed=7)
    assert r1.occupation == r2.occupation
    assert r1.to_json()["rng"] == "numpy PCG64"
    assert simulate(spec, 20_000, seed=8).occupation != r1.occupation


def test_simulation_statistics_small():
    spec = RateSpec(2, Fraction(1, 2), Fraction(1, 3))
    res = simulate(spec, 200_000, seed=1)
    exact = {s: float(p) for s, p in stationary(spec).items()}
    assert tv_distance(res.occupation, exact) < 3 * res.tv_stderr


def test_single_event_horizon():
    res = simulate(RateSpec(3, 1, 1), 1, seed=0)
    assert sum(res.occupation.values()) == pytest.approx(1.0)
    assert res.occupation["000"] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        simulate(RateSpec(3, 1, 1), 0, seed=0)
