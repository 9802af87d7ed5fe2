from itertools import product

import pytest
from hypothesis import given, strategies as st

from catalan_tasep.closedforms import catalan_number
from catalan_tasep.polyring import ZERO, monomial
from catalan_tasep.shapes import Shape, parse_shape, shape_to_state, shapes_with_semiperimeter
from catalan_tasep.tableaux import (
    ALPHA, BETA, EMPTY, CondensedTableau, OracleBoundError, enumerate_staircase,
    enumerate_tableaux, staircase_to_condensed, validate, validate_staircase,
)


def brute_force(shape):
    cells = shape.cells()
    found = []
    for syms in product((EMPTY, ALPHA, BETA), repeat=len(cells)):
        t = CondensedTableau(shape, dict(zip(cells, syms)))
        if validate(t) is None:
            found.append(t)
    return sorted(found, key=CondensedTableau.sort_key)


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_exhaustive_search(n):
    for shape in shapes_with_semiperimeter(n):
        if shape.size <= 9:
            assert enumerate_tableaux(shape) == brute_force(shape)


def test_figure_condensed_fixture():
    shape = parse_shape("3,2,2,0,0/4")
    hits = [t for t in enumerate_tableaux(shape) if t.weight() == monomial(8, 5)]
    assert len(hits) == 2
    assert hits[0].render().splitlines()[:3] == [". . a", "a a", ". b"]
    assert hits[0].type == "010110011"


def test_figure_staircase_fixture():
    hits = [t for t in enumerate_staircase(7) if t.type == "0101100" and t.weight() == monomial(6, 5)]
    assert len(hits) == 2
    for t in hits:
        c = staircase_to_condensed(t)
        assert c.shape == Shape((3, 2, 2), 4)
        assert validate(c) is None


def test_rules_are_reported():
    shape = Shape((2,), 2)
    assert validate(CondensedTableau(shape, {})).rule == "iv"
    assert validate(CondensedTableau(shape, {(1, 1): ALPHA, (1, 2): BETA})).rule == "ii"
    assert validate(CondensedTableau(Shape((1, 1), 1), {(1, 1): BETA, (2, 1): ALPHA})).rule == "iii"
    assert validate(CondensedTableau(shape, {(1, 2): BETA})) is None


@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(list(shapes_with_semiperimeter(n)))))
def test_at_most_one_beta_per_row_and_alpha_per_column(shape):
    for t in enumerate_tableaux(shape):
        cells = t.cells
        for r in range(1, shape.k + 1):
            assert sum(1 for (rr, _), s in cells.items() if rr == r and s == BETA) <= 1
        for c in range(1, shape.cols + 1):
            assert sum(1 for (_, cc), s in cells.items() if cc == c and s == ALPHA) <= 1
        assert t.type == shape_to_state(shape)


@pytest.mark.parametrize("n", range(1, 7))
def test_staircase_counts_and_condensing(n):
    tabs = enumerate_staircase(n)
    assert len(tabs) == catalan_number(n + 1)
    assert all(validate_staircase(t) is None for t in tabs)
    by_type = {}
    for t in tabs:
        by_type[t.type] = by_type.get(t.type, ZERO) + t.weight()
    condensed = {t for s in shapes_with_semiperimeter(n) for t in enumerate_tableaux(s)}
    assert {staircase_to_condensed(t) for t in tabs} == condensed
    for s in shapes_with_semiperimeter(n):
        total = sum((t.weight() for t in enumerate_tableaux(s)), ZERO)
        assert by_type[shape_to_state(s)] == total


def test_json_roundtrip():
    for t in enumerate_tableaux(Shape((2, 1), 2)):
        assert CondensedTableau.from_json(t.to_json()) == t


def test_oracle_bound():
    with pytest.raises(OracleBoundError):
        enumerate_tableaux(Shape((1,) * 7, 6))
