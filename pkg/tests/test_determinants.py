from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from catalan_tasep.determinants import (
    det, det_bareiss, det_laplace, genfun, narayana_matrix, top_row_expansion, weighted_matrix,
)
from catalan_tasep.polyring import ONE, ZERO, BivarPoly, monomial
from catalan_tasep.shapes import Shape, parse_shape, shapes_in_rectangle, shapes_with_semiperimeter
from catalan_tasep.tableaux import enumerate_tableaux

entries = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-4, 4), max_size=3
).map(BivarPoly)


def leibniz(M):
    k = len(M)
    out = ZERO
    for perm in permutations(range(k)):
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = ONE
        for i, j in enumerate(perm):
            term = term * M[i][j]
        out = out + term if inversions % 2 == 0 else out - term
    return out


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


matrices = st.integers(1, 4).flatmap(square)


@given(matrices)
def test_three_determinants_agree(M):
    want = leibniz(M)
    assert det_laplace(M) == want
    assert det_bareiss(M) == want
    assert det(M) == want


@given(matrices)
def test_hessenberg_recursion(M):
    k = len(M)
    H = [[M[i][j] if j >= i - 1 else ZERO for j in range(k)] for i in range(k)]
    D = top_row_expansion(H)
    for i in range(k + 1):
        block = [row[i:] for row in H[i:]]
        assert D[i] == (leibniz(block) if block else ONE)


def test_narayana_matrix_values():
    M = narayana_matrix(Shape((2, 1), 2))
    assert [[e.coeff(0, 0) for e in row] for row in M] == [[3, 1], [1, 2]]
    assert det(narayana_matrix(parse_shape("6,4,4,2,0/9"))) == 127


@pytest.mark.parametrize("k,cols", [(2, 3), (3, 3), (4, 2), (3, 5)])
def test_structure(k, cols):
    for shape in shapes_in_rectangle(k, cols):
        A = weighted_matrix(shape)
        for i in range(k):
            for j in range(i - 1):
                assert not A[i][j]
            if i:
                assert A[i][i - 1] == ONE
        for start in range(2, k + 1):
            sub = [row[start - 1:] for row in A[start - 1:]]
            assert sub == weighted_matrix(shape.suffix(start))
        N = narayana_matrix(shape)
        assert det(A).eval(1, 1) == det(N).eval(1, 1)


@pytest.mark.parametrize("n", range(0, 8))
def test_genfun_matches_enumeration(n):
    for shape in shapes_with_semiperimeter(n):
        total = sum((t.weight() for t in enumerate_tableaux(shape)), ZERO)
        assert genfun(shape) == total


def test_small_closed_cases():
    assert genfun(Shape((), 3)) == monomial(0, 3)
    assert genfun(Shape((0,), 0)) == monomial(1, 0)
    # one box: empty is illegal, alpha or beta fills it
    assert genfun(Shape((1,), 1)) == monomial(2, 1) + monomial(1, 2)
    with pytest.raises(ValueError):
        det([[ONE, ONE]])
