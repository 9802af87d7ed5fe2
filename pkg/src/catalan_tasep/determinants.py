"""Narayana's matrix, the alpha/beta-weighted matrix and exact determinants.

For a shape ``lambda = (l_1, ..., l_k)`` both matrices are upper Hessenberg
with a unit subdiagonal, and the bottom-right ``m x m`` block of the matrix
of ``lambda`` is the matrix of the suffix ``(l_{k-m+1}, ..., l_k)``.  The
determinant is therefore computed by expanding along the top row and reusing
the suffix determinants, which is ``O(k^2)`` polynomial products.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .binomial import binom
from .polyring import ONE, ZERO, BivarPoly, monomial
from .shapes import Shape, boundary_weight

__all__ = [
    "PolyMatrix",
    "narayana_matrix",
    "weighted_matrix",
    "weighted_entry",
    "det",
    "det_laplace",
    "det_bareiss",
    "genfun",
    "top_row_expansion",
]

PolyMatrix = list  # k x k nested lists of BivarPoly


def _sq(M: Sequence[Sequence[BivarPoly]]) -> int:
    k = len(M)
    if any(len(row) != k for row in M):
        raise ValueError("matrix is not square")
    return k


def narayana_matrix(shape: Shape) -> PolyMatrix:
    """``A[i][j] = C(l_j + 1, j - i + 1)`` (1-based), as constant polynomials."""
    lam = shape.parts
    k = len(lam)
    if k == 0:
        raise ValueError("Narayana's matrix needs at least one row")
    return [
        [BivarPoly.const(binom(lam[j - 1] + 1, j - i + 1)) for j in range(1, k + 1)]
        for i in range(1, k + 1)
    ]


def _beta_binom_pair(base_exp: int, top: int, low: int) -> BivarPoly:
    """``beta^e * (C(top, low) + beta * C(top, low + 1))`` with ``e = base_exp``.

    ``base_exp`` may be negative below the diagonal; the binomials then
    vanish wherever the power of beta would be negative.
    """
    out = ZERO
    for shift, c in ((0, binom(top, low)), (1, binom(top, low + 1))):
        if not c:
            continue
        e = base_exp + shift
        if e < 0:
            raise ArithmeticError("negative power of beta with nonzero coefficient")
        out = out + monomial(0, e, c)
    return out


def _alpha_times(e: int, p: BivarPoly) -> BivarPoly:
    # below the subdiagonal the alpha exponent is negative but p vanishes
    return p.shift(e, 0) if p else p


def weighted_entry(lam: Sequence[int], i: int, j: int) -> BivarPoly:
    """Entry ``(i, j)`` (1-based) of the alpha/beta-weighted matrix of ``lam``."""
    k = len(lam)

    def part(t):
        return lam[t - 1] if t <= k else 0

    li, lj, lj1 = part(i), part(j), part(j + 1)
    d = j - i
    out = _alpha_times(li - lj1, _beta_binom_pair(d, lj1, d))
    for ell in range(lj - lj1):
        out = out + _alpha_times(li - lj + ell, _beta_binom_pair(d, lj - ell - 1, d - 1))
    return out


def weighted_matrix(shape: Shape) -> PolyMatrix:
    lam = shape.parts
    k = len(lam)
    if k == 0:
        raise ValueError("the weighted matrix needs at least one row")
    return [[weighted_entry(lam, i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]


def _is_hessenberg(M) -> bool:
    k = len(M)
    return all(not M[i][j] for i in range(k) for j in range(i - 1))


def top_row_expansion(M) -> list[BivarPoly]:
    """Determinants of every bottom-right block of an upper Hessenberg matrix.

    ``D[i]`` is the determinant of rows/columns ``i..k-1`` (0-based) and
    ``D[k] = 1``.  Expanding along the top row, removing row ``i`` and column
    ``j`` leaves a block-triangular minor whose upper block is triangular
    with the subdiagonal entries ``M[i+1][i], ..., M[j][j-1]`` on its
    diagonal.
    """
    k = _sq(M)
    D = [ZERO] * (k + 1)
    D[k] = ONE
    for i in range(k - 1, -1, -1):
        acc = ZERO
        sub = ONE
        for j in range(i, k):
            if j > i:
                sub = sub * M[j][j - 1]
                if not sub:
                    break
            term = M[i][j] * sub * D[j + 1]
            acc = acc + term if (j - i) % 2 == 0 else acc - term
        D[i] = acc
    return D


def det_laplace(M) -> BivarPoly:
    """General Laplace expansion along successive top rows, memoised on the column set."""
    k = _sq(M)

    @lru_cache(maxsize=None)
    def minor(cols: tuple[int, ...]) -> BivarPoly:
        if not cols:
            return ONE
        row = k - len(cols)
        acc = ZERO
        for pos, c in enumerate(cols):
            if not M[row][c]:
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = M[row][c] * minor(rest)
            acc = acc + term if pos % 2 == 0 else acc - term
        return acc

    return minor(tuple(range(k)))


def det_bareiss(M) -> BivarPoly:
    """Fraction-free (Bareiss) elimination with exact polynomial division."""
    k = _sq(M)
    if k == 0:
        return ONE
    A = [list(row) for row in M]
    sign = 1
    prev = ONE
    for p in range(k - 1):
        if not A[p][p]:
            swap = next((r for r in range(p + 1, k) if A[r][p]), None)
            if swap is None:
                return ZERO
            A[p], A[swap] = A[swap], A[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                num = A[i][j] * A[p][p] - A[i][p] * A[p][j]
                A[i][j] = num.exact_div(prev)
            A[i][p] = ZERO
        prev = A[p][p]
    return A[k - 1][k - 1] if sign > 0 else -A[k - 1][k - 1]


def det(M) -> BivarPoly:
    """Exact determinant; Hessenberg matrices use the suffix recursion."""
    k = _sq(M)
    if k == 0:
        return ONE
    if _is_hessenberg(M):
        return top_row_expansion(M)[0]
    return det_laplace(M)


def genfun(shape: Shape) -> BivarPoly:
    """Weight generating function of condensed tableaux of ``shape``."""
    if shape.k == 0:
        return boundary_weight(shape)
    return boundary_weight(shape) * det(weighted_matrix(shape))

