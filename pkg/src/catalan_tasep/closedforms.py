"""Closed forms for tableaux in a ``k x m`` rectangle and the partition function.

``n_mk(m, k)`` is the weight generating function of all condensed tableaux
whose shape fits a ``k x m`` rectangle (k particles, m holes), and
``n_prime(m, k)`` restricts to shapes with first row exactly ``m`` and all
``k`` rows nonempty.  ``z_n(n)`` sums ``n_mk`` over the rectangles of
semi-perimeter ``n``; ``z_n_derrida`` is Derrida's independent formula.
"""

from __future__ import annotations

from .binomial import binom
from .polyring import ONE, ZERO, BivarPoly, QPoly, monomial
from .shapes import Shape, partitions_bounded
from .determinants import det, weighted_matrix

__all__ = [
    "n_prime",
    "n_prime_by_determinants",
    "n_mk",
    "relation_rhs",
    "relation_check",
    "hook_weight",
    "hook_recursion",
    "z_n",
    "z_n_derrida",
    "derrida_coefficient",
    "narayana_number",
    "catalan_number",
    "q_row",
    "q_table",
]


def _delta(r: int, s: int) -> int:
    return 1 if r == s else 0


def n_prime(m: int, k: int) -> BivarPoly:
    """Generating function for shapes with first row ``m`` and ``k`` nonzero rows."""
    if m < 1 or k < 1:
        raise ValueError(f"n_prime needs m, k >= 1, got m={m}, k={k}")
    out = ZERO
    for ell in range(k + 1):
        for j in range(m + 1):
            top_m = m + ell - 2 + _delta(j, m)
            top_k = k + j - 2 + _delta(ell, k)
            c = binom(top_m, m - 1) * binom(top_k, k - 1) - binom(top_m, m) * binom(top_k, k)
            if c:
                out = out + monomial(j + k, ell + m, c)
    return out


def n_prime_by_determinants(m: int, k: int) -> BivarPoly:
    """Same quantity summed shape by shape from weighted determinants."""
    out = ZERO
    for rest in partitions_bounded(k - 1, m, 1):
        shape = Shape((m,) + rest, m)
        out = out + det(weighted_matrix(shape))
    return out.shift(k, m)


def n_mk(m: int, k: int) -> BivarPoly:
    """Generating function for all tableaux in a ``k x m`` rectangle."""
    if m < 0 or k < 0:
        raise ValueError(f"n_mk needs m, k >= 0, got m={m}, k={k}")
    out = ZERO
    for j in range(m + 1):
        for ell in range(k + 1):
            c = binom(k + j - 1, j) * binom(m + ell - 1, ell) - binom(k + j - 1, j - 1) * binom(
                m + ell - 1, ell - 1
            )
            if c:
                out = out + monomial(j + k, ell + m, c)
    return out


def relation_rhs(m: int, k: int) -> BivarPoly:
    """Right-hand side of the ``N`` / ``N'`` relation.

    Degenerate ``N'`` (``m' = 0`` or ``k' = 0``) contributes only the empty
    shape, i.e. the monomial 1 at ``m' = k' = 0``.
    """
    inner = ONE
    for mp in range(1, m + 1):
        for kp in range(1, k + 1):
            inner = inner + n_prime(mp, kp).shift(-kp, -mp)
    return inner.shift(k, m)


def relation_check(m: int, k: int) -> bool:
    return n_mk(m, k) == relation_rhs(m, k)


def hook_weight(m: int, k: int, j: int, ell: int) -> BivarPoly:
    """Total weight of the fillings of the ``k``-``m`` hook.

    The inside tableau has ``j`` alphas and ``ell`` betas, hence
    ``k - 1 - ell`` free rows and ``m - 1 - j`` free columns.
    """
    if m < 1 or k < 1:
        raise ValueError(f"hook_weight needs m, k >= 1, got m={m}, k={k}")
    if not (0 <= j <= m - 1 and 0 <= ell <= k - 1):
        raise ValueError(f"need 0 <= j <= {m - 1} and 0 <= ell <= {k - 1}, got j={j}, ell={ell}")
    out = ZERO
    for s in range(k - ell):
        out = out + monomial(m - j, s)
    for t in range(m - j):
        out = out + monomial(t, k - ell)
    for t in range(1, m - j):
        for s in range(1, k - ell):
            out = out + monomial(t, s)
    return out


def hook_recursion(m: int, k: int) -> BivarPoly:
    """``N'_{m,k}`` rebuilt from ``N_{m-1,k-1}`` by adding a hook (``m, k >= 2``)."""
    if m < 2 or k < 2:
        raise ValueError("the hook recursion needs m, k >= 2")
    inner = n_mk(m - 1, k - 1).shift(-(k - 1), -(m - 1))
    out = ZERO
    for j in range(m):
        for ell in range(k):
            c = inner.coeff(j, ell)
            if c:
                out = out + hook_weight(m, k, j, ell) * monomial(j, ell, c)
    return out.shift(k, m)


def z_n(n: int) -> BivarPoly:
    """Partition function: sum of ``n_mk(n - k, k)`` over ``k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = ZERO
    for k in range(n + 1):
        out = out + n_mk(n - k, k)
    return out


def derrida_coefficient(n: int, p: int) -> int:
    """``p / (2n - p) * C(2n - p, n)``, an integer for ``1 <= p <= n``."""
    num = p * binom(2 * n - p, n)
    q, r = divmod(num, 2 * n - p)
    if r:
        raise ArithmeticError(f"non-integral Derrida coefficient at n={n}, p={p}")
    return q


def z_n_derrida(n: int) -> BivarPoly:
    """Derrida's formula with the geometric quotient expanded.

    ``(a^-(p+1) - b^-(p+1)) / (a^-1 - b^-1) = sum_i a^-i b^-(p-i)``, so each
    ``p`` contributes ``sum_i a^(n-i) b^(n-p+i)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    out = ZERO
    for p in range(1, n + 1):
        c = derrida_coefficient(n, p)
        for i in range(p + 1):
            out = out + monomial(n - i, n - p + i, c)
    return out


def narayana_number(n: int, k: int) -> int:
    """``C(n+1, k) C(n+1, k+1) / (n+1)`` for ``0 <= k <= n``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    q, r = divmod(binom(n + 1, k) * binom(n + 1, k + 1), n + 1)
    assert r == 0
    return q


def catalan_number(n: int) -> int:
    """Catalan numbers by the recurrence ``C_{i+1} = sum C_j C_{i-j}``."""
    cs = [1]
    for i in range(n):
        cs.append(sum(cs[j] * cs[i - j] for j in range(i + 1)))
    return cs[n]


def q_row(n: int, k: int, mode: str) -> QPoly:
    """Filling-weight polynomial of ``N_{n-k,k}`` under a q-substitution.

    The boundary factor ``alpha^k beta^(n-k)`` is divided out before
    substituting, so ``"qq"`` divides by ``q^n`` and ``"q1"`` by ``q^k``.
    """
    return n_mk(n - k, k).shift(-k, -(n - k)).substitute(mode)


def q_table(n: int, mode: str) -> list[QPoly]:
    """Rows ``k = 1 .. n-1`` of the q-specialised table."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [q_row(n, k, mode) for k in range(1, n)]
