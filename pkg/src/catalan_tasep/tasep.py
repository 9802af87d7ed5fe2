"""The open-boundary TASEP: exact stationary solve, tableau formulas, simulation.

States are ``'0'/'1'`` words, site 1 first.  Particles enter site 1 at rate
alpha, leave site n at rate beta and hop right at rate 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .closedforms import n_mk, z_n
from .determinants import det, genfun
from .binomial import binom
from .polyring import ONE, ZERO, BivarPoly, monomial
from .shapes import Shape, all_states, parse_state, state_to_shape

__all__ = [
    "RateSpec",
    "MAX_EXACT_SITES",
    "StateBoundError",
    "transitions",
    "generator",
    "stationary",
    "check_balance",
    "prob_state",
    "locations_shape",
    "location_matrix",
    "prob_locations",
    "prob_k_particles",
    "formula_distribution",
    "distribution_to_json",
    "SimulationResult",
    "simulate",
    "tv_distance",
]

MAX_EXACT_SITES = 10


class StateBoundError(ValueError):
    pass


@dataclass(frozen=True)
class RateSpec:
    n: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.n < 1:
            raise ValueError("the lattice needs at least one site")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("rates must be strictly positive")


def transitions(word: str, alpha, beta) -> list[tuple[str, object]]:
    """Outgoing ``(target, rate)`` pairs of one state."""
    out = []
    n = len(word)
    if word[0] == "0":
        out.append(("1" + word[1:], alpha))
    for i in range(n - 1):
        if word[i] == "1" and word[i + 1] == "0":
            out.append((word[:i] + "01" + word[i + 2:], 1))
    if word[-1] == "1":
        out.append((word[:-1] + "0", beta))
    return out


def generator(spec: RateSpec, max_sites: int = MAX_EXACT_SITES) -> dict[str, dict[str, Fraction]]:
    """Sparse rate matrix ``Q[s][t]``; each row sums to zero."""
    if spec.n > max_sites:
        raise StateBoundError(f"n={spec.n} exceeds the exact-solve bound {max_sites}")
    Q: dict[str, dict[str, Fraction]] = {}
    for s in all_states(spec.n):
        row: dict[str, Fraction] = {}
        for t, rate in transitions(s, spec.alpha, spec.beta):
            row[t] = row.get(t, Fraction(0)) + Fraction(rate)
        row[s] = -sum(row.values(), Fraction(0))
        Q[s] = row
    return Q


def _solve_sparse(rows: list[dict[int, Fraction]], rhs: list[Fraction], nvars: int) -> list[Fraction]:
    """Exact Gaussian elimination on sparse rows, smallest row as pivot."""
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    holders: dict[int, set[int]] = {v: set() for v in range(nvars)}
    for i, r in enumerate(rows):
        for v in r:
            holders[v].add(i)
    active = set(range(len(rows)))
    pivots: list[tuple[int, int]] = []
    for v in range(nvars):
        cands = [i for i in holders[v] if i in active]
        if not cands:
            raise ArithmeticError("singular system")
        p = min(cands, key=lambda i: len(rows[i]))
        active.discard(p)
        prow = rows[p]
        pv = prow[v]
        for i in cands:
            if i == p:
                continue
            row = rows[i]
            f = row[v] / pv
            for u, c in prow.items():
                nc = row.get(u, 0) - f * c
                if nc:
                    if u not in row:
                        holders[u].add(i)
                    row[u] = nc
                elif u in row:
                    del row[u]
                    holders[u].discard(i)
            rhs[i] -= f * rhs[p]
        pivots.append((v, p))
    x = [Fraction(0)] * nvars
    for v, p in reversed(pivots):
        row = rows[p]
        acc = rhs[p] - sum((c * x[u] for u, c in row.items() if u != v), Fraction(0))
        x[v] = acc / row[v]
    return x


def stationary(spec: RateSpec, max_sites: int = MAX_EXACT_SITES) -> dict[str, Fraction]:
    """Unique ``pi`` with ``pi Q = 0`` and total mass 1, in exact rationals.

    The balance equations are the columns of ``Q``; the last one is replaced
    by the normalisation, which removes the rank deficiency.
    """
    Q = generator(spec, max_sites)
    states = list(Q)
    index = {s: i for i, s in enumerate(states)}
    N = len(states)
    cols: list[dict[int, Fraction]] = [{} for _ in range(N)]
    for s, row in Q.items():
        for t, rate in row.items():
            cols[index[t]][index[s]] = rate
    rhs = [Fraction(0)] * N
    cols[-1] = {i: Fraction(1) for i in range(N)}
    rhs[-1] = Fraction(1)
    x = _solve_sparse(cols, rhs, N)
    return {s: x[i] for i, s in enumerate(states)}


def check_balance(spec: RateSpec, pi: dict[str, Fraction]) -> bool:
    Q = generator(spec, max_sites=spec.n)
    flow = {s: Fraction(0) for s in Q}
    for s, row in Q.items():
        for t, rate in row.items():
            flow[t] += pi[s] * rate
    return all(v == 0 for v in flow.values()) and sum(pi.values()) == 1


def prob_state(word: str, alpha=None, beta=None):
    """Probability of ``word`` from the determinant formula.

    Without rates returns the pair ``(numerator, Z_n)`` of polynomials;
    with rates returns the exact rational ratio.
    """
    word = parse_state(word)
    num = genfun(state_to_shape(word))
    z = z_n(len(word))
    if alpha is None and beta is None:
        return num, z
    if alpha is None or beta is None:
        raise ValueError("give both alpha and beta, or neither")
    return num.eval(alpha, beta) / z.eval(alpha, beta)


def locations_shape(n: int, sites: Sequence[int]) -> Shape:
    """Shape of the state with particles exactly at ``sites`` (1-based)."""
    sites = list(sites)
    if any(b <= a for a, b in zip(sites, sites[1:])):
        raise ValueError(f"sites must be strictly increasing, got {sites}")
    if sites and (sites[0] < 1 or sites[-1] > n):
        raise ValueError(f"sites must lie in 1..{n}, got {sites}")
    k = len(sites)
    return Shape(tuple(n - k + j - x for j, x in enumerate(sites, start=1)), n - k)


def _term(ea: int, eb: int, c: int) -> BivarPoly:
    if not c:
        return ZERO
    if ea < 0 or eb < 0:
        raise ArithmeticError("negative exponent with nonzero coefficient")
    return monomial(ea, eb, c)


def location_matrix(n: int, sites: Sequence[int]) -> list[list[BivarPoly]]:
    """Weighted matrix written directly in the particle positions.

    Uses ``x_{k+1} = n + 1``.  The inner sum runs over
    ``0 <= l <= x_{j+1} - x_j - 2``, which is ``lam_j - lam_{j+1} - 1``
    after substituting ``lam_j = n - k + j - x_j``.
    """
    locations_shape(n, sites)
    k = len(sites)
    x = [None] + list(sites) + [n + 1]
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            d = j - i
            ea = i - (j + 1) + x[j + 1] - x[i]
            top = n - k + j + 1 - x[j + 1]
            v = _term(ea, d, binom(top, d)) + _term(ea, d + 1, binom(top, d + 1))
            for ell in range(x[j + 1] - x[j] - 1):
                ea2 = i - j + x[j] - x[i] + ell
                top2 = n - k + j - x[j] - ell - 1
                v = v + _term(ea2, d, binom(top2, d - 1)) + _term(ea2, d + 1, binom(top2, d))
            row.append(v)
        rows.append(row)
    return rows


def prob_locations(n: int, sites: Sequence[int]) -> BivarPoly:
    """Un-normalised weight of particles at exactly ``sites``: a bare determinant."""
    if not sites:
        locations_shape(n, sites)
        return ONE
    return det(location_matrix(n, sites))


def prob_k_particles(n: int, k: int, alpha, beta) -> Fraction:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return n_mk(n - k, k).eval(alpha, beta) / z_n(n).eval(alpha, beta)


def formula_distribution(spec: RateSpec) -> dict[str, Fraction]:
    z = z_n(spec.n).eval(spec.alpha, spec.beta)
    return {
        s: genfun(state_to_shape(s)).eval(spec.alpha, spec.beta) / z
        for s in all_states(spec.n)
    }


def distribution_to_json(spec: RateSpec, pi: dict[str, Fraction]) -> dict:
    return {
        "n": spec.n,
        "alpha": str(spec.alpha),
        "beta": str(spec.beta),
        "pi": {s: str(p) for s, p in pi.items()},
    }


def tv_distance(p: dict[str, float], q: dict[str, float]) -> float:
    keys = set(p) | set(q)
    return 0.5 * sum(abs(float(p.get(s, 0)) - float(q.get(s, 0))) for s in keys)


@dataclass
class SimulationResult:
    n: int
    alpha: float
    beta: float
    horizon: int
    seed: int
    total_time: float
    occupation: dict[str, float]
    stderr: dict[str, float] = field(default_factory=dict)
    batches: int = 0

    @property
    def tv_stderr(self) -> float:
        """Half the summed per-state batch-means standard errors."""
        return 0.5 * sum(self.stderr.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "beta": self.beta,
            "horizon": self.horizon,
            "seed": self.seed,
            "rng": "numpy PCG64",
            "total_time": self.total_time,
            "batches": self.batches,
            "occupation": self.occupation,
            "stderr": self.stderr,
        }


def simulate(spec: RateSpec, horizon: int, seed: int, batches: int = 50) -> SimulationResult:
    """Event-driven simulation with exponential holding times.

    Starts from the empty lattice.  Occupation is weighted by holding time;
    standard errors come from ``batches`` equal-length batches of events.
    Randomness is numpy's PCG64 seeded with ``seed``.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least one event")
    states = all_states(spec.n)
    index = {s: i for i, s in enumerate(states)}
    a, b = float(spec.alpha), float(spec.beta)
    targets, cumrates, totals = [], [], []
    for s in states:
        tr = transitions(s, a, b)
        targets.append([index[t] for t, _ in tr])
        cumrates.append(np.cumsum([float(r) for _, r in tr]).tolist())
        totals.append(sum(float(r) for _, r in tr))

    rng = np.random.Generator(np.random.PCG64(seed))
    expo = rng.standard_exponential(horizon)
    unif = rng.random(horizon)

    nb = min(batches, horizon)
    bounds = np.linspace(0, horizon, nb + 1).astype(int)
    occ = np.zeros((nb, len(states)))
    state = index["0" * spec.n]
    batch = 0
    for e in range(horizon):
        while e >= bounds[batch + 1]:
            batch += 1
        rate = totals[state]
        occ[batch, state] += expo[e] / rate
        u = unif[e] * rate
        cr = targets[state]
        cum = cumrates[state]
        nxt = cr[-1]
        for t, c in zip(cr, cum):
            if u < c:
                nxt = t
                break
        state = nxt

    total = occ.sum()
    freq = occ.sum(axis=0) / total
    stderr = {}
    if nb > 1:
        per_batch = occ / occ.sum(axis=1, keepdims=True)
        se = per_batch.std(axis=0, ddof=1) / np.sqrt(nb)
        stderr = {s: float(se[i]) for i, s in enumerate(states)}
    return SimulationResult(
        n=spec.n,
        alpha=a,
        beta=b,
        horizon=horizon,
        seed=seed,
        total_time=float(total),
        occupation={s: float(freq[i]) for i, s in enumerate(states)},
        stderr=stderr,
        batches=nb,
    )
