"""Invariant suite behind ``catalan-tasep verify``.

Every check compares two independently computed quantities (brute force
against formula, Markov solve against determinant, and so on) and reports
a one-line verdict.  Checks run in a fixed order so the report is stable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import closedforms as cf
from .determinants import det, genfun, narayana_matrix
from .paths import enumerate_paths, path_to_tableau, tableau_to_path, to_modified
from .polyring import ZERO, QPoly
from .reference import Q1, QQ
from .shapes import shapes_in_rectangle, shapes_with_semiperimeter
from .tableaux import enumerate_staircase, enumerate_tableaux, staircase_to_condensed
from .tasep import (
    RateSpec,
    formula_distribution,
    locations_shape,
    prob_k_particles,
    prob_locations,
    stationary,
)

RATE_PAIRS = ((Fraction(1), Fraction(1)), (Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(5)))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": self.seconds}


def check_table() -> tuple[bool, str]:
    bad = []
    for table, mode in ((QQ, "qq"), (Q1, "q1")):
        for n, rows in table.items():
            for k, text in rows.items():
                if cf.q_row(n, k, mode) != QPoly.parse(text):
                    bad.append((mode, n, k))
    return not bad, f"{sum(len(r) for r in QQ.values()) * 2} polynomials, mismatches {bad}"


def check_catalan(nmax: int = 12) -> tuple[bool, str]:
    bad = [n for n in range(nmax + 1) if cf.z_n(n).eval(1, 1) != cf.catalan_number(n + 1)]
    return not bad, f"Z_n(1,1) = C_(n+1) for n <= {nmax}, failures {bad}"


def check_narayana(nmax: int = 12) -> tuple[bool, str]:
    bad = [
        (n, k)
        for n in range(nmax + 1)
        for k in range(n + 1)
        if cf.n_mk(n - k, k).eval(1, 1) != cf.narayana_number(n, k)
    ]
    return not bad, f"N_(n-k,k)(1,1) for n <= {nmax}, failures {bad}"


def check_oracle(smax: int) -> tuple[bool, str]:
    bad, count = [], 0
    for n in range(smax + 1):
        for shape in shapes_with_semiperimeter(n):
            total = ZERO
            for t in enumerate_tableaux(shape):
                total = total + t.weight()
            count += 1
            if genfun(shape) != total:
                bad.append(str(shape))
    return not bad, f"{count} shapes with semi-perimeter <= {smax}, failures {bad[:5]}"


def check_path_counts(rows: int = 5, parts: int = 5) -> tuple[bool, str]:
    bad, count = [], 0
    for k in range(1, rows + 1):
        for shape in shapes_in_rectangle(k, parts):
            count += 1
            if det(narayana_matrix(shape)) != len(enumerate_paths(shape)):
                bad.append(str(shape))
    return not bad, f"{count} shapes, failures {bad[:5]}"


def check_bijection(smax: int) -> tuple[bool, str]:
    bad, count = [], 0
    for n in range(smax + 1):
        for shape in shapes_with_semiperimeter(n):
            paths = enumerate_paths(shape)
            images = []
            for t in enumerate_tableaux(shape):
                count += 1
                p = tableau_to_path(t)
                images.append(p.steps)
                if (
                    path_to_tableau(p) != t
                    or p.weight() != t.filling_weight()
                    or to_modified(t).violations()
                ):
                    bad.append(str(shape))
                    break
            if sorted(images) != [p.steps for p in paths]:
                bad.append(str(shape))
    return not bad, f"{count} tableau/path pairs, failures {bad[:5]}"


def check_staircase(nmax: int) -> tuple[bool, str]:
    bad = []
    for n in range(1, nmax + 1):
        tabs = enumerate_staircase(n)
        total = ZERO
        for t in tabs:
            total = total + t.weight()
        images = {staircase_to_condensed(t) for t in tabs}
        condensed = {t for s in shapes_with_semiperimeter(n) for t in enumerate_tableaux(s)}
        if len(tabs) != cf.catalan_number(n + 1) or total != cf.z_n(n) or images != condensed:
            bad.append(n)
    return not bad, f"staircase counts, weights and condensing for n <= {nmax}, failures {bad}"


def check_tasep(nmax: int) -> tuple[bool, str]:
    bad = []
    for n in range(1, nmax + 1):
        for a, b in RATE_PAIRS:
            spec = RateSpec(n, a, b)
            pi = stationary(spec)
            if pi != formula_distribution(spec):
                bad.append((n, str(a), str(b)))
                continue
            for k in range(n + 1):
                agg = sum((p for s, p in pi.items() if s.count("1") == k), Fraction(0))
                if agg != prob_k_particles(n, k, a, b):
                    bad.append((n, str(a), str(b), k))
    return not bad, f"n <= {nmax}, 3 rate pairs, failures {bad}"


def check_locations(nmax: int) -> tuple[bool, str]:
    bad, count = [], 0
    for n in range(1, nmax + 1):
        for k in range(n + 1):
            for sites in combinations(range(1, n + 1), k):
                count += 1
                shape = locations_shape(n, sites)
                if prob_locations(n, sites) != genfun(shape).shift(-shape.k, -shape.cols):
                    bad.append((n, sites))
    return not bad, f"{count} site sets, failures {bad[:5]}"


def check_closed_forms(mk: int = 5, zmax: int = 10, vmax: int = 8) -> tuple[bool, str]:
    bad = []
    for m in range(mk + 1):
        for k in range(mk + 1):
            if not cf.relation_check(m, k):
                bad.append(("relation", m, k))
            if m >= 2 and k >= 2 and cf.hook_recursion(m, k) != cf.n_prime(m, k):
                bad.append(("hook", m, k))
    for n in range(zmax + 1):
        if cf.z_n(n) != cf.z_n_derrida(n):
            bad.append(("derrida", n))
    for n in range(1, vmax + 1):
        z = cf.z_n(n)
        for s in range(1, n + 1):
            want = cf.derrida_coefficient(n, s)
            if any(z.coeff(n - t, n + t - s) != want for t in range(s + 1)):
                bad.append(("coefficients", n, s))
    return not bad, f"failures {bad}"


def suite(max_semiperimeter: int = 8) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    s = max_semiperimeter
    return [
        ("table", check_table),
        ("catalan totals", check_catalan),
        ("narayana specialisation", check_narayana),
        ("determinant vs brute force", lambda: check_oracle(s)),
        ("narayana path counts", lambda: check_path_counts(min(5, s), min(5, s))),
        ("tableau/path bijection", lambda: check_bijection(s)),
        ("staircase tableaux", lambda: check_staircase(min(s, 7))),
        ("tasep stationary", lambda: check_tasep(min(s, 7))),
        ("particle locations", lambda: check_locations(min(s, 8))),
        ("closed forms", check_closed_forms),
    ]


def run(max_semiperimeter: int = 8) -> list[CheckResult]:
    results = []
    for name, fn in suite(max_semiperimeter):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail, time.perf_counter() - t0))
    return results
