"""Acceptance criteria, each with its tolerance and runtime budget.

Every test prints one ``PASS``/``FAIL`` line (visible without ``-s``).
"""

import time

import pytest

from catalan_tasep import verify
from catalan_tasep.paths import enumerate_paths, path_to_tableau, tableau_to_path
from catalan_tasep.polyring import monomial
from catalan_tasep.shapes import parse_shape
from catalan_tasep.tableaux import enumerate_tableaux, validate
from catalan_tasep.tasep import RateSpec, simulate, stationary, tv_distance


def figures():
    shape3 = parse_shape("3,2,2,0,0/4")
    fig3 = [t for t in enumerate_tableaux(shape3) if t.weight() == monomial(8, 5)]
    ok = bool(fig3) and all(validate(t) is None for t in fig3)

    p4 = [p for p in enumerate_paths(parse_shape("6,4,4,2,0/9")) if p.steps == "WWWSWWSWWSWWSS"][0]
    t4 = path_to_tableau(p4)
    ok &= p4.weight() == monomial(4, 3) and t4.weight() == monomial(9, 12)

    p6 = [p for p in enumerate_paths(parse_shape("11,8,6,6,6,2/13")) if p.steps == "WWWSWWWWSSSWWWWWWSS"][0]
    t6 = path_to_tableau(p6)
    ok &= p6.weight() == monomial(9, 4) and t6.filling_weight() == monomial(9, 4)
    ok &= tableau_to_path(t6) == p6 and tableau_to_path(t4) == p4
    return ok, "condensed a^8b^5, path a^4b^3 with total a^9b^12, path a^9b^4 with its tableau"


def simulation():
    spec = RateSpec(3, 1, 1)
    res = simulate(spec, 10**6, seed=20240607)
    exact = {s: float(p) for s, p in stationary(spec).items()}
    tv = tv_distance(res.occupation, exact)
    bound = 3 * res.tv_stderr
    return tv < bound, f"tv {tv:.5f} < 3 x batch-means stderr {bound:.5f}"


CRITERIA = [
    ("1 table reproduction", 5, verify.check_table),
    ("2 catalan totals", 5, lambda: verify.check_catalan(12)),
    ("3 narayana specialisation", 5, lambda: verify.check_narayana(12)),
    ("4 oracle equivalence", 60, lambda: verify.check_oracle(10)),
    ("5 narayana path counts", 30, lambda: verify.check_path_counts(5, 5)),
    ("6 bijection", 60, lambda: verify.check_bijection(10)),
    ("7 tasep end-to-end", 60, lambda: verify.check_tasep(7)),
    ("8 closed-form identities", 60, lambda: verify.check_closed_forms(5, 10, 8)),
    ("9 figure spot checks", 1, figures),
    ("10 simulator statistics", 30, simulation),
]


@pytest.mark.parametrize("name,budget,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, budget, fn, capsys):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    passed = ok and elapsed < budget
    with capsys.disabled():
        print(f"\n{'PASS' if passed else 'FAIL'}  criterion {name}: {detail} ({elapsed:.2f}s of {budget}s)")
    assert ok, detail
    assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
