"""Command-line front end: ``catalan-tasep <verb> [flags]``.

Exit status is 0 on success, 2 on a usage error and 1 when ``verify``
finds a failing check.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import closedforms as cf
from . import verify as verify_mod
from .determinants import det, genfun, narayana_matrix
from .polyring import BivarPoly, parse_rat
from .shapes import parse_shape, parse_state, state_to_shape
from .tasep import (
    MAX_EXACT_SITES,
    RateSpec,
    distribution_to_json,
    prob_k_particles,
    prob_locations,
    prob_state,
    simulate,
    stationary,
    tv_distance,
)


class UsageError(Exception):
    pass


def _rat(text: str):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _sites(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad site list {text!r}") from exc


def _poly_json(p: BivarPoly) -> dict:
    return {"text": p.format(), **p.to_json()}


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.verb} requires {', '.join(missing)}")


def _rates(args) -> tuple | None:
    if args.alpha is None and args.beta is None:
        return None
    _need(args, "alpha", "beta")
    if args.alpha <= 0 or args.beta <= 0:
        raise UsageError("--alpha and --beta must be positive")
    return args.alpha, args.beta


def cmd_prob(args) -> tuple[dict, str]:
    _need(args, "state")
    word = parse_state(args.state)
    num, z = prob_state(word)
    rates = None if args.symbolic else _rates(args)
    payload = {"state": word, "numerator": _poly_json(num), "partition_function": _poly_json(z)}
    text = f"numerator: {num.format()}\nZ_{len(word)}: {z.format()}"
    if rates:
        p = num.eval(*rates) / z.eval(*rates)
        payload["probability"] = str(p)
        text += f"\nprobability: {p}"
    return payload, text


def cmd_prob_locations(args) -> tuple[dict, str]:
    _need(args, "n", "sites")
    p = prob_locations(args.n, args.sites)
    return {"n": args.n, "sites": args.sites, "weight": _poly_json(p)}, p.format()


def cmd_prob_k(args) -> tuple[dict, str]:
    _need(args, "n", "k")
    if not 0 <= args.k <= args.n:
        raise UsageError("--k must lie in 0..n")
    num, z = cf.n_mk(args.n - args.k, args.k), cf.z_n(args.n)
    payload = {"n": args.n, "k": args.k, "numerator": _poly_json(num), "partition_function": _poly_json(z)}
    text = f"numerator: {num.format()}\nZ_{args.n}: {z.format()}"
    rates = None if args.symbolic else _rates(args)
    if rates:
        p = prob_k_particles(args.n, args.k, *rates)
        payload["probability"] = str(p)
        text += f"\nprobability: {p}"
    return payload, text


def cmd_genfun(args) -> tuple[dict, str]:
    if args.shape is None and args.state is None:
        raise UsageError("genfun requires --shape or --state")
    shape = parse_shape(args.shape) if args.shape is not None else state_to_shape(parse_state(args.state))
    p = genfun(shape)
    return {"shape": str(shape), "genfun": _poly_json(p)}, p.format()


def cmd_narayana_count(args) -> tuple[dict, str]:
    if args.shape is not None:
        shape = parse_shape(args.shape)
        count = det(narayana_matrix(shape)).coeff(0, 0) if shape.k else 1
        return {"shape": str(shape), "paths": count}, str(count)
    _need(args, "n", "k")
    value = cf.narayana_number(args.n, args.k)
    return {"n": args.n, "k": args.k, "narayana": value}, str(value)


def cmd_table(args) -> tuple[dict, str]:
    _need(args, "n")
    mode = args.spec or "qq"
    rows = cf.q_table(args.n, mode)
    payload = {"n": args.n, "spec": mode, "rows": {str(k): r.format() for k, r in enumerate(rows, start=1)}}
    text = "\n".join(f"{args.n}\t{k}\t{r.format()}" for k, r in enumerate(rows, start=1))
    return payload, text


def cmd_partition_function(args) -> tuple[dict, str]:
    _need(args, "n")
    z = cf.z_n(args.n)
    payload = {"n": args.n, "partition_function": _poly_json(z)}
    text = z.format()
    rates = None if args.symbolic else _rates(args)
    if rates:
        v = z.eval(*rates)
        payload["value"] = str(v)
        text += f"\nvalue: {v}"
    return payload, text


def cmd_solve(args) -> tuple[dict, str]:
    _need(args, "n", "alpha", "beta")
    if args.n > MAX_EXACT_SITES:
        raise UsageError(f"--n is limited to {MAX_EXACT_SITES} for exact solves")
    spec = RateSpec(args.n, *_rates(args))
    pi = stationary(spec)
    text = "\n".join(f"{s}\t{p}" for s, p in pi.items())
    return distribution_to_json(spec, pi), text


def cmd_simulate(args) -> tuple[dict, str]:
    _need(args, "n", "alpha", "beta")
    if args.horizon < 1:
        raise UsageError("--horizon must be at least 1")
    spec = RateSpec(args.n, *_rates(args))
    res = simulate(spec, args.horizon, args.seed)
    payload = res.to_json()
    lines = [f"{s}\t{f:.6f}\t{res.stderr.get(s, float('nan')):.6f}" for s, f in res.occupation.items()]
    if args.n <= 8:
        exact = {s: float(p) for s, p in stationary(spec).items()}
        tv = tv_distance(res.occupation, exact)
        payload["tv_distance"] = tv
        payload["tv_stderr"] = res.tv_stderr
        lines.append(f"# tv_distance {tv:.6g}  batch-means tv stderr {res.tv_stderr:.6g}")
    return payload, "\n".join(lines)


def cmd_verify(args) -> tuple[dict, str]:
    results = verify_mod.run(args.max_semiperimeter)
    payload = {"max_semiperimeter": args.max_semiperimeter, "checks": [r.to_json() for r in results]}
    payload["passed"] = all(r.passed for r in results)
    return payload, "\n".join(r.line() for r in results)


COMMANDS = {
    "prob": (cmd_prob, "probability of a state from the determinant formula"),
    "prob-locations": (cmd_prob_locations, "un-normalised weight of given particle sites"),
    "prob-k": (cmd_prob_k, "probability of exactly k particles"),
    "genfun": (cmd_genfun, "weight generating function of a shape"),
    "narayana-count": (cmd_narayana_count, "path count of a shape, or a Narayana number"),
    "table": (cmd_table, "q-specialised alpha/beta Narayana polynomials"),
    "partition-function": (cmd_partition_function, "the partition function Z_n"),
    "solve": (cmd_solve, "exact stationary distribution by linear algebra"),
    "simulate": (cmd_simulate, "continuous-time Monte Carlo simulation"),
    "verify": (cmd_verify, "run the invariant suite"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catalan-tasep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        if verb in ("prob", "genfun"):
            p.add_argument("--state")
        if verb in ("prob-locations", "prob-k", "narayana-count", "table", "partition-function", "solve", "simulate"):
            p.add_argument("--n", type=int)
        if verb in ("prob-k", "narayana-count"):
            p.add_argument("--k", type=int)
        if verb == "prob-locations":
            p.add_argument("--sites", type=_sites)
        if verb in ("genfun", "narayana-count"):
            p.add_argument("--shape")
        if verb in ("prob", "prob-k", "partition-function", "solve", "simulate"):
            p.add_argument("--alpha", type=_rat)
            p.add_argument("--beta", type=_rat)
        if verb in ("prob", "prob-k", "partition-function"):
            p.add_argument("--symbolic", action="store_true")
        if verb == "table":
            p.add_argument("--spec", choices=["qq", "q1", "1q"])
        if verb == "simulate":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--horizon", type=int, default=100_000)
        if verb == "verify":
            p.add_argument("--max-semiperimeter", type=int, default=8)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.verb][0]
    try:
        payload, text = handler(args)
    except (UsageError, ValueError) as exc:
        parser.error(f"{args.verb}: {exc}")
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if args.verb == "verify" and not payload["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
