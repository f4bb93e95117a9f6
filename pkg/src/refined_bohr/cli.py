"""Command line interface: ``python -m refined_bohr <command> [options]``.

Commands: ``radius``, ``table``, ``verify``, ``probe``, ``psi-check``,
``lemma-c``.  Reports go to stdout as JSON (default) or CSV; diagnostics go
to stderr.  Exit status is 0 on success, 1 when a verification fails and 2
on usage errors.  Points with ``z**m = -r**m`` are realized as
``z = r exp(i pi / m)``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import verify as V
from .core import RadiusProblem
from .errors import DomainError, NoRootError, SpecError
from .functions import DEFAULT_ORDER, corpus, parse_complex, parse_function
from .radius import k_from_K, solve_radius, strictly_crosses
from .weights import parse_weights


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--m", type=int, default=1, help="power of z in |h(z^m)|")
    parser.add_argument("--p", type=float, default=1.0, help="exponent p in (0, 2]")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--k", type=float, default=None, help="dilation bound k in [0, 1]")
    group.add_argument("--K", type=float, default=None, help="quasiregular K >= 1, k = (K-1)/(K+1)")
    parser.add_argument("--N", type=int, default=1, help="first index of the tail sum")
    parser.add_argument("--weights", default="geometric",
                        help="geometric | even | lacunary:<k> | mask:<s>+<d>n[,...]")
    parser.add_argument("--limit-m", action="store_true", help="use the m -> infinity form")
    parser.add_argument("--tol", type=float, default=V.LHS_TOL)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="refined-bohr", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="solve the characteristic equation")
    _common(p)

    p = sub.add_parser("table", help="closed-form radii against the solver")
    _common(p)
    p.add_argument("--preset", choices=("known-constants",), default="known-constants")

    p = sub.add_parser("verify", help="grid-check the inequality up to the radius")
    _common(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--function", help="function spec, e.g. mobius:a=0.9")
    src.add_argument("--corpus", action="store_true", help="run the seeded test corpus")
    p.add_argument("--r-steps", type=int, default=50)
    p.add_argument("--z-steps", type=int, default=720)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    p = sub.add_parser("probe", help="extremal-family witness beyond the radius")
    _common(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--a-step", type=float, default=1e-4)
    p.add_argument("--a-count", type=int, default=100)

    p = sub.add_parser("psi-check", help="monotonicity of the proof function Psi")
    _common(p)
    p.add_argument("--r", type=float, default=None, help="defaults to the radius")
    p.add_argument("--a-steps", type=int, default=1000)

    p = sub.add_parser("lemma-c", help="weighted coefficient domination for a proportional pair")
    _common(p)
    p.add_argument("--function", required=True)
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--r", type=float, required=True)
    return parser


def _problem(args) -> RadiusProblem:
    if args.K is not None:
        k = k_from_K(args.K)
    else:
        k = 0.0 if args.k is None else args.k
    return RadiusProblem(m=args.m, p=args.p, k=k, N=args.N, weights=parse_weights(args.weights),
                         limit_m=args.limit_m)


def _emit(rows, fmt: str, out):
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    rows = rows if isinstance(rows, list) else [rows]
    if not rows:
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v
                         for k, v in row.items()})
    out.write(buf.getvalue())


def _cmd_radius(args, out) -> int:
    prob = _problem(args)
    res = solve_radius(prob)
    row = {"problem": prob.to_dict(), **res.to_dict(),
           "strict_crossing": strictly_crosses(prob, res.radius)}
    _emit(row, args.format, out)
    return 0


def _cmd_table(args, out) -> int:
    rows = V.radius_table()
    _emit(rows, args.format, out)
    return 0 if all(r["abs_diff"] < 1e-9 for r in rows) else 1


def _cmd_verify(args, out) -> int:
    prob = _problem(args)
    if args.corpus:
        funcs = corpus(args.seed, T=args.order)
    else:
        funcs = [parse_function(args.function, args.order)]
    reports = []
    for f in funcs:
        rep = V.verify_inequality(prob, f, args.r_steps, args.z_steps, args.tol, T=args.order)
        d = rep.to_dict()
        d["seed"] = args.seed if args.corpus else None
        if args.format == "csv":
            d.pop("r_grid")
        reports.append(d)
    _emit(reports if args.corpus else reports[0], args.format, out)
    return 0 if all(r["passed"] for r in reports) else 1


def _cmd_probe(args, out) -> int:
    prob = _problem(args)
    rep = V.sharpness_probe(prob, args.r, args.a_step, args.a_count)
    _emit(rep.to_dict(), args.format, out)
    return 0 if rep.exceeds else 1


def _cmd_psi(args, out) -> int:
    prob = _problem(args)
    rep = V.psi_report(prob, args.r, args.a_steps)
    _emit(rep, args.format, out)
    return 0 if rep["monotone"] and rep["convex"] is not False else 1


def _cmd_lemma_c(args, out) -> int:
    prob = _problem(args)
    lam = parse_complex(args.lam)
    lhs, rhs = V.lemma_c_check(args.function, prob.k, lam, prob.weights, args.r, args.scale)
    ok = lhs <= rhs * (1 + 1e-12)
    _emit({"function": args.function, "k": prob.k, "lambda": [lam.real, lam.imag],
           "scale": args.scale, "weights": prob.weights.spec(), "r": args.r,
           "lhs": lhs, "rhs": rhs, "holds": ok}, args.format, out)
    return 0 if ok else 1


COMMANDS = {"radius": _cmd_radius, "table": _cmd_table, "verify": _cmd_verify,
            "probe": _cmd_probe, "psi-check": _cmd_psi, "lemma-c": _cmd_lemma_c}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (SpecError, DomainError, NoRootError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
