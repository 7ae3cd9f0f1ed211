"""Command-line interface.

Subcommands: rmatrix | sdim | invariant | fft | relations | brauer.

The algebra is given positionally as in "gl 2|1" or "osp 3|2" (for osp the
second number is the full odd dimension 2n and must be even), optionally
followed by "order=e1,d1,e2" or the --order flag.  Output is a text table
by default and machine JSON with --json; JSON is byte-deterministic for a
fixed configuration and seed (timings only appear with --timing).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import centralizer, functor, qgl
from .diagrams import brauer_basis, parse_braid
from .rootdata import RootDatum, admissible_orderings, distinguished, sdim_q
from .superspace import DEFAULT_POINTS, PointDisagreement

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    pass


def _parse_symbols(text: str):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) < 2 or tok[0] not in "ed" or not tok[1:].isdigit():
            raise UsageError(f"bad ordering symbol {tok!r} (want e.g. e1,d1)")
        out.append((tok[0], int(tok[1:])))
    return tuple(out)


def parse_datum(tokens: list[str], order: str | None) -> RootDatum:
    """Root datum literal: 'gl 2|1 [order=e1,d1,e2]' / 'osp 3|2 [order=d1,e1]'."""
    if len(tokens) < 2:
        raise UsageError("algebra spec needs a type and a size, e.g. gl 2|1")
    algebra = tokens[0]
    if algebra not in ("gl", "osp"):
        raise UsageError(f"unknown algebra type {algebra!r}")
    size = tokens[1]
    if "|" not in size:
        raise UsageError(f"bad size {size!r}; want m|n as in 2|1")
    ms, ns = size.split("|", 1)
    try:
        m, second = int(ms), int(ns)
    except ValueError as exc:
        raise UsageError(f"bad size {size!r}") from exc
    if algebra == "osp":
        if second % 2:
            raise UsageError("osp odd dimension must be even (osp m|2n)")
        n = second // 2
    else:
        n = second
    for extra in tokens[2:]:
        if extra.startswith("order="):
            order = extra[len("order="):]
        else:
            raise UsageError(f"unexpected token {extra!r}")
    if m + n < 1 or m < 0 or n < 0:
        raise UsageError("need m, n >= 0 and m + n >= 1")
    if order:
        datum = RootDatum(algebra, m, n, _parse_symbols(order))
    else:
        datum = distinguished(algebra, m, n)
    return datum


def _parse_points(text: str):
    return tuple(Fraction(tok.strip()) for tok in text.split(","))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_rmatrix(args) -> int:
    datum = parse_datum(args.algebra, args.order)
    if datum.algebra != "gl":
        raise UsageError("rmatrix is defined for gl data")
    mat = qgl.braiding(datum) if args.braiding else qgl.rmatrix_vv(datum)
    name = "braiding" if args.braiding else "rmatrix"
    payload = {
        "command": name, "datum": datum.describe(),
        "rows": mat.rows, "cols": mat.cols,
        "entries": [[r, c, str(mat.entries[(r, c)])]
                    for (r, c) in sorted(mat.entries)],
    }
    _emit(args, payload, [mat.dump()])
    return EXIT_OK


def cmd_sdim(args) -> int:
    datum = parse_datum(args.algebra, args.order)
    value = sdim_q(datum)
    payload = {"command": "sdim", "datum": datum.describe(), "sdim": str(value)}
    lines = [str(value)]
    if args.all_orderings:
        data = admissible_orderings(datum.algebra, datum.m, datum.n)
        invariant = all(sdim_q(d) == value for d in data)
        payload["orderings_checked"] = len(data)
        payload["invariant"] = invariant
        lines.append(f"invariant across {len(data)} orderings"
                     if invariant else "NOT invariant across orderings")
        if not invariant:
            return EXIT_VERIFY
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_invariant(args) -> int:
    datum = parse_datum(args.algebra, args.order)
    if datum.algebra != "gl":
        raise UsageError("link invariants use the gl flavor")
    ctx = functor.make_context("glq", datum=datum, budget=args.budget)
    if args.ribbon_json:
        if args.braid:
            raise UsageError("give either --braid or --ribbon-json, not both")
        from .diagrams import RibbonWord
        word = RibbonWord.from_json(args.ribbon_json)
        if word.source != () or word.target != ():
            raise UsageError("the ribbon word must be closed (empty source "
                             "and target) to evaluate to a scalar")
        value = functor.evaluate(word, ctx).scalar_value()
        from .scalar import RatFunc
        if not isinstance(value, RatFunc):
            value = RatFunc(value)
        payload = {"command": "invariant", "datum": datum.describe(),
                   "ribbon": args.ribbon_json, "value": str(value)}
    else:
        word = parse_braid(args.braid or "", strands=args.r)
        value = functor.invariant(word, ctx)
        payload = {"command": "invariant", "datum": datum.describe(),
                   "braid": args.braid or "", "strands": word.strands,
                   "value": str(value)}
    _emit(args, payload, [str(value)])
    return EXIT_OK


def cmd_fft(args) -> int:
    datum = parse_datum(args.algebra, args.order)
    if not datum.is_distinguished():
        raise UsageError("fft reports run on the distinguished ordering")
    if datum.algebra == "osp" and args.s:
        raise UsageError("mixed tensor factors (-s) apply to gl only; the "
                         "osp natural module is self-dual")
    points = _parse_points(args.points) if args.points else DEFAULT_POINTS
    rs = [int(x) for x in str(args.r).split(",")] if args.r else [2]
    reports = []
    for r in rs:
        reports.append(centralizer.fft_report(
            datum.algebra, datum.m, datum.n, r, s=args.s,
            points=points, budget=args.budget, seed=args.seed))
    payload = {"command": "fft",
               "cells": [rep.to_dict(with_timing=args.timing) for rep in reports]}
    lines = []
    for rep in reports:
        lines.append(f"{rep.flavor}({rep.m}|{rep.n if rep.flavor == 'gl' else 2 * rep.n}) "
                     f"r={rep.r} s={rep.s}: commutant={rep.commutant_dim} "
                     f"span={rep.span_rank} verdict={rep.verdict}")
        if rep.bound is not None:
            lines.append(f"  even-m spanning bound: {rep.bound_lhs} < {rep.bound}"
                         f" -> {'within' if rep.bound_ok else 'outside'}")
    _emit(args, payload, lines)
    return EXIT_OK if all(rep.equal for rep in reports) else EXIT_VERIFY


def cmd_relations(args) -> int:
    datum = parse_datum(args.algebra, args.order)
    kind = args.kind
    z = None
    if args.z:
        from .scalar import parse as parse_scalar
        z = parse_scalar(args.z)
    report = centralizer.relation_check(kind, datum.m, datum.n,
                                        r=args.r or 2, z=z)
    payload = {"command": "relations", "datum": datum.describe(),
               **report.to_dict()}
    lines = [f"[{'ok' if ok else 'FAIL'}] {name}" + ("" if ok else f" residual {res}")
             for name, ok, res in report.items]
    lines.append(f"all zero: {report.all_zero}")
    _emit(args, payload, lines)
    return EXIT_OK if report.all_zero else EXIT_VERIFY


def cmd_brauer(args) -> int:
    r = args.r or 2
    diagrams_list = brauer_basis(r)
    payload = {"command": "brauer", "r": r, "count": len(diagrams_list),
               "diagrams": [list(d.match) for d in diagrams_list]}
    lines = [f"{len(diagrams_list)} diagrams on {r} strands"]
    if args.algebra:
        datum = parse_datum(args.algebra, args.order)
        if datum.algebra != "osp":
            raise UsageError("brauer --check uses an osp algebra")
        report = centralizer.relation_check("brauer", datum.m, datum.n, r=r)
        payload.update(report.to_dict())
        lines += [f"[{'ok' if ok else 'FAIL'}] {name}"
                  for name, ok, _ in report.items]
        lines.append(f"all relations hold: {report.all_zero}")
        if not report.all_zero:
            _emit(args, payload, lines)
            return EXIT_VERIFY
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qschur",
        description="Exact R-matrices, superdimensions, link invariants and "
                    "centralizer checks for quantum supergroups.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, algebra_required=True):
        p.add_argument("algebra", nargs="*",
                       help="algebra spec, e.g. 'gl 2|1' or 'osp 3|2 order=d1,e1'")
        p.add_argument("--algebra", dest="algebra_flag", metavar="SPEC",
                       help="algebra spec as one string, e.g. --algebra 'gl 2|1'")
        p.add_argument("--order", help="ordering, e.g. e1,d1,e2")
        p.set_defaults(algebra_required=algebra_required)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--budget", type=int, default=None,
                       help="dimension/unknown budget override")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("rmatrix", help="print R or the braiding on V (x) V")
    common(p)
    p.add_argument("--braiding", action="store_true",
                   help="print g-check = tau o R instead of R")
    p.set_defaults(func=cmd_rmatrix, default_budget=4096)

    p = sub.add_parser("sdim", help="quantum superdimension of V")
    common(p)
    p.add_argument("--all-orderings", action="store_true",
                   help="verify invariance across all admissible orderings")
    p.set_defaults(func=cmd_sdim, default_budget=4096)

    p = sub.add_parser("invariant", help="framed invariant of a braid closure")
    common(p)
    p.add_argument("--braid", default="", help="braid word, e.g. 's1 s2^-1 s1'")
    p.add_argument("--ribbon-json", default="",
                   help='closed ribbon word, e.g. \'{"mode": "directed", '
                        '"layers": [["U+"], ["Om-"]]}\'')
    p.add_argument("-r", type=int, default=None, help="strand count override")
    p.set_defaults(func=cmd_invariant, default_budget=functor.DEFAULT_BUDGET)

    p = sub.add_parser("fft", help="centralizer dimension vs diagram span")
    common(p)
    p.add_argument("-r", default="2", help="tensor power(s), e.g. 2 or 1,2,3")
    p.add_argument("-s", type=int, default=0, help="dual tensor factors (gl)")
    p.add_argument("--points", help="specialisation points, e.g. 7/5,13/9")
    p.add_argument("--timing", action="store_true",
                   help="include wall_clock_ms (breaks byte determinism)")
    p.set_defaults(func=cmd_fft, default_budget=centralizer.DEFAULT_UNKNOWN_BUDGET)

    p = sub.add_parser("relations", help="verify quotient relations")
    common(p)
    p.add_argument("--kind", choices=("hecke", "walledbmw", "bmw", "brauer"),
                   required=True)
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--z", help="walled loop parameter (defaults to [m-n]_q)")
    p.set_defaults(func=cmd_relations, default_budget=4096)

    p = sub.add_parser("brauer", help="enumerate Brauer diagrams, optionally "
                                      "verifying the osp matrix model")
    common(p, algebra_required=False)
    p.add_argument("-r", type=int, default=2)
    p.set_defaults(func=cmd_brauer, default_budget=4096)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.budget is None:
        args.budget = args.default_budget
    try:
        if getattr(args, "algebra_flag", None):
            if args.algebra:
                raise UsageError("give the algebra positionally or via "
                                 "--algebra, not both")
            args.algebra = args.algebra_flag.split()
        if getattr(args, "algebra_required", False) and not args.algebra:
            raise UsageError("an algebra spec is required, e.g. gl 2|1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (functor.BudgetError,) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        if "budget" in str(exc):
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PointDisagreement as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except centralizer.MembershipError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
