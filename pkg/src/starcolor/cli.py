"""Command-line front end.

Exit codes: 0 positive/valid, 1 negative/invalid, 2 usage or parse error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import instances
from .coloring import validate
from .exact import SolveBudget, Status, decide
from .io import (
    FormatError,
    export_dot,
    format_coloring,
    format_edge_list,
    read_cnf,
    read_coloring,
    read_graph,
)
from .outerpath import NotAnOuterpath, color_outerpath
from .outerplanar import decide_outerplanar_2star
from .reductions import (
    DimacsError,
    format_certificate_map,
    naesat_to_2star,
    threecolor_to_3star2,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    c = read_coloring(args.coloring, g.n)
    verdict = validate(g, c, args.kappa, args.lam)
    if verdict.valid:
        print("VALID")
        return EXIT_OK
    print("INVALID")
    print(f"reason: {verdict.reason}")
    if verdict.witness:
        print("witness: " + " ".join(map(str, verdict.witness)))
    return EXIT_NO


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    outcome = decide(g, args.kappa, args.lam, SolveBudget(args.node_limit, args.time_limit))
    print(outcome.status.value)
    print(f"nodes: {outcome.nodes}", file=sys.stderr)
    if outcome.status is Status.COLORABLE:
        _emit(format_coloring(outcome.coloring), args.output)
        return EXIT_OK
    return EXIT_NO if outcome.status is Status.UNCOLORABLE else EXIT_BUDGET


def cmd_solve_outerplanar(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    try:
        c = decide_outerplanar_2star(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if c is None:
        print("NO")
        return EXIT_NO
    print("YES")
    _emit(format_coloring(c), args.output)
    return EXIT_OK


def cmd_color_outerpath(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    trace: list = []
    try:
        c = color_outerpath(g, trace)
    except NotAnOuterpath as exc:
        raise UsageError(str(exc)) from None
    if args.trace:
        for t in trace:
            held = ",".join(s.name for s in t.holding) or "-"
            print(f"step {t.i}: {t.state.name} fan={t.fan} next={t.next_fan} holds={held}", file=sys.stderr)
    _emit(format_coloring(c), args.output)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    if args.source == "naesat":
        art = naesat_to_2star(read_cnf(args.input))
    else:
        g = read_graph(args.input)
        try:
            art = threecolor_to_3star2(g)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(format_edge_list(art.graph), args.output)
    map_path = args.map or (args.output + ".map" if args.output else None)
    if map_path:
        Path(map_path).write_text(format_certificate_map(art))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family in ("outerplanar", "outerpath") and args.n is None:
        raise UsageError(f"gen {args.family} needs --n")
    if args.family == "outerplanar":
        g = instances.random_outerplanar(args.n, args.seed)
    elif args.family == "outerpath":
        g = instances.random_outerpath(args.n, args.seed, maximal=args.maximal)
    elif args.family == "lemma1":
        g = instances.lemma1_graph()
    else:
        g = instances.k6()
    _emit(format_edge_list(g), args.output)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    c = read_coloring(args.coloring, g.n) if args.coloring else None
    _emit(export_dot(g, c), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starcolor", description="Star colorings: checking, solving, reductions.")
    sub = p.add_subparsers(dest="command", required=True)

    def kl(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--kappa", type=int, default=2)
        sp.add_argument("--lambda", dest="lam", type=int, default=2, choices=(0, 1, 2))

    sp = sub.add_parser("check", help="validate a coloring")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    kl(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("solve", help="exact decision with certificate")
    sp.add_argument("graph")
    kl(sp)
    sp.add_argument("--node-limit", type=int, default=SolveBudget().node_limit)
    sp.add_argument("--time-limit", type=float, default=None)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("solve-outerplanar", help="two-color star coloring of an outerplanar graph")
    sp.add_argument("graph")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_solve_outerplanar)

    sp = sub.add_parser("color-outerpath", help="constructive coloring of an outerpath")
    sp.add_argument("graph")
    sp.add_argument("-o", "--output")
    sp.add_argument("--trace", action="store_true", help="print machine states to stderr")
    sp.set_defaults(func=cmd_color_outerpath)

    sp = sub.add_parser("reduce", help="build a reduction graph")
    sp.add_argument("source", choices=("naesat", "3col"))
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    sp.add_argument("--map", help="certificate map path (default: OUTPUT.map)")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("gen", help="generate an instance")
    sp.add_argument("family", choices=("outerplanar", "outerpath", "lemma1", "k6"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--maximal", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("export-dot", help="DOT rendering, same-colored edges bold")
    sp.add_argument("graph")
    sp.add_argument("--coloring")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export_dot)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (FormatError, DimacsError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
