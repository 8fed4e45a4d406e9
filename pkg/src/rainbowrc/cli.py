"""Batch command line: ``color``, ``verify``, ``exact``, ``gen`` and ``scan``.

Exit codes: 0 success, 1 property violation, 2 input or parameter error,
3 inconclusive because a search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import ceil
from pathlib import Path
from typing import Optional, Sequence

from .coloring import construct_coloring
from .edge_coloring import EdgeColoring
from .errors import (
    BudgetExceeded,
    ConstructionUnverified,
    GraphFormatError,
    InfeasibleParameters,
    NotTwoConnected,
    RainbowError,
    RepairExhausted,
)
from .graph import Graph, parse_edge_list
from .oracle import Corpus, build_corpus, conjecture_scan, enumerated_corpus, exact_rc
from .verification import is_rainbow_connected

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3

PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
    "#fabebe", "#008080", "#9a6324", "#800000", "#808000", "#000075", "#808080", "#ffd8b1",
)


class UsageError(Exception):
    pass


def _err(msg: str):
    print(msg, file=sys.stderr)


def _read_graph(args) -> Graph:
    if getattr(args, "graph", None):
        text = args.graph.replace(";", "\n")
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text()
    return parse_edge_list(text)


def to_dot(g: Graph, coloring: EdgeColoring) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (u, v), c in sorted(coloring.assignment.items()):
        lines.append(f'  {u} -- {v} [label="{c}", color="{PALETTE[(c - 1) % len(PALETTE)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def run_color(args) -> int:
    g = _read_graph(args)
    try:
        coloring, trace = construct_coloring(g, hamilton_budget=args.budget, ear_budget=args.budget)
    except NotTwoConnected as exc:
        _err(f"NotTwoConnected: {exc}")
        return EXIT_INPUT
    except ConstructionUnverified as exc:
        _err(f"ConstructionUnverified: {exc}; counterexample pair {exc.pair}")
        return EXIT_VIOLATION
    except RepairExhausted as exc:
        _err(f"RepairExhausted: {exc}")
        return EXIT_VIOLATION
    except BudgetExceeded as exc:
        _err(f"BudgetExceeded: {exc}")
        return EXIT_UNKNOWN
    report = is_rainbow_connected(g, coloring)
    ok = report.rainbow_connected and coloring.K <= ceil(g.n / 2)
    if args.format == "dot":
        sys.stdout.write(to_dot(g, coloring))
    elif args.format == "text":
        print(f"n={g.n} K={coloring.K} bound={ceil(g.n / 2)} route={trace.route}")
        for step in trace.steps:
            print(f"  step {step.stage}: {step.rule} ear={list(step.ear)} "
                  f"new={list(step.new_colors)} reused={list(step.reused_colors)}")
        for (u, v), c in sorted(coloring.assignment.items()):
            print(f"{u} {v} {c}")
        print(f"rainbow_connected={report.rainbow_connected} noncomplete={report.noncomplete}")
    else:
        print(json.dumps({
            "coloring": json.loads(coloring.to_json(g.n)),
            "trace": trace.to_dict(),
            "report": report.to_dict(),
        }))
    if not ok:
        _err("coloring failed the final bound or connectivity check")
    return EXIT_OK if ok else EXIT_VIOLATION


def run_verify(args) -> int:
    g = _read_graph(args)
    coloring = EdgeColoring.from_json(Path(args.coloring).read_text())
    report = is_rainbow_connected(g, coloring)
    if args.format == "text":
        print(f"rainbow_connected={report.rainbow_connected} noncomplete={report.noncomplete} "
              f"K={report.K} exceptional={report.exceptional_pairs} failing={report.failing_pairs}")
    else:
        print(report.to_json())
    return EXIT_OK if report.rainbow_connected else EXIT_VIOLATION


def run_exact(args) -> int:
    g = _read_graph(args)
    try:
        res = exact_rc(g, max_colors=args.max_colors, budget=args.budget)
    except BudgetExceeded as exc:
        _err(f"BudgetExceeded: {exc}")
        print(json.dumps({"n": g.n, "rc": "unknown"}))
        return EXIT_UNKNOWN
    if not res.known:
        print(json.dumps({"n": g.n, "rc": "unknown"}))
        return EXIT_UNKNOWN
    if args.format == "text":
        print(f"rc={res.rc}")
    else:
        print(json.dumps({"n": g.n, "rc": res.rc,
                          "witness": json.loads(res.witness.to_json(g.n))}))
    return EXIT_OK


def _corpus_from_args(args, connectivity: int) -> Corpus:
    if args.mode == "enumerate":
        return enumerated_corpus(args.max_n, connectivity, n_min=max(3, connectivity + 1))
    return build_corpus("random", args.max_n, connectivity, args.count, args.seed)


def run_gen(args) -> int:
    if args.max_n is None:
        raise UsageError("gen needs --max-n")
    if args.mode == "enumerate":
        corpus = build_corpus("enumerate", args.max_n, args.connectivity)
    else:
        corpus = build_corpus("random", args.max_n, args.connectivity, args.count, args.seed)
    for g, prov in zip(corpus.graphs, corpus.provenance):
        if args.format == "text":
            sys.stdout.write(g.to_edge_list() + "\n")
        else:
            print(json.dumps({"graph": g.to_edge_list(), "n": g.n, "provenance": prov}))
    return EXIT_OK


def run_scan(args) -> int:
    if args.k is None or args.k < 1:
        raise UsageError("scan needs --k >= 1")
    if args.max_n is None or args.max_n < 1:
        raise UsageError("scan needs --max-n >= 1")
    corpus = _corpus_from_args(args, args.k)
    report = conjecture_scan(args.k, args.max_n, corpus, budget=args.budget)
    sys.stdout.write(report.to_jsonl())
    _err(f"scan k={args.k}: {len(report.records)} graphs, {len(report.violations)} violations, "
         f"{len(report.unknowns)} unknown, max rc-bound gap {report.max_gap}")
    if report.violations:
        return EXIT_VIOLATION
    if report.unknowns:
        return EXIT_UNKNOWN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowrc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_input=True):
        if graph_input:
            p.add_argument("input", nargs="?", default="-", help="edge-list file, '-' for stdin")
            p.add_argument("--graph", help="inline edge list, lines separated by ';'")
        p.add_argument("--format", choices=("json", "text", "dot"), default="json")
        p.add_argument("--budget", type=int, default=None, help="node-expansion budget")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("color", help="construct and verify a ceil(n/2) rainbow coloring")
    common(p)
    p.add_argument("--dot", dest="format", action="store_const", const="dot")
    p.set_defaults(func=run_color)

    p = sub.add_parser("verify", help="check a coloring JSON against a graph")
    common(p)
    p.add_argument("--coloring", required=True, help="coloring JSON file")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("exact", help="exact rainbow connection number")
    common(p)
    p.add_argument("--max-colors", type=int, default=None)
    p.set_defaults(func=run_exact)

    for name, func in (("gen", run_gen), ("scan", run_scan)):
        p = sub.add_parser(name, help="generate a corpus" if name == "gen" else
                           "compare exact rc with ceil(n/k) over a corpus")
        common(p, graph_input=False)
        p.add_argument("--mode", choices=("enumerate", "random"), default="enumerate")
        p.add_argument("--max-n", type=int, default=None)
        p.add_argument("--count", type=int, default=10)
        if name == "gen":
            p.add_argument("--connectivity", type=int, default=2)
        else:
            p.add_argument("--k", type=int, default=None)
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.budget is not None and args.budget <= 0:
        _err("--budget must be positive")
        return EXIT_INPUT
    try:
        return args.func(args)
    except (GraphFormatError, InfeasibleParameters, UsageError, OSError, ValueError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT
    except RainbowError as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
