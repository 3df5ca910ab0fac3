"""``indseq`` command line.

Exit codes: 0 ok, 2 parse error, 3 budget exceeded, 4 infeasible precondition.
Data goes to stdout (or --output); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import graph_core as gc
from .bipartite_bounds import (
    ThresholdRangeError,
    coefficient_sandwich,
    logconcavity_threshold_ok,
    profile,
    unimodality_ranges,
    unimodality_threshold_ok,
)
from .enumeration import DEFAULT_MAX_N, enumerate_graphs
from .errors import BudgetExceeded, GraphError
from .experiments import SCHEDULES, ExperimentConfig, run_experiment
from .extremal import verify_fixed_size, verify_max_total
from .graph6 import read_graph6, write_graph6
from .ind_poly import DEFAULT_NODE_BUDGET, ind_seq
from .seq_analysis import analyze, is_real_rooted

EXIT_PARSE, EXIT_BUDGET, EXIT_INFEASIBLE = 2, 3, 4
SCHEMA = "indseq/1"

GRAMMAR = """\
graph expressions:
  path(n) cycle(n) complete(n) empty(n) star(n) complete_bipartite(a, b)
  union(G, H, ...) join(G, H, ...)
  shorthands: Kn = complete(n), Pn = path(n), Cn = cycle(n), En = empty(n)
  example: "join(union(K4,K4,K4),K37)"
anything else is read as a graph6 string.
"""

_FAMILIES = {
    "path": gc.path,
    "cycle": gc.cycle,
    "complete": gc.complete,
    "empty": gc.empty,
    "star": gc.star,
    "complete_bipartite": gc.complete_bipartite,
    "union": gc.disjoint_union,
    "join": gc.join,
}
_SHORT = {"K": gc.complete, "P": gc.path, "C": gc.cycle, "E": gc.empty}


class ParseError(GraphError):
    pass


def _eval_node(node: ast.AST):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        m = re.fullmatch(r"([KPCE])(\d+)", node.id)
        if m:
            return _SHORT[m.group(1)](int(m.group(2)))
        raise ParseError(f"unknown name {node.id!r}")
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        fn = _FAMILIES.get(node.func.id)
        if fn is None:
            raise ParseError(f"unknown constructor {node.func.id!r}")
        return fn(*[_eval_node(a) for a in node.args])
    raise ParseError("unsupported syntax in graph expression")


def parse_expression(text: str) -> gc.Graph:
    """Evaluate a builder expression such as ``join(union(K4,K4,K4),K37)``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}") from exc
    try:
        g = _eval_node(tree.body)
    except TypeError as exc:
        raise ParseError(str(exc)) from exc
    if not isinstance(g, gc.Graph):
        raise ParseError(f"{text!r} does not describe a graph")
    return g


def parse_graph(text: str) -> gc.Graph:
    s = text.strip()
    if "(" in s or re.fullmatch(r"[KPCE]\d+", s):
        return parse_expression(s)
    return read_graph6(s)


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# ---------------------------------------------------------------- subcommands

def cmd_poly(args) -> None:
    text = Path(args.file).read_text() if args.file else args.graph
    if text is None:
        raise ParseError("give a graph expression, graph6 string or --file")
    g = parse_graph(text)
    seq = ind_seq(g, args.budget_nodes)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "i_t"])
        w.writerows(enumerate(seq))
        _emit(args, buf.getvalue())
        return
    _emit(args, _dump({
        "schema": SCHEMA,
        "n": g.n,
        "graph6": write_graph6(g),
        "sequence": [str(c) for c in seq],
        "total": str(sum(seq)),
        "alpha": len(seq) - 1,
        "verdict": analyze(seq).to_dict(),
        "real_rooted": is_real_rooted(seq),
    }))


def _experiment_config(args) -> ExperimentConfig:
    if args.p is None and args.p_schedule is None:
        raise ParseError("give --p or --p-schedule")
    try:
        p = None if args.p is None else Fraction(args.p)
    except ValueError as exc:
        raise ParseError(f"bad probability {args.p!r}") from exc
    return ExperimentConfig(
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        p=p,
        schedule=args.p_schedule,
        const=args.schedule_const,
        workers=args.workers,
        bounds_only=args.bounds_only,
        node_budget=args.budget_nodes,
    )


def cmd_random(args) -> None:
    result = run_experiment(_experiment_config(args))
    if args.format == "csv":
        buf = io.StringIO()
        cols = ["stream", "edges", "K", "x_min", "x_max", "uni_threshold_all", "logcon_threshold_all",
                "unimodal", "logconcave_from", "increasing_prefix_len", "sandwich_ok"]
        w = csv.DictWriter(buf, cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(result["samples"])
        _emit(args, buf.getvalue())
    else:
        _emit(args, _dump(result))


def cmd_extremal(args) -> None:
    if args.t is not None:
        rep = verify_fixed_size(args.n, args.delta, args.t, workers=args.workers, max_n=args.max_n)
    else:
        rep = verify_max_total(args.n, args.delta, args.x, workers=args.workers, max_n=args.max_n)
    _emit(args, _dump(rep.to_dict()))


def cmd_enumerate(args) -> None:
    shard = None
    if args.shard:
        m = re.fullmatch(r"(\d+)/(\d+)", args.shard)
        if not m:
            raise ParseError("--shard expects i/k")
        shard = (int(m.group(1)), int(m.group(2)))
    lines = [write_graph6(g) + "\n" for g in enumerate_graphs(args.n, args.delta, shard=shard, max_n=args.max_n)]
    _emit(args, "".join(lines))


def _bipartite_input(args) -> gc.BipartiteGraph:
    if args.spec:
        path = Path(args.spec)
        text = path.read_text() if path.is_file() else args.spec
        try:
            return gc.BipartiteGraph.from_json(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad bipartite JSON: {exc}") from exc
    if args.n is None or args.p is None:
        raise ParseError("give a bipartite JSON spec or --n and --p to sample")
    return gc.sample_bipartite(args.n, Fraction(args.p), gc.RngSpec(args.seed, args.stream))


def cmd_bounds(args) -> None:
    b = _bipartite_input(args)
    prof = profile(b)
    left, right = unimodality_ranges(b.n)
    out = {
        "schema": SCHEMA,
        "graph": json.loads(b.to_json()),
        "profile": prof.to_dict(),
        "unimodality_threshold": {str(t): unimodality_threshold_ok(prof, t) for t in (*left, *right)},
        "logconcavity_threshold": {str(t): logconcavity_threshold_ok(prof, t) for t in range(1, b.n)},
    }
    if not args.no_count:
        rows = coefficient_sandwich(b, prof=prof, node_budget=args.budget_nodes)
        out["sandwich"] = [r.to_dict() for r in rows]
        out["sandwich_ok"] = all(r.lower_ok and r.upper_ok for r in rows)
    _emit(args, _dump(out))


# ---------------------------------------------------------------- parser

def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("INDSEQ_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", help="write data to FILE instead of stdout")
    common.add_argument("--budget-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    common.add_argument("--workers", type=int, default=_default_workers(),
                        help="worker processes (default: $INDSEQ_WORKERS or 1)")

    parser = argparse.ArgumentParser(
        prog="indseq",
        description="Independent-set sequences, bounds and extremal checks.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="sequence and verdict of one graph",
                       epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("graph", nargs="?", help="builder expression or graph6 string")
    p.add_argument("--file", help="read the graph from a file")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("random", parents=[common], help="Monte Carlo over G(n, n, p)")
    p.add_argument("--n", type=int, required=True, help="side size")
    p.add_argument("--p", help="fixed edge probability (decimal or a/b)")
    p.add_argument("--p-schedule", choices=SCHEDULES)
    p.add_argument("--schedule-const", type=float, help="constant of the chosen schedule")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bounds-only", action="store_true", help="skip exact counting")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("extremal", parents=[common], help="exhaustive maximization under min degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--x", help="maximize P(G, x) at this rational x")
    p.add_argument("--t", type=int, help="maximize i_t instead of i")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("enumerate", parents=[common], help="graph6 list of isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--shard", help="i/k: emit only shard i of k")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bounds", parents=[common], help="K, m(k), x(t) and the coefficient sandwich")
    p.add_argument("spec", nargs="?", help='JSON {"n": .., "rows": [hex, ..]} or a path to one')
    p.add_argument("--n", type=int)
    p.add_argument("--p")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stream", type=int, default=0)
    p.add_argument("--no-count", action="store_true", help="skip exact counting")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except BudgetExceeded as exc:
        print(f"indseq: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, OSError) as exc:
        print(f"indseq: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ThresholdRangeError) as exc:
        print(f"indseq: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return 0


if __name__ == "__main__":
    sys.exit(main())
