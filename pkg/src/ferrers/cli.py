"""Command-line interface: ``ferrers {info,count,convert,weight,verify}``.

Exit codes: 0 success, 1 rejected input, 2 internal invariant violation or
method disagreement, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

from . import formats, oracles, rook, spanning
from .diagram import FerrersDiagram, conjugate, edges
from .errors import FerrersError, InvariantViolation, RejectedInput
from .hamiltonian import path_to_rook_pair, rook_pair_to_path
from .verify import run_verification

COUNT_METHODS = {
    "rooks": ("enumerate",),
    "hamiltonian": ("enumerate", "formula"),
    "spanning": ("formula", "enumerate", "kirchhoff"),
}
WEIGHT_METHODS = ("formula", "kirchhoff", "enumerate")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, d: FerrersDiagram, result, method: str, plain: str) -> None:
    if args.json:
        print(json.dumps({"shape": list(d.row_lengths), "result": result, "method": method}))
    else:
        print(plain)


def cmd_info(args) -> int:
    d = formats.parse_shape(args.shape)
    conj = conjugate(d)
    result = {"m": d.m, "n": d.n, "conjugate": list(conj.row_lengths), "edges": len(edges(d))}
    plain = f"m={d.m} n={d.n} conjugate={formats.format_shape(conj)} edges={len(edges(d))}"
    _emit(args, d, result, "info", plain)
    return 0


def _count(kind: str, method: str, d: FerrersDiagram) -> int:
    if kind == "rooks":
        return rook.count_rook_placements(d)
    if kind == "hamiltonian":
        if d.m != d.n:
            raise RejectedInput(f"shape {d} has {d.m} rows and {d.n} columns; need a square diagram")
        if method == "formula":
            return rook.count_rook_placements(d) ** 2
        return len(oracles.enumerate_hamiltonian_paths(d))
    if method == "formula":
        return spanning.count_spanning_trees_formula(d)
    if method == "kirchhoff":
        return oracles.kirchhoff_count(d)
    return len(oracles.enumerate_spanning_trees(d))


def _run_methods(args, d, methods, compute) -> int:
    """Evaluate one or every method; disagreement exits 2."""
    if args.all_methods:
        values: Dict[str, int] = {m: compute(m) for m in methods}
        agreed = len(set(values.values())) == 1
        result = next(iter(values.values()))
        if args.json:
            print(json.dumps({"shape": list(d.row_lengths), "result": result if agreed else None,
                              "method": "all", "methods": values}))
        else:
            for m, v in values.items():
                print(f"{m} {v}")
        if not agreed:
            print(f"methods disagree: {values}", file=sys.stderr)
            return 2
        return 0
    method = args.method or methods[0]
    if method not in methods:
        raise RejectedInput(f"method {method!r} not available; choose from {', '.join(methods)}")
    value = compute(method)
    _emit(args, d, value, method, str(value))
    return 0


def cmd_count(args) -> int:
    d = formats.parse_shape(args.shape)
    if args.kind in ("rooks", "hamiltonian") and d.m != d.n:
        raise RejectedInput(f"shape {d} has {d.m} rows and {d.n} columns; need a square diagram")
    return _run_methods(args, d, COUNT_METHODS[args.kind], lambda m: _count(args.kind, m, d))


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise RejectedInput(f"convert {args.direction} requires --{name}")


def cmd_convert(args) -> int:
    d = formats.parse_shape(args.shape)
    if args.direction == "path-to-rooks":
        _need(args, "path")
        p = formats.parse_path(args.path)
        A, B = path_to_rook_pair(d, p)
        a_text = formats.format_placement(A, p.rows)
        b_text = formats.format_placement(B, p.rows)
        _emit(args, d, {"A": a_text, "B": b_text}, args.direction, f"A={a_text}\nB={b_text}")
    elif args.direction == "rooks-to-path":
        _need(args, "a", "b")
        p = rook_pair_to_path(d, formats.parse_placement(args.a), formats.parse_placement(args.b))
        text = formats.format_path(p)
        _emit(args, d, text, args.direction, text)
    elif args.direction == "config-to-tree":
        _need(args, "config")
        t = spanning.config_to_tree(d, formats.parse_config(args.config))
        text = formats.format_tree(t)
        _emit(args, d, text, args.direction, text)
    else:
        _need(args, "tree")
        cfg = spanning.tree_to_config(d, formats.parse_tree(args.tree))
        text = formats.format_config(cfg)
        _emit(args, d, text, args.direction, text)
    return 0


def cmd_weight(args) -> int:
    d = formats.parse_shape(args.shape)
    w = spanning.WeightVector(formats.parse_weights(args.x), formats.parse_weights(args.y))
    w.check(d)

    def compute(method):
        if method == "formula":
            return spanning.weighted_tree_sum_formula(d, w)
        if method == "kirchhoff":
            return oracles.weighted_kirchhoff(d, w)
        return sum(
            spanning.tree_weight(d, spanning.SpanningTree(t), w)
            for t in oracles.enumerate_spanning_trees(d)
        )

    return _run_methods(args, d, WEIGHT_METHODS, compute)


def cmd_verify(args) -> int:
    if args.max_cells < 1:
        raise RejectedInput("--max-cells must be at least 1")
    report = run_verification(args.max_cells, args.seed)
    for warning in report.skipped:
        print(f"warning: skipped {warning}", file=sys.stderr)
    if args.json:
        print(json.dumps({
            "shape": None,
            "result": {"passed": report.passed, "checks": dict(report.checks),
                       "skipped": report.skipped, "failure": report.failure},
            "method": "verify",
        }))
    else:
        for name, n in sorted(report.checks.items()):
            print(f"{name}: {n} passed")
        print("PASS" if report.passed else f"FAIL: {report.failure}")
    if report.passed:
        return 0
    if isinstance(report.error, FerrersError):
        return report.error.exit_code
    return InvariantViolation.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ferrers", description="Bijections and counts on Ferrers graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, shape=True):
        if shape:
            p.add_argument("--shape", required=True, help="row lengths, e.g. 6,5,5,2")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("info", help="summarize a diagram")
    common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("count", help="count rook placements, Hamiltonian paths or spanning trees")
    p.add_argument("kind", choices=sorted(COUNT_METHODS))
    common(p)
    p.add_argument("--method", choices=["formula", "enumerate", "kirchhoff"])
    p.add_argument("--all-methods", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("convert", help="apply one of the bijections")
    p.add_argument("direction", choices=["path-to-rooks", "rooks-to-path", "config-to-tree", "tree-to-config"])
    common(p)
    p.add_argument("--path")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--config")
    p.add_argument("--tree")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("weight", help="weighted sum over spanning trees")
    common(p)
    p.add_argument("--x", required=True, help="row weights")
    p.add_argument("--y", required=True, help="column weights")
    p.add_argument("--method", choices=list(WEIGHT_METHODS))
    p.add_argument("--all-methods", action="store_true")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("verify", help="check every identity on all small diagrams")
    common(p, shape=False)
    p.add_argument("--max-cells", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FerrersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
