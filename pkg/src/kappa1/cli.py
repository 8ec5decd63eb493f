"""Command-line entry point.

Exit codes: 0 decided, 1 formula refuted, 2 bad input, 3 undecided interval.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .connectivity import Status, Strategy, super_connectivity, vertex_connectivity
from .errors import BudgetExceeded, Kappa1Error
from .graph import Graph, export_dot, kneser_graph, parse_graph, serialize_graph
from .kneser import (
    DEFAULT_VERIFY_CAP,
    Verdict,
    claim_sweep,
    conjecture_value,
    conjecture_value_two_branch,
    verify_theorem,
)
from .oracle import OracleBudget, brute_force_super_connectivity
from .parallel import resolve_workers

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_BAD_INPUT = 2
EXIT_UNDECIDED = 3

_KNESER_SPEC = re.compile(r"kg:(\d+),(\d+)", re.IGNORECASE)


def load_graph(spec: str) -> Graph:
    """Read a graph file, ``-`` for stdin, or ``kg:N,K`` for a generated Kneser graph."""
    m = _KNESER_SPEC.fullmatch(spec)
    if m:
        return kneser_graph(int(m.group(1)), int(m.group(2)))
    text = sys.stdin.read() if spec == "-" else Path(spec).read_text(encoding="utf-8")
    return parse_graph(text)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit(args: argparse.Namespace, doc: dict[str, Any], lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _budget(args: argparse.Namespace) -> OracleBudget:
    return OracleBudget(max_cut_size=args.max_cut_size, max_subset_count=args.budget)


def cmd_gen(args: argparse.Namespace) -> int:
    g = kneser_graph(args.n, args.k)
    _write(serialize_graph(g), args.out)
    return EXIT_OK


def cmd_kappa(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    symmetry = args.assume_transitive or g.params is not None
    res = vertex_connectivity(g, symmetry=symmetry, workers=args.threads)
    lines = [f"kappa = {res.kappa}"]
    if res.complete:
        lines.append("complete graph: no vertex cut exists")
    elif res.certificate is not None:
        lines.append(f"cut = {sorted(res.certificate.cut)}")
        lines.append(f"component sizes = {[len(c) for c in res.certificate.components]}")
    _emit(args, res.to_dict(g), lines)
    return EXIT_OK


def cmd_kappa1(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    res = super_connectivity(g, args.strategy, _budget(args), args.assume_transitive, args.threads)
    lines = [f"status = {res.status.value}", f"bounds = [{res.lower_bound}, {res.upper_bound}]"]
    if res.value is not None:
        lines.insert(0, f"kappa1 = {res.value}")
    if res.upper_witness is not None:
        lines.append(f"cut = {sorted(res.upper_witness.cut)}")
        lines.append(f"component sizes = {[len(c) for c in res.upper_witness.components]}")
    _emit(args, res.to_dict(g), lines)
    return EXIT_UNDECIDED if res.status is Status.INTERVAL else EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    res = brute_force_super_connectivity(g, _budget(args), args.threads)
    if res.value is not None:
        lines = [f"kappa1 = {res.value}", f"cut = {sorted(res.certificate.cut)}"]  # type: ignore[union-attr]
    else:
        scope = "at all" if res.complete else f"of size <= {res.up_to}"
        lines = [f"no super cut {scope}"]
    lines.append(f"subsets checked = {res.subsets_checked}")
    _emit(args, {"schema": "kappa1.result/1", "kind": "oracle", **res.to_dict(g)}, lines)
    return EXIT_OK if res.value is not None or res.complete else EXIT_UNDECIDED


def cmd_claims(args: argparse.Namespace) -> int:
    sweep = claim_sweep(args.n)
    lines = [
        f"{r.cls.kind.value:10s} count={r.exact_count:4d} bound={r.bound:4d} holds={r.holds}" for r in sweep.reports
    ]
    for s in sweep.sweeps.values():
        lines.append(
            f"sweep {s.kind.value:10s} triples={s.triples:5d} violations={s.violations} "
            f"max={s.max_count} bound={s.bound}"
        )
    _emit(args, sweep.to_dict(), lines)
    return EXIT_OK if sweep.violations == 0 else EXIT_REFUTED


def cmd_verify(args: argparse.Namespace) -> int:
    docs, lines, code = [], [], EXIT_OK
    for n in range(args.n_min, args.n_max + 1):
        v = verify_theorem(n, args.strategy, cap=args.cap, budget=_budget(args), workers=args.threads)
        r = v.result
        docs.append(v.to_dict())
        lines.append(f"n={n:3d} expected={v.expected:5d} bounds=[{r.lower_bound}, {r.upper_bound}] {v.verdict.value}")
        if v.verdict is Verdict.REFUTED:
            code = EXIT_REFUTED
        elif v.verdict is not Verdict.CONFIRMED and code == EXIT_OK:
            code = EXIT_UNDECIDED
    _emit(args, {"schema": "kappa1.result/1", "kind": "verify_range", "runs": docs}, lines)
    return code


def cmd_formula(args: argparse.Namespace) -> int:
    value = conjecture_value(args.n, args.k)
    assert value == conjecture_value_two_branch(args.n, args.k)
    doc = {"schema": "kappa1.result/1", "kind": "formula", "n": args.n, "k": args.k, "value": value}
    _emit(args, doc, [str(value)])
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    _write(export_dot(load_graph(args.graph)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: $KAPPA1_THREADS or CPU count)")
    common.add_argument("--budget", type=int, default=10**8, help="oracle cap on enumerated subsets")
    common.add_argument("--max-cut-size", type=int, default=8, help="oracle cap on cut size")
    common.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
    common.add_argument("--assume-transitive", action="store_true", help="pin one terminal/edge (sound only for transitive graphs)")

    parser = argparse.ArgumentParser(prog="kappa1", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write KG(n,k) in the graph text format")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    graph_help = "graph file, '-' for stdin, or kg:N,K"
    for name, func, text in (
        ("kappa", cmd_kappa, "vertex connectivity"),
        ("kappa1", cmd_kappa1, "super-connectivity (certified interval)"),
        ("oracle", cmd_oracle, "brute-force super-connectivity"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("graph", help=graph_help)
        p.set_defaults(func=func)

    p = sub.add_parser("claims", parents=[common], help="count check of the triangle/type-1/type-2 bounds")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_claims)

    p = sub.add_parser("verify", parents=[common], help="check the KG(n,3) formula for a range of n")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_VERIFY_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("formula", parents=[common], help="closed-form super-connectivity of KG(n,k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("export", parents=[common], help="write a graph as DOT")
    p.add_argument("graph", help=graph_help)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.threads = resolve_workers(args.threads)
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"kappa1: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (Kappa1Error, ValueError, OSError) as exc:
        print(f"kappa1: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
