"""``domcrit`` command-line entry point.

Exit status is 0 when every requested target passes, 1 when one fails and 2
for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .criticality import CriticalityError, check_critical
from .families import FamilySpecError, build_family
from .graph import Graph, GraphError
from .io import format_graph, graph6_decode, read_graph
from .solvers import Variant, solve
from .verify import (
    THEOREM_IDS,
    DeepRequired,
    SweepConfig,
    VerifyReport,
    _jsonable,
    sweep,
    sweep_graphs,
    verify_bound,
    verify_family,
    verify_theorem,
)


class UsageError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get("DOMCRIT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError(f"DOMCRIT_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _load_graph(source: str) -> Graph:
    """A graph file (graph6 or edge list) or, failing that, a family spec."""
    path = Path(source)
    if path.exists():
        return read_graph(path)
    try:
        return build_family(source).graph
    except FamilySpecError as exc:
        raise UsageError(f"{source}: no such file, and not a family spec ({exc})") from None


def _emit(reports: list[VerifyReport], as_json: bool) -> int:
    passed = all(r.passed for r in reports)
    if as_json:
        if len(reports) == 1:
            doc = reports[0].to_dict()
        else:
            doc = {"reports": [r.to_dict() for r in reports], "verdict": "pass" if passed else "fail"}
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        for r in reports:
            print(r.format_text())
    return 0 if passed else 1


def cmd_build(args) -> int:
    built = build_family(args.spec)
    text = format_graph(built.graph, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    res = solve(g, args.variant)
    if args.json:
        doc = {
            "variant": res.variant.value,
            "value": _jsonable(res.value),
            "certificate": sorted(res.certificate) if res.certificate is not None else None,
            "stats": {"nodes_explored": res.stats.nodes_explored, "elapsed_ms": res.stats.elapsed * 1000.0},
        }
        print(json.dumps(doc, indent=2))
        return 0
    print("infeasible" if not res.feasible else res.value)
    if args.certificate and res.feasible:
        print(" ".join(map(str, sorted(res.certificate))))
    return 0


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    rep = check_critical(g, args.variant, workers=_workers() if g.n >= 30 else 1)
    if args.json:
        doc = {
            "variant": rep.variant.value,
            "base_value": _jsonable(rep.base_value),
            "tested_vertices": sorted(rep.tested_vertices),
            "per_vertex": {str(v): _jsonable(val) for v, val in sorted(rep.per_vertex.items())},
            "verdict": rep.verdict,
            "failing_witnesses": sorted(rep.failing_witnesses),
        }
        print(json.dumps(doc, indent=2))
    else:
        word = "critical" if rep.verdict else "not critical"
        print(f"{rep.variant.symbol} = {_jsonable(rep.base_value)}: {word}")
        if rep.failing_witnesses:
            print("failing vertices: " + " ".join(map(str, sorted(rep.failing_witnesses))))
    return 0 if rep.verdict else 1


def cmd_verify_family(args) -> int:
    workers = _workers()
    reports = [verify_family(spec, deep=args.deep, workers=workers) for spec in args.spec]
    return _emit(reports, args.json)


def cmd_verify_theorem(args) -> int:
    report = verify_theorem(
        args.id,
        n=args.n,
        m=args.m,
        t=args.t,
        k=args.k,
        h=args.h,
        spec=args.spec,
        deep=args.deep,
        workers=_workers(),
    )
    return _emit([report], args.json)


def cmd_verify_bound(args) -> int:
    g = _load_graph(args.graph)
    return _emit([verify_bound(args.variant, g, workers=_workers())], args.json)


def _parse_variants(raw: str) -> tuple[Variant, ...]:
    if raw == "all":
        return tuple(Variant)
    try:
        return tuple(Variant(v.strip()) for v in raw.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify_sweep(args) -> int:
    variants = _parse_variants(args.variants)
    if args.graphs:
        lines = [ln.strip() for ln in Path(args.graphs).read_text().splitlines()]
        graphs = [graph6_decode(ln) for ln in lines if ln and not ln.startswith("#")]
        report = sweep_graphs(graphs, variants)
        report.params = {"graphs_file": args.graphs, "variants": [v.value for v in variants]}
    else:
        try:
            config = SweepConfig(
                n_min=args.n_min,
                n_max=args.n_max,
                samples=args.samples,
                seed=args.seed,
                variants=variants,
                edge_probability=args.p,
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        report = sweep(config)
    return _emit([report], args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domcrit", description="Domination vertex-critical graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    variants = [v.value for v in Variant]

    p = sub.add_parser("build", help="build a family member and print it")
    p.add_argument("spec", help="family spec, e.g. R:m=2 or chain:R:m=2,J:t=2")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("solve", help="compute a domination number")
    p.add_argument("graph", help="graph file (graph6 or edge list) or family spec")
    p.add_argument("--variant", choices=variants, required=True)
    p.add_argument("--certificate", action="store_true", help="also print an optimal set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="check vertex criticality")
    p.add_argument("graph")
    p.add_argument("--variant", choices=variants, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    verify = sub.add_parser("verify", help="verify published claims")
    vsub = verify.add_subparsers(dest="target", required=True)

    p = vsub.add_parser("family", help="verify the claims attached to family specs")
    p.add_argument("spec", nargs="+")
    p.add_argument("--deep", action="store_true", help="allow slow instances")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_family)

    p = vsub.add_parser("theorem", help="verify one result by identifier")
    p.add_argument("id", choices=THEOREM_IDS)
    p.add_argument("--n", type=int, default=0, help="number of Q links")
    p.add_argument("--m", type=int, default=2, help="R parameter")
    p.add_argument("--t", type=int, default=2, help="J / B parameter")
    p.add_argument("--k", type=int, default=None, help="target domination number")
    p.add_argument("--h", default="Hex4", help="seed graph H for A and Q")
    p.add_argument("--spec", default=None, help="family spec for graph-based checks")
    p.add_argument("--deep", action="store_true", help="allow slow instances")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_theorem)

    p = vsub.add_parser("bound", help="check diameter bounds on one graph")
    p.add_argument("graph")
    p.add_argument("--variant", choices=variants, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_bound)

    p = vsub.add_parser("sweep", help="random sweep of diameter bounds")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--variants", default="all", help="comma-separated variants or 'all'")
    p.add_argument("--graphs", help="file of graph6 lines to sweep instead of random samples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilySpecError, CriticalityError, DeepRequired, OSError) as exc:
        print(f"domcrit: error: {exc}", file=sys.stderr)
        return 2


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
