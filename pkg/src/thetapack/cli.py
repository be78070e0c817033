"""Command-line entry point.

Exit codes: 0 success, 1 semantic failure (disagreement, violation, no
coloring), 2 input error, 3 search node limit reached.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certificates import build_certificate, certificate_cycle, certificate_path
from .formula import pcn_theta
from .graph import (
    GraphError, OrientedGraph, ThetaSpec, build_cycle, build_path, build_theta, graph_from_json, graph_to_json,
)
from .oriented import build_theta0, color_oriented_theta_detailed, conjecture_scan, oriented_pcn
from .patterns import default_table
from .solver import NodeLimitExceeded, SolverConfig, exists_k_coloring, pcn_exact
from .sweep import (
    EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT, EXIT_OK, load_json, matrix_for, run_sweep_oriented, run_sweep_undirected,
    verify_files,
)


def _lengths(text: str) -> ThetaSpec:
    try:
        return ThetaSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _dump(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_pcn(args) -> int:
    k, trace = pcn_theta(args.lengths, published=args.published)
    print(f"{args.lengths}: pcn = {k} [{trace}]")
    if args.certificate:
        cert = build_certificate(args.lengths, k, trace)
        print(f"certificate: {cert.status}")
        for i, (w, key) in enumerate(zip(cert.words, cert.keys), start=1):
            print(f"  path {i}: {w}  ({key})")
        _dump(cert.coloring.to_json(), args.output)
    return EXIT_OK


def cmd_certificate(args) -> int:
    if args.provenance:
        table = default_table()
        _dump({"entries": table.provenance(),
               "repairs": [vars(r) for r in table.repairs]}, args.output)
        return EXIT_OK
    if args.cycle:
        col = certificate_cycle(args.cycle)
    elif args.path:
        col = certificate_path(args.path)
    elif args.lengths:
        cert = build_certificate(args.lengths)
        col = cert.coloring
        print(f"# {args.lengths}: {cert.k} colors, {cert.status} [{cert.trace}]", file=sys.stderr)
    else:
        print("error: give --lengths, --cycle, --path or --provenance", file=sys.stderr)
        return EXIT_INPUT
    _dump(col.to_json(), args.output)
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.theta0:
        g = build_theta0()
    elif args.cycle:
        g = build_cycle(args.cycle)
    elif args.path:
        g = build_path(args.path)
    elif args.lengths:
        g = build_theta(args.lengths)
        if args.arcs:
            g = OrientedGraph.from_bitstring(g, args.arcs)
    else:
        print("error: give --lengths, --cycle, --path or --theta0", file=sys.stderr)
        return EXIT_INPUT
    _dump(graph_to_json(g), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    graph = graph_from_json(load_json(args.graph))
    dm = matrix_for(graph)
    config = SolverConfig(node_limit=args.node_limit, vertex_order=args.order)
    if args.k is not None:
        col = exists_k_coloring(dm, args.k, config)
        if col is None:
            print(f"no packing {args.k}-coloring exists")
            return EXIT_FAIL
        print(f"packing {args.k}-coloring found ({col.color_count} colors used)", file=sys.stderr)
    else:
        k, col = pcn_exact(dm, config)
        print(f"pcn = {k}", file=sys.stderr)
    _dump(col.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    return verify_files(args.graph, args.coloring)


def cmd_sweep(args) -> int:
    config = SolverConfig(node_limit=args.node_limit)
    if args.kind == "undirected":
        report = run_sweep_undirected(args.max_p, args.max_len, args.max_vertices, config)
    else:
        report = run_sweep_oriented(args.max_edges, not args.no_theta0, config)
    if args.report:
        Path(args.report).write_text(report.to_text())
    print(json.dumps(report.summary()))
    for row in report.rows:
        if not row.ok:
            print(f"FAIL {row.key}: {row.detail}")
    return report.exit_code()


def cmd_oriented(args) -> int:
    if args.theta0:
        og = build_theta0()
    else:
        if args.lengths is None or args.arcs is None:
            print("error: give --lengths and --arcs, or --theta0", file=sys.stderr)
            return EXIT_INPUT
        og = OrientedGraph.from_bitstring(build_theta(args.lengths), args.arcs)
    if args.action == "pcn":
        print(f"{og.base.theta} arcs {og.bitstring}: pcn = {oriented_pcn(og)}")
        return EXIT_OK
    colored = color_oriented_theta_detailed(og)
    print(f"# {colored.construction} construction, {colored.coloring.color_count} colors, "
          f"{'valid' if colored.valid else 'INVALID'}", file=sys.stderr)
    _dump(colored.coloring.to_json(), args.output)
    return EXIT_OK if colored.valid else EXIT_FAIL


def cmd_conjecture(args) -> int:
    report = conjecture_scan(args.min_len, args.max_len, args.max_p, args.cap, cache=not args.no_cache)
    _write(report.to_text(), args.output)
    if args.output:
        print(json.dumps(report.summary()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetapack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pcn", help="closed-form packing chromatic number of a theta graph")
    p.add_argument("--lengths", type=_lengths, required=True, help="comma-separated path lengths, e.g. 3,3,5")
    p.add_argument("--certificate", action="store_true", help="also print a certificate coloring")
    p.add_argument("--published", action="store_true", help="use condition H exactly as printed")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_pcn)

    p = sub.add_parser("certificate", help="emit a certificate coloring file")
    p.add_argument("--lengths", type=_lengths)
    p.add_argument("--cycle", type=int)
    p.add_argument("--path", type=int)
    p.add_argument("--provenance", action="store_true", help="dump the pattern table and its repairs")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("graph", help="emit a graph file")
    p.add_argument("--lengths", type=_lengths)
    p.add_argument("--arcs", help="orientation bits in canonical edge order (0: towards v)")
    p.add_argument("--cycle", type=int)
    p.add_argument("--path", type=int)
    p.add_argument("--theta0", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("solve", help="exact packing coloring of a graph file")
    p.add_argument("graph")
    p.add_argument("--k", type=int, help="decide whether a packing k-coloring exists")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--order", default="ball", choices=("ball", "mrv"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="cross-check formulas, certificates and the exact solver")
    p.add_argument("kind", choices=("undirected", "oriented"))
    p.add_argument("--max-p", type=int, default=5)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-vertices", type=int, default=24)
    p.add_argument("--max-edges", type=int, default=12)
    p.add_argument("--no-theta0", action="store_true")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--report", help="write one JSON line per instance here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oriented", help="oriented theta graphs")
    p.add_argument("action", choices=("pcn", "color"))
    p.add_argument("--lengths", type=_lengths)
    p.add_argument("--arcs")
    p.add_argument("--theta0", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oriented)

    p = sub.add_parser("conjecture", help="search orientations without short paths for pcn 5")
    p.add_argument("--min-len", type=int, default=4)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--max-p", type=int, default=3)
    p.add_argument("--cap", type=int, default=24, help="largest edge count to enumerate")
    p.add_argument("--no-cache", action="store_true", help="solve every orientation, even isomorphic ones")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NodeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
