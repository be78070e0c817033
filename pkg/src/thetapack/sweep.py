"""Sweeps that cross-check closed forms, certificates and the exact solver."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .certificates import REPAIRED, VERIFIED, build_certificate
from .formula import pcn_theta
from .graph import (
    GraphError, OrientedGraph, ThetaSpec, build_theta, distance_matrix, enumerate_orientations,
    graph_from_json, weak_distance_matrix,
)
from .oriented import build_theta0, color_oriented_theta_detailed
from .solver import DEFAULT_CONFIG, NodeLimitExceeded, SolverConfig, exists_k_coloring, pcn_exact
from .verify import ColoringError, PackingColoring, check_pcn2_oriented, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class SweepRow:
    key: str
    formula: int | None
    oracle: int | None
    certificate: str
    trace: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"key": self.key, "formula": self.formula, "oracle": self.oracle,
                "certificate": self.certificate, "trace": self.trace, "ok": self.ok, "detail": self.detail}


@dataclass
class SweepReport:
    kind: str
    rows: list[SweepRow] = field(default_factory=list)
    limit_hits: int = 0

    @property
    def disagreements(self) -> int:
        return sum(not r.ok for r in self.rows)

    @property
    def repairs(self) -> int:
        return sum(r.certificate == REPAIRED for r in self.rows)

    @property
    def passed(self) -> bool:
        return self.disagreements == 0 and self.limit_hits == 0

    def summary(self) -> dict:
        return {"kind": self.kind, "instances": len(self.rows), "agreements": len(self.rows) - self.disagreements,
                "disagreements": self.disagreements, "repairs": self.repairs, "limit_hits": self.limit_hits}

    def to_text(self, rows: bool = True) -> str:
        out = [json.dumps(r.to_json(), separators=(",", ":")) for r in self.rows] if rows else []
        out.append(json.dumps({"summary": self.summary()}, separators=(",", ":")))
        return "\n".join(out) + "\n"

    def exit_code(self) -> int:
        if self.limit_hits:
            return EXIT_LIMIT
        return EXIT_OK if self.passed else EXIT_FAIL


def theta_specs(max_p: int, max_len: int, max_vertices: int | None = None, min_p: int = 2,
                max_edges: int | None = None):
    """Valid ThetaSpecs within the bounds, lexicographic within each p."""

    def grow(prefix: list[int], p: int):
        if len(prefix) == p:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        if len(prefix) == 1:
            lo = max(lo, 2)
        for l in range(lo, max_len + 1):
            rest = p - len(prefix) - 1
            # the remaining paths are at least this long
            edges = sum(prefix) + l * (rest + 1)
            vertices = 2 + sum(x - 1 for x in prefix) + (l - 1) * (rest + 1)
            if max_edges is not None and edges > max_edges:
                break
            if max_vertices is not None and vertices > max_vertices:
                break
            prefix.append(l)
            yield from grow(prefix, p)
            prefix.pop()

    for p in range(min_p, max_p + 1):
        for lengths in grow([], p):
            yield ThetaSpec(lengths)


def check_undirected(spec: ThetaSpec, config: SolverConfig = DEFAULT_CONFIG) -> SweepRow:
    k, trace = pcn_theta(spec)
    dm = distance_matrix(build_theta(spec))
    oracle, witness = pcn_exact(dm, config)
    problems = []
    if not verify(dm, witness).valid or witness.color_count != oracle:
        problems.append("oracle witness invalid")
    if oracle != k:
        problems.append(f"formula {k} != oracle {oracle}")
    cert = build_certificate(spec, k, trace)
    report = verify(dm, cert.coloring)
    if not report.valid or cert.coloring.color_count != k:
        problems.append(f"certificate invalid or uses {cert.coloring.color_count} colors")
    if k > 1 and exists_k_coloring(dm, k - 1, config) is not None:
        problems.append(f"a packing {k - 1}-coloring exists")
    if cert.status == REPAIRED:
        problems.append(f"pattern certificate repaired: {cert.note}")
    return SweepRow(str(spec), k, oracle, cert.status, str(trace), not problems, "; ".join(problems))


def run_sweep_undirected(max_p: int = 5, max_len: int = 8, max_vertices: int = 24,
                         config: SolverConfig = DEFAULT_CONFIG) -> SweepReport:
    if min(max_p, max_len, max_vertices) < 1:
        raise ValueError("bounds must be positive")
    report = SweepReport("undirected")
    for spec in theta_specs(max_p, max_len, max_vertices):
        try:
            report.rows.append(check_undirected(spec, config))
        except NodeLimitExceeded as exc:
            report.limit_hits += 1
            report.rows.append(SweepRow(str(spec), None, None, "LIMIT", "", False, str(exc)))
    return report


def check_orientation(og: OrientedGraph, undirected_pcn: int, config: SolverConfig = DEFAULT_CONFIG) -> SweepRow:
    dm = weak_distance_matrix(og)
    lower = 2 if og.base.edges else 1
    oracle, witness = pcn_exact(dm, config, lower=lower)
    problems = []
    if not 2 <= oracle <= 5:
        problems.append(f"pcn {oracle} outside [2, 5]")
    if oracle > undirected_pcn:
        problems.append(f"pcn {oracle} above undirected {undirected_pcn}")
    two = check_pcn2_oriented(og)
    if two != (oracle == 2):
        problems.append(f"two-color criterion says {two}, solver says {oracle}")
    colored = color_oriented_theta_detailed(og)
    count = colored.coloring.color_count
    if not colored.valid or count > 5:
        problems.append(f"{colored.construction} coloring invalid or uses {count} colors")
    status = VERIFIED if colored.valid else "INVALID"
    key = f"{og.base.theta}:{og.bitstring}"
    return SweepRow(key, count, oracle, status, colored.construction, not problems, "; ".join(problems))


def run_sweep_oriented(max_edges: int = 12, include_theta0: bool = True,
                       config: SolverConfig = DEFAULT_CONFIG) -> SweepReport:
    report = SweepReport("oriented")
    for spec in theta_specs(max_p=max_edges, max_len=max_edges, max_edges=max_edges):
        g = build_theta(spec)
        undirected = pcn_exact(distance_matrix(g), config)[0]
        for og in enumerate_orientations(g, cap=max(max_edges, 1)):
            try:
                report.rows.append(check_orientation(og, undirected, config))
            except NodeLimitExceeded as exc:
                report.limit_hits += 1
                report.rows.append(SweepRow(f"{spec}:{og.bitstring}", None, None, "LIMIT", "", False, str(exc)))
    if include_theta0:
        t0 = build_theta0()
        undirected = pcn_exact(distance_matrix(t0.base), config)[0]
        row = check_orientation(t0, undirected, config)
        row.key = "theta0:" + row.key
        if row.oracle != 5:
            row.ok = False
            row.detail = (row.detail + "; " if row.detail else "") + "tight example is not 5-chromatic"
        report.rows.append(row)
    return report


def load_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def matrix_for(graph) -> object:
    return weak_distance_matrix(graph) if isinstance(graph, OrientedGraph) else distance_matrix(graph)


def verify_files(graph_path: str | Path, coloring_path: str | Path, out=print) -> int:
    """Print the verification report; 0 valid, 1 violations, 2 malformed input."""
    try:
        graph = graph_from_json(load_json(graph_path))
        col = PackingColoring.from_json(load_json(coloring_path))
        report = verify(matrix_for(graph), col)
    except (GraphError, ColoringError) as exc:
        out(f"error: {exc}")
        return EXIT_INPUT
    for line in report.lines():
        out(line)
    return EXIT_OK if report.valid else EXIT_FAIL


def tally(report: SweepReport) -> Counter:
    return Counter((r.trace, r.oracle) for r in report.rows)
