"""Oriented theta graphs: the universal 5-coloring, the tight example and the scan
for 5-chromatic orientations without short paths."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .certificates import _Builder, coloring_from_words
from .graph import (
    GraphError, LabeledGraph, OrientedGraph, ThetaSpec, build_theta, orientation_from_code, theta_orientation_key,
    weak_distance_matrix,
)
from .patterns import default_table
from .solver import DEFAULT_CONFIG, SolverConfig, pcn_exact
from .verify import PackingColoring, verify


@dataclass(frozen=True)
class Length3OrientationRow:
    # 0 = arc points towards v, along u-x1, x1-x2, x2-v
    arc_pattern: tuple[int, int, int]
    internal_colors: tuple[int, int]

    def word(self) -> str:
        return f"4{self.internal_colors[0]}{self.internal_colors[1]}5"

    def drawing(self) -> str:
        arrows = ["->" if b == 0 else "<-" for b in self.arc_pattern]
        a, b = self.internal_colors
        return f"4 {arrows[0]} {a} {arrows[1]} {b} {arrows[2]} 5"


FIGURE_ROWS = (
    Length3OrientationRow((0, 0, 0), (1, 2)),
    Length3OrientationRow((0, 0, 1), (3, 1)),
    Length3OrientationRow((0, 1, 0), (1, 2)),
    Length3OrientationRow((0, 1, 1), (3, 1)),
    Length3OrientationRow((1, 0, 0), (1, 2)),
    Length3OrientationRow((1, 0, 1), (2, 1)),
    Length3OrientationRow((1, 1, 0), (1, 2)),
    Length3OrientationRow((1, 1, 1), (2, 1)),
)


_LENGTH3_PATH = LabeledGraph(("u", "x1", "x2", "v"), (("u", "x1"), ("x1", "x2"), ("x2", "v")))


def load_length3_rows(rows=FIGURE_ROWS) -> dict[tuple[int, int, int], Length3OrientationRow]:
    """Index the rows by arc pattern; every pattern must appear once and color its
    own oriented path u x1 x2 v (u colored 4, v colored 5) properly."""
    table = {}
    for row in rows:
        if row.arc_pattern in table:
            raise ValueError(f"arc pattern {row.arc_pattern} listed twice")
        path = OrientedGraph(_LENGTH3_PATH, row.arc_pattern)
        col = PackingColoring.from_word(path.base.vertices, row.word())
        if not verify(weak_distance_matrix(path), col).valid:
            raise ValueError(f"row {row.drawing()} is not a packing coloring of its path")
        table[row.arc_pattern] = row
    if len(table) != 8:
        raise ValueError("the length-3 table must cover all 8 arc patterns")
    return table


LENGTH3_ROWS = load_length3_rows()


def _path_bits(og: OrientedGraph) -> list[tuple[int, ...]]:
    spec = og.base.theta
    out, pos = [], 0
    for l in spec.lengths:
        out.append(og.bits[pos:pos + l])
        pos += l
    return out


@dataclass
class OrientedColoring:
    coloring: PackingColoring
    construction: str  # "figure" or "undirected"
    valid: bool


def color_oriented_theta_detailed(og: OrientedGraph) -> OrientedColoring:
    spec = og.base.theta
    if spec is None:
        raise GraphError("not an oriented theta graph")
    dm = weak_distance_matrix(og)
    builder = _Builder(spec, default_table())
    words = []
    for l, bits in zip(spec.lengths, _path_bits(og)):
        if l == 3:
            words.append(LENGTH3_ROWS[tuple(bits)].word())
        elif l == 1:
            words.append(builder.word("ub.l1", l))
        else:
            words.append(builder.word(f"ub.r{l % 4}", l))
    col = coloring_from_words(spec, words)
    if verify(dm, col).valid:
        return OrientedColoring(col, "figure", True)
    # the undirected coloring stays valid under any orientation
    words, _ = builder.upper_bound(extra_threes=True)
    col = coloring_from_words(spec, words)
    return OrientedColoring(col, "undirected", verify(dm, col).valid)


def color_oriented_theta(og: OrientedGraph) -> PackingColoring:
    return color_oriented_theta_detailed(og).coloring


#: paths of the tight example in canonical order (sorted by length);
#: 0 means directed u -> v, 1 means directed v -> u
THETA0_LENGTHS = (2, 2, 3, 3, 5, 5)
THETA0_DIRECTIONS = (0, 1, 0, 1, 0, 1)


def build_theta0() -> OrientedGraph:
    """Six directed u-v paths: lengths 5, 3 and 2 from u to v, and the same from v to u."""
    g = build_theta(ThetaSpec(THETA0_LENGTHS))
    bits = []
    for l, d in zip(THETA0_LENGTHS, THETA0_DIRECTIONS):
        bits.extend([d] * l)
    return OrientedGraph(g, tuple(bits))


@dataclass(frozen=True)
class ScanRecord:
    lengths: tuple[int, ...]
    arcs: str
    pcn: int

    @property
    def hit(self) -> bool:
        return self.pcn == 5

    def to_json(self) -> dict:
        return {"lengths": list(self.lengths), "arcs": self.arcs, "pcn": self.pcn, "hit": self.hit}


@dataclass
class ScanReport:
    min_len: int
    max_len: int
    max_p: int
    records: list[ScanRecord] = field(default_factory=list)

    @property
    def hits(self) -> list[ScanRecord]:
        return [r for r in self.records if r.hit]

    def specs(self) -> list[tuple[int, ...]]:
        return sorted({r.lengths for r in self.records}, key=lambda t: (len(t), t))

    def summary(self) -> dict:
        return {
            "min_len": self.min_len, "max_len": self.max_len, "max_p": self.max_p,
            "specs": len(self.specs()), "orientations": len(self.records), "hits": len(self.hits),
        }

    def to_text(self) -> str:
        lines = [json.dumps(r.to_json(), separators=(",", ":")) for r in self.records]
        lines.append(json.dumps({"summary": self.summary()}, separators=(",", ":")))
        return "\n".join(lines) + "\n"


def scan_specs(min_len: int, max_len: int, max_p: int):
    """ThetaSpecs with every length in [min_len, max_len] and 2 <= p <= max_p, lexicographic."""
    for p in range(2, max_p + 1):
        for lengths in itertools.combinations_with_replacement(range(min_len, max_len + 1), p):
            if len(lengths) > 1 and lengths[1] < 2:
                continue
            yield ThetaSpec(lengths)


def oriented_pcn(og: OrientedGraph, config: SolverConfig = DEFAULT_CONFIG) -> int:
    lower = 2 if og.base.edges else 1
    return pcn_exact(weak_distance_matrix(og), config, lower=lower)[0]


def conjecture_scan(min_len: int = 4, max_len: int = 5, max_p: int = 3, orientation_cap: int = 24,
                    cache: bool = True, config: SolverConfig = DEFAULT_CONFIG) -> ScanReport:
    """Exact weak-distance pcn of every orientation of every theta graph in range.

    With ``cache`` the solver runs once per class of isomorphic (or fully reversed)
    orientations; reversing every arc leaves weak distances unchanged.
    """
    if min_len < 1:
        raise ValueError("min_len must be positive")
    report = ScanReport(min_len, max_len, max_p)
    memo: dict = {}
    for spec in scan_specs(min_len, max_len, max_p):
        if spec.n_edges > orientation_cap:
            raise GraphError(f"{spec} has {spec.n_edges} edges, above the cap {orientation_cap}")
        g = build_theta(spec)
        for code in range(1 << spec.n_edges):
            og = orientation_from_code(g, code)
            if cache:
                key = theta_orientation_key(og)
                k = memo.get(key)
                if k is None:
                    k = memo[key] = oriented_pcn(og, config)
            else:
                k = oriented_pcn(og, config)
            report.records.append(ScanRecord(spec.lengths, og.bitstring, k))
    return report
