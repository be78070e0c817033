"""Packing-coloring checks and the two-color criterion for oriented graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import DistanceMatrix, OrientedGraph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class PackingColoring:
    assignment: Mapping[str, int]

    def __post_init__(self):
        clean = {}
        for vertex, color in self.assignment.items():
            if isinstance(color, bool) or int(color) != color or color < 1:
                raise ColoringError(f"vertex {vertex!r}: color {color!r} is not a positive integer")
            clean[str(vertex)] = int(color)
        object.__setattr__(self, "assignment", clean)

    @classmethod
    def from_word(cls, labels, word) -> "PackingColoring":
        word = [int(c) for c in word]
        if len(word) != len(labels):
            raise ColoringError(f"word has {len(word)} letters for {len(labels)} vertices")
        return cls(dict(zip(labels, word)))

    @property
    def color_count(self) -> int:
        return max(self.assignment.values(), default=0)

    def __getitem__(self, vertex: str) -> int:
        return self.assignment[vertex]

    def word(self, labels) -> str:
        return "".join(str(self.assignment[l]) for l in labels)

    def to_json(self) -> dict:
        return {"colors": dict(self.assignment)}

    @classmethod
    def from_json(cls, doc) -> "PackingColoring":
        if not isinstance(doc, dict) or not isinstance(doc.get("colors"), dict):
            raise ColoringError('expected {"colors": {vertex: color}}')
        return cls(doc["colors"])


@dataclass(frozen=True)
class Violation:
    a: str
    b: str
    color: int
    distance: int


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)
    color_count: int = 0

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def lines(self) -> list[str]:
        if self.valid:
            return [f"valid packing {self.color_count}-coloring"]
        return [
            f"violation: {x.a} and {x.b} share color {x.color} at distance {x.distance}"
            for x in self.violations
        ]


def verify(dm: DistanceMatrix, col: PackingColoring, fail_fast: bool = False) -> VerificationReport:
    """Check that equal colors ``i`` sit at distance greater than ``i``.

    Pairs (a, b) are visited once with a before b in the matrix's vertex order.
    """
    missing = [l for l in dm.labels if l not in col.assignment]
    if missing:
        raise ColoringError(f"coloring misses vertices: {missing[:5]}")
    extra = set(col.assignment) - set(dm.labels)
    if extra:
        raise ColoringError(f"coloring names unknown vertices: {sorted(extra)[:5]}")
    colors = [col.assignment[l] for l in dm.labels]
    rows = dm.entries.tolist()
    found = []
    n = dm.n
    for i in range(n):
        ci = colors[i]
        for j in range(i + 1, n):
            if colors[j] == ci and rows[i][j] <= ci:
                found.append(Violation(dm.labels[i], dm.labels[j], ci, rows[i][j]))
                if fail_fast:
                    return VerificationReport(tuple(found), col.color_count)
    return VerificationReport(tuple(found), col.color_count)


def bipartition(adj: list[list[int]]) -> list[int] | None:
    """2-coloring side (0/1) per vertex, or None if some component has an odd cycle."""
    side = [-1] * len(adj)
    for s in range(len(adj)):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def check_pcn2_oriented(og: OrientedGraph) -> bool:
    """Bipartite, with one side made only of vertices that are each a source or a sink.

    A side may mix sources and sinks.  For disconnected graphs the side is chosen
    per component.
    """
    adj = og.base.neighbors()
    side = bipartition(adj)
    if side is None:
        return False
    out, inc = og.out_in()
    extreme = [not out[x] or not inc[x] for x in range(og.base.n)]
    comp = [-1] * len(adj)
    for s in range(len(adj)):
        if comp[s] != -1:
            continue
        comp[s] = s
        members, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if comp[y] == -1:
                    comp[y] = s
                    members.append(y)
                    stack.append(y)
        if not any(all(extreme[x] for x in members if side[x] == part) for part in (0, 1)):
            return False
    return True
