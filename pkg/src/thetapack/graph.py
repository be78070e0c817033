"""Theta graphs, paths and cycles with canonical labels; BFS distances; orientations.

Vertices of a theta graph are labelled ``u``, ``v`` and ``x{i}_{j}`` for the
``j``-th internal vertex (counted from ``u``) of the ``i``-th path, both indices
starting at 1.  Edges are stored path by path, each path walked from ``u`` to
``v``; that order is the canonical edge order used by orientation bit-vectors.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

#: Sentinel for "no directed path either way"; larger than every finite distance.
UNREACHABLE = 1 << 30

DEFAULT_ORIENTATION_CAP = 24


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaSpec:
    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if len(lengths) < 2:
            raise GraphError(f"a theta graph needs at least 2 paths, got {len(lengths)}")
        if list(lengths) != sorted(lengths):
            raise GraphError(f"path lengths must be non-decreasing: {list(lengths)}")
        if lengths[0] < 1:
            raise GraphError("path lengths must be positive")
        if lengths[1] < 2:
            raise GraphError("at most one path of length 1 (simple graphs only)")

    @classmethod
    def parse(cls, text: str) -> "ThetaSpec":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @property
    def p(self) -> int:
        return len(self.lengths)

    def count(self, length: int) -> int:
        return self.counts.get(length, 0)

    @property
    def counts(self) -> Counter:
        return Counter(self.lengths)

    @property
    def n_vertices(self) -> int:
        return 2 + sum(l - 1 for l in self.lengths)

    @property
    def n_edges(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return "Theta[" + ",".join(map(str, self.lengths)) + "]"


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    ends: tuple[str, str] | None = None
    theta: ThetaSpec | None = None
    index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {label: i for i, label in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise GraphError("duplicate vertex label")
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise GraphError(f"self-loop at {a!r}")
            if a not in index or b not in index:
                raise GraphError(f"edge ({a!r}, {b!r}) uses an unknown vertex")
            key = frozenset((a, b))
            if key in seen:
                raise GraphError(f"duplicate edge ({a!r}, {b!r})")
            seen.add(key)
        object.__setattr__(self, "index", index)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            i, j = self.index[a], self.index[b]
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def path_labels(self, i: int) -> list[str]:
        """Labels along the ``i``-th path (1-based) of a theta graph, ``u`` to ``v``."""
        if self.theta is None:
            raise GraphError("not a theta graph")
        l = self.theta.lengths[i - 1]
        return ["u"] + [f"x{i}_{j}" for j in range(1, l)] + ["v"]

    def subgraph(self, keep_edges: Sequence[tuple[str, str]]) -> "LabeledGraph":
        """Spanning subgraph on the same vertex set with only ``keep_edges``."""
        return LabeledGraph(self.vertices, tuple(keep_edges))


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of ``base``: bit ``i`` is 0 when edge ``i`` = (a, b) is the arc a->b."""

    base: LabeledGraph
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) != len(self.base.edges):
            raise GraphError(f"expected {len(self.base.edges)} direction bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise GraphError("direction bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_bitstring(cls, base: LabeledGraph, text: str) -> "OrientedGraph":
        return cls(base, tuple(int(c) for c in text.strip()))

    @property
    def bitstring(self) -> str:
        return "".join(map(str, self.bits))

    def arcs(self) -> list[tuple[str, str]]:
        return [(a, b) if bit == 0 else (b, a) for (a, b), bit in zip(self.base.edges, self.bits)]

    def out_in(self) -> tuple[list[list[int]], list[list[int]]]:
        idx = self.base.index
        out: list[list[int]] = [[] for _ in self.base.vertices]
        inc: list[list[int]] = [[] for _ in self.base.vertices]
        for t, h in self.arcs():
            out[idx[t]].append(idx[h])
            inc[idx[h]].append(idx[t])
        return out, inc

    def is_directed_cycle(self) -> bool:
        """True when every vertex has in- and out-degree 1 and the arcs form one cycle."""
        out, inc = self.out_in()
        if any(len(o) != 1 for o in out) or any(len(i) != 1 for i in inc):
            return False
        seen, cur = set(), 0
        while cur not in seen:
            seen.add(cur)
            cur = out[cur][0]
        return len(seen) == self.base.n


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple[str, ...]
    entries: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    def __call__(self, a: str, b: str) -> int:
        idx = {l: i for i, l in enumerate(self.labels)}
        return int(self.entries[idx[a], idx[b]])

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()


def build_theta(spec: ThetaSpec | Sequence[int]) -> LabeledGraph:
    if not isinstance(spec, ThetaSpec):
        spec = ThetaSpec(tuple(spec))
    vertices = ["u", "v"]
    edges = []
    for i, l in enumerate(spec.lengths, start=1):
        walk = ["u"] + [f"x{i}_{j}" for j in range(1, l)] + ["v"]
        vertices.extend(walk[1:-1])
        edges.extend(zip(walk, walk[1:]))
    return LabeledGraph(tuple(vertices), tuple(edges), ends=("u", "v"), theta=spec)


def build_path(n: int) -> LabeledGraph:
    """P_n on vertices "0".."n-1"."""
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    labels = tuple(str(i) for i in range(n))
    return LabeledGraph(labels, tuple(zip(labels, labels[1:])))


def build_cycle(n: int) -> LabeledGraph:
    """C_n on vertices "0".."n-1", edges i -- i+1 and (n-1) -- 0."""
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    labels = tuple(str(i) for i in range(n))
    return LabeledGraph(labels, tuple(zip(labels, labels[1:])) + ((labels[-1], labels[0]),))


def _bfs_all(adj: list[list[int]]) -> np.ndarray:
    n = len(adj)
    out = np.full((n, n), UNREACHABLE, dtype=np.int64)
    for s in range(n):
        row = out[s]
        row[s] = 0
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for y, d in dist.items():
            row[y] = d
    return out


def distance_matrix(g: LabeledGraph) -> DistanceMatrix:
    return DistanceMatrix(g.vertices, _bfs_all(g.neighbors()))


def directed_distance_matrix(og: OrientedGraph) -> np.ndarray:
    """One-way distances: entry (a, b) counts arcs of a shortest directed a->b path."""
    out, _ = og.out_in()
    return _bfs_all(out)


def weak_distance_matrix(og: OrientedGraph) -> DistanceMatrix:
    d = directed_distance_matrix(og)
    return DistanceMatrix(og.base.vertices, np.minimum(d, d.T))


def enumerate_orientations(
    g: LabeledGraph, cap: int = DEFAULT_ORIENTATION_CAP, dedupe: bool = False
) -> Iterator[OrientedGraph]:
    """All 2^|E| orientations, bit-vectors in increasing integer order (bit 0 = edge 0).

    With ``dedupe`` only the first orientation of each isomorphism class of
    digraphs is yielded (theta graphs only; see :func:`theta_orientation_key`).
    """
    m = len(g.edges)
    if m > cap:
        raise GraphError(f"{m} edges exceeds the orientation cap of {cap}")
    seen = set()
    for code in range(1 << m):
        bits = tuple((code >> i) & 1 for i in range(m))
        og = OrientedGraph(g, bits)
        if dedupe:
            key = theta_orientation_key(og, weak=False)
            if key in seen:
                continue
            seen.add(key)
        yield og


def orientation_from_code(g: LabeledGraph, code: int) -> OrientedGraph:
    return OrientedGraph(g, tuple((code >> i) & 1 for i in range(len(g.edges))))


def theta_orientation_key(og: OrientedGraph, weak: bool = True) -> tuple:
    """Canonical form of an oriented theta graph.

    Invariant under permuting paths, swapping the two end vertices and, when
    ``weak`` is set, reversing every arc (which leaves weak distances unchanged).
    Two orientations with the same key are isomorphic digraphs (or reverses).
    """
    spec = og.base.theta
    if spec is None:
        raise GraphError("canonical keys are defined for theta graphs only")
    per_path, pos = [], 0
    for l in spec.lengths:
        per_path.append(og.bits[pos:pos + l])
        pos += l
    variants = []
    flips = (0, 1) if weak else (0,)
    for swap, flip in itertools.product((False, True), flips):
        paths = []
        for bits in per_path:
            if swap:
                # walking v->u reverses the order and the meaning of every bit
                bits = tuple(1 - b for b in reversed(bits))
            if flip:
                bits = tuple(1 - b for b in bits)
            paths.append((len(bits), bits))
        variants.append(tuple(sorted(paths)))
    return min(variants)


def theta_to_json(g: LabeledGraph) -> dict:
    doc = {"directed": False, "vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}
    if g.theta is not None:
        doc["theta_lengths"] = list(g.theta.lengths)
    return doc


def graph_to_json(g: LabeledGraph | OrientedGraph) -> dict:
    if isinstance(g, OrientedGraph):
        doc = theta_to_json(g.base)
        doc["directed"] = True
        doc["edges"] = [list(a) for a in g.arcs()]
        return doc
    return theta_to_json(g)


def graph_from_json(doc: dict) -> LabeledGraph | OrientedGraph:
    """Inverse of :func:`graph_to_json`; raises GraphError on malformed documents."""
    try:
        directed = bool(doc.get("directed", False))
        vertices = tuple(str(x) for x in doc["vertices"])
        pairs = [(str(a), str(b)) for a, b in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    theta = doc.get("theta_lengths")
    if theta is not None:
        g = build_theta(ThetaSpec(tuple(theta)))
        if set(g.vertices) != set(vertices):
            raise GraphError("theta_lengths do not match the listed vertices")
        if directed:
            wanted = {frozenset(e): e for e in pairs}
            bits = []
            for a, b in g.edges:
                arc = wanted.get(frozenset((a, b)))
                if arc is None:
                    raise GraphError(f"missing arc for edge ({a}, {b})")
                bits.append(0 if arc == (a, b) else 1)
            if len(wanted) != len(g.edges):
                raise GraphError("arc list does not match theta_lengths")
            return OrientedGraph(g, tuple(bits))
        if {frozenset(e) for e in pairs} != {frozenset(e) for e in g.edges}:
            raise GraphError("edge list does not match theta_lengths")
        return g
    g = LabeledGraph(vertices, tuple(pairs))
    if directed:
        return OrientedGraph(g, (0,) * len(pairs))
    return g
