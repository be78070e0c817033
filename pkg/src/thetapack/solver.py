"""Exact packing-coloring search by backtracking over a distance matrix.

Colors are tried in increasing order at each vertex; assigning color ``c`` to a
vertex removes ``c`` from the domain of every uncolored vertex within distance
``c`` (forward checking).  Domains are bitmasks over colors, vertex sets are
bitmasks over matrix indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DistanceMatrix
from .verify import PackingColoring

VERTEX_ORDERS = ("ball", "mrv")


class NodeLimitExceeded(RuntimeError):
    """The search gave up; this says nothing about colorability."""


@dataclass(frozen=True)
class SolverConfig:
    max_k: int = 64
    vertex_order: str = "ball"
    node_limit: int | None = None

    def __post_init__(self):
        if self.max_k < 1:
            raise ValueError("max_k must be at least 1")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.vertex_order not in VERTEX_ORDERS:
            raise ValueError(f"vertex_order must be one of {VERTEX_ORDERS}")


DEFAULT_CONFIG = SolverConfig()


@dataclass
class SearchStats:
    nodes: int = 0


def _balls(rows: list[list[int]], k: int) -> list[list[int]]:
    """balls[c][v]: bitmask of the vertices w != v with d(v, w) <= c."""
    n = len(rows)
    balls = [[0] * n for _ in range(k + 1)]
    for c in range(1, k + 1):
        for v in range(n):
            r = rows[v]
            m = 0
            for w in range(n):
                if w != v and r[w] <= c:
                    m |= 1 << w
            balls[c][v] = m
    return balls


def _static_rank(balls: list[list[int]], k: int, n: int) -> list[int]:
    # most crowded vertices first, ties by index
    return sorted(range(n), key=lambda v: (-balls[k][v].bit_count(), v))


def _search(rows, k, config: SolverConfig, stats: SearchStats) -> list[int] | None:
    n = len(rows)
    if n == 0:
        return []
    balls = _balls(rows, k)
    order = _static_rank(balls, k, n)
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    full = ((1 << (k + 1)) - 1) & ~1
    domain = [full] * n
    color = [0] * n
    limit = config.node_limit
    dynamic = config.vertex_order == "mrv"

    def pick(uncolored: int) -> int:
        if not dynamic:
            for v in order:
                if uncolored >> v & 1:
                    return v
        best, best_key = -1, None
        m = uncolored
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            key = (domain[v].bit_count(), rank[v])
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def rec(uncolored: int) -> bool:
        if not uncolored:
            return True
        stats.nodes += 1
        if limit is not None and stats.nodes > limit:
            raise NodeLimitExceeded(f"node limit {limit} exceeded")
        v = pick(uncolored)
        rest = uncolored & ~(1 << v)
        dom = domain[v]
        while dom:
            low = dom & -dom
            c = low.bit_length() - 1
            dom ^= low
            hit = balls[c][v] & rest
            changed = []
            ok = True
            m = hit
            while m:
                lw = m & -m
                w = lw.bit_length() - 1
                m ^= lw
                if domain[w] & low:
                    domain[w] ^= low
                    changed.append(w)
                    if not domain[w]:
                        ok = False
                        break
            if ok:
                color[v] = c
                if rec(rest):
                    return True
            for w in changed:
                domain[w] |= low
        color[v] = 0
        return False

    if rec((1 << n) - 1):
        return color
    return None


def exists_k_coloring(
    dm: DistanceMatrix, k: int, config: SolverConfig = DEFAULT_CONFIG, stats: SearchStats | None = None
) -> PackingColoring | None:
    """A packing coloring with colors in 1..k, or None when none exists.

    Raises NodeLimitExceeded instead of answering when the node limit is hit.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    stats = stats if stats is not None else SearchStats()
    found = _search(dm.entries.tolist(), k, config, stats)
    if found is None:
        return None
    return PackingColoring(dict(zip(dm.labels, found)))


def pcn_exact(
    dm: DistanceMatrix, config: SolverConfig = DEFAULT_CONFIG, lower: int = 1, stats: SearchStats | None = None
) -> tuple[int, PackingColoring]:
    """Smallest k admitting a packing k-coloring, with a witness.

    ``lower`` must be a proven lower bound; values below it are not searched.
    """
    if dm.n < 1:
        raise ValueError("empty graph")
    stats = stats if stats is not None else SearchStats()
    rows = dm.entries.tolist()
    for k in range(max(1, lower), min(config.max_k, dm.n) + 1):
        found = _search(rows, k, config, stats)
        if found is not None:
            return k, PackingColoring(dict(zip(dm.labels, found)))
    if dm.n <= config.max_k:
        raise AssertionError("an all-distinct coloring always exists")
    raise ValueError(f"no packing coloring with at most max_k={config.max_k} colors")
