"""Closed-form packing chromatic numbers.

Covers paths, cycles, their orientations, and undirected generalized theta
graphs.  The theta computation only looks at the multiplicities ``n[l]`` of
each path length, so it runs in time linear in the number of paths.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Callable

from .graph import GraphError, OrientedGraph, ThetaSpec
from .verify import bipartition, check_pcn2_oriented


class ConditionLabel(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    I = "I"
    J = "J"
    K = "K"
    L = "L"
    M = "M"
    N = "N"
    PCN3_I = "PCN3_I"
    PCN3_II = "PCN3_II"
    N3_DOMINATED = "N3_DOMINATED"
    CYCLE_CASE = "CYCLE_CASE"
    NONE = "NONE"

    def __str__(self) -> str:
        return self.value


class CountProfile(Counter):
    """Multiplicity of each path length; missing lengths count 0."""

    def __init__(self, lengths=()):
        super().__init__(lengths)
        if self[1] > 1:
            raise GraphError("at most one path of length 1")

    @property
    def p(self) -> int:
        return sum(self.values())

    def at_least(self, l: int) -> int:
        return sum(m for length, m in self.items() if length >= l)


def path_pcn(n: int) -> int:
    if n < 1:
        raise ValueError("a path has at least one vertex")
    if n == 1:
        return 1
    return 2 if n <= 3 else 3


def cycle_pcn(n: int) -> int:
    if n < 3:
        raise ValueError("a cycle has at least 3 vertices")
    return 3 if n == 3 or n % 4 == 0 else 4


def _degrees(og: OrientedGraph) -> list[int]:
    return [len(a) for a in og.base.neighbors()]


def _is_path(og: OrientedGraph) -> bool:
    g = og.base
    deg = _degrees(og)
    if g.n < 2 or len(g.edges) != g.n - 1 or max(deg) > 2:
        return False
    return bipartition(g.neighbors()) is not None and _connected(g.neighbors())


def _is_cycle(og: OrientedGraph) -> bool:
    g = og.base
    return g.n >= 3 and len(g.edges) == g.n and all(d == 2 for d in _degrees(og)) and _connected(g.neighbors())


def _connected(adj) -> bool:
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def oriented_path_pcn(og: OrientedGraph) -> int:
    if not _is_path(og):
        raise GraphError("underlying graph is not a path on at least 2 vertices")
    return 2 if check_pcn2_oriented(og) else 3


def oriented_cycle_pcn(og: OrientedGraph) -> int:
    if not _is_cycle(og):
        raise GraphError("underlying graph is not a cycle")
    n = og.base.n
    if check_pcn2_oriented(og):
        return 2
    if og.is_directed_cycle() and n >= 5 and n % 4 != 0:
        return 4
    return 3


def pcn3_holds(spec: ThetaSpec) -> ConditionLabel | None:
    lengths = spec.lengths
    if lengths[0] == 1 and all(l == 2 for l in lengths[1:]):
        return ConditionLabel.PCN3_I
    residues = {l % 4 for l in lengths}
    # every pair sums to 0 mod 4 iff all lengths are 0 mod 4 or all are 2 mod 4
    if residues == {0} or residues == {2}:
        return ConditionLabel.PCN3_II
    return None


def _conditions(published: bool = False) -> list[tuple[ConditionLabel, Callable[[CountProfile], bool]]]:
    L = ConditionLabel
    conditions = [
        (L.A, lambda n: n[1] == n[2] == n[3] == n[4] == 0),
        (L.B, lambda n: n[1] == n[2] == n[3] == 0 and n[5] <= 2 and n[5] + n[6] <= 4),
        (L.C, lambda n: n[1] == n[2] == n[3] == 0 and n[7] <= 1),
        (L.D, lambda n: n[1] == n[2] == n[3] == 0 and n[5] + n[6] + n[7] <= 2),
        (L.E, lambda n: n[1] == n[2] == 0 and n[3] <= 1 and n[5] == n[6] == n[7] == 0),
        (L.F, lambda n: n[1] == n[2] == 0 and n[3] <= 1 and n[4] == 0 and n[7] + n[8] <= 1),
        (L.G, lambda n: n[1] == n[3] == n[4] == 0 and n[7] <= 1 and n[8] == 0),
        # a length-5 path colored 312134 puts color 3 next to v, so it also needs d(u, v) >= 3
        (L.H, lambda n: n[1] == 0 and n[3] <= 2 and (n[5] == 0 or (n[2] == 0 and n[5] + n[6] <= 1))),
        (L.I, lambda n: n[1] == 0 and n[3] + n[4] + n[5] <= 1),
        (L.J, lambda n: n[1] <= 1 and n[3] <= 2 and n[5] == n[6] == 0),
        (L.K, lambda n: n[1] <= 1 and n[3] == n[7] == 0),
        (L.L, lambda n: n[1] <= 1 and n[3] == n[4] == 0 and n[7] <= 1 and n[8] == 0),
        (L.M, lambda n: n[1] <= 1 and n[3] <= 1 and n[4] == n[7] == n[8] == 0),
        (L.N, lambda n: n[1] <= 1 and n.at_least(3) <= 1),
    ]
    if published:
        # condition H exactly as printed; it wrongly accepts e.g. Theta[2,3,3,5]
        conditions[7] = (L.H, lambda n: n[1] == 0 and n[3] <= 2 and (n[5] == 0 or n[5] + n[6] <= 1))
    return conditions


CONDITIONS = _conditions()
PUBLISHED_CONDITIONS = _conditions(published=True)


def conditions_holding(spec: ThetaSpec, published: bool = False) -> list[ConditionLabel]:
    """Every one of the conditions A..N satisfied by the path-length counts."""
    n = CountProfile(spec.lengths)
    table = PUBLISHED_CONDITIONS if published else CONDITIONS
    return [label for label, pred in table if pred(n)]


def pcn4_condition(spec: ThetaSpec, published: bool = False) -> ConditionLabel | None:
    """First of A..N (in listed order) met by the length counts; these are exactly the thetas
    with a packing 4-coloring that avoids color 1 on both end vertices.

    ``published=True`` evaluates condition H without the d(u, v) >= 3 requirement
    on its length-5 branch.
    """
    if spec.p < 3:
        raise ValueError("conditions A..N concern thetas with at least 3 paths")
    n = CountProfile(spec.lengths)
    for label, pred in PUBLISHED_CONDITIONS if published else CONDITIONS:
        if pred(n):
            return label
    return None


def pcn_theta(spec: ThetaSpec, published: bool = False) -> tuple[int, ConditionLabel]:
    if not isinstance(spec, ThetaSpec):
        spec = ThetaSpec(tuple(spec))
    if spec.p == 2:
        return cycle_pcn(sum(spec.lengths)), ConditionLabel.CYCLE_CASE
    n3 = spec.count(3)
    if n3 >= 3:
        return n3 + 2, ConditionLabel.N3_DOMINATED
    label = pcn3_holds(spec)
    if label is not None:
        return 3, label
    label = pcn4_condition(spec, published=published)
    if label is not None:
        return 4, label
    return 5, ConditionLabel.NONE
