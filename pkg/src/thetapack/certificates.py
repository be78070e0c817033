"""Explicit colorings attaining the closed-form values.

Theta certificates pick end colors for ``u`` and ``v`` from the condition that
gave the value, then color each path with a table word whose first and last
letters are those end colors.  The result is always verified; if the pattern
assembly is invalid, the exact solver supplies a coloring and the outcome is
reported as repaired rather than verified.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .formula import ConditionLabel, cycle_pcn, path_pcn, pcn_theta
from .graph import ThetaSpec, build_cycle, build_path, build_theta, distance_matrix
from .patterns import CaseTable, PatternError, default_table, expand
from .solver import exists_k_coloring
from .verify import PackingColoring, VerificationReport, verify

L = ConditionLabel

VERIFIED = "VERIFIED"
REPAIRED = "REPAIRED"


class CertificateError(RuntimeError):
    pass


@dataclass
class ThetaCertificate:
    spec: ThetaSpec
    k: int
    trace: ConditionLabel
    coloring: PackingColoring
    status: str
    words: list[str] = field(default_factory=list)
    keys: list[str] = field(default_factory=list)
    pattern_report: VerificationReport | None = None
    note: str = ""


def _residue_key(prefix: str, length: int) -> str:
    return f"{prefix}.r{length % 4}"


class _Builder:
    """Per-construction word selection; one method per end-color pair."""

    def __init__(self, spec: ThetaSpec, table: CaseTable):
        self.spec = spec
        self.table = table
        self.n = spec.counts

    def word(self, key: str, length: int) -> str:
        return self.table.word(key, length)

    def upper_bound(self, extra_threes: bool) -> tuple[list[str], list[str]]:
        words, keys, threes = [], [], 0
        for l in self.spec.lengths:
            if l == 1:
                key = "ub.l1"
            elif l == 3:
                if threes < 3:
                    key = ("ub.l3.a", "ub.l3.b", "ub.l3.c")[threes]
                else:
                    if not extra_threes:
                        raise CertificateError("more than three paths of length 3")
                    # the 4th, 5th, ... length-3 paths get one fresh color each
                    words.append(f"41{threes + 3}5")
                    keys.append(f"ub.l3.extra{threes + 3}")
                    threes += 1
                    continue
                threes += 1
            else:
                key = _residue_key("ub", l)
            words.append(self.word(key, l))
            keys.append(key)
        return words, keys

    def pcn3(self, label: ConditionLabel) -> tuple[list[str], list[str]]:
        keys = []
        for l in self.spec.lengths:
            if label is L.PCN3_I:
                keys.append("p3.i.l1" if l == 1 else "p3.i.l2")
            else:
                keys.append(_residue_key("p3.ii", l))
        return [self.word(k, l) for k, l in zip(keys, self.spec.lengths)], keys

    def ends44(self) -> list[str]:
        return [_residue_key("e44", l) for l in self.spec.lengths]

    def ends33(self) -> list[str]:
        n5 = self.n[5]
        six = {0: ["a", "b", "c", "d"], 1: ["b", "c", "d"], 2: ["c", "d"]}[min(n5, 2)]
        five = ["a", "b"]
        keys, i5, i6 = [], 0, 0
        for l in self.spec.lengths:
            if l == 4:
                keys.append("e33.l4")
            elif l == 5:
                keys.append(f"e33.l5.{five[i5]}")
                i5 += 1
            elif l == 6:
                keys.append(f"e33.l6.{six[i6]}")
                i6 += 1
            else:
                keys.append(_residue_key("e33", l))
        return keys

    def ends22(self) -> list[str]:
        keys, mid = [], 0
        for l in self.spec.lengths:
            if l in (3, 4):
                keys.append(f"e22.l{l}")
            elif l in (5, 6, 7):
                # with two such paths one carries its 4 near v, the other near u
                keys.append(f"e22.l{l}.{'ab'[mid]}")
                mid += 1
            else:
                keys.append(_residue_key("e22", l))
        return keys

    def ends34(self) -> list[str]:
        keys, threes = [], 0
        for l in self.spec.lengths:
            if l == 3:
                keys.append(f"e34.l3.{'ab'[threes]}")
                threes += 1
            elif l <= 6:
                keys.append(f"e34.l{l}")
            else:
                keys.append(_residue_key("e34", l))
        return keys

    def ends24(self, label: ConditionLabel) -> list[str]:
        special = {
            L.K: {8: "a"},
            L.L: {7: "a"},
            L.M: {3: ""},
            L.C: {7: "b", 8: "a"},
            L.F: {3: "", 7: "b", 8: "b"},
            L.G: {7: "a"},
        }[label]
        keys = []
        for l in self.spec.lengths:
            if l in (3, 7, 8):
                if l not in special:
                    raise CertificateError(f"no coloring for length {l} under condition {label}")
                suffix = special[l]
                keys.append(f"e24.l{l}" + (f".{suffix}" if suffix else ""))
            elif l <= 6:
                keys.append(f"e24.l{l}")
            else:
                keys.append(_residue_key("e24", l))
        return keys

    def ends23(self) -> list[str]:
        edge = self.n[1] == 1
        keys = []
        for l in self.spec.lengths:
            if l <= 5:
                keys.append(f"e23.l{l}")
            else:
                keys.append(_residue_key("e23.edge" if edge else "e23", l))
        return keys


_FOUR_COLOR_ENDS = {
    L.A: "44", L.B: "33", L.C: "24", L.D: "22", L.E: "22", L.F: "24", L.G: "24",
    L.H: "34", L.I: "23", L.J: "34", L.K: "24", L.L: "24", L.M: "24", L.N: "23",
}


def pattern_words(spec: ThetaSpec, k: int, trace: ConditionLabel, table: CaseTable | None = None):
    """Per-path words and the table keys used, following the construction for ``trace``."""
    table = table or default_table()
    b = _Builder(spec, table)
    if trace is L.CYCLE_CASE:
        raise CertificateError("two-path thetas are cycles; use certificate_cycle")
    if trace in (L.N3_DOMINATED, L.NONE):
        return b.upper_bound(extra_threes=trace is L.N3_DOMINATED)
    if trace in (L.PCN3_I, L.PCN3_II):
        return b.pcn3(trace)
    ends = _FOUR_COLOR_ENDS[trace]
    if ends == "44":
        keys = b.ends44()
    elif ends == "33":
        keys = b.ends33()
    elif ends == "22":
        keys = b.ends22()
    elif ends == "34":
        keys = b.ends34()
    elif ends == "24":
        keys = b.ends24(trace)
    else:
        keys = b.ends23()
    try:
        words = [table.word(key, l) for key, l in zip(keys, spec.lengths)]
    except (KeyError, PatternError) as exc:
        raise CertificateError(f"no table word for {spec} under {trace}: {exc}") from exc
    return words, keys


def coloring_from_words(spec: ThetaSpec, words: list[str]) -> PackingColoring:
    g = build_theta(spec)
    cu, cv = int(words[0][0]), int(words[0][-1])
    assignment = {"u": cu, "v": cv}
    for i, w in enumerate(words, start=1):
        if int(w[0]) != cu or int(w[-1]) != cv:
            raise CertificateError(f"path {i} word {w} disagrees on the end colors {cu}, {cv}")
        labels = g.path_labels(i)
        if len(labels) != len(w):
            raise CertificateError(f"path {i} word {w} has the wrong length")
        for lab, c in zip(labels[1:-1], w[1:-1]):
            assignment[lab] = int(c)
    return PackingColoring(assignment)


def build_certificate(spec: ThetaSpec, k: int | None = None, trace: ConditionLabel | None = None,
                      table: CaseTable | None = None) -> ThetaCertificate:
    if not isinstance(spec, ThetaSpec):
        spec = ThetaSpec(tuple(spec))
    if k is None or trace is None:
        k, trace = pcn_theta(spec)
    g = build_theta(spec)
    dm = distance_matrix(g)
    if trace is L.CYCLE_CASE:
        cyc = certificate_cycle(sum(spec.lengths))
        # walk the cycle u -> path 1 -> v -> path 2 back to u
        order = g.path_labels(1) + list(reversed(g.path_labels(2)))[1:-1]
        col = PackingColoring({lab: cyc[str(i)] for i, lab in enumerate(order)})
        words = [col.word(g.path_labels(i)) for i in (1, 2)]
        report = verify(dm, col)
        if report.valid and col.color_count == k:
            return ThetaCertificate(spec, k, trace, col, VERIFIED, words, ["cycle", "cycle"], report)
        return _repair(spec, k, trace, dm, words, [], report, "cycle word failed")
    try:
        words, keys = pattern_words(spec, k, trace, table)
        col = coloring_from_words(spec, words)
    except CertificateError as exc:
        return _repair(spec, k, trace, dm, [], [], None, str(exc))
    report = verify(dm, col)
    if report.valid and col.color_count == k:
        return ThetaCertificate(spec, k, trace, col, VERIFIED, words, keys, report)
    note = "pattern coloring invalid" if not report.valid else f"pattern coloring uses {col.color_count} colors"
    return _repair(spec, k, trace, dm, words, keys, report, note)


def _repair(spec, k, trace, dm, words, keys, report, note) -> ThetaCertificate:
    col = exists_k_coloring(dm, k)
    if col is None or col.color_count != k:
        raise CertificateError(f"{spec}: no packing coloring with exactly {k} colors ({note})")
    return ThetaCertificate(spec, k, trace, col, REPAIRED, words, keys, report, note)


def certificate_theta(spec: ThetaSpec, k: int | None = None, trace: ConditionLabel | None = None) -> PackingColoring:
    return build_certificate(spec, k, trace).coloring


def cycle_word(n: int) -> str:
    if n < 3:
        raise ValueError("a cycle has at least 3 vertices")
    if n == 3:
        return "123"
    r = n % 4
    tail = {0: "", 1: "12134", 2: "121314", 3: "1213214"}[r]
    return "1213" * ((n - len(tail)) // 4) + tail


def certificate_cycle(n: int) -> PackingColoring:
    """Coloring of C_n (vertices "0".."n-1") with cycle_pcn(n) colors."""
    return PackingColoring.from_word(build_cycle(n).vertices, cycle_word(n))


def path_word(n: int) -> str:
    if n < 1:
        raise ValueError("a path has at least one vertex")
    return {1: "1", 2: "12", 3: "121"}.get(n) or ("1213" * (n // 4 + 1))[:n]


def certificate_path(n: int) -> PackingColoring:
    """Coloring of P_n (vertices "0".."n-1") with path_pcn(n) colors."""
    return PackingColoring.from_word(build_path(n).vertices, path_word(n))


__all__ = [
    "CertificateError", "ThetaCertificate", "build_certificate", "certificate_theta", "certificate_cycle",
    "certificate_path", "cycle_word", "path_word", "pattern_words", "coloring_from_words", "expand",
    "cycle_pcn", "path_pcn", "VERIFIED", "REPAIRED",
]
