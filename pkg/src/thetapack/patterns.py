"""Color patterns and the table of path colorings used to build certificates.

A pattern such as ``4121(3121)*5`` is a prefix, an optional repeatable block
(``*`` for zero or more copies, ``+`` for one or more) and a suffix.  A word
colors a path from its first to its last vertex, both end letters included.

Every table entry is checked on its own path when the table is loaded.  An
entry that fails is replaced by the closest valid word (fewest changed
letters, end letters kept) and the change is kept in :attr:`CaseTable.repairs`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

_PATTERN = re.compile(r"^(\d*)(?:\((\d+)\)([*+]))?(\d*)$")


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternTemplate:
    prefix: str
    block: str = ""
    multiplicity: str | None = None  # "*", "+" or None for a literal word
    suffix: str = ""

    @classmethod
    def parse(cls, text: str) -> "PatternTemplate":
        m = _PATTERN.match(text.strip())
        if not m:
            raise PatternError(f"cannot parse color pattern {text!r}")
        prefix, block, mult, suffix = m.groups()
        if block is None:
            return cls(prefix + suffix)
        return cls(prefix, block, mult, suffix)

    def __str__(self) -> str:
        if self.multiplicity is None:
            return self.prefix
        return f"{self.prefix}({self.block}){self.multiplicity}{self.suffix}"

    @property
    def is_literal(self) -> bool:
        return self.multiplicity is None

    @property
    def min_repeats(self) -> int:
        return 1 if self.multiplicity == "+" else 0

    def letters(self) -> str:
        return self.prefix + self.block + self.suffix

    def repeats_for(self, target: int) -> int | None:
        fixed = len(self.prefix) + len(self.suffix)
        if self.is_literal:
            return 0 if target == fixed else None
        extra = target - fixed
        if extra < 0 or extra % len(self.block):
            return None
        r = extra // len(self.block)
        return r if r >= self.min_repeats else None

    def fits(self, target: int) -> bool:
        return self.repeats_for(target) is not None

    def targets(self, count: int = 4) -> list[int]:
        """The first ``count`` word lengths this pattern can produce."""
        fixed = len(self.prefix) + len(self.suffix)
        if self.is_literal:
            return [fixed]
        step = len(self.block)
        return [fixed + step * (self.min_repeats + i) for i in range(count)]


def expand(template: PatternTemplate | str, target: int) -> str:
    """The word of exactly ``target`` letters described by ``template``."""
    if isinstance(template, str):
        template = PatternTemplate.parse(template)
    r = template.repeats_for(target)
    if r is None:
        raise PatternError(f"{template} cannot produce a word of {target} letters")
    return template.prefix + template.block * r + template.suffix


def path_word_violations(word: str) -> list[tuple[int, int, int]]:
    """Pairs (i, j, color) breaking the packing rule along a path colored by ``word``."""
    colors = [int(c) for c in word]
    bad = []
    for i, c in enumerate(colors):
        for j in range(i + 1, min(len(colors), i + c + 1)):
            if colors[j] == c:
                bad.append((i, j, c))
    return bad


def is_path_packing(word: str) -> bool:
    return not path_word_violations(word)


@lru_cache(maxsize=None)
def closest_path_word(word: str, k: int) -> str | None:
    """Valid path word over 1..k keeping both end letters, nearest to ``word`` in
    Hamming distance; ties go to the lexicographically smallest word."""
    n = len(word)
    first, last = int(word[0]), int(word[-1])
    best: list = [None, None]
    colors = [0] * n
    colors[0], colors[-1] = first, last

    def admissible(i: int, c: int) -> bool:
        for j in range(max(0, i - c), i):
            if colors[j] == c:
                return False
        # the fixed last letter is checked against the interior too
        if i != n - 1 and c == last and n - 1 - i <= c:
            return False
        return True

    def rec(i: int, cost: int) -> None:
        if best[0] is not None and cost > best[0]:
            return
        if i == n - 1:
            if admissible(i, last):
                cand = "".join(map(str, colors))
                if best[0] is None or (cost, cand) < (best[0], best[1]):
                    best[0], best[1] = cost, cand
            return
        for c in range(1, k + 1):
            if admissible(i, c):
                colors[i] = c
                rec(i + 1, cost + (str(c) != word[i]))
        colors[i] = 0

    if n == 1:
        return word
    rec(1, 0)
    return best[1]


def repair_template(template: PatternTemplate, k: int, count: int = 4) -> PatternTemplate | None:
    """Change as few pattern letters as possible (never the two end letters) so that
    the first ``count`` expansions are valid path colorings over 1..k."""
    body = template.letters()
    sizes = (len(template.prefix), len(template.block), len(template.suffix))
    editable = range(1, len(body) - 1)
    for changes in range(1, 3):
        for positions in itertools.combinations(editable, changes):
            for letters in itertools.product(range(1, k + 1), repeat=changes):
                chars = list(body)
                if any(chars[p] == str(c) for p, c in zip(positions, letters)):
                    continue
                for p, c in zip(positions, letters):
                    chars[p] = str(c)
                text = "".join(chars)
                a, b = sizes[0], sizes[0] + sizes[1]
                cand = PatternTemplate(text[:a], text[a:b], template.multiplicity, text[b:])
                if all(is_path_packing(expand(cand, t)) for t in cand.targets(count)):
                    return cand
    return None


@dataclass(frozen=True)
class TableEntry:
    key: str
    source: str  # which construction the entry belongs to
    ends: tuple[int, int]
    k: int
    pattern: str
    lengths: str  # human-readable applicability, e.g. "l=6" or "l=2 mod 4, l>=10"

    @property
    def template(self) -> PatternTemplate:
        return PatternTemplate.parse(self.pattern)


@dataclass(frozen=True)
class Repair:
    key: str
    source: str
    original: str
    replacement: str
    reason: str


# (key, source, end colors, colors allowed, pattern, applicability)
_RAW = [
    # general 5-coloring with phi(u)=4, phi(v)=5
    ("ub.l1", "upper bound", (4, 5), 5, "45", "l=1"),
    ("ub.l3.a", "upper bound", (4, 5), 5, "4125", "l=3, first"),
    ("ub.l3.b", "upper bound", (4, 5), 5, "4215", "l=3, second"),
    ("ub.l3.c", "upper bound", (4, 5), 5, "4315", "l=3, third"),
    ("ub.r0", "upper bound", (4, 5), 5, "4121(3121)*5", "l=0 mod 4, l>=4"),
    ("ub.r1", "upper bound", (4, 5), 5, "41231(2131)*5", "l=1 mod 4, l>=5"),
    ("ub.r2", "upper bound", (4, 5), 5, "41(2131)*5", "l=2 mod 4"),
    ("ub.r3", "upper bound", (4, 5), 5, "412(3121)*5", "l=3 mod 4, l>=7"),
    # pcn = 3
    ("p3.i.l1", "pcn 3 (i)", (2, 3), 3, "23", "l=1"),
    ("p3.i.l2", "pcn 3 (i)", (2, 3), 3, "213", "l=2"),
    ("p3.ii.r0", "pcn 3 (ii)", (2, 2), 3, "(2131)*2", "l=0 mod 4"),
    ("p3.ii.r2", "pcn 3 (ii)", (2, 3), 3, "21(3121)*3", "l=2 mod 4"),
    # ends 4/4
    ("e44.r0", "ends 4,4", (4, 4), 4, "4(1213)+1214", "l=0 mod 4, l>=8"),
    ("e44.r1", "ends 4,4", (4, 4), 4, "413(1213)*214", "l=1 mod 4, l>=5"),
    ("e44.r2", "ends 4,4", (4, 4), 4, "4(1213)+14", "l=2 mod 4, l>=6"),
    ("e44.r3", "ends 4,4", (4, 4), 4, "4(1213)+214", "l=3 mod 4, l>=7"),
    # ends 3/3
    ("e33.l4", "ends 3,3", (3, 3), 4, "31213", "l=4"),
    ("e33.l5.a", "ends 3,3", (3, 3), 4, "312413", "l=5"),
    ("e33.l5.b", "ends 3,3", (3, 3), 4, "314213", "l=5"),
    ("e33.l6.a", "ends 3,3", (3, 3), 4, "3121413", "l=6"),
    ("e33.l6.b", "ends 3,3", (3, 3), 4, "3141213", "l=6"),
    ("e33.l6.c", "ends 3,3", (3, 3), 4, "3124123", "l=6"),
    ("e33.l6.d", "ends 3,3", (3, 3), 4, "3214213", "l=6"),
    ("e33.r0", "ends 3,3", (3, 3), 4, "3(1213)+1213", "l=0 mod 4, l>=8"),
    ("e33.r1", "ends 3,3", (3, 3), 4, "3(1213)+41213", "l=1 mod 4, l>=9"),
    ("e33.r2", "ends 3,3", (3, 3), 4, "3(1213)+141213", "l=2 mod 4, l>=10"),
    ("e33.r3", "ends 3,3", (3, 3), 4, "3(1213)*1241213", "l=3 mod 4, l>=7"),
    # ends 2/2
    ("e22.l3", "ends 2,2", (2, 2), 4, "2142", "l=3"),
    ("e22.l4", "ends 2,2", (2, 2), 4, "21312", "l=4"),
    ("e22.l5.a", "ends 2,2", (2, 2), 4, "213412", "l=5, 4 near v"),
    ("e22.l5.b", "ends 2,2", (2, 2), 4, "214312", "l=5, 4 near u"),
    ("e22.l6.a", "ends 2,2", (2, 2), 4, "2131412", "l=6, 4 near v"),
    ("e22.l6.b", "ends 2,2", (2, 2), 4, "2141321", "l=6, 4 near u"),
    ("e22.l7.a", "ends 2,2", (2, 2), 4, "21321412", "l=7, 4 near v"),
    ("e22.l7.b", "ends 2,2", (2, 2), 4, "21412312", "l=7, 4 near u"),
    ("e22.r0", "ends 2,2", (2, 2), 4, "2(1312)+1312", "l=0 mod 4, l>=8"),
    ("e22.r1", "ends 2,2", (2, 2), 4, "2(1312)+41312", "l=1 mod 4, l>=9"),
    ("e22.r2", "ends 2,2", (2, 2), 4, "2(1312)+121312", "l=2 mod 4, l>=10"),
    ("e22.r3", "ends 2,2", (2, 2), 4, "2(1312)+4121312", "l=3 mod 4, l>=11"),
    # ends 3/4
    ("e34.l1", "ends 3,4", (3, 4), 4, "34", "l=1"),
    ("e34.l2", "ends 3,4", (3, 4), 4, "314", "l=2"),
    ("e34.l3.a", "ends 3,4", (3, 4), 4, "3124", "l=3, first"),
    ("e34.l3.b", "ends 3,4", (3, 4), 4, "3214", "l=3, second"),
    ("e34.l4", "ends 3,4", (3, 4), 4, "31214", "l=4"),
    ("e34.l5", "ends 3,4", (3, 4), 4, "312134", "l=5"),
    ("e34.l6", "ends 3,4", (3, 4), 4, "3121314", "l=6"),
    ("e34.r0", "ends 3,4", (3, 4), 4, "3(1213)+1214", "l=0 mod 4, l>=8"),
    ("e34.r1", "ends 3,4", (3, 4), 4, "31214312(1312)*14", "l=1 mod 4, l>=9"),
    ("e34.r2", "ends 3,4", (3, 4), 4, "31214(1312)+14", "l=2 mod 4, l>=10"),
    ("e34.r3", "ends 3,4", (3, 4), 4, "3(1213)+214", "l=3 mod 4, l>=7"),
    # ends 2/4
    ("e24.l1", "ends 2,4", (2, 4), 4, "24", "l=1"),
    ("e24.l2", "ends 2,4", (2, 4), 4, "214", "l=2"),
    ("e24.l3", "ends 2,4", (2, 4), 4, "2134", "l=3"),
    ("e24.l4", "ends 2,4", (2, 4), 4, "21314", "l=4"),
    ("e24.l5", "ends 2,4", (2, 4), 4, "213214", "l=5"),
    ("e24.l6", "ends 2,4", (2, 4), 4, "2131214", "l=6"),
    ("e24.l7.a", "ends 2,4", (2, 4), 4, "21312134", "l=7"),
    ("e24.l7.b", "ends 2,4", (2, 4), 4, "21431214", "l=7"),
    ("e24.l8.a", "ends 2,4", (2, 4), 4, "213121314", "l=8"),
    ("e24.l8.b", "ends 2,4", (2, 4), 4, "214131214", "l=8"),
    ("e24.r0", "ends 2,4", (2, 4), 4, "2(1312)+14131214", "l=0 mod 4, l>=12"),
    ("e24.r1", "ends 2,4", (2, 4), 4, "2(1312)+13214", "l=1 mod 4, l>=9"),
    ("e24.r2", "ends 2,4", (2, 4), 4, "2(1312)+14", "l=2 mod 4, l>=10"),
    ("e24.r3", "ends 2,4", (2, 4), 4, "2(1312)+1431214", "l=3 mod 4, l>=11"),
    # ends 2/3
    ("e23.l1", "ends 2,3", (2, 3), 4, "23", "l=1"),
    ("e23.l2", "ends 2,3", (2, 3), 4, "213", "l=2"),
    ("e23.l3", "ends 2,3", (2, 3), 4, "2143", "l=3"),
    ("e23.l4", "ends 2,3", (2, 3), 4, "21413", "l=4"),
    ("e23.l5", "ends 2,3", (2, 3), 4, "214213", "l=5"),
    ("e23.edge.r0", "ends 2,3", (2, 3), 4, "214(1312)+13", "l=0 mod 4, l>=8, with an edge uv"),
    ("e23.edge.r1", "ends 2,3", (2, 3), 4, "2142(1312)+13", "l=1 mod 4, l>=9, with an edge uv"),
    ("e23.edge.r2", "ends 2,3", (2, 3), 4, "21412(1312)*13", "l=2 mod 4, l>=6, with an edge uv"),
    ("e23.edge.r3", "ends 2,3", (2, 3), 4, "214312(1312)*13", "l=3 mod 4, l>=7, with an edge uv"),
    ("e23.r0", "ends 2,3", (2, 3), 4, "2(1312)*13141213", "l=0 mod 4, l>=8"),
    ("e23.r1", "ends 2,3", (2, 3), 4, "2(1312)+41213", "l=1 mod 4, l>=9"),
    ("e23.r2", "ends 2,3", (2, 3), 4, "2(1312)+13", "l=2 mod 4, l>=6"),
    ("e23.r3", "ends 2,3", (2, 3), 4, "2(1312)*1341213", "l=3 mod 4, l>=7"),
]


@dataclass
class CaseTable:
    entries: dict[str, TableEntry] = field(default_factory=dict)
    repairs: list[Repair] = field(default_factory=list)

    def __getitem__(self, key: str) -> TableEntry:
        return self.entries[key]

    def word(self, key: str, length: int) -> str:
        """Coloring of a path with ``length`` edges from entry ``key``."""
        return expand(self.entries[key].template, length + 1)

    def provenance(self) -> list[dict]:
        fixed = {r.key: r for r in self.repairs}
        rows = []
        for key, e in self.entries.items():
            row = {"key": key, "source": e.source, "ends": list(e.ends), "pattern": e.pattern,
                   "lengths": e.lengths}
            if key in fixed:
                row["published"] = fixed[key].original
                row["reason"] = fixed[key].reason
            rows.append(row)
        return rows


def entry_violations(entry: TableEntry, count: int = 4) -> list[str]:
    """Reasons why ``entry`` is not a valid coloring of its own path(s)."""
    t = entry.template
    problems = []
    for target in t.targets(count):
        word = expand(t, target)
        if (int(word[0]), int(word[-1])) != entry.ends:
            problems.append(f"{word}: end letters are not {entry.ends[0]}..{entry.ends[1]}")
        if max(int(c) for c in word) > entry.k:
            problems.append(f"{word}: uses a color above {entry.k}")
        for i, j, c in path_word_violations(word):
            problems.append(f"{word}: color {c} at positions {i} and {j}")
    return problems


def load_table(raw=None) -> CaseTable:
    table = CaseTable()
    for key, source, ends, k, pattern, lengths in raw or _RAW:
        entry = TableEntry(key, source, tuple(ends), k, pattern, lengths)
        problems = entry_violations(entry)
        if problems:
            t = entry.template
            replacement = None
            if t.is_literal:
                # keep the declared end colors, repair the interior
                target = f"{ends[0]}{pattern[1:-1]}{ends[1]}"
                replacement = closest_path_word(target, k)
            else:
                fixed = repair_template(t, k)
                replacement = str(fixed) if fixed is not None else None
            if replacement is None:
                raise PatternError(f"entry {key} ({pattern}) is invalid and could not be repaired: {problems}")
            table.repairs.append(Repair(key, source, pattern, replacement, "; ".join(problems)))
            entry = TableEntry(key, source, tuple(ends), k, replacement, lengths)
            if entry_violations(entry):
                raise PatternError(f"repair of {key} failed")
        table.entries[key] = entry
    return table


_TABLE: CaseTable | None = None


def default_table() -> CaseTable:
    global _TABLE
    if _TABLE is None:
        _TABLE = load_table()
    return _TABLE
