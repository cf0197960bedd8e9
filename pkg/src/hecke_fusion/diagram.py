"""
Cherednik diagrams, their row filling, multisegments and the special order.

A diagram is a list of rows ``[a_i, b_i]``; row ``i`` holds the boxes
``(i, j)`` for ``a_i <= j <= b_i``.  Boxes are numbered ``1..n`` left to
right, top to bottom, and box ``k`` has content ``c_k = j - i``.  Rows and
boxes are 1-based throughout.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .coxeter import Pair, Perm, length, word_to_perm

__all__ = [
    "Diagram", "DiagramError", "Filling", "Multisegment", "OrderEntry", "SpecialOrder",
    "ParallelData", "validate", "filling", "from_multisegment", "to_multisegment",
    "parallel_data", "special_order", "w_lambda", "bar_diagram", "enumerate_diagrams",
    "parse_diagram", "parse_multisegment", "render",
]


class DiagramError(ValueError):
    """Invalid input; ``row`` is the 1-based index of the offending row, if any."""

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


def cherednik_violation(rows: Sequence[tuple[int, int]]) -> int | None:
    """The first ``i`` (1-based) whose successor breaks the Cherednik condition."""
    for i in range(len(rows) - 1):
        (a, b), (a2, b2) = rows[i], rows[i + 1]
        if not (b2 <= b or (b2 == b + 1 and a2 <= a + 1)):
            return i + 1
    return None


@dataclass(frozen=True)
class Diagram:
    """A row list; not necessarily Cherednik (see :func:`validate`)."""

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DiagramError("a diagram needs at least one row")
        for i, (a, b) in enumerate(rows, 1):
            if a > b:
                raise DiagramError(f"row {i} = [{a},{b}] is empty (a > b)", row=i)

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return sum(b - a + 1 for a, b in self.rows)

    def row_length(self, k: int) -> int:
        a, b = self.rows[k - 1]
        return b - a + 1

    @property
    def is_cherednik(self) -> bool:
        return cherednik_violation(self.rows) is None

    @cached_property
    def filling(self) -> Filling:
        return filling(self)

    def __str__(self) -> str:
        return ";".join(f"[{a},{b}]" for a, b in self.rows)

    def to_json(self) -> list:
        return [list(r) for r in self.rows]


def validate(rows: Iterable[Sequence[int]]) -> Diagram:
    """Build a :class:`Diagram` and insist on the Cherednik condition."""
    d = rows if isinstance(rows, Diagram) else Diagram(tuple(tuple(r) for r in rows))
    bad = cherednik_violation(d.rows)
    if bad is not None:
        (a, b), (a2, b2) = d.rows[bad - 1], d.rows[bad]
        raise DiagramError(
            f"not a Cherednik diagram: row {bad + 1} = [{a2},{b2}] after row {bad} = [{a},{b}] "
            f"needs b' <= b, or b' = b + 1 and a' <= a + 1", row=bad + 1)
    return d


# --------------------------------------------------------------------------
# filling and contents


@dataclass(frozen=True)
class Filling:
    content: tuple[int, ...]     # content[k-1] = c_k
    row_of: tuple[int, ...]      # row_of[k-1] = row holding box k
    first: tuple[int, ...]       # first[i-1] = number in the leftmost box of row i

    def row_boxes(self, i: int) -> range:
        start = self.first[i - 1]
        end = self.first[i] if i < len(self.first) else len(self.content) + 1
        return range(start, end)


def filling(lam: Diagram) -> Filling:
    content, row_of, first = [], [], []
    for i, (a, b) in enumerate(lam.rows, 1):
        first.append(len(content) + 1)
        for j in range(a, b + 1):
            content.append(j - i)
            row_of.append(i)
    return Filling(tuple(content), tuple(row_of), tuple(first))


# --------------------------------------------------------------------------
# multisegments


@dataclass(frozen=True)
class Multisegment:
    """A multiset of segments ``[i, j]`` with positive multiplicities."""

    segments: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_counts(cls, counts) -> Multisegment:
        c = Counter()
        for seg, m in dict(counts).items():
            i, j = seg
            if i > j:
                raise DiagramError(f"segment [{i},{j}] is empty")
            if m < 0:
                raise DiagramError("multiplicities must be non-negative")
            if m:
                c[(int(i), int(j))] += m
        return cls(tuple(sorted(c.items())))

    @property
    def counts(self) -> dict:
        return dict(self.segments)

    @property
    def degree(self) -> int:
        return sum(m * (j - i + 1) for (i, j), m in self.segments)

    def __str__(self) -> str:
        order = sorted(self.segments, key=lambda t: (-t[0][1], -t[0][0]))
        return "+".join((f"{m}*" if m > 1 else "") + f"[{i},{j}]" for (i, j), m in order)


def from_multisegment(M: Multisegment) -> Diagram:
    """Sort segments by end then start, both descending, and shift row k by k."""
    segs = []
    for (i, j), m in M.segments:
        segs.extend([(i, j)] * m)
    if not segs:
        raise DiagramError("empty multisegment")
    segs.sort(key=lambda s: (-s[1], -s[0]))
    return Diagram(tuple((i + k, j + k) for k, (i, j) in enumerate(segs, 1)))


def to_multisegment(lam: Diagram) -> Multisegment:
    c = Counter((a - k, b - k) for k, (a, b) in enumerate(lam.rows, 1))
    return Multisegment.from_counts(c)


# --------------------------------------------------------------------------
# parallel rows


@dataclass(frozen=True)
class ParallelData:
    pairs: frozenset[tuple[int, int]]     # (k, l), k < l, rows k and l parallel
    p_lambda: int
    p_m: dict                              # row length -> number of parallel pairs
    d_lambda: int                          # number of singular pairs
    vanishing_pairs: frozenset[Pair]       # leftmost boxes of parallel rows


def rows_parallel(lam: Diagram, k: int, l: int) -> bool:
    (a, b), (a2, b2) = lam.rows[k - 1], lam.rows[l - 1]
    return a - k == a2 - l and b - k == b2 - l


def parallel_data(lam: Diagram) -> ParallelData:
    fill = lam.filling
    pairs = frozenset((k, l) for k in range(1, lam.r + 1) for l in range(k + 1, lam.r + 1)
                      if rows_parallel(lam, k, l))
    p_m = Counter(lam.row_length(k) for k, _ in pairs)
    c = fill.content
    d = sum(1 for i in range(lam.n) for j in range(i + 1, lam.n) if c[i] == c[j])
    vanishing = frozenset((fill.first[k - 1], fill.first[l - 1]) for k, l in pairs)
    return ParallelData(pairs, len(pairs), dict(p_m), d, vanishing)


def earlier_parallel_boxes(lam: Diagram, k: int) -> int:
    """Boxes in the rows before ``k`` that are parallel to row ``k``."""
    return sum(lam.row_length(j) for j in range(1, k) if rows_parallel(lam, j, k))


# --------------------------------------------------------------------------
# the special order


@dataclass(frozen=True)
class OrderEntry:
    pair: Pair
    block: tuple[int, int]
    gen_index: int
    e_sign: str                  # '-' or '+'
    singular: bool
    in_R: bool
    partner_position: int | None  # 0-based position of the partner, for in_R entries

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair), "block": list(self.block), "gen_index": self.gen_index,
            "e_sign": self.e_sign, "singular": self.singular, "in_R": self.in_R,
            "partner_position": self.partner_position,
        }


@dataclass(frozen=True)
class SpecialOrder:
    diagram: Diagram
    entries: tuple[OrderEntry, ...]
    position: dict = field(compare=False, repr=False)

    @property
    def pairs(self) -> list[Pair]:
        return [e.pair for e in self.entries]

    @property
    def singular_pairs(self) -> list[Pair]:
        return [e.pair for e in self.entries if e.singular]

    @property
    def R(self) -> list[Pair]:
        return [e.pair for e in self.entries if e.in_R]

    def partner(self, pair: Pair) -> Pair | None:
        e = self.entries[self.position[pair]]
        return None if e.partner_position is None else self.entries[e.partner_position].pair

    def blocks(self) -> list[tuple[tuple[int, int], list[OrderEntry]]]:
        out = []
        for e in self.entries:
            if not out or out[-1][0] != e.block:
                out.append((e.block, []))
            out[-1][1].append(e)
        return out

    def to_json(self) -> dict:
        return {"diagram": self.diagram.to_json(), "entries": [e.to_json() for e in self.entries]}

    def table(self) -> str:
        """The order block by block; singular pairs in bold, fused pairs underlined."""
        fused = set()
        for p, e in enumerate(self.entries):
            if e.in_R:
                fused.update((p, e.partner_position))
        lines = []
        for (k, l), block in self.blocks():
            cells = []
            for e in block:
                p = self.position[e.pair]
                s = f"({e.pair[0]},{e.pair[1]})"
                if e.singular:
                    s = f"*{s}*"
                if p in fused:
                    s = f"_{s}_"
                cells.append(s)
            sign = block[0].e_sign
            lines.append(f"D{k}{l} [{sign}]: " + ", ".join(cells))
        return "\n".join(lines)


def special_order(lam: Diagram) -> SpecialOrder:
    """Blocks ``D_kl`` ordered ``D11 < D12 < D22 < D13 < ... < Drr``, each in
    lexicographic order when rows k and l end on the same diagonal and in
    order by second index otherwise, with all fusion annotations."""
    fill = lam.filling
    c = fill.content
    boxes = {k: list(fill.row_boxes(k)) for k in range(1, lam.r + 1)}
    entries: list[dict] = []
    for l in range(1, lam.r + 1):
        for k in range(1, l + 1):
            same_diag = lam.rows[k - 1][1] - k == lam.rows[l - 1][1] - l
            if k == l:
                pairs = [(i, j) for i in boxes[k] for j in boxes[k] if i < j]
            else:
                pairs = [(i, j) for i in boxes[k] for j in boxes[l]]
            pairs.sort(key=(lambda p: p) if same_diag else (lambda p: (p[1], p[0])))
            par = k < l and rows_parallel(lam, k, l)
            for (i, j) in pairs:
                singular = c[i - 1] == c[j - 1]
                leftmost = par and i == fill.first[k - 1] and j == fill.first[l - 1]
                entries.append(dict(pair=(i, j), block=(k, l), gen_index=j - i,
                                    e_sign="-" if same_diag else "+", singular=singular,
                                    in_R=singular and not leftmost))
    position = {e["pair"]: p for p, e in enumerate(entries)}
    used = set()
    for p, e in enumerate(entries):
        e["partner_position"] = None
        if not e["in_R"]:
            continue
        i, j = e["pair"]
        if e["e_sign"] == "-":
            partner, expect = (i, j - 1), p - 1
        else:
            partner, expect = (i + 1, j), p + 1
        got = position.get(partner)
        assert got == expect, f"partner {partner} of {(i, j)} is not adjacent in the special order"
        assert partner not in used, f"partner {partner} used twice"
        assert not entries[got]["singular"], f"partner {partner} is singular"
        used.add(partner)
        e["partner_position"] = got
    return SpecialOrder(lam, tuple(OrderEntry(**e) for e in entries), position)


def w_lambda(lam: Diagram) -> tuple[list[int], Perm]:
    """The word obtained by reading ``t_ij`` along the special order."""
    order = special_order(lam)
    word = []
    for e in order.entries:
        k, l = e.block
        if k == l:
            word.append(e.gen_index + earlier_parallel_boxes(lam, k))
        elif not rows_parallel(lam, k, l):
            word.append(e.gen_index)
    perm = word_to_perm(word, lam.n)
    assert length(perm) == len(word), f"w_lambda word {word} is not reduced"
    return word, perm


def bar_diagram(lam: Diagram) -> Diagram:
    """``bar_i = [r - b_{r-i+1} + 1, r - a_{r-i+1} + 1]``; need not be Cherednik."""
    r = lam.r
    return Diagram(tuple((r - lam.rows[r - i][1] + 1, r - lam.rows[r - i][0] + 1)
                         for i in range(1, r + 1)))


# --------------------------------------------------------------------------
# enumeration


def enumerate_diagrams(n: int, window: int) -> list[Diagram]:
    """Every Cherednik diagram of degree ``n`` with ``1 <= a_i <= b_i <= window``.

    Ordered by number of rows, then lexicographically by rows.
    """
    if n < 1 or window < 1:
        raise ValueError("n and window must be positive")
    segs = [(a, b) for a in range(1, window + 1) for b in range(a, window + 1)]
    out = []

    def extend(rows, left):
        if left == 0:
            out.append(Diagram(tuple(rows)))
            return
        for a, b in segs:
            size = b - a + 1
            if size > left:
                continue
            if rows:
                pa, pb = rows[-1]
                if not (b <= pb or (b == pb + 1 and a <= pa + 1)):
                    continue
            rows.append((a, b))
            extend(rows, left - size)
            rows.pop()

    extend([], n)
    out.sort(key=lambda d: (d.r, d.rows))
    return out


# --------------------------------------------------------------------------
# text grammar


_ROW = re.compile(r"^\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")
_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")


def parse_rows(text: str) -> Diagram:
    rows = []
    for i, part in enumerate(text.strip().split(";"), 1):
        m = _ROW.match(part.strip())
        if not m:
            raise DiagramError(f"cannot parse row {i}: {part.strip()!r}", row=i)
        a, b = int(m.group(1)), int(m.group(2))
        if a > b:
            raise DiagramError(f"row {i} = [{a},{b}] has a > b", row=i)
        rows.append((a, b))
    return Diagram(tuple(rows))


def parse_diagram(text: str) -> Diagram:
    """``"[1,2];[2,3];[2,3]"``, validated as a Cherednik diagram."""
    return validate(parse_rows(text))


def parse_multisegment(text: str) -> Multisegment:
    """``"2*[0,1]+[-1,0]"``."""
    counts: Counter = Counter()
    # split on '+' that is not inside brackets
    depth, cur, terms = 0, "", []
    for ch in text.strip():
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append(cur)
            cur = ""
        else:
            cur += ch
    terms.append(cur)
    for t in terms:
        m = _TERM.match(t.strip())
        if not m:
            raise DiagramError(f"cannot parse segment {t.strip()!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        i, j = int(m.group(2)), int(m.group(3))
        if i > j:
            raise DiagramError(f"segment [{i},{j}] has i > j")
        counts[(i, j)] += mult
    return Multisegment.from_counts(counts)


def render(lam: Diagram, fill: bool = True) -> str:
    """ASCII boxes; columns are absolute ``j`` coordinates."""
    lo = min(a for a, _ in lam.rows)
    lines = []
    k = 1
    width = len(str(lam.n)) + 2
    for a, b in lam.rows:
        cells = [" " * width] * (a - lo)
        for _ in range(a, b + 1):
            label = str(k) if fill else ""
            cells.append("[" + label.center(width - 2) + "]")
            k += 1
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)
