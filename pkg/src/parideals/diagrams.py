"""Young-type diagrams and their northwest-flushed subdiagrams.

A shape is a list of rows, row ``r`` occupying columns ``offset+1 … offset+length``,
plus optional *added boxes* ``(l, l-1)`` that extend row ``l`` by one box on
the left (or open a new last row).  After the boxes are placed, columns are
renumbered so that the leftmost occupied column is 1; every column index this
module hands out (``τ_h``, reversal columns) is in that numbering.

A subdiagram ``S`` is *nw* when a box of ``S`` forces every box of the shape
weakly north and weakly west of it.  Such an ``S`` is a prefix of each row,
so it is stored as the per-row counts ``c_r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .components import l_values, tail_count
from .errors import InvalidArgs, MalformedShape, NotClassical, NotTypeA
from .ideals import Ideal, Parabolic, as_selector
from .logging_utils import get_logger
from .rootsys import Family, RootSystem

logger = get_logger(__name__)

Cell = Tuple[int, int]
Layout = Tuple[Tuple[int, int], ...]


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagramShape:
    """Rows as ``(offset, length)`` pairs plus added boxes ``(row, column)``."""

    rows: Tuple[Tuple[int, int], ...]
    added_boxes: Tuple[Cell, ...] = ()
    reversal_columns: Optional[Tuple[int, int]] = None

    def __post_init__(self) -> None:
        for offset, length in self.rows:
            if offset < 0 or length < 0:
                raise MalformedShape(f"bad row ({offset}, {length})")
        seen = set()
        for row, col in self.added_boxes:
            if row in seen:
                raise MalformedShape(f"two added boxes in row {row}")
            seen.add(row)
            if 1 <= row <= len(self.rows):
                if col != self.rows[row - 1][0]:
                    raise MalformedShape(
                        f"added box ({row}, {col}) is not left of row {row}"
                    )
            elif row != len(self.rows) + 1 or col < 0:
                raise MalformedShape(f"added box ({row}, {col}) outside the shape")
        if self.reversal_columns is not None:
            a, b = self.reversal_columns
            if b != a + 1 or a < 1:
                raise MalformedShape(f"reversal columns {a}, {b} are not adjacent")

    def layout(self) -> Layout:
        """Normalised ``(first column, length)`` per row, boxes included."""
        return _layout(self)

    def cells(self) -> FrozenSet[Cell]:
        return frozenset(
            (r, start + k)
            for r, (start, length) in enumerate(self.layout(), start=1)
            for k in range(length)
        )

    def to_text(self) -> str:
        """Compact form, e.g. ``rows=0:5,1:3|boxes=1:0|rev=3:4``."""
        parts = ["rows=" + ",".join(f"{o}:{n}" for o, n in self.rows)]
        if self.added_boxes:
            parts.append("boxes=" + ",".join(f"{r}:{c}" for r, c in self.added_boxes))
        if self.reversal_columns is not None:
            parts.append("rev={}:{}".format(*self.reversal_columns))
        return "|".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "DiagramShape":
        fields = {}
        for part in text.strip().split("|"):
            key, _, value = part.partition("=")
            fields[key.strip()] = value.strip()
        try:
            rows = _pairs(fields.get("rows", ""))
            boxes = _pairs(fields.get("boxes", ""))
            rev = _pairs(fields["rev"])[0] if fields.get("rev") else None
        except (ValueError, IndexError) as exc:
            raise MalformedShape(f"cannot parse shape {text!r}") from exc
        return cls(rows=rows, added_boxes=boxes, reversal_columns=rev)


def _pairs(text: str) -> Tuple[Tuple[int, int], ...]:
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        a, b = item.split(":")
        out.append((int(a), int(b)))
    return tuple(out)


@lru_cache(maxsize=1024)
def _layout(shape: DiagramShape) -> Layout:
    rows = [[offset + 1, length] for offset, length in shape.rows]
    for row, col in shape.added_boxes:
        if row <= len(rows):
            rows[row - 1][0] -= 1
            rows[row - 1][1] += 1
        else:
            rows.append([col, 1])
    starts = [start for start, length in rows if length > 0]
    shift = 1 - min(starts) if starts else 0
    return tuple((start + shift, length) for start, length in rows)


@dataclass(frozen=True)
class NWDiagram:
    """Per-row box counts of a northwest-flushed subdiagram."""

    counts: Tuple[int, ...]

    def __len__(self) -> int:
        return sum(self.counts)

    def cells(self, shape: DiagramShape) -> FrozenSet[Cell]:
        layout = shape.layout()
        return frozenset(
            (r, layout[r - 1][0] + k)
            for r, c in enumerate(self.counts, start=1)
            for k in range(c)
        )

    def tau(self, shape: DiagramShape, h: int) -> int:
        """Rightmost column used in row *h*, 0 when the row is empty."""
        if h > len(self.counts) or self.counts[h - 1] == 0:
            return 0
        return shape.layout()[h - 1][0] + self.counts[h - 1] - 1


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def _check_l_list(l_list: Sequence[int], top: int) -> Tuple[int, ...]:
    out = tuple(l_list)
    if any(b <= a for a, b in zip(out, out[1:])):
        raise MalformedShape(f"l_list {list(out)} is not strictly increasing")
    if out and not (1 <= out[0] and out[-1] <= top):
        raise MalformedShape(f"l_list {list(out)} outside 1..{top}")
    return out


def staircase(k: int) -> DiagramShape:
    """Left-justified rows of lengths ``k, k-1, …, 1``."""
    if k < 0:
        raise MalformedShape("staircase size must be non-negative")
    return DiagramShape(rows=tuple((0, k - i) for i in range(k)))


def t_shape(
    p: int,
    q: int,
    l_list: Sequence[int] = (),
    reversal_columns: Optional[Tuple[int, int]] = None,
) -> DiagramShape:
    """Shifted shape ``[p+q-1, p+q-3, …, p-q+1]`` with boxes ``(l_j, l_j-1)``."""
    if not 0 <= q <= p:
        raise MalformedShape(f"T_{{{p},{q}}} needs 0 <= q <= p")
    boxes = _check_l_list(l_list, q + 1)
    return DiagramShape(
        rows=tuple((i - 1, p + q - 2 * i + 1) for i in range(1, q + 1)),
        added_boxes=tuple((l, l - 1) for l in boxes),
        reversal_columns=reversal_columns,
    )


def t_prime_shape(p: int, q: int) -> DiagramShape:
    """``q`` left-justified rows of lengths ``p, p-1, …, p-q+1``."""
    if p < 0 or not 0 <= q <= p + 1:
        raise MalformedShape(f"T'_{{{p},{q}}} needs 0 <= q <= p+1")
    return DiagramShape(rows=tuple((0, p - i + 1) for i in range(1, q + 1)))


def r_shape(p: int, l_list: Sequence[int] = ()) -> DiagramShape:
    """Row ``r`` spans columns ``r … p``; boxes ``(l_j, l_j-1)`` as for T."""
    if p < 0:
        raise MalformedShape("R_p needs p >= 0")
    boxes = _check_l_list(l_list, p + 1)
    return DiagramShape(
        rows=tuple((r - 1, p - r + 1) for r in range(1, p + 1)),
        added_boxes=tuple((l, l - 1) for l in boxes),
    )


class ShapeFamily(str, Enum):
    STAIRCASE = "staircase"
    T = "T"
    T_PRIME = "T_prime"
    T_WITH_BOXES = "T_with_boxes"
    R = "R"
    R_WITH_BOXES = "R_with_boxes"


_SHORT_NAMES = {
    ShapeFamily.T_PRIME: "T'",
    ShapeFamily.R: "R",
    ShapeFamily.R_WITH_BOXES: "R",
}


@dataclass(frozen=True)
class ShapeParams:
    """Named description of a shape; :meth:`to_shape` builds the rows."""

    family: ShapeFamily
    p: int
    q: int = 0
    l_list: Tuple[int, ...] = ()
    reversal_columns: Optional[Tuple[int, int]] = None

    @property
    def reversal(self) -> bool:
        return self.reversal_columns is not None

    def to_shape(self) -> DiagramShape:
        fam = self.family
        if fam is ShapeFamily.STAIRCASE:
            return staircase(self.p)
        if fam in (ShapeFamily.T, ShapeFamily.T_WITH_BOXES):
            return t_shape(self.p, self.q, self.l_list, self.reversal_columns)
        if fam is ShapeFamily.T_PRIME:
            return t_prime_shape(self.p, self.q)
        return r_shape(self.p, self.l_list)

    def __str__(self) -> str:
        if self.family is ShapeFamily.STAIRCASE:
            return f"staircase({self.p})"
        name = _SHORT_NAMES.get(self.family, "T")
        args = f"{self.p}" if name == "R" else f"{self.p},{self.q}"
        text = f"{name}_{{{args}}}"
        if self.l_list:
            text += "(" + ",".join(map(str, self.l_list)) + ")"
        if self.reversal_columns:
            text += " rev{}".format(self.reversal_columns)
        return text


# ---------------------------------------------------------------------------
# Enumeration and counting
# ---------------------------------------------------------------------------


_UNBOUNDED = 1 << 30


def iter_nw_diagrams(shape: DiagramShape) -> Iterator[NWDiagram]:
    """All nw-subdiagrams, the empty one first."""
    layout = shape.layout()
    counts: List[int] = []

    def walk(r: int, bound: int) -> Iterator[NWDiagram]:
        if r == len(layout):
            yield NWDiagram(tuple(counts))
            return
        start, length = layout[r]
        top = min(length, bound - start + 1) if bound < _UNBOUNDED else length
        for c in range(max(top, 0) + 1):
            nxt = bound if c == length else min(bound, start + c - 1)
            counts.append(c)
            yield from walk(r + 1, nxt)
            counts.pop()

    yield from walk(0, _UNBOUNDED)


def _plain_count(layout: Layout) -> int:
    @lru_cache(maxsize=None)
    def f(r: int, bound: int) -> int:
        if r == len(layout):
            return 1
        start, length = layout[r]
        top = min(length, bound - start + 1) if bound < _UNBOUNDED else length
        total = 0
        for c in range(max(top, 0) + 1):
            total += f(r + 1, bound if c == length else min(bound, start + c - 1))
        return total

    return f(0, _UNBOUNDED)


def _swap(cells: FrozenSet[Cell], a: int, b: int) -> FrozenSet[Cell]:
    return frozenset((r, b if c == a else a if c == b else c) for r, c in cells)


def reversal_weights(shape: DiagramShape) -> List[Tuple[NWDiagram, int]]:
    """Each nw-diagram with weight 2 when its column-swapped twin is a new diagram.

    The weights sum to the size of the union of nw-diagrams and their
    images under exchanging the two reversal columns.
    """
    diagrams = list(iter_nw_diagrams(shape))
    if shape.reversal_columns is None:
        return [(d, 1) for d in diagrams]
    a, b = shape.reversal_columns
    all_cells = shape.cells()
    cell_sets = [d.cells(shape) for d in diagrams]
    known = set(cell_sets)
    out = []
    for d, cells in zip(diagrams, cell_sets):
        twin = _swap(cells, a, b)
        extra = twin not in known and twin <= all_cells
        out.append((d, 2 if extra else 1))
    return out


def nw_count(shape: DiagramShape) -> int:
    """Number of nw-diagrams (with reversal, of nw- and •-nw-diagrams)."""
    if shape.reversal_columns is None:
        return _plain_count(shape.layout())
    return sum(w for _, w in reversal_weights(shape))


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def catalan(n: int) -> int:
    if n < 0:
        raise InvalidArgs("Catalan index must be non-negative")
    return math.comb(2 * n, n) // (n + 1)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def t_prime_count(p: int, q: int) -> int:
    """Closed form for ``T'_{p,q}`` extended by 0 to ``q < 0``."""
    if q < 0:
        return 0
    num = math.factorial(p + q + 1) * (p - q + 2)
    den = math.factorial(q) * math.factorial(p + 2)
    value, rem = divmod(num, den)
    assert rem == 0, (p, q)
    return value


def t_prime_formula(p: int, q: int) -> int:
    """``(p+q+1)! (p-q+2) / (q! (p+2)!)``, the nw-count of ``T'_{p,q}``."""
    if not 0 <= q <= p:
        raise InvalidArgs(f"T'_{{{p},{q}}} needs 0 <= q <= p")
    return t_prime_count(p, q)


def t_boxes_formula(p: int, q: int, l_list: Sequence[int] = ()) -> int:
    """nw-count of ``T_{p,q}(l_1, …, l_s)``."""
    if not 0 <= q <= p:
        raise InvalidArgs(f"T_{{{p},{q}}} needs 0 <= q <= p")
    try:
        boxes = _check_l_list(l_list, q + 1)
    except MalformedShape as exc:
        raise InvalidArgs(str(exc)) from exc
    return math.comb(p + q, p) + sum(t_prime_count(p + q - l, l - 1) for l in boxes)


def r_boxes_formula(p: int, l_list: Sequence[int] = ()) -> int:
    """nw-count of ``R_p(l_1, …, l_s)``: ``2^p + Σ binom(p, l_j - 1)``."""
    if p < 0:
        raise InvalidArgs("R_p needs p >= 0")
    try:
        boxes = _check_l_list(l_list, p + 1)
    except MalformedShape as exc:
        raise InvalidArgs(str(exc)) from exc
    return 2**p + sum(math.comb(p, l - 1) for l in boxes)


# ---------------------------------------------------------------------------
# Shapes attached to (X, I)
# ---------------------------------------------------------------------------


def shape_of(rs: RootSystem, I: Parabolic) -> ShapeParams:
    """Shape whose nw-diagrams are in bijection with ``F_I``."""
    sel = as_selector(rs, I)
    fam = rs.family
    if not fam.classical:
        raise NotClassical(f"no diagram model for type {rs.rtype}")
    l, r = rs.rank, len(sel)
    q = l - r
    if fam is Family.A:
        return ShapeParams(ShapeFamily.STAIRCASE, q)
    if fam is Family.C:
        p = q + 1 if l in sel else q
        return ShapeParams(ShapeFamily.T, p, q)
    boxes = l_values(rs, sel)
    kind = ShapeFamily.T_WITH_BOXES if boxes else ShapeFamily.T
    if fam is Family.B or tail_count(rs, sel) == 2:
        return ShapeParams(kind, q, q, boxes)
    reversal = None
    if tail_count(rs, sel) == 0:
        reversal = (q, q + 1) if 1 in sel else (q - 1, q)
    return ShapeParams(kind, q, q - 1, boxes, reversal)


def typeA_explicit_bijection(rs: RootSystem, I: Parabolic, ideal: Ideal) -> NWDiagram:
    """Diagram of ``Φ`` in the staircase of size ``l - ♯I``.

    The box in row ``a``, column ``m - b + 1`` holds the roots ``α_i + … + α_e``
    whose support first meets ``Π ∖ I`` at its ``a``-th element and last at
    its ``b``-th.
    """
    if rs.family is not Family.A:
        raise NotTypeA(f"explicit bijection needs type A, got {rs.rtype}")
    sel = as_selector(rs, I)
    gaps = [i for i in range(1, rs.rank + 1) if i not in sel]
    m = len(gaps)
    boxes = set()
    for root in ideal.roots(rs):
        support = [k + 1 for k, c in enumerate(root) if c]
        first, last = support[0], support[-1]
        a = next(n for n, g in enumerate(gaps, start=1) if g >= first)
        b = max(n for n, g in enumerate(gaps, start=1) if g <= last)
        boxes.add((a, m - b + 1))
    counts = [0] * m
    for a, _ in boxes:
        counts[a - 1] += 1
    return NWDiagram(tuple(counts))
