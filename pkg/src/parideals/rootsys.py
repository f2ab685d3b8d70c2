"""Finite irreducible root systems of types A–G with exact root data.

Roots are integer coefficient tuples over the simple roots, numbered as in
Bourbaki: ``B_l`` has ``α_l`` short, ``C_l`` has ``α_l`` long, ``D_l`` forks at
``α_{l-2}``, ``F_4`` is ``α1 – α2 ⇒ α3 – α4`` and ``G_2`` has ``α1`` short.  The
bilinear form is normalised so that long roots have squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .errors import InvalidRank, NotARoot
from .linalg import Matrix, Scalar, Vector
from .logging_utils import get_logger

logger = get_logger(__name__)

Root = Tuple[int, ...]


class Family(str, Enum):
    """Cartan–Killing family letter."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"

    @property
    def classical(self) -> bool:
        return self in (Family.A, Family.B, Family.C, Family.D)


_MIN_RANK = {Family.A: 1, Family.B: 2, Family.C: 2, Family.D: 3}
_FIXED_RANKS = {Family.E: (6, 7, 8), Family.F: (4,), Family.G: (2,)}


@dataclass(frozen=True)
class RootSystemType:
    """A family letter together with a rank ``l``."""

    family: Family
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(str(self.family).upper()))
            except ValueError as exc:
                raise InvalidRank(f"unknown family: {self.family!r}") from exc
        rank = self.rank
        if self.family in _MIN_RANK:
            ok = rank >= _MIN_RANK[self.family]
        else:
            ok = rank in _FIXED_RANKS[self.family]
        if not ok:
            raise InvalidRank(f"rank {rank} is not valid for type {self.family.value}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemType":
        """Parse labels such as ``"B3"`` or ``"e8"``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidRank(f"cannot parse root system label: {text!r}")
        return cls(text[0], int(text[1:]))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root datum; share freely between threads."""

    rtype: RootSystemType
    cartan: Tuple[Tuple[int, ...], ...]
    gram: Matrix
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    marks: Tuple[int, ...]
    fundamental_coweights: Tuple[Vector, ...]
    index: Dict[Root, int] = field(repr=False)
    _all: FrozenSet[Root] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.rtype.rank

    @property
    def family(self) -> Family:
        return self.rtype.family

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(unit(self.rank, i) for i in range(1, self.rank + 1))

    def simple_root(self, i: int) -> Root:
        """Return ``α_i`` for ``1 <= i <= l``."""
        return self.simple_roots[i - 1]

    @property
    def roots(self) -> Tuple[Root, ...]:
        """All of Δ: positive roots followed by their negatives."""
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return tuple(coeffs) in self._all

    def root_index(self, root: Root) -> int:
        """Bit position of a positive root."""
        try:
            return self.index[root]
        except KeyError:
            raise NotARoot(f"{root} is not a positive root of {self.rtype}") from None

    def alcove_vertex(self, i: int) -> Vector:
        """``ω̄_i = ω_i / n_i`` with ``ω̄_0 = 0``."""
        if i == 0:
            return linalg.zero(self.rank)
        return linalg.scale(
            Fraction(1, self.marks[i - 1]), self.fundamental_coweights[i - 1]
        )

    def mark(self, i: int) -> int:
        """``n_i`` with ``n_0 = 1``."""
        return 1 if i == 0 else self.marks[i - 1]

    def norm_sq(self, x: Sequence[Scalar]) -> Fraction:
        return linalg.bilinear(self.gram, x, x)


# ---------------------------------------------------------------------------
# Helpers on coefficient tuples
# ---------------------------------------------------------------------------


def negate(root: Sequence[int]) -> Root:
    return tuple(-c for c in root)


def add_roots(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub_roots(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def is_positive(root: Sequence[int]) -> bool:
    return any(c > 0 for c in root) and all(c >= 0 for c in root)


def height(root: Sequence[int]) -> int:
    return sum(root)


def unit(rank: int, i: int) -> Root:
    """Coefficient tuple of ``α_i`` (1-based)."""
    return tuple(1 if j == i - 1 else 0 for j in range(rank))


# ---------------------------------------------------------------------------
# Dynkin data
# ---------------------------------------------------------------------------


def _dynkin(rtype: RootSystemType) -> Tuple[List[Fraction], List[Tuple[int, int, int]]]:
    """Squared lengths of the simple roots and bonds ``(i, j, multiplicity)``."""
    l = rtype.rank
    fam = rtype.family
    long_, short = Fraction(2), Fraction(1)
    chain = [(i, i + 1, 1) for i in range(l - 1)]
    if fam is Family.A:
        return [long_] * l, chain
    if fam is Family.B:
        return [long_] * (l - 1) + [short], chain[:-1] + [(l - 2, l - 1, 2)]
    if fam is Family.C:
        return [short] * (l - 1) + [long_], chain[:-1] + [(l - 2, l - 1, 2)]
    if fam is Family.D:
        return [long_] * l, chain[:-1] + [(l - 3, l - 1, 1)]
    if fam is Family.E:
        edges = [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, l - 1)]
        return [long_] * l, edges
    if fam is Family.F:
        return [long_, long_, short, short], [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    return [Fraction(2, 3), long_], [(0, 1, 3)]


def _gram(rtype: RootSystemType) -> Matrix:
    lengths, bonds = _dynkin(rtype)
    l = rtype.rank
    g = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        g[i][i] = lengths[i]
    for i, j, mult in bonds:
        value = -mult * min(lengths[i], lengths[j]) / 2
        g[i][j] = g[j][i] = value
    return tuple(tuple(row) for row in g)


def _cartan(gram: Matrix) -> Tuple[Tuple[int, ...], ...]:
    """``cartan[i][j] = <α_i, α_j^∨> = 2(α_i, α_j)/(α_j, α_j)``."""
    l = len(gram)
    rows = []
    for i in range(l):
        row = []
        for j in range(l):
            value = 2 * gram[i][j] / gram[j][j]
            assert value.denominator == 1
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)


def _positive_roots(cartan: Tuple[Tuple[int, ...], ...]) -> List[Root]:
    """Grow Δ⁺ height by height using root strings through simple roots."""
    l = len(cartan)
    simple = [unit(l, i + 1) for i in range(l)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(l):
                if beta == simple[i]:
                    continue
                # p = how far the α_i-string extends below beta
                p = 0
                probe = sub_roots(beta, simple[i])
                while probe in found:
                    p += 1
                    probe = sub_roots(probe, simple[i])
                pairing = sum(beta[j] * cartan[j][i] for j in range(l))
                if p - pairing > 0:
                    nxt.add(add_roots(beta, simple[i]))
        layer = sorted(nxt)
        found.update(layer)
        ordered.extend(layer)
    return ordered


@lru_cache(maxsize=None)
def build(rtype: RootSystemType) -> RootSystem:
    """Construct the root system of type *rtype* (cached per type)."""
    gram = _gram(rtype)
    cartan = _cartan(gram)
    pos = _positive_roots(cartan)
    # within a height, α_1 before α_2: bit i-1 of a root set is α_i
    pos.sort(key=lambda r: (height(r), tuple(-c for c in r)))
    theta = pos[-1]
    if sum(1 for r in pos if height(r) == height(theta)) != 1:
        raise AssertionError(f"highest root of {rtype} is not unique")
    inv = linalg.inverse(gram)
    coweights = tuple(
        tuple(inv[i][j] for i in range(rtype.rank)) for j in range(rtype.rank)
    )
    all_roots = frozenset(pos) | frozenset(negate(r) for r in pos)
    logger.debug("built %s with %d positive roots", rtype, len(pos))
    return RootSystem(
        rtype=rtype,
        cartan=cartan,
        gram=gram,
        positive_roots=tuple(pos),
        highest_root=theta,
        marks=theta,
        fundamental_coweights=coweights,
        index={r: k for k, r in enumerate(pos)},
        _all=all_roots,
    )


def build_named(family: str, rank: int) -> RootSystem:
    """Shorthand for ``build(RootSystemType(family, rank))``."""
    try:
        fam = Family(family.upper())
    except ValueError as exc:
        raise InvalidRank(f"unknown family: {family!r}") from exc
    return build(RootSystemType(fam, rank))


# ---------------------------------------------------------------------------
# Root operations
# ---------------------------------------------------------------------------


def _require_root(rs: RootSystem, a: Sequence[int]) -> Root:
    root = tuple(a)
    if not rs.is_root(root):
        raise NotARoot(f"{root} is not a root of {rs.rtype}")
    return root


def sum_root(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> Optional[Root]:
    """Return ``a + b`` when it is a root, else ``None``."""
    total = add_roots(_require_root(rs, a), _require_root(rs, b))
    return total if rs.is_root(total) else None


def pairing(rs: RootSystem, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
    return linalg.bilinear(rs.gram, x, y)


def coroot(rs: RootSystem, a: Sequence[int]) -> Vector:
    root = _require_root(rs, a)
    return linalg.scale(Fraction(2) / rs.norm_sq(root), root)


def reflect(rs: RootSystem, a: Sequence[int], x: Sequence[Scalar]) -> Vector:
    """``s_a(x) = x - 2(a, x)/(a, a) a``."""
    root = _require_root(rs, a)
    c = 2 * pairing(rs, root, x) / rs.norm_sq(root)
    return linalg.sub(x, linalg.scale(c, root))


def reflection_matrix(rs: RootSystem, a: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Integer matrix of ``s_a`` on simple-root coordinates.

    Column ``j`` holds the image of ``α_j``.
    """
    root = _require_root(rs, a)
    cols = []
    for j in range(rs.rank):
        image = reflect(rs, root, unit(rs.rank, j + 1))
        cols.append(tuple(int(c) for c in image))
    return tuple(tuple(col[i] for col in cols) for i in range(rs.rank))


def dynkin_edges(rs: RootSystem) -> List[Tuple[int, int]]:
    """1-based adjacent pairs of the Dynkin diagram (from the Cartan matrix)."""
    return [
        (i + 1, j + 1)
        for i in range(rs.rank)
        for j in range(i + 1, rs.rank)
        if rs.cartan[i][j] != 0
    ]
