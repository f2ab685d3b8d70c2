"""Brute-force enumeration of ad-nilpotent ideals of parabolic subalgebras.

An ideal of ``p_I`` contained in the nilradical is encoded by the set ``Φ`` of
its roots: ``Φ ⊆ Δ⁺ ∖ Δ_I`` and ``α + β ∈ Φ`` whenever ``α ∈ Φ``,
``β ∈ Δ⁺ ∪ Δ_I`` and ``α + β ∈ Δ⁺``.  Sets of positive roots are int bitsets
indexed by :attr:`RootSystem.index`.

Such a ``Φ`` is exactly an up-set of the quotient of ``Δ⁺ ∖ Δ_I`` by the
``∼_I`` equivalence, so :func:`enumerate_ideals` walks antichains of that
quotient poset instead of raw subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Sequence,
    Set,
    Tuple,
    Union,
)

import networkx as nx

from .errors import IndexOutOfRange, NotARoot, SeedIntersectsLevi
from .logging_utils import get_logger, log_duration
from .rootsys import Root, RootSystem, add_roots, negate, sub_roots

logger = get_logger(__name__)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSelector:
    """The subset ``I ⊆ Π`` as 1-based simple-root indices."""

    included: FrozenSet[int]
    rank: int

    def __post_init__(self) -> None:
        bad = sorted(i for i in self.included if not 1 <= i <= self.rank)
        if bad:
            raise IndexOutOfRange(f"simple-root indices {bad} outside 1..{self.rank}")

    @classmethod
    def of(cls, rs: RootSystem, indices: Iterable[int] = ()) -> "ParabolicSelector":
        return cls(frozenset(indices), rs.rank)

    @classmethod
    def parse(cls, text: str, rank: int) -> "ParabolicSelector":
        """Parse ``"1,3"``; the empty string selects the Borel case."""
        parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
        try:
            indices = frozenset(int(p) for p in parts)
        except ValueError as exc:
            raise IndexOutOfRange(f"cannot parse parabolic subset {text!r}") from exc
        return cls(indices, rank)

    @property
    def mask(self) -> int:
        return sum(1 << (i - 1) for i in self.included)

    def __contains__(self, i: object) -> bool:
        return i in self.included

    def __len__(self) -> int:
        return len(self.included)

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.included))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.sorted()) + "}"


Parabolic = Union[ParabolicSelector, Iterable[int]]


def as_selector(rs: RootSystem, I: Parabolic) -> ParabolicSelector:
    if isinstance(I, ParabolicSelector):
        if I.rank != rs.rank:
            raise IndexOutOfRange(f"selector of rank {I.rank} used with {rs.rtype}")
        return I
    return ParabolicSelector.of(rs, I)


@dataclass(frozen=True)
class Ideal:
    """A set ``Φ`` of positive roots stored as a bitset."""

    members: int

    def __len__(self) -> int:
        return popcount(self.members)

    def indices(self) -> List[int]:
        return list(iter_bits(self.members))

    def roots(self, rs: RootSystem) -> Tuple[Root, ...]:
        return tuple(rs.positive_roots[k] for k in iter_bits(self.members))

    def contains(self, rs: RootSystem, root: Root) -> bool:
        return bool(self.members >> rs.root_index(root) & 1)

    @classmethod
    def from_roots(cls, rs: RootSystem, roots: Iterable[Root]) -> "Ideal":
        return cls(_mask_of(rs, roots))


@dataclass(frozen=True)
class SimClasses:
    """Partition of ``Δ⁺ ∖ Δ_I`` into ``∼_I`` classes, ordered by lowest root."""

    classes: Tuple[FrozenSet[Root], ...]
    masks: Tuple[int, ...]
    class_of: Dict[Root, int]

    def __len__(self) -> int:
        return len(self.classes)


def _mask_of(rs: RootSystem, roots: Iterable[Root]) -> int:
    mask = 0
    for r in roots:
        mask |= 1 << rs.root_index(tuple(r))
    return mask


# ---------------------------------------------------------------------------
# Cached tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Context:
    levi: int  # Δ_I ∩ Δ⁺
    succ: Tuple[int, ...]  # per root: bits of α+β, β ∈ Δ⁺ ∪ Δ_I


@lru_cache(maxsize=512)
def _context(rs: RootSystem, mask: int) -> _Context:
    steps: List[Root] = list(rs.positive_roots)
    levi = 0
    for k, r in enumerate(rs.positive_roots):
        if _supported_on(r, mask):
            levi |= 1 << k
            steps.append(negate(r))
    succ = []
    for alpha in rs.positive_roots:
        bits = 0
        for beta in steps:
            total = add_roots(alpha, beta)
            k = rs.index.get(total)
            if k is not None:
                bits |= 1 << k
        succ.append(bits)
    return _Context(levi=levi, succ=tuple(succ))


@lru_cache(maxsize=32)
def _pair_sums(rs: RootSystem) -> Tuple[int, ...]:
    """Per positive root ``α``: bits of ``β ∈ Δ⁺`` with ``α + β ∈ Δ⁺``."""
    rows = []
    for a in rs.positive_roots:
        bits = 0
        for k, b in enumerate(rs.positive_roots):
            if add_roots(a, b) in rs.index:
                bits |= 1 << k
        rows.append(bits)
    return tuple(rows)


@lru_cache(maxsize=32)
def _below(rs: RootSystem) -> Tuple[int, ...]:
    """Per positive root ``β``: bits of ``γ ∈ Δ⁺`` with ``β - γ ∈ Δ⁺``."""
    rows = []
    for b in rs.positive_roots:
        bits = 0
        for k, g in enumerate(rs.positive_roots):
            if sub_roots(b, g) in rs.index:
                bits |= 1 << k
        rows.append(bits)
    return tuple(rows)


def _supported_on(root: Sequence[int], mask: int) -> bool:
    return all(c == 0 or mask >> i & 1 for i, c in enumerate(root))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def delta_I(rs: RootSystem, I: Parabolic) -> FrozenSet[Root]:
    """All roots (both signs) supported on ``I``."""
    mask = as_selector(rs, I).mask
    return frozenset(r for r in rs.roots if _supported_on(r, mask))


def levi_mask(rs: RootSystem, I: Parabolic) -> int:
    """Bitset of ``Δ_I ∩ Δ⁺``."""
    return _context(rs, as_selector(rs, I).mask).levi


def nilradical_mask(rs: RootSystem, I: Parabolic) -> int:
    """Bitset of ``Δ⁺ ∖ Δ_I``."""
    return ((1 << len(rs.positive_roots)) - 1) & ~levi_mask(rs, I)


def _close_mask(ctx: _Context, mask: int) -> int:
    todo = mask
    while todo:
        new = 0
        for k in iter_bits(todo):
            new |= ctx.succ[k]
        todo = new & ~mask
        mask |= new
    return mask


def close(rs: RootSystem, I: Parabolic, seed: Iterable[Root]) -> Ideal:
    """Smallest ``Φ ∈ F_I`` containing *seed*."""
    sel = as_selector(rs, I)
    ctx = _context(rs, sel.mask)
    mask = 0
    for r in seed:
        root = tuple(r)
        if root not in rs.index:
            raise NotARoot(f"{root} is not a positive root of {rs.rtype}")
        mask |= 1 << rs.index[root]
    if mask & ctx.levi:
        raise SeedIntersectsLevi(f"seed meets Δ_I for I={sel}")
    return Ideal(_close_mask(ctx, mask))


def is_ideal(rs: RootSystem, I: Parabolic, ideal: Ideal) -> bool:
    """Check both defining conditions of ``F_I`` directly."""
    ctx = _context(rs, as_selector(rs, I).mask)
    if ideal.members & ctx.levi:
        return False
    return all(ctx.succ[k] & ~ideal.members == 0 for k in iter_bits(ideal.members))


def sim_classes(rs: RootSystem, I: Parabolic) -> SimClasses:
    """Connected components of ``β → β+η`` (``η ∈ I``) on ``Δ⁺ ∖ Δ_I``."""
    sel = as_selector(rs, I)
    levi = levi_mask(rs, sel)
    graph = nx.Graph()
    nodes = [k for k in range(len(rs.positive_roots)) if not levi >> k & 1]
    graph.add_nodes_from(nodes)
    simple = [rs.simple_root(i) for i in sel.sorted()]
    for k in nodes:
        beta = rs.positive_roots[k]
        for eta in simple:
            j = rs.index.get(add_roots(beta, eta))
            if j is not None:
                graph.add_edge(k, j)
    comps = sorted(
        (sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0]
    )
    classes = tuple(frozenset(rs.positive_roots[k] for k in c) for c in comps)
    masks = tuple(sum(1 << k for k in c) for c in comps)
    class_of = {root: n for n, cls in enumerate(classes) for root in cls}
    return SimClasses(classes=classes, masks=masks, class_of=class_of)


def _class_up_masks(
    rs: RootSystem, sel: ParabolicSelector, sim: SimClasses
) -> List[int]:
    """For each class, the bitset of classes lying weakly above it."""
    ctx = _context(rs, sel.mask)
    ups = []
    for mask in sim.masks:
        closed = _close_mask(ctx, mask)
        ups.append(sum(1 << n for n, m in enumerate(sim.masks) if m & closed))
    return ups


def class_poset(rs: RootSystem, I: Parabolic) -> "nx.DiGraph":
    """Hasse diagram of the quotient poset on ``∼_I`` classes (edges point up)."""
    sel = as_selector(rs, I)
    sim = sim_classes(rs, sel)
    ups = _class_up_masks(rs, sel, sim)
    order = nx.DiGraph()
    order.add_nodes_from(range(len(sim)))
    for c, up in enumerate(ups):
        for d in iter_bits(up):
            if d != c:
                order.add_edge(c, d)
    return nx.transitive_reduction(order)


def enumerate_ideals(rs: RootSystem, I: Parabolic = ()) -> List[Ideal]:
    """All ``Φ ∈ F_I``, sorted by (cardinality, bitset)."""
    sel = as_selector(rs, I)
    sim = sim_classes(rs, sel)
    ups = _class_up_masks(rs, sel, sim)
    # root bitsets of each class up-set
    up_roots = [
        _union(sim.masks[d] for d in iter_bits(up)) for up in ups
    ]
    n = len(sim)
    found: Set[int] = set()

    def walk(start: int, chosen: int, covered_classes: int, roots: int) -> None:
        found.add(roots)
        for c in range(start, n):
            if covered_classes >> c & 1:
                continue  # c lies above an earlier generator
            if ups[c] & chosen:
                continue  # c lies below an earlier generator
            walk(c + 1, chosen | 1 << c, covered_classes | ups[c], roots | up_roots[c])

    with log_duration(logger, f"enumerate_ideals({rs.rtype}, I={sel})"):
        walk(0, 0, 0, 0)
    ordered = sorted(found, key=lambda m: (popcount(m), m))
    logger.debug("%s I=%s: %d ideals over %d classes", rs.rtype, sel, len(ordered), n)
    return [Ideal(m) for m in ordered]


def _union(masks: Iterable[int]) -> int:
    total = 0
    for m in masks:
        total |= m
    return total


def is_abelian(rs: RootSystem, ideal: Ideal) -> bool:
    """No two (not necessarily distinct) members of ``Φ`` sum to a root."""
    sums = _pair_sums(rs)
    members = ideal.members
    return all(sums[k] & members == 0 for k in iter_bits(members))


def abelian_ideals(rs: RootSystem, I: Parabolic = ()) -> List[Ideal]:
    return [phi for phi in enumerate_ideals(rs, I) if is_abelian(rs, phi)]


def minimal_roots(rs: RootSystem, I: Parabolic, ideal: Ideal) -> FrozenSet[Root]:
    """``Φ_min``: members ``β`` with ``β - α ∉ Φ`` for every ``α ∈ Δ⁺``."""
    as_selector(rs, I)
    below = _below(rs)
    members = ideal.members
    return frozenset(
        rs.positive_roots[k] for k in iter_bits(members) if below[k] & members == 0
    )


def antichain_size(rs: RootSystem, I: Parabolic, ideal: Ideal) -> int:
    return len(minimal_roots(rs, I, ideal))
