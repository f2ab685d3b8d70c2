"""The affine Weyl group ``W ⋉ Q^∨`` acting on V and on affine roots.

An affine root ``β + kδ`` is the pair ``(β, k)``; an element ``w = v t_τ`` is the
pair ``(v, τ)`` acting on V by ``x ↦ v(x + τ)`` and on affine roots by
``(β, k) ↦ (v(β), k - (β, τ))``.  ``δ`` itself is never materialised.

Ideals ``Φ ∈ F_∅`` correspond to Borel-compatible elements ``w_Φ`` through
their inversion sets: ``N(w_Φ) = L_Φ``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .errors import IndexOutOfRange, NotAnInversionSet, NotBorelCompatible
from .ideals import Ideal, Parabolic, as_selector, iter_bits, _pair_sums
from .linalg import Vector
from .logging_utils import get_logger
from .rootsys import (
    Root,
    RootSystem,
    coroot,
    is_positive,
    negate,
    pairing,
    reflection_matrix,
)

logger = get_logger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class AffineRoot:
    """``β + kδ`` with ``β ∈ Δ``, stored as ``(β, k)``."""

    finite: Root
    level: int

    @property
    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and is_positive(self.finite))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(negate(self.finite), -self.level)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.finite))};{self.level})"


InversionSet = FrozenSet[AffineRoot]


@dataclass(frozen=True)
class AffineWeylElement:
    """``(v, τ)`` with ``v`` stored together with its inverse matrix."""

    linear: IntMatrix
    linear_inv: IntMatrix
    trans: Vector

    def act(self, x: Sequence[linalg.Scalar]) -> Vector:
        """Image of a point of V under ``x ↦ v(x + τ)``."""
        return linalg.mat_vec(self.linear, linalg.add(x, self.trans))

    def apply_linear(self, root: Sequence[int]) -> Root:
        return _int_vec(linalg.mat_vec(self.linear, root))


def _int_vec(x: Sequence[Fraction]) -> Tuple[int, ...]:
    out = []
    for c in x:
        if Fraction(c).denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        out.append(int(c))
    return tuple(out)


def _int_mat(m: Sequence[Sequence[Fraction]]) -> IntMatrix:
    return tuple(_int_vec(row) for row in m)


def identity(rank: int) -> AffineWeylElement:
    eye = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    return AffineWeylElement(eye, eye, linalg.zero(rank))


def compose(w1: AffineWeylElement, w2: AffineWeylElement) -> AffineWeylElement:
    """``(v1, τ1)(v2, τ2) = (v1 v2, τ2 + v2⁻¹(τ1))``."""
    return AffineWeylElement(
        linear=_int_mat(linalg.mat_mul(w1.linear, w2.linear)),
        linear_inv=_int_mat(linalg.mat_mul(w2.linear_inv, w1.linear_inv)),
        trans=linalg.add(w2.trans, linalg.mat_vec(w2.linear_inv, w1.trans)),
    )


def inverse(w: AffineWeylElement) -> AffineWeylElement:
    """``(v, τ)⁻¹ = (v⁻¹, -v(τ))``."""
    return AffineWeylElement(
        linear=w.linear_inv,
        linear_inv=w.linear,
        trans=linalg.scale(-1, linalg.mat_vec(w.linear, w.trans)),
    )


def apply(rs: RootSystem, w: AffineWeylElement, a: AffineRoot) -> AffineRoot:
    """``(β, k) ↦ (v(β), k - (β, τ))``."""
    shift = pairing(rs, a.finite, w.trans)
    if shift.denominator != 1:
        raise ValueError(f"translation {w.trans} is not in the coroot lattice")
    return AffineRoot(w.apply_linear(a.finite), a.level - int(shift))


# ---------------------------------------------------------------------------
# Simple affine roots and reflections
# ---------------------------------------------------------------------------


def simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    """``α_0 = (-θ, 1)`` and ``α_i = (α_i, 0)``."""
    if not 0 <= i <= rs.rank:
        raise IndexOutOfRange(f"affine simple index {i} outside 0..{rs.rank}")
    if i == 0:
        return AffineRoot(negate(rs.highest_root), 1)
    return AffineRoot(rs.simple_root(i), 0)


def simple_affine_roots(rs: RootSystem) -> Tuple[AffineRoot, ...]:
    return tuple(simple_affine_root(rs, i) for i in range(rs.rank + 1))


def simple_affine_index(rs: RootSystem, a: AffineRoot) -> Optional[int]:
    """Index ``i`` with ``a = α_i``, or ``None``."""
    for i, s in enumerate(simple_affine_roots(rs)):
        if s == a:
            return i
    return None


@lru_cache(maxsize=64)
def _reflections(rs: RootSystem) -> Tuple[AffineWeylElement, ...]:
    zero = linalg.zero(rs.rank)
    out = []
    theta_m = reflection_matrix(rs, rs.highest_root)
    shift = linalg.scale(-1, coroot(rs, rs.highest_root))
    out.append(AffineWeylElement(theta_m, theta_m, shift))
    for i in range(1, rs.rank + 1):
        m = reflection_matrix(rs, rs.simple_root(i))
        out.append(AffineWeylElement(m, m, zero))
    return tuple(out)


def simple_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    """``s_i`` for ``1 <= i <= l``; ``s_0`` is the reflection in ``H_{θ,1}``."""
    if not 0 <= i <= rs.rank:
        raise IndexOutOfRange(f"affine simple index {i} outside 0..{rs.rank}")
    return _reflections(rs)[i]


def from_word(rs: RootSystem, word: Iterable[int]) -> AffineWeylElement:
    """``s_{i_1} s_{i_2} ⋯ s_{i_k}``."""
    w = identity(rs.rank)
    for i in word:
        w = compose(w, simple_reflection(rs, i))
    return w


# ---------------------------------------------------------------------------
# Inversion sets
# ---------------------------------------------------------------------------


def reduced_word(rs: RootSystem, w: AffineWeylElement) -> List[int]:
    """Greedy left descent, smallest simple index first."""
    word: List[int] = []
    cur = w
    simples = simple_affine_roots(rs)
    while True:
        inv = inverse(cur)
        for i, alpha in enumerate(simples):
            if not apply(rs, inv, alpha).is_positive:
                word.append(i)
                cur = compose(simple_reflection(rs, i), cur)
                break
        else:
            return word


def length(rs: RootSystem, w: AffineWeylElement) -> int:
    return len(reduced_word(rs, w))


def inversions(rs: RootSystem, w: AffineWeylElement) -> InversionSet:
    """``N(w) = {s_{β_1} ⋯ s_{β_{p-1}}(β_p)}`` along a reduced word."""
    prefix = identity(rs.rank)
    out = set()
    for i in reduced_word(rs, w):
        out.add(apply(rs, prefix, simple_affine_root(rs, i)))
        prefix = compose(prefix, simple_reflection(rs, i))
    return frozenset(out)


def L_phi(rs: RootSystem, I: Parabolic, ideal: Ideal) -> InversionSet:
    """``L_Φ = ⋃_k (-Φ^k + kδ)`` with ``Φ^k = (Φ^{k-1} + Φ) ∩ Δ``."""
    as_selector(rs, I)
    sums = _pair_sums(rs)
    pos = rs.positive_roots
    members = ideal.members
    layer = members
    k = 1
    out = set()
    while layer:
        out.update(AffineRoot(negate(pos[j]), k) for j in iter_bits(layer))
        nxt = 0
        for a in iter_bits(layer):
            for b in iter_bits(sums[a] & members):
                nxt |= 1 << rs.index[tuple(x + y for x, y in zip(pos[a], pos[b]))]
        layer = nxt
        k += 1
    return frozenset(out)


def element_from_inversions(
    rs: RootSystem, L: Iterable[AffineRoot]
) -> AffineWeylElement:
    """The unique ``w`` with ``N(w) = L``, peeling one simple root at a time."""
    remaining = set(L)
    budget = len(remaining)
    simples = simple_affine_roots(rs)
    word: List[int] = []
    while remaining:
        if len(word) >= budget:
            raise NotAnInversionSet("peeling did not terminate within |L| steps")
        pick = next((i for i, a in enumerate(simples) if a in remaining), None)
        if pick is None:
            raise NotAnInversionSet("no simple affine root in a nonempty set")
        remaining.discard(simples[pick])
        s = simple_reflection(rs, pick)
        moved = {apply(rs, s, b) for b in remaining}
        if not all(b.is_positive for b in moved):
            raise NotAnInversionSet("reflection produced a negative affine root")
        remaining = moved
        word.append(pick)
    return from_word(rs, word)


def w_phi(rs: RootSystem, I: Parabolic, ideal: Ideal) -> AffineWeylElement:
    """``w_Φ`` with ``N(w_Φ) = L_Φ``."""
    return element_from_inversions(rs, L_phi(rs, I, ideal))


def phi_of(rs: RootSystem, w: AffineWeylElement) -> FrozenSet[Root]:
    """``Φ_w = {α ; -α + δ ∈ N(w)}``."""
    return frozenset(negate(a.finite) for a in inversions(rs, w) if a.level == 1)


# ---------------------------------------------------------------------------
# Compatibility criteria
# ---------------------------------------------------------------------------


def is_borel_compatible(rs: RootSystem, w: AffineWeylElement) -> bool:
    inv = inverse(w)
    for i in range(1, rs.rank + 1):
        if not apply(rs, inv, simple_affine_root(rs, i)).is_positive:
            return False
    for alpha in simple_affine_roots(rs):
        image = apply(rs, w, alpha)
        if image.is_positive:
            continue
        if image.level != -1 or not is_positive(image.finite):
            return False
    return True


def _require_borel(rs: RootSystem, w: AffineWeylElement) -> None:
    if not is_borel_compatible(rs, w):
        raise NotBorelCompatible("element is not Borel-compatible")


def I_w(rs: RootSystem, w: AffineWeylElement) -> FrozenSet[int]:
    """1-based indices of ``α ∈ Π`` with ``w⁻¹(α) ∈ Π̂``."""
    _require_borel(rs, w)
    inv = inverse(w)
    simples = set(simple_affine_roots(rs))
    return frozenset(
        i
        for i in range(1, rs.rank + 1)
        if apply(rs, inv, simple_affine_root(rs, i)) in simples
    )


def is_I_compatible(rs: RootSystem, w: AffineWeylElement, I: Parabolic) -> bool:
    """``w⁻¹(α) ∈ Π̂`` for every ``α ∈ I``."""
    sel = as_selector(rs, I)
    return sel.included <= I_w(rs, w)


def preimage_indices(
    rs: RootSystem, w: AffineWeylElement, I: Parabolic
) -> FrozenSet[int]:
    """``J = w⁻¹(I)`` as indices in ``0..l``; requires I-compatibility."""
    sel = as_selector(rs, I)
    inv = inverse(w)
    out = set()
    for i in sel.included:
        j = simple_affine_index(rs, apply(rs, inv, simple_affine_root(rs, i)))
        if j is None:
            raise NotBorelCompatible(f"w⁻¹(α_{i}) is not a simple affine root")
        out.add(j)
    return frozenset(out)


def levi_stable(rs: RootSystem, w: AffineWeylElement, i: int) -> bool:
    """``s_α(Φ_w) = Φ_w`` for ``α = α_i``."""
    phi = phi_of(rs, w)
    m = reflection_matrix(rs, rs.simple_root(i))
    return frozenset(_int_vec(linalg.mat_vec(m, r)) for r in phi) == phi


def extends_by(rs: RootSystem, w: AffineWeylElement, i: int) -> bool:
    """``N(s_α w) = N(w) ∪ {α}`` for ``α = α_i``."""
    left = inversions(rs, compose(simple_reflection(rs, i), w))
    return left == inversions(rs, w) | {simple_affine_root(rs, i)}


# ---------------------------------------------------------------------------
# The sets D, D̃ and D_τ
# ---------------------------------------------------------------------------


def d_tau(rs: RootSystem, tau: Sequence[linalg.Scalar]) -> FrozenSet[Root]:
    out = {a for a in rs.simple_roots if pairing(rs, a, tau) == 0}
    if pairing(rs, rs.highest_root, tau) == -1:
        out.add(negate(rs.highest_root))
    return frozenset(out)


def in_coroot_lattice(rs: RootSystem, tau: Sequence[linalg.Scalar]) -> bool:
    """``τ = Σ b_i α_i^∨`` with integer ``b_i``."""
    return all(
        (Fraction(t) * rs.gram[i][i] / 2).denominator == 1 for i, t in enumerate(tau)
    )


def in_D(rs: RootSystem, tau: Sequence[linalg.Scalar]) -> bool:
    if not in_coroot_lattice(rs, tau):
        return False
    if any(pairing(rs, a, tau) > 1 for a in rs.simple_roots):
        return False
    return pairing(rs, rs.highest_root, tau) >= -2


def in_closed_chamber(rs: RootSystem, x: Sequence[linalg.Scalar]) -> bool:
    return all(pairing(rs, a, x) >= 0 for a in rs.simple_roots)


def in_D_tilde(rs: RootSystem, tau: Sequence[linalg.Scalar], v: IntMatrix) -> bool:
    """``τ ∈ D`` and ``v t_τ(A) ⊂ C``, tested on the closed alcove's vertices."""
    if not in_D(rs, tau):
        return False
    for i in range(rs.rank + 1):
        image = linalg.mat_vec(v, linalg.add(rs.alcove_vertex(i), tau))
        if not in_closed_chamber(rs, image):
            return False
    return True


@lru_cache(maxsize=16)
def weyl_group(rs: RootSystem) -> Tuple[Tuple[IntMatrix, IntMatrix], ...]:
    """All ``(v, v⁻¹)`` of the finite Weyl group, breadth first from the identity."""
    gens = [reflection_matrix(rs, a) for a in rs.simple_roots]
    eye = identity(rs.rank).linear
    seen: Dict[IntMatrix, IntMatrix] = {eye: eye}
    queue = deque([eye])
    while queue:
        v = queue.popleft()
        v_inv = seen[v]
        for s in gens:
            u = _int_mat(linalg.mat_mul(s, v))
            if u not in seen:
                seen[u] = _int_mat(linalg.mat_mul(v_inv, s))
                queue.append(u)
    logger.debug("Weyl group of %s has order %d", rs.rtype, len(seen))
    return tuple(seen.items())


def enumerate_D(rs: RootSystem) -> List[Vector]:
    """Every ``τ ∈ D``; the defining inequalities bound ``(τ, α_j)``."""
    marks = rs.marks
    total = sum(marks)
    ranges = []
    for n in marks:
        low = math.ceil(Fraction(-2 - (total - n), n))
        ranges.append(range(low, 2))
    out = []
    for values in itertools.product(*ranges):
        if sum(n * c for n, c in zip(marks, values)) < -2:
            continue
        tau: Vector = linalg.zero(rs.rank)
        for c, omega in zip(values, rs.fundamental_coweights):
            tau = linalg.add(tau, linalg.scale(c, omega))
        if in_coroot_lattice(rs, tau):
            out.append(tau)
    return out


def enumerate_D_tilde(rs: RootSystem) -> List[AffineWeylElement]:
    """``v t_τ`` for every ``(τ, v) ∈ D̃``."""
    out = []
    for tau in enumerate_D(rs):
        for v, v_inv in weyl_group(rs):
            if in_D_tilde(rs, tau, v):
                out.append(AffineWeylElement(v, v_inv, tau))
    return out


def element(
    v: IntMatrix, v_inv: IntMatrix, tau: Sequence[linalg.Scalar]
) -> AffineWeylElement:
    return AffineWeylElement(v, v_inv, linalg.vec(tau))
