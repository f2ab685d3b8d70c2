"""Exact geometry of the fundamental alcove and its faces.

``Ā = Conv(ω̄_0, …, ω̄_l)`` with ``ω̄_0 = 0`` and ``ω̄_i = ω_i / n_i``.  For
``J ⊆ Π̂`` (indices ``0..l``) the face ``F_J = Ā ∩ H_J`` is the convex hull of
the vertices ``ω̄_j`` with ``j ∉ J``; ``F'_J = 2F_J``.  Volumes are only ever
handled squared, as Gram determinants, so everything stays rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from . import linalg
from .affweyl import (
    AffineWeylElement,
    preimage_indices,
    w_phi,
)
from .errors import DegenerateFace, EmptySubspace, IndexOutOfRange, VerificationError
from .ideals import Ideal, Parabolic, abelian_ideals, as_selector
from .linalg import Vector
from .logging_utils import get_logger
from .rootsys import Root, RootSystem, negate, pairing

logger = get_logger(__name__)


@dataclass(frozen=True)
class AlcoveImage:
    """Images ``v(ω̄_i + τ)`` of the alcove vertices, in index order ``0..l``."""

    vertices: Tuple[Vector, ...]


@dataclass(frozen=True)
class FaceSpec:
    """``F_J`` (scale 1) or ``F'_J`` (scale 2)."""

    J: FrozenSet[int]
    scale: int = 1

    def __post_init__(self) -> None:
        if self.scale not in (1, 2):
            raise ValueError("scale must be 1 or 2")


@dataclass(frozen=True)
class AbelianFace:
    """One element of ``Ab_I`` together with its face in ``F'_I``."""

    ideal: Ideal
    element: AffineWeylElement
    preimage: FrozenSet[int]
    vertices: FrozenSet[Vector]


def _check_affine_indices(rs: RootSystem, J: Iterable[int]) -> FrozenSet[int]:
    out = frozenset(J)
    bad = sorted(j for j in out if not 0 <= j <= rs.rank)
    if bad:
        raise IndexOutOfRange(f"affine simple indices {bad} outside 0..{rs.rank}")
    return out


def affine_simple_vector(rs: RootSystem, i: int) -> Root:
    """Finite part of ``α_i``: ``-θ`` for ``i = 0``."""
    return negate(rs.highest_root) if i == 0 else rs.simple_root(i)


def n_J(rs: RootSystem, J: Iterable[int]) -> int:
    """``∏ n_j`` over ``j ∈ J`` with ``n_0 = 1``."""
    return math.prod(rs.mark(j) for j in J)


# ---------------------------------------------------------------------------
# Images of the alcove
# ---------------------------------------------------------------------------


def alcove_image(rs: RootSystem, w: AffineWeylElement) -> AlcoveImage:
    return AlcoveImage(tuple(w.act(rs.alcove_vertex(i)) for i in range(rs.rank + 1)))


def in_2A(rs: RootSystem, w: AffineWeylElement) -> bool:
    """``w̄(A) ⊂ 2A``, tested on the closed simplex's vertices."""
    for p in alcove_image(rs, w).vertices:
        if any(pairing(rs, a, p) < 0 for a in rs.simple_roots):
            return False
        if pairing(rs, rs.highest_root, p) > 2:
            return False
    return True


def _on_hyperplane(rs: RootSystem, i: int, p: Sequence[linalg.Scalar]) -> bool:
    if i == 0:
        return pairing(rs, rs.highest_root, p) == 1
    return pairing(rs, rs.simple_root(i), p) == 0


def face_on_hyperplane(rs: RootSystem, w: AffineWeylElement, i: int) -> bool:
    """Whether ``w̄(Ā) ∩ H_{α_i}`` is a facet of ``w̄(Ā)``.

    Any ``l`` vertices of the image simplex span one of its facets, so the
    test is that exactly ``l`` vertices land on the hyperplane.
    """
    _check_affine_indices(rs, (i,))
    hits = sum(1 for p in alcove_image(rs, w).vertices if _on_hyperplane(rs, i, p))
    return hits == rs.rank


# ---------------------------------------------------------------------------
# Volumes and distances
# ---------------------------------------------------------------------------


def face_vertices(rs: RootSystem, face: FaceSpec) -> List[Vector]:
    J = _check_affine_indices(rs, face.J)
    return [
        linalg.scale(face.scale, rs.alcove_vertex(j))
        for j in range(rs.rank + 1)
        if j not in J
    ]


def simplex_volume_sq(rs: RootSystem, vertices: Sequence[Vector]) -> Fraction:
    """Squared k-volume of a k-simplex; a point has volume 1."""
    if not vertices:
        raise DegenerateFace("face has no vertices")
    k = len(vertices) - 1
    if k == 0:
        return Fraction(1)
    edges = [linalg.sub(v, vertices[0]) for v in vertices[1:]]
    det = linalg.det(linalg.gram_of(rs.gram, edges))
    if det == 0:
        raise DegenerateFace("face vertices are affinely dependent")
    return det / math.factorial(k) ** 2


def face_volume_sq(rs: RootSystem, face: FaceSpec) -> Fraction:
    return simplex_volume_sq(rs, face_vertices(rs, face))


def distance_sq(
    rs: RootSystem, point: Sequence[linalg.Scalar], J: Iterable[int]
) -> Fraction:
    """Squared distance from *point* to ``H_J`` via the normal equations."""
    indices = sorted(_check_affine_indices(rs, J))
    if not indices:
        return Fraction(0)
    normals = [rs.highest_root if i == 0 else rs.simple_root(i) for i in indices]
    rhs = [Fraction(1) if i == 0 else Fraction(0) for i in indices]
    gram = linalg.gram_of(rs.gram, normals)
    residual = [pairing(rs, n, point) - b for n, b in zip(normals, rhs)]
    try:
        lam = linalg.solve(gram, residual)
    except ValueError as exc:
        raise EmptySubspace(f"H_J is empty for J={indices}") from exc
    return sum((a * b for a, b in zip(lam, residual)), Fraction(0))


def _affine_dynkin(rs: RootSystem, J: Iterable[int]) -> "nx.Graph":
    """Subgraph of the extended Dynkin diagram on *J*, edges weighted by bond."""
    graph = nx.Graph()
    nodes = sorted(J)
    graph.add_nodes_from(nodes)
    for a in nodes:
        for b in nodes:
            if a < b:
                x = affine_simple_vector(rs, a)
                y = affine_simple_vector(rs, b)
                prod = pairing(rs, x, y)
                if prod != 0:
                    bond = 4 * prod * prod / (rs.norm_sq(x) * rs.norm_sq(y))
                    graph.add_edge(a, b, bond=int(bond))
    return graph


def table_distance_sq(rs: RootSystem, J: Iterable[int], j: int) -> Optional[Fraction]:
    """Closed form of ``d(ω̄_j, H_J)²`` when the component of ``α_j`` is tabulated.

    Covers components of type ``A_r`` (any position), ``C_r`` with ``α_j`` the
    long end, and ``D_r`` with ``α_j`` a leaf.  Returns ``None`` otherwise.
    """
    J = _check_affine_indices(rs, J)
    if j not in J:
        raise IndexOutOfRange(f"{j} is not in J")
    graph = _affine_dynkin(rs, J)
    comp = graph.subgraph(nx.node_connected_component(graph, j))
    r = comp.number_of_nodes()
    norm = Fraction(rs.mark(j) ** 2) * rs.norm_sq(affine_simple_vector(rs, j))
    degrees = dict(comp.degree())
    bonds = [d["bond"] for _, _, d in comp.edges(data=True)]
    is_path = r == 1 or (nx.is_tree(comp) and max(degrees.values()) <= 2)

    if is_path and all(b == 1 for b in bonds):
        if r > 1 and len({rs.norm_sq(affine_simple_vector(rs, i)) for i in comp}) != 1:
            return None
        ends = [n for n, d in degrees.items() if d <= 1]
        k = nx.shortest_path_length(comp, ends[0], j) + 1
        return Fraction(2 * k * (r - k + 1), r + 1) / norm

    if is_path and sorted(bonds) == [1] * (r - 2) + [2] and degrees[j] == 1:
        (nbr,) = comp.neighbors(j)
        long_end = rs.norm_sq(affine_simple_vector(rs, j)) > rs.norm_sq(
            affine_simple_vector(rs, nbr)
        )
        if comp.edges[j, nbr]["bond"] == 2 and long_end:
            return Fraction(r) / norm
        return None

    if r >= 4 and nx.is_tree(comp) and all(b == 1 for b in bonds):
        forks = [n for n, d in degrees.items() if d == 3]
        if len(forks) != 1 or max(degrees.values()) > 3 or degrees[j] != 1:
            return None
        fork = forks[0]
        legs = sorted(
            nx.shortest_path_length(comp, fork, leaf)
            for leaf, d in degrees.items()
            if d == 1
        )
        if legs[:2] != [1, 1]:
            return None
        if nx.shortest_path_length(comp, fork, j) == 1:
            return Fraction(r, 2) / norm
        return Fraction(2) / norm
    return None


# ---------------------------------------------------------------------------
# Abelian ideals and the faces of F'_I
# ---------------------------------------------------------------------------


def _inside_scaled_face(rs: RootSystem, I: FrozenSet[int], p: Vector) -> bool:
    if any(pairing(rs, a, p) < 0 for a in rs.simple_roots):
        return False
    if pairing(rs, rs.highest_root, p) > 2:
        return False
    return all(pairing(rs, rs.simple_root(i), p) == 0 for i in I)


def abelian_alcove_census(rs: RootSystem, I: Parabolic = ()) -> List[AbelianFace]:
    """``w_Φ`` and ``w̄_Φ(Ā) ∩ H_I`` for every abelian ``Φ ∈ F_I``.

    Raises :class:`VerificationError` if two faces coincide or a face leaves
    ``F'_I``.
    """
    sel = as_selector(rs, I)
    out: List[AbelianFace] = []
    seen = set()
    for phi in abelian_ideals(rs, sel):
        w = w_phi(rs, sel, phi)
        J = preimage_indices(rs, w, sel)
        verts = frozenset(
            w.act(rs.alcove_vertex(j)) for j in range(rs.rank + 1) if j not in J
        )
        if not all(_inside_scaled_face(rs, sel.included, p) for p in verts):
            raise VerificationError(f"face of {sorted(phi.indices())} leaves F'_I")
        if verts in seen:
            raise VerificationError("two abelian ideals share a face image")
        seen.add(verts)
        out.append(AbelianFace(ideal=phi, element=w, preimage=J, vertices=verts))
    logger.debug("%s I=%s: %d abelian faces", rs.rtype, sel, len(out))
    return out


def weighted_abelian_sum(
    rs: RootSystem, I: Parabolic = (), census: Optional[List[AbelianFace]] = None
) -> Fraction:
    """``(1/n_I) Σ_{w ∈ Ab_I} n_{w⁻¹(I)}``; equals ``2^{l-♯I}``."""
    sel = as_selector(rs, I)
    faces = census if census is not None else abelian_alcove_census(rs, sel)
    total = sum(n_J(rs, f.preimage) for f in faces)
    return Fraction(total, n_J(rs, sel.included))
