"""Connected components of ``I`` in the Dynkin diagram and the ``l_j`` values.

Components are ordered by their smallest index ``m_j``; ``r_j`` is the size of
``I_j``.  The ``l_j`` feed both the diagram shapes and the closed-form counts
of types B and D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple

import networkx as nx

from .ideals import Parabolic, as_selector
from .rootsys import Family, RootSystem, dynkin_edges


@dataclass(frozen=True)
class ComponentDecomposition:
    """``I = I_1 ⊔ … ⊔ I_s`` ordered by ``m_1 < … < m_s``."""

    components: Tuple[FrozenSet[int], ...]

    @property
    def s(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    @property
    def minima(self) -> Tuple[int, ...]:
        return tuple(min(c) for c in self.components)


def decompose(rs: RootSystem, I: Parabolic) -> ComponentDecomposition:
    sel = as_selector(rs, I)
    graph = nx.Graph()
    graph.add_nodes_from(sel.included)
    graph.add_edges_from(
        (a, b) for a, b in dynkin_edges(rs) if a in sel.included and b in sel.included
    )
    comps = sorted((frozenset(c) for c in nx.connected_components(graph)), key=min)
    return ComponentDecomposition(tuple(comps))


def tail_count(rs: RootSystem, I: Parabolic) -> int:
    """``t = ♯({α_{l-1}, α_l} ∩ I)``."""
    sel = as_selector(rs, I)
    return sum(1 for i in (rs.rank - 1, rs.rank) if i in sel)


def l_values(rs: RootSystem, I: Parabolic) -> Tuple[int, ...]:
    """The ``l_j`` attached to the components that carry an added box.

    Type B drops the component holding ``α_l``.  Type D keeps every component
    when ``t ≤ 1`` (subtracting one from the last ``l_s`` when ``I_s = {α_l}``)
    and keeps only the components avoiding ``α_{l-1}`` and ``α_l`` when
    ``t = 2``.  Other families have no added boxes.
    """
    dec = decompose(rs, I)
    l = rs.rank
    out = []
    before = 0
    for j, comp in enumerate(dec.components):
        value = min(comp) - before
        before += len(comp)
        if rs.family is Family.B:
            if l in comp:
                continue
        elif rs.family is Family.D:
            if tail_count(rs, I) == 2 and (l - 1 in comp or l in comp):
                continue
            if j == dec.s - 1 and comp == frozenset({l}):
                value -= 1
        else:
            continue
        out.append(value)
    return tuple(out)
