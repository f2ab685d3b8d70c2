"""Property-based checks of the closed forms and the affine bijection.

Random root systems and parabolic subsets are drawn with hypothesis and every
claim is tested against brute-force enumeration.
"""

import os
import sys

from hypothesis import given
from hypothesis import strategies as st

sys.path.insert(
    0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
)

from parideals.affweyl import L_phi, inversions, phi_of, w_phi  # noqa: E402
from parideals.census import (  # noqa: E402
    count_abelian_formula,
    count_ideals_formula,
)
from parideals.diagrams import (  # noqa: E402
    nw_count,
    shape_of,
    t_boxes_formula,
    t_shape,
)
from parideals.ideals import (  # noqa: E402
    abelian_ideals,
    close,
    enumerate_ideals,
    is_ideal,
    nilradical_mask,
)
from parideals.rootsys import build_named  # noqa: E402

SMALL_CLASSICAL = (
    [("A", r) for r in range(1, 5)]
    + [("B", r) for r in range(2, 5)]
    + [("C", r) for r in range(2, 5)]
    + [("D", 4), ("D", 5)]
)


@st.composite
def classical_with_subset(draw):
    fam, rank = draw(st.sampled_from(SMALL_CLASSICAL))
    I = draw(st.sets(st.integers(1, rank)))
    return build_named(fam, rank), tuple(sorted(I))


@st.composite
def system_with_ideal(draw):
    fam, rank = draw(st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2)]))
    rs = build_named(fam, rank)
    ideals = enumerate_ideals(rs)
    return rs, ideals[draw(st.integers(0, len(ideals) - 1))]


@st.composite
def t_shape_args(draw):
    p = draw(st.integers(0, 7))
    q = draw(st.integers(0, p))
    l_list = draw(st.sets(st.integers(1, q + 1), max_size=3))
    return p, q, tuple(sorted(l_list))


@given(classical_with_subset())
def test_counts_equal_enumeration(case):
    """Both closed forms agree with enumeration for random (X, I)."""
    rs, I = case
    assert count_ideals_formula(rs, I) == len(enumerate_ideals(rs, I))
    assert count_abelian_formula(rs, I) == len(abelian_ideals(rs, I))


@given(classical_with_subset())
def test_shape_counts_ideals(case):
    """nw-diagrams of the attached shape are equinumerous with F_I."""
    rs, I = case
    assert nw_count(shape_of(rs, I).to_shape()) == len(enumerate_ideals(rs, I))


@given(classical_with_subset(), st.data())
def test_closure_is_smallest_ideal(case, data):
    """close() yields an ideal containing the seed, and is idempotent."""
    rs, I = case
    free = nilradical_mask(rs, I)
    pool = [r for k, r in enumerate(rs.positive_roots) if free >> k & 1]
    if not pool:
        return
    seed = data.draw(st.lists(st.sampled_from(pool), max_size=3))
    phi = close(rs, I, seed)
    assert is_ideal(rs, I, phi)
    assert all(phi.contains(rs, r) for r in seed)
    assert close(rs, I, phi.roots(rs)) == phi


@given(system_with_ideal())
def test_affine_element_round_trip(case):
    """N(w_Φ) = L_Φ and Φ is read back from w_Φ."""
    rs, phi = case
    w = w_phi(rs, (), phi)
    assert inversions(rs, w) == L_phi(rs, (), phi)
    assert phi_of(rs, w) == frozenset(phi.roots(rs))


@given(t_shape_args())
def test_t_boxes_closed_form(args):
    """T_{p,q}(l_1,…) closed form equals the brute count."""
    p, q, l_list = args
    assert t_boxes_formula(p, q, l_list) == nw_count(t_shape(p, q, l_list))
