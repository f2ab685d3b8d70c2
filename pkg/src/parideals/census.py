"""Closed-form counts of ``F_I`` and ``F_I^ab`` and the census over all ``I``.

Every count exists twice: as a closed formula (classical types only) and as
the size of a brute-force enumeration.  :func:`census_row` runs both and
records whether they agree; :func:`verify` turns any disagreement into a
list of failures.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel

from .alcove import weighted_abelian_sum
from .components import ComponentDecomposition, decompose, l_values, tail_count
from .diagrams import (
    NWDiagram,
    binom,
    catalan,
    nw_count,
    reversal_weights,
    shape_of,
    t_prime_count,
)
from .errors import NotClassical, ParidealsError, WrongType
from .ideals import (
    Ideal,
    Parabolic,
    as_selector,
    enumerate_ideals,
    is_abelian,
    minimal_roots,
)
from .logging_utils import get_logger, log_duration
from .rootsys import Family, RootSystem
from .settings import settings

logger = get_logger(__name__)

__all__ = [
    "ComponentDecomposition",
    "CountReport",
    "VerifyReport",
    "abelian_diagram_condition",
    "antichain_histogram",
    "census_row",
    "count_abelian_diagrams",
    "count_abelian_formula",
    "count_ideals_formula",
    "decompose",
    "full_census",
    "subsets",
    "verify",
]

Method = Literal["closed_form", "brute_force", "both"]


class CountReport(BaseModel):
    """One census row; field order is the JSON and CSV column order."""

    type: str
    rank: int
    I: List[int]
    count_all: int
    count_abelian: int
    method: Method
    agreement: bool


def _require_classical(rs: RootSystem) -> None:
    if not rs.family.classical:
        raise NotClassical(f"no closed form for type {rs.rtype}")


def _exact_half(value: int) -> int:
    half, rem = divmod(value, 2)
    assert rem == 0, value
    return half


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def count_ideals_formula(rs: RootSystem, I: Parabolic = ()) -> int:
    """``♯F_I`` from the case analysis on the type and on ``I``."""
    _require_classical(rs)
    sel = as_selector(rs, I)
    l = rs.rank
    q = l - len(sel)
    if q == 0:
        return 1
    fam = rs.family
    if fam is Family.A:
        return catalan(q + 1)
    if fam is Family.C:
        if l in sel:
            return _exact_half((q + 2) * catalan(q + 1))
        return (q + 1) * catalan(q)
    ls = l_values(rs, sel)
    t = tail_count(rs, sel)
    if fam is Family.B or t == 2:
        return (q + 1) * catalan(q) + sum(
            t_prime_count(2 * q - lj, lj - 1) for lj in ls
        )
    if t == 1:
        return _exact_half((q + 1) * catalan(q)) + sum(
            t_prime_count(2 * q - lj - 1, lj - 1) for lj in ls
        )
    return (3 * q - 2) * catalan(q - 1) + sum(
        t_prime_count(2 * q - lj - 1, lj - 2) + t_prime_count(2 * q - lj - 1, lj - 1)
        for lj in ls
    )


def count_abelian_formula(rs: RootSystem, I: Parabolic = ()) -> int:
    """``♯F_I^ab``: ``2^{l-♯I}`` for A and C, corrected sums for B and D."""
    _require_classical(rs)
    sel = as_selector(rs, I)
    l = rs.rank
    q = l - len(sel)
    if q == 0:
        return 1
    if rs.family in (Family.A, Family.C):
        return 2**q
    ls = l_values(rs, sel)
    first = 1 in sel
    if rs.family is Family.B:
        if first:
            return 2 ** (q - 1) + sum(binom(q - 1, lj - 1) for lj in ls)
        return 2**q + sum(2 * binom(q - 1, lj - 1) for lj in ls)
    t = tail_count(rs, sel)
    if first:
        if t == 0:
            return (
                2**q
                - 2 ** (q - 2)
                + sum(2 * binom(q - 1, lj - 1) - binom(q - 2, lj - 1) for lj in ls)
            )
        return 2 ** (q - 1) + sum(binom(q - 1, lj - 1) for lj in ls)
    if t == 0:
        return 2**q + sum(2 * binom(q - 1, lj - 1) for lj in ls)
    if t == 1:
        return (
            2 ** (q - 1)
            + 2 ** (q - 2)
            + sum(binom(q - 1, lj - 1) for lj in ls)
            + sum(binom(q - 2, lj - 1) for lj in ls[:-1])
        )
    return 2**q + 2 * sum(binom(q - 1, lj - 1) for lj in ls)


# ---------------------------------------------------------------------------
# Diagram route for abelian ideals
# ---------------------------------------------------------------------------


def abelian_diagram_condition(rs: RootSystem, I: Parabolic, nwdiag: NWDiagram) -> bool:
    """τ-bound deciding whether the ideal of *nwdiag* is abelian (types B, D).

    With ``α_1 ∈ I`` the bound is ``τ_1 ≤ l - r``.  Otherwise it is
    ``τ_1 + τ_2 ≤ 2(l - r) - 1`` on the shape ``T_{l-r,l-r}`` (type B, and
    type D with both ``α_{l-1}, α_l ∈ I``) and ``2(l - r) - 2`` on
    ``T_{l-r,l-r-1}``.  Type D diagrams are judged by their nw member.
    """
    if rs.family not in (Family.B, Family.D):
        raise WrongType(f"abelian diagram condition needs type B or D, got {rs.rtype}")
    sel = as_selector(rs, I)
    params = shape_of(rs, sel)
    shape = params.to_shape()
    q = rs.rank - len(sel)
    tau1 = nwdiag.tau(shape, 1)
    if 1 in sel:
        return tau1 <= q
    slack = 1 if params.q == params.p else 2
    return tau1 + nwdiag.tau(shape, 2) <= 2 * q - slack


def count_abelian_diagrams(rs: RootSystem, I: Parabolic = ()) -> int:
    """``♯F_I^ab`` counted on the diagram of ``I`` (types B, D)."""
    sel = as_selector(rs, I)
    shape = shape_of(rs, sel).to_shape()
    return sum(
        weight
        for diag, weight in reversal_weights(shape)
        if abelian_diagram_condition(rs, sel, diag)
    )


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


def subsets(rank: int) -> List[Tuple[int, ...]]:
    """All ``I ⊆ {1..l}`` ordered by size, then lexicographically."""
    return [
        combo
        for size in range(rank + 1)
        for combo in itertools.combinations(range(1, rank + 1), size)
    ]


def census_row(
    rs: RootSystem, I: Parabolic = (), method: Method = "both"
) -> CountReport:
    """Counts for one ``I``; closed forms are skipped for exceptional types."""
    sel = as_selector(rs, I)
    if not rs.family.classical:
        if method == "closed_form":
            raise NotClassical(f"no closed form for type {rs.rtype}")
        method = "brute_force"
    brute: Optional[Tuple[int, int]] = None
    closed: Optional[Tuple[int, int]] = None
    if method in ("brute_force", "both"):
        ideals = enumerate_ideals(rs, sel)
        brute = (len(ideals), sum(1 for phi in ideals if is_abelian(rs, phi)))
    if method in ("closed_form", "both"):
        closed = (count_ideals_formula(rs, sel), count_abelian_formula(rs, sel))
    counts = brute or closed
    assert counts is not None
    agreement = brute is None or closed is None or brute == closed
    if not agreement:
        logger.warning(
            "%s I=%s: formula %s differs from enumeration %s",
            rs.rtype,
            sel,
            closed,
            brute,
        )
    return CountReport(
        type=rs.family.value,
        rank=rs.rank,
        I=list(sel.sorted()),
        count_all=counts[0],
        count_abelian=counts[1],
        method=method,
        agreement=agreement,
    )


def full_census(
    rs: RootSystem, method: Method = "both", max_workers: Optional[int] = None
) -> List[CountReport]:
    """:func:`census_row` for every ``I ⊆ Π``, in :func:`subsets` order."""
    order = subsets(rs.rank)
    workers = max_workers if max_workers is not None else settings.max_workers
    completed: Dict[Tuple[int, ...], CountReport] = {}
    with log_duration(logger, f"full_census({rs.rtype})"):
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(census_row, rs, I, method): I for I in order}
            for future in as_completed(futures):
                completed[futures[future]] = future.result()
    return [completed[I] for I in order]


def antichain_histogram(
    rs: RootSystem, I: Parabolic = (), ideals: Optional[Sequence[Ideal]] = None
) -> Dict[int, int]:
    """``♯Φ_min`` → number of ideals with that many minimal roots."""
    sel = as_selector(rs, I)
    pool = enumerate_ideals(rs, sel) if ideals is None else ideals
    hist: Dict[int, int] = {}
    for phi in pool:
        size = len(minimal_roots(rs, sel, phi))
        hist[size] = hist.get(size, 0) + 1
    return dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# Verification suite
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    type: str
    rank: int
    subsets: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_subset(rs: RootSystem, I: Tuple[int, ...], geometry: bool) -> List[str]:
    sel = as_selector(rs, I)
    label = f"{rs.rtype} I={sel}"
    out: List[str] = []
    ideals = enumerate_ideals(rs, sel)
    n_all = len(ideals)
    n_ab = sum(1 for phi in ideals if is_abelian(rs, phi))

    if rs.family.classical:
        formula = count_ideals_formula(rs, sel)
        if formula != n_all:
            out.append(f"{label}: ♯F formula {formula} != enumeration {n_all}")
        formula = count_abelian_formula(rs, sel)
        if formula != n_ab:
            out.append(f"{label}: ♯Ab formula {formula} != enumeration {n_ab}")
        shape = shape_of(rs, sel)
        diagrams = nw_count(shape.to_shape())
        if diagrams != n_all:
            out.append(f"{label}: nw-diagrams of {shape} {diagrams} != {n_all}")
        if rs.family in (Family.B, Family.D):
            via = count_abelian_diagrams(rs, sel)
            if via != n_ab:
                out.append(f"{label}: abelian diagrams {via} != {n_ab}")
    if rs.family in (Family.A, Family.C) and n_ab != 2 ** (rs.rank - len(sel)):
        out.append(f"{label}: {n_ab} abelian ideals, expected 2^{rs.rank - len(sel)}")

    bound = rs.rank - len(sel)
    widest = max((len(minimal_roots(rs, sel, phi)) for phi in ideals), default=0)
    if widest > bound:
        out.append(f"{label}: antichain of size {widest} exceeds {bound}")

    if geometry:
        try:
            total = weighted_abelian_sum(rs, sel)
        except ParidealsError as exc:
            out.append(f"{label}: alcove census failed: {exc}")
        else:
            if total != Fraction(2**bound):
                out.append(f"{label}: weighted abelian sum {total} != 2^{bound}")
    return out


def verify(
    rs: RootSystem, geometry: bool = False, max_workers: Optional[int] = None
) -> VerifyReport:
    """Cross-check formulas, diagrams and enumerations for every ``I ⊆ Π``."""
    order = subsets(rs.rank)
    workers = max_workers if max_workers is not None else settings.max_workers
    report = VerifyReport(type=rs.family.value, rank=rs.rank, subsets=len(order))
    results: Dict[Tuple[int, ...], List[str]] = {}
    with log_duration(logger, f"verify({rs.rtype})"):
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(_check_subset, rs, I, geometry): I for I in order
            }
            for future in as_completed(futures):
                results[futures[future]] = future.result()
    for I in order:
        report.failures.extend(results[I])
    logger.info(
        "%s: %d subsets, %d failures", rs.rtype, len(order), len(report.failures)
    )
    return report
