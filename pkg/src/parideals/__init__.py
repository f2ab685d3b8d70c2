"""
parideals - ad-nilpotent and abelian ideals of parabolic subalgebras.

A library and command-line tool that enumerates the ideals of a parabolic
subalgebra ``p_I`` contained in its nilradical, counts them and the abelian
ones, and cross-checks closed-form counts, Young-diagram models and the
affine Weyl group picture against exhaustive enumeration.  All arithmetic is
exact.
"""

__version__ = "0.1.0"

# Public surface
from typing import Iterable, Union

from .census import (
    CountReport,
    census_row as _census_row,
    count_abelian_formula,
    count_ideals_formula,
    full_census,
    verify,
)
from .ideals import (
    Ideal,
    ParabolicSelector,
    abelian_ideals,
    close,
    enumerate_ideals,
    is_abelian,
)
from .rootsys import RootSystem, RootSystemType, build, build_named


def census_row(
    rtype: Union[str, RootSystemType, RootSystem], I: Iterable[int] = ()
) -> CountReport:
    """Counts for one parabolic subset, e.g. ``census_row("F4", [1, 2])``.

    *rtype* may be a label such as ``"B3"``, a :class:`RootSystemType` or an
    already built :class:`RootSystem`.
    """

    if isinstance(rtype, RootSystem):
        rs = rtype
    elif isinstance(rtype, RootSystemType):
        rs = build(rtype)
    else:
        rs = build(RootSystemType.parse(rtype))
    return _census_row(rs, tuple(I))


__all__ = [
    "CountReport",
    "Ideal",
    "ParabolicSelector",
    "RootSystem",
    "RootSystemType",
    "abelian_ideals",
    "build",
    "build_named",
    "census_row",
    "close",
    "count_abelian_formula",
    "count_ideals_formula",
    "enumerate_ideals",
    "full_census",
    "is_abelian",
    "verify",
]
