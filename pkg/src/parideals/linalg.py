"""Exact rational vector helpers.

Vectors are tuples of :class:`fractions.Fraction` (or ints) in simple-root
coordinates.  Determinants, inverses and linear solves go through
:class:`sympy.Matrix` so no floating point ever enters the geometry.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

Scalar = Union[int, Fraction]
Vector = Tuple[Fraction, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]


def vec(values: Iterable[Scalar]) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero(dim: int) -> Vector:
    return tuple(Fraction(0) for _ in range(dim))


def add(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return tuple(Fraction(a) + b for a, b in zip(x, y))


def sub(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return tuple(Fraction(a) - b for a, b in zip(x, y))


def scale(c: Scalar, x: Sequence[Scalar]) -> Vector:
    return tuple(Fraction(c) * a for a in x)


def mat_vec(m: Sequence[Sequence[Scalar]], x: Sequence[Scalar]) -> Vector:
    return tuple(
        sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0)) for row in m
    )


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(
        tuple(
            sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0))
            for col in cols
        )
        for row in a
    )


def transpose(m: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(tuple(Fraction(v) for v in col) for col in zip(*m))


def bilinear(
    g: Sequence[Sequence[Scalar]], x: Sequence[Scalar], y: Sequence[Scalar]
) -> Fraction:
    """Return ``xᵀ g y``."""
    return sum((Fraction(a) * b for a, b in zip(x, mat_vec(g, y))), Fraction(0))


# ---------------------------------------------------------------------------
# sympy bridge
# ---------------------------------------------------------------------------


def _to_sympy(m: Sequence[Sequence[Scalar]]) -> sympy.Matrix:
    rows = []
    for row in m:
        fracs = [Fraction(v) for v in row]
        rows.append([sympy.Rational(f.numerator, f.denominator) for f in fracs])
    return sympy.Matrix(rows)


def _from_sympy(value: sympy.Expr) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def det(m: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant; the empty matrix has determinant 1."""
    if len(m) == 0:
        return Fraction(1)
    return _from_sympy(_to_sympy(m).det())


def inverse(m: Sequence[Sequence[Scalar]]) -> Matrix:
    """Exact inverse; raises :class:`ValueError` for singular input."""
    sm = _to_sympy(m)
    if sm.det() == 0:
        raise ValueError("matrix is singular")
    inv = sm.inv()
    return tuple(
        tuple(_from_sympy(inv[i, j]) for j in range(inv.cols))
        for i in range(inv.rows)
    )


def solve(m: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Vector:
    """Solve ``m x = rhs`` exactly for square nonsingular *m*."""
    sm = _to_sympy(m)
    if sm.det() == 0:
        raise ValueError("matrix is singular")
    sol = sm.LUsolve(_to_sympy([[v] for v in rhs]))
    return tuple(_from_sympy(sol[i, 0]) for i in range(sol.rows))


def gram_of(
    g: Sequence[Sequence[Scalar]], vectors: Sequence[Sequence[Scalar]]
) -> List[List[Fraction]]:
    """Gram matrix ``[(v_a, v_b)]`` of *vectors* under the form *g*."""
    return [[bilinear(g, a, b) for b in vectors] for a in vectors]
