"""Common exception hierarchy for parideals.

Library code (root systems, enumerators, geometry) *raises* these exceptions
instead of calling :pyfunc:`sys.exit`.  The CLI catches :class:`ParidealsError`
at the top level and maps it to an exit status, which keeps the library usable
programmatically and easy to test.
"""

from __future__ import annotations


class ParidealsError(Exception):
    """Base-class for all custom exceptions raised by this package."""


class InvalidRank(ParidealsError):
    """Rank outside the valid range for the requested family."""


class NotARoot(ParidealsError):
    """Coefficient vector is not a root of the root system."""


class SeedIntersectsLevi(ParidealsError):
    """Closure seed contains a root of the Levi part Δ_I."""


class IndexOutOfRange(ParidealsError):
    """Simple-root index outside 0..l (affine) or 1..l (finite)."""


class NotAnInversionSet(ParidealsError):
    """Set of affine roots is not N(w) for any element w."""


class NotBorelCompatible(ParidealsError):
    """Operation requires a Borel-compatible element."""


class DegenerateFace(ParidealsError):
    """Face vertices are affinely dependent."""


class EmptySubspace(ParidealsError):
    """The intersection of affine hyperplanes H_J is empty."""


class MalformedShape(ParidealsError):
    """Diagram shape has inconsistent rows or added boxes."""


class InvalidArgs(ParidealsError):
    """Arguments outside the domain of a closed-form formula."""


class NotClassical(ParidealsError):
    """Operation is only defined for types A, B, C and D."""


class NotTypeA(ParidealsError):
    """Operation is only defined for type A."""


class WrongType(ParidealsError):
    """Operation is only defined for types B and D."""


class UsageError(ParidealsError):
    """Command-line input could not be interpreted."""


class VerificationError(ParidealsError):
    """A closed form disagrees with its brute-force oracle."""
