"""Exception types shared across the library.

Everything derives from ``ValueError`` so callers who do not care about
the fine-grained kind can catch a single base class.
"""


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


class NotSquare(DimensionMismatch):
    """A square matrix was required."""


class ShapeMismatch(DimensionMismatch):
    """Matrices in a collection do not all share one shape."""


class InvalidDimension(ValueError):
    """Dimension argument outside the supported range."""


class NotQubitDimension(ValueError):
    """Matrix side is not a power of two, so no qubit count fits it."""


class NotHermitian(ValueError):
    pass


class NotUnitary(ValueError):
    pass


class NotDensity(ValueError):
    """Matrix fails a density-operator invariant; the message names it."""


class IncompleteKraus(ValueError):
    """Kraus operators whose completeness sum is not the identity."""


class NonRealCoefficient(ValueError):
    """A coefficient that must be real carries a non-negligible imaginary part."""


class OutOfRange(ValueError):
    """Scalar argument lies outside its admissible interval."""


class InvalidArgument(ValueError):
    """Command argument that fails its precondition."""


class ParseError(ValueError):
    """Malformed or non-finite JSON input."""
