"""Exception hierarchy shared by every module of the package."""


class QuiverCurveError(Exception):
    """Base class for all errors raised by :mod:`quivercurves`."""


class FieldMismatchError(QuiverCurveError, ValueError):
    """Operands live in different coefficient fields."""


class FieldDivisionError(QuiverCurveError, ZeroDivisionError):
    """Attempt to invert the zero scalar."""


class ParseError(QuiverCurveError, ValueError):
    """Malformed polynomial, scalar, or point text."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class HomogeneityError(QuiverCurveError, ValueError):
    """Terms of different degrees in what must be a homogeneous polynomial."""


class EmptyPolynomialError(QuiverCurveError, ValueError):
    """The zero polynomial was supplied where a curve equation is required."""


class FeasibilityError(QuiverCurveError):
    """A brute-force search would exceed its configured guard."""

    def __init__(self, message, required, guard):
        self.required = required
        self.guard = guard
        super().__init__(f"{message}: needs {required}, guard is {guard}")


class DegeneratePointError(QuiverCurveError, ValueError):
    """The zero vector does not define a projective point."""


class DimensionMismatchError(QuiverCurveError, ValueError):
    """Vector or point has the wrong ambient dimension."""


class NotInImageError(QuiverCurveError, ValueError):
    """Point does not lie on the Veronese image."""


class InvariantViolation(QuiverCurveError, ValueError):
    """A serialized document violates a structural invariant.

    ``cause`` is a short machine-readable tag naming the violated rule.
    """

    def __init__(self, cause, message):
        self.cause = cause
        super().__init__(f"{cause}: {message}")


class UndefinedAtPointError(QuiverCurveError, ValueError):
    """Every component of a rational map vanishes at the point."""


class NotAMorphismError(QuiverCurveError, ValueError):
    """The image of a point does not land on the target curve."""


class UnsupportedCharacteristicError(QuiverCurveError, ValueError):
    """Short Weierstrass formulas need characteristic other than 2 and 3."""


class SingularCurveError(QuiverCurveError, ValueError):
    """Weierstrass data with vanishing discriminant."""


class OffCurveError(QuiverCurveError, ValueError):
    """A point fails the curve equation."""
