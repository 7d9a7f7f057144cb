"""Exception types shared across the package.

The CLI maps these onto exit codes: parse-level problems exit 2,
precondition violations exit 3, failed checker hypotheses exit 4.
AssertionViolation marks a broken mathematical invariant and is never
expected on any input; it propagates as an ordinary crash.
"""


class ShaperesError(Exception):
    """Base class for all package-specific errors."""


class ParseError(ShaperesError):
    """Input text does not match the system grammar."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ArityMismatch(ShaperesError):
    """Number of polynomials differs from number of variables."""


class DegenerateDegree(ShaperesError):
    """Some polynomial has degree zero in the non-hidden variables."""


class BothZero(ShaperesError):
    """Extended gcd of the zero pair is undefined."""


class ZeroInput(ShaperesError):
    """Operation undefined for the zero polynomial."""


class DegreeZero(ShaperesError):
    """Discriminant requires degree at least one."""


class DegreeTooSmall(ShaperesError):
    """Requested homogenization degree is below the actual degree."""


class WrongArity(ShaperesError):
    """Operation is only defined for two-variable systems."""


class NotZeroDimensional(ShaperesError):
    """The quotient by the ideal is not finite-dimensional."""


class CriticalDegreeZero(ShaperesError):
    """All degrees are one, so the only critical-degree scalar is 1."""


class WrongDegree(ShaperesError):
    """Monomial degree differs from the critical degree."""


class AllEvaluationsDegenerate(ShaperesError):
    """The quotient minor vanishes at every sample point."""


class GcdNotOne(ShaperesError):
    """Parametric generators share a common factor, ideal is not zero-dimensional."""


class ZeroModulus(ShaperesError):
    """Parametric reduction needs a nonzero modulus polynomial."""


class NotOnVariety(ShaperesError):
    """The point does not satisfy the chart equations."""


class NotIrreducible(ShaperesError):
    """The factor could not be certified irreducible over the rationals."""


class StabilizationFailure(ShaperesError):
    """Local dimensions did not stabilize at consecutive exponents."""


class WorkLimitExceeded(ShaperesError):
    """The basis computation exceeded the configured pair budget."""


class AssertionViolation(ShaperesError):
    """A proved equivalence failed on concrete data; this is a bug, not an input error."""
