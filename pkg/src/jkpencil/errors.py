"""Exception hierarchy shared by all modules.

Three tiers matter to callers (and fix the CLI exit codes): malformed input,
violated preconditions, and internal invariant failures that indicate a bug.
"""


class JKPencilError(Exception):
    """Base class for all library errors."""


class InputError(JKPencilError):
    """Malformed input data (bad JSON, bad polynomial string, non-skew matrix)."""


class PreconditionError(JKPencilError):
    """An operation was called outside its contract."""


class InvariantViolation(JKPencilError):
    """An internal consistency assertion failed; indicates a bug."""


class DegreeTooLarge(PreconditionError):
    """Univariate factorization requested beyond the supported degree."""


class DegenerateB(PreconditionError):
    """The second form of the pencil is degenerate where invertibility is required."""


class NotRationallyRealizable(PreconditionError):
    """Canonical basis needs eigenvalue data outside Q; invariants are still attached."""

    def __init__(self, message, invariants=None):
        super().__init__(message)
        self.invariants = invariants


class TupleViolatesConstraints(PreconditionError):
    """A height tuple breaks the chain inequalities."""


class ChartMismatch(PreconditionError):
    """Operands live on different coordinate charts."""


class DegreeTooHigh(PreconditionError):
    """Exterior derivative requested on a form of degree 3 or higher."""


class DegenerateForm(PreconditionError):
    """A 2-form required to be non-degenerate has vanishing determinant."""


class DependentGenerators(PreconditionError):
    """Distribution generators are linearly dependent over the function field."""


class PoleAtPoint(PreconditionError):
    """A coefficient denominator vanishes at the evaluation point."""


class IrrationalBeta(PreconditionError):
    """The imaginary part of a quadratic eigenvalue class is not rational."""


class NameClash(PreconditionError):
    """Product components share coordinate names."""


class NonCoprimeFactors(PreconditionError):
    """Product components have characteristic polynomials with a common factor."""
