"""Exception types shared across the package."""


class CGLindbladError(Exception):
    """Base class for all package-specific errors."""


class NonHermitianInput(CGLindbladError):
    """An operator that must be Hermitian failed the Hermiticity check."""


class NoConvergence(CGLindbladError):
    """An iterative linear-algebra routine failed to converge."""


class DimensionMismatch(CGLindbladError):
    """Array shapes are inconsistent with the requested operation."""


class ClosureViolation(CGLindbladError):
    """An operator basis does not close under free evolution."""


class UnsupportedKind(CGLindbladError):
    """The bath kind does not support the requested operation."""


class QuadratureFailure(CGLindbladError):
    """A quadrature did not reach the requested tolerance."""


class PositivityViolation(CGLindbladError):
    """A coefficient matrix is negative beyond the tolerated band."""


class AuditFailure(CGLindbladError):
    """A runtime state or generator audit failed."""


class DimensionCapExceeded(CGLindbladError):
    """A composite model exceeds the configured Hilbert-space cap."""


class RecurrenceHorizonExceeded(CGLindbladError):
    """Requested horizon violates the finite-bath recurrence guard."""


class StepFailure(CGLindbladError):
    """An adaptive ODE integration could not meet its tolerance."""


class ParseError(CGLindbladError):
    """A configuration document is not well formed."""


class ValidationError(CGLindbladError):
    """A configuration document is well formed but invalid."""


class IoError(CGLindbladError):
    """Output files could not be written."""
