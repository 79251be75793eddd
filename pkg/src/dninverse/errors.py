"""Exception types shared across the package."""


class DnInverseError(Exception):
    """Base class for all errors raised by this package."""


class AsymmetricMatrix(DnInverseError, ValueError):
    """Numeric input is asymmetric beyond the construction tolerance."""


class AsymmetricSignMatrix(DnInverseError, ValueError):
    """A sign matrix was required to be symmetric and is not."""


class NotPositiveDefinite(DnInverseError):
    """Cholesky factorization failed or produced a pivot at or below the floor."""


class NotConverged(DnInverseError):
    """An iterative or LAPACK eigenvalue computation did not converge."""


class InfeasiblePattern(DnInverseError, ValueError):
    """No invertible doubly nonnegative matrix has an inverse with this sign pattern."""


class NotATree(DnInverseError, ValueError):
    """The graph is not connected with exactly n - 1 edges."""


class SchurNotPositiveDefinite(DnInverseError):
    """A leaf attachment would destroy positive definiteness."""


class DimensionMismatch(DnInverseError, ValueError):
    """Operands have incompatible sizes."""


class TooLarge(DnInverseError, ValueError):
    """Input exceeds the size cap of an exhaustive oracle."""
