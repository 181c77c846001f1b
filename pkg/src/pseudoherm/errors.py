"""Exception types shared across the package."""


class PseudohermError(Exception):
    """Base class for all package-specific failures."""


class ShapeError(PseudohermError, ValueError):
    """Operator does not have the expected monomial content."""


class ConsistencyError(PseudohermError, ValueError):
    """Internal relation between extracted quantities is violated."""


class DomainError(PseudohermError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class LengthError(PseudohermError, ValueError):
    """Sequence lengths do not match the grid."""


class ConvergenceError(PseudohermError, RuntimeError):
    """Iteration budget exhausted before the result settled."""


class ResolutionError(PseudohermError, ValueError):
    """Requested level is too close to the discrete spectral ceiling."""


class WeightOverflowError(PseudohermError, OverflowError):
    """Similarity or metric weights overflow double precision."""


class UnsupportedModelError(PseudohermError, ValueError):
    """Operation is not defined for this model kind."""
