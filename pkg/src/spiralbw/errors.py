"""Exception types shared across the package.

The CLI maps these onto process exit codes: validation/domain/shape
problems exit 2, convergence failures exit 3, I/O failures exit 4.
"""


class SpiralBWError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(SpiralBWError, ValueError):
    """An input value violates a documented precondition."""


class DomainError(SpiralBWError, ValueError):
    """An argument lies outside the mathematical domain (e.g. on a branch cut)."""


class ShapeError(SpiralBWError, ValueError):
    """A distribution does not have the shape an operation requires."""


class ConvergenceError(SpiralBWError, RuntimeError):
    """A numerical procedure exhausted its budget before reaching tolerance.

    Carries the best available estimate and the error bound achieved so the
    caller can decide whether the partial result is usable.
    """

    def __init__(self, message, estimate=None, error_bound=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class DivergenceError(ConvergenceError):
    """A series/spectrum failed to converge within the hard term cap."""
