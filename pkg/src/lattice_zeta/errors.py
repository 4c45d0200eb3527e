"""Exception types shared across the package."""


class MathDomainError(ValueError):
    """Argument lies outside the mathematical domain of the function."""


class PoleError(MathDomainError):
    """Evaluation was requested at (or within machine distance of) a pole."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ParameterDomainError(MathDomainError):
    """A structural parameter (degree, dimension, side length...) is invalid."""


class QuadratureError(RuntimeError):
    """An adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, message, best=None, err_estimate=None):
        super().__init__(message)
        self.best = best
        self.err_estimate = err_estimate


class CancellationWarning(UserWarning):
    """Severe cancellation detected; the returned value has reduced accuracy."""
