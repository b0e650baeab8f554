"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument lies outside the domain of the operation (e.g. k < 2)."""


class ShapeError(ValueError):
    """A matrix argument has the wrong shape."""


class AnalysisError(ValueError):
    """A sweep was asked to decide something its window cannot support."""


class ConvergenceError(ArithmeticError):
    """The polynomial root finder did not converge.

    ``best_residual`` is the largest |g(r)| over the last iterate.
    """

    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual
