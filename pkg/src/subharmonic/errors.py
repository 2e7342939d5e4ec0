"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A physical parameter is missing, inconsistent, or out of range."""


class ThresholdError(ValueError):
    """An operation was requested outside its validity regime.

    Carries the threshold margin kappa - 2*epsilon so callers can report
    how far the parameters sit from the below-threshold region.
    """

    def __init__(self, message: str, margin: float):
        super().__init__(message)
        self.margin = margin


class ConvergenceError(RuntimeError):
    """A numerical solver failed to reach its convergence target."""
