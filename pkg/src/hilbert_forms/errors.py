"""Exception types shared across the package."""


class BracketError(ValueError):
    """A root bracket does not contain a sign change (or contains several)."""


class ConvergenceError(RuntimeError):
    """An iteration ran out of steps.  Carries the best estimate found."""

    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual


class AccuracyError(RuntimeError):
    """A requested tolerance cannot be met.  Carries the best estimate found."""

    def __init__(self, message, best=None, error_bound=None):
        super().__init__(message)
        self.best = best
        self.error_bound = error_bound
