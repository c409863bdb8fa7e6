"""Exception types shared across the package."""


class SingularPointError(ValueError):
    """Evaluation requested exactly at a logarithmic singularity."""


class AccuracyError(RuntimeError):
    """A quadrature or refinement loop could not reach the requested tolerance."""


class CapacityError(ValueError):
    """Requested degree exceeds what the implementation supports."""
