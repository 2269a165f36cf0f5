"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands have mismatched or unsupported dimensions."""


class ValidationError(ValueError):
    """A state or operator invariant failed.

    ``invariant`` names the failed check ("hermitian", "trace", "positive",
    "norm", ...) so callers can report which one without parsing messages.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(message)
        self.invariant = invariant


class ZeroProbabilityError(ValueError):
    """Post-selection on an outcome of (numerically) zero probability."""

    def __init__(self, probability: float):
        super().__init__(
            f"post-selection outcome has probability {probability:.3e}, "
            "below the validity threshold"
        )
        self.probability = probability
