"""Exception types shared across the package."""


class PauliLensError(Exception):
    """Base class for all library errors."""


class DimensionCapError(PauliLensError):
    """Requested Hilbert-space dimension exceeds the configured cap."""


class ShapeError(PauliLensError, ValueError):
    """Operator shapes or (d, n) signatures are incompatible."""


class NormalizationError(PauliLensError, ValueError):
    """Input operator is not normalized as required.

    Carries the measured norm so callers can decide whether to rescale.
    """

    def __init__(self, message, norm):
        super().__init__(f"{message} (measured norm {norm:.6g})")
        self.norm = float(norm)


class SingularStateError(PauliLensError, ValueError):
    """A state has a vanishing diagonal entry where log(diag) is needed."""


class ConvergenceError(PauliLensError, RuntimeError):
    """An iterative solver failed to converge."""
