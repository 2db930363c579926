"""Exception and warning types shared across the package."""


class ArgumentError(ValueError):
    """Invalid argument (bad shape, out-of-range value, unknown option)."""


class ConstraintError(ArgumentError):
    """A regularity constraint such as 2r + gamma >= 1 is violated."""


class NumericError(RuntimeError):
    """A numeric routine broke down (factorization failure, divergence)."""


class ApproximationWarning(UserWarning):
    """Result computed at a truncation cap; accuracy below the usual target."""


class ClampWarning(UserWarning):
    """A metric fell outside its admissible range and was clamped."""
