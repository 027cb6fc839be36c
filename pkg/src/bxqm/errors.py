"""Exception types shared across the package."""


class BxqmError(Exception):
    """Base class for all library errors."""


class NullConeError(BxqmError):
    """A zero divisor was passed where an invertible element is required."""


class ExpOverflowError(BxqmError):
    """A bicomplex exponential overflowed in one of its complex components."""


class NullConeValueError(BxqmError):
    """A field touches the null cone, so it has no hyper-polar chart there."""


class GridMismatchError(BxqmError):
    """Two fields that must share a grid (and time) do not."""


class ZeroNormError(BxqmError):
    """An idempotent component integrates to zero and cannot be normalized."""


class SingularSystemError(BxqmError):
    """The tridiagonal solve hit a zero pivot."""


class UnsupportedCompositionError(BxqmError):
    """Symmetry-operator composition outside the fundamental subgroup."""


class ConfigError(BxqmError):
    """A run configuration file is missing, malformed, or inconsistent."""
