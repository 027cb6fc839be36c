"""Bicomplex algebra and the one-dimensional bicomplex Schrodinger equation."""

from .algebra import (
    Bicomplex,
    IdempotentPair,
    ONE,
    I1,
    I2,
    J,
    E1,
    E2,
    ZERO,
    compose_conj,
    conjugate,
    exp,
    from_idempotent,
    hyperbolic_modulus,
    inverse,
    is_null_cone,
    mod_sq,
    real_modulus,
    to_idempotent,
)
from .errors import (
    BxqmError,
    ConfigError,
    ExpOverflowError,
    GridMismatchError,
    NullConeError,
    NullConeValueError,
    SingularSystemError,
    UnsupportedCompositionError,
    ZeroNormError,
)

__version__ = "0.1.0"
