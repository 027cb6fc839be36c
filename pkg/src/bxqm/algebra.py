"""Bicomplex (tetranumber) arithmetic.

A bicomplex number is w = w0 + w1*i1 + w2*i2 + w3*j with real components
and unit products

        *  |  1    i1    i2    j
      -----+-----------------------
        1  |  1    i1    i2    j
        i1 |  i1   -1    j    -i2
        i2 |  i2   j    -1    -i1
        j  |  j   -i2   -i1    1

The ring is commutative with zero divisors.  Two alternative views are used
throughout: the complex-pair form w = z1 + z2*i2 with z1 = w0 + w1*i1 and
z2 = w2 + w3*i1, and the idempotent form w = p*e1 + m*e2 with
e1 = (1+j)/2, e2 = (1-j)/2, p = z1 - z2*i1, m = z1 + z2*i1.  In the
idempotent basis multiplication acts componentwise, which is what makes the
exponential and the inverse cheap.  Zero divisors are exactly the elements
with z1**2 + z2**2 = 0 (the null cone), equivalently p = 0 or m = 0.

Scalar values are `Bicomplex` instances; the same kernels also run
vectorized on numpy arrays whose last axis has length 4 (`mul4`, `conj4`,
`exp4`, ...), which is how the field and diagnostics layers use them.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import ExpOverflowError, NullConeError

__all__ = [
    "Bicomplex",
    "IdempotentPair",
    "ZERO",
    "ONE",
    "I1",
    "I2",
    "J",
    "E1",
    "E2",
    "add",
    "mul",
    "conjugate",
    "compose_conj",
    "mod_sq",
    "inverse",
    "is_null_cone",
    "null_cone_tolerance",
    "exp",
    "to_idempotent",
    "from_idempotent",
    "real_modulus",
    "hyperbolic_modulus",
    "format_bicomplex",
    "parse_bicomplex",
    "mul4",
    "conj4",
    "split4",
    "join4",
    "exp4",
    "norm3",
    "z_pair",
]

# Structure tensor of the unit table: _STRUCT[k, i, j] is the coefficient of
# unit k in the product (unit i)*(unit j).  All products expand through this
# tensor, so it is the single source of truth for the ring.
_STRUCT = np.zeros((4, 4, 4))
for _i, _j, _k, _s in [
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
    (1, 0, 1, 1), (1, 1, 0, -1), (1, 2, 3, 1), (1, 3, 2, -1),
    (2, 0, 2, 1), (2, 1, 3, 1), (2, 2, 0, -1), (2, 3, 1, -1),
    (3, 0, 3, 1), (3, 1, 2, -1), (3, 2, 1, -1), (3, 3, 0, 1),
]:
    _STRUCT[_k, _i, _j] = _s
_STRUCT.setflags(write=False)

# Component sign patterns of the conjugations: row k is the signature of
# dagger_k acting on (w0, w1, w2, w3).
_CONJ_SIGNS = np.array(
    [
        [1.0, 1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0, -1.0],
        [1.0, 1.0, -1.0, -1.0],
        [1.0, -1.0, -1.0, 1.0],
    ]
)
_CONJ_SIGNS.setflags(write=False)

# Composition table of the conjugation group (abelian, Klein four-group).
_CONJ_COMPOSE = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

_MOD_SQ_CONJ = {"i1": 2, "i2": 1, "j": 3}


# ---------------------------------------------------------------------------
# Vectorized kernels on (..., 4) float arrays
# ---------------------------------------------------------------------------

def mul4(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Bicomplex product on arrays whose last axis holds (w0, w1, w2, w3)."""
    return np.einsum("kij,...i,...j->...k", _STRUCT, a, b)


def conj4(a: np.ndarray, kind: int) -> np.ndarray:
    """Apply conjugation `kind` in {0,1,2,3} componentwise."""
    return a * _CONJ_SIGNS[_check_conj_kind(kind)]


def split4(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Idempotent components (p, m) as complex arrays: a = p*e1 + m*e2."""
    a = np.asarray(a, dtype=float)
    p = (a[..., 0] + a[..., 3]) + 1j * (a[..., 1] - a[..., 2])
    m = (a[..., 0] - a[..., 3]) + 1j * (a[..., 1] + a[..., 2])
    return p, m


def join4(p: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Inverse of `split4`: assemble components from the idempotent pair."""
    p = np.asarray(p, dtype=complex)
    m = np.asarray(m, dtype=complex)
    out = np.empty(p.shape + (4,))
    out[..., 0] = 0.5 * (p.real + m.real)
    out[..., 1] = 0.5 * (p.imag + m.imag)
    out[..., 2] = 0.5 * (m.imag - p.imag)
    out[..., 3] = 0.5 * (p.real - m.real)
    return out


def exp4(a: np.ndarray) -> np.ndarray:
    """Componentwise bicomplex exponential through the idempotent basis."""
    p, m = split4(a)
    with np.errstate(over="ignore", invalid="ignore"):
        ep = np.exp(p)
        em = np.exp(m)
    if not (np.isfinite(ep).all() and np.isfinite(em).all()):
        raise ExpOverflowError("bicomplex exponential overflowed")
    return join4(ep, em)


def norm3(a: np.ndarray) -> np.ndarray:
    """Euclidean modulus |.|_3 along the component axis."""
    a = np.asarray(a, dtype=float)
    return np.sqrt(np.sum(a * a, axis=-1))


def z_pair(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Complex-pair view (z1, z2) with coefficients complex in i1."""
    a = np.asarray(a, dtype=float)
    return a[..., 0] + 1j * a[..., 1], a[..., 2] + 1j * a[..., 3]


def _check_conj_kind(kind: int) -> int:
    if kind not in (0, 1, 2, 3):
        raise ValueError(f"conjugation kind must be 0..3, got {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# Scalar type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bicomplex:
    """One bicomplex number, stored as its four real components."""

    w0: float = 0.0
    w1: float = 0.0
    w2: float = 0.0
    w3: float = 0.0

    @classmethod
    def from_components(cls, comps: Iterable[float]) -> "Bicomplex":
        w0, w1, w2, w3 = (float(c) for c in comps)
        return cls(w0, w1, w2, w3)

    @classmethod
    def from_complex(cls, z: complex) -> "Bicomplex":
        """Embed an element of C(i1): the i2 and j components are zero."""
        z = complex(z)
        return cls(z.real, z.imag, 0.0, 0.0)

    @classmethod
    def from_z(cls, z1: complex, z2: complex) -> "Bicomplex":
        """Build from the complex-pair form z1 + z2*i2."""
        z1, z2 = complex(z1), complex(z2)
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    @property
    def components(self) -> np.ndarray:
        return np.array([self.w0, self.w1, self.w2, self.w3])

    @property
    def z1(self) -> complex:
        return complex(self.w0, self.w1)

    @property
    def z2(self) -> complex:
        return complex(self.w2, self.w3)

    def __add__(self, other: "Bicomplex | float | int") -> "Bicomplex":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex(
            self.w0 + other.w0, self.w1 + other.w1,
            self.w2 + other.w2, self.w3 + other.w3,
        )

    __radd__ = __add__

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.w0, -self.w1, -self.w2, -self.w3)

    def __sub__(self, other: "Bicomplex | float | int") -> "Bicomplex":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Bicomplex | float | int") -> "Bicomplex":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "Bicomplex | float | int") -> "Bicomplex":
        if isinstance(other, (int, float)):
            c = float(other)
            return Bicomplex(c * self.w0, c * self.w1, c * self.w2, c * self.w3)
        if isinstance(other, Bicomplex):
            return Bicomplex.from_components(mul4(self.components, other.components))
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self, kind: int) -> "Bicomplex":
        s = _CONJ_SIGNS[_check_conj_kind(kind)]
        return Bicomplex(s[0] * self.w0, s[1] * self.w1, s[2] * self.w2, s[3] * self.w3)

    def is_finite(self) -> bool:
        return all(map(math.isfinite, (self.w0, self.w1, self.w2, self.w3)))

    def __str__(self) -> str:
        return format_bicomplex(self)


def _coerce(x: object) -> "Bicomplex":
    if isinstance(x, Bicomplex):
        return x
    if isinstance(x, (int, float)):
        return Bicomplex(float(x))
    return NotImplemented


ZERO = Bicomplex()
ONE = Bicomplex(1.0)
I1 = Bicomplex(0.0, 1.0)
I2 = Bicomplex(0.0, 0.0, 1.0)
J = Bicomplex(0.0, 0.0, 0.0, 1.0)
E1 = Bicomplex(0.5, 0.0, 0.0, 0.5)
E2 = Bicomplex(0.5, 0.0, 0.0, -0.5)


class IdempotentPair(NamedTuple):
    """Coefficients of a bicomplex number on (e1, e2), complex in i1."""

    plus: complex
    minus: complex


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------

def add(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a + b


def mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    return a * b


def conjugate(w: Bicomplex, kind: int) -> Bicomplex:
    """Conjugation dagger_kind; kind 0 is the identity."""
    return w.conjugate(kind)


def compose_conj(k1: int, k2: int) -> int:
    """Index of the composed conjugation, per the abelian group table."""
    return _CONJ_COMPOSE[_check_conj_kind(k1)][_check_conj_kind(k2)]


def mod_sq(w: Bicomplex, axis: str) -> Bicomplex:
    """Square modulus w * conj(w) landing in C(i1), C(i2) or D.

    axis "i1" pairs with dagger_2, "i2" with dagger_1, "j" with dagger_3.
    The components outside the named subalgebra cancel pairwise, so they
    are exactly zero.
    """
    try:
        kind = _MOD_SQ_CONJ[axis]
    except KeyError:
        raise ValueError(f"axis must be one of 'i1', 'i2', 'j', got {axis!r}") from None
    return w * w.conjugate(kind)


def null_cone_tolerance(w: Bicomplex) -> float:
    """Default threshold on |z1**2 + z2**2| below which w counts as a zero divisor."""
    n2 = w.w0 * w.w0 + w.w1 * w.w1 + w.w2 * w.w2 + w.w3 * w.w3
    return 1e-12 * max(1.0, n2)


def is_null_cone(w: Bicomplex, eps: float | None = None) -> bool:
    """Whether w is within eps of the null cone (zero included)."""
    if eps is None:
        eps = null_cone_tolerance(w)
    if eps < 0.0:
        raise ValueError("eps must be non-negative")
    return abs(w.z1 * w.z1 + w.z2 * w.z2) <= eps


def inverse(w: Bicomplex) -> Bicomplex:
    """Multiplicative inverse conj_2(w) / (z1**2 + z2**2).

    Raises NullConeError for zero divisors (and for the ring zero).
    """
    q = w.z1 * w.z1 + w.z2 * w.z2
    if abs(q) <= null_cone_tolerance(w):
        raise NullConeError(f"{format_bicomplex(w)} lies on the null cone")
    return Bicomplex.from_z(w.z1 / q, -w.z2 / q)


def exp(w: Bicomplex) -> Bicomplex:
    """Bicomplex exponential, computed through the idempotent basis.

    exp(w) = exp(p)*e1 + exp(m)*e2 with (p, m) the idempotent pair of w.
    Always invertible; raises ExpOverflowError if a component overflows.
    """
    p, m = to_idempotent(w)
    try:
        ep, em = cmath.exp(p), cmath.exp(m)
    except OverflowError:
        raise ExpOverflowError(f"exp overflow at exponent {format_bicomplex(w)}") from None
    return from_idempotent(IdempotentPair(ep, em))


def to_idempotent(w: Bicomplex) -> IdempotentPair:
    """Project onto the idempotent basis: w = plus*e1 + minus*e2."""
    z1, z2 = w.z1, w.z2
    return IdempotentPair(z1 - 1j * z2, z1 + 1j * z2)


def from_idempotent(pair: IdempotentPair) -> Bicomplex:
    p, m = complex(pair[0]), complex(pair[1])
    return Bicomplex(
        0.5 * (p.real + m.real),
        0.5 * (p.imag + m.imag),
        0.5 * (m.imag - p.imag),
        0.5 * (p.real - m.real),
    )


def real_modulus(w: Bicomplex, kind: int) -> float:
    """Real moduli |w|_1, |w|_2, |w|_3.

    Kind 1 is |z1**2 + z2**2|**(1/2) in the C(i1) pair view; kind 2 is the
    same quantity computed independently through the C(i2) pair view
    w = (w0 + w2*i2) + (w1 + w3*i2)*i1; kind 3 is the Euclidean norm of
    the four components.  Kinds 1 and 2 vanish exactly on the null cone.
    """
    if kind == 1:
        return abs(w.z1 * w.z1 + w.z2 * w.z2) ** 0.5
    if kind == 2:
        u1 = complex(w.w0, w.w2)
        u2 = complex(w.w1, w.w3)
        return abs(u1 * u1 + u2 * u2) ** 0.5
    if kind == 3:
        return math.hypot(w.w0, w.w1, w.w2, w.w3)
    raise ValueError(f"modulus kind must be 1, 2 or 3, got {kind!r}")


def hyperbolic_modulus(w: Bicomplex) -> Bicomplex:
    """The D-valued modulus |w|_j, the idempotent square root of w*conj_3(w).

    w*conj_3(w) has non-negative idempotent components (tiny negative
    round-off is clamped), and |s*t|_j = |s|_j * |t|_j.
    """
    sq = mod_sq(w, "j")
    p, m = to_idempotent(sq)
    return from_idempotent(
        IdempotentPair(math.sqrt(max(p.real, 0.0)), math.sqrt(max(m.real, 0.0)))
    )


# ---------------------------------------------------------------------------
# Text form "a + b*i1 + c*i2 + d*j"
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
            (?:\s*\*\s*(?P<unit>i1|i2|j))?
          |
            (?P<bare>i1|i2|j)
        )\s*""",
    re.VERBOSE,
)

_UNIT_SLOT = {None: 0, "i1": 1, "i2": 2, "j": 3}


def format_bicomplex(w: Bicomplex) -> str:
    """Render as "a + b*i1 + c*i2 + d*j" with round-trip float formatting."""
    parts = [repr(float(w.w0))]
    for val, unit in ((w.w1, "i1"), (w.w2, "i2"), (w.w3, "j")):
        sign = "-" if math.copysign(1.0, val) < 0 else "+"
        parts.append(f"{sign} {abs(float(val))!r}*{unit}")
    return " ".join(parts)


def parse_bicomplex(text: str) -> Bicomplex:
    """Parse the rendered grammar; terms may be omitted, reordered or repeated."""
    comps = [0.0, 0.0, 0.0, 0.0]
    pos = 0
    seen = False
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"cannot parse bicomplex literal at {text[pos:]!r}")
        sign = -1.0 if match.group("sign") == "-" else 1.0
        if match.group("bare") is not None:
            comps[_UNIT_SLOT[match.group("bare")]] += sign
        else:
            comps[_UNIT_SLOT[match.group("unit")]] += sign * float(match.group("num"))
        pos = match.end()
        seen = True
    if not seen:
        raise ValueError("empty bicomplex literal")
    return Bicomplex.from_components(comps)
