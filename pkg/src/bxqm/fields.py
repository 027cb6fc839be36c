"""Grid-sampled bicomplex wave functions.

A `WaveField` stores the four real components of psi at every node of a
uniform 1D grid.  The hyper-polar chart psi = exp(alpha + beta*i1 +
gamma*i2 + delta*j) and the idempotent pair (psi_plus, psi_minus) are
derived views; the component array is the single stored representation.
Fields are immutable snapshots: every operation returns a new field.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra
from .algebra import Bicomplex
from .errors import (
    ExpOverflowError,
    GridMismatchError,
    NullConeValueError,
    ZeroNormError,
)

__all__ = [
    "GridSpec",
    "WaveField",
    "ComplexField",
    "from_hyper_polar",
    "to_hyper_polar",
    "idempotent_split",
    "recombine",
    "embed_complex",
    "normalize",
    "component_norms",
    "scale",
    "add_fields",
    "restrict",
    "first_derivative",
]


@dataclass(frozen=True)
class GridSpec:
    """Uniform spatial grid on [x_min, x_max] with n_points nodes."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not (self.x_max > self.x_min):
            raise ValueError("x_max must exceed x_min")
        if self.n_points < 8:
            raise ValueError("n_points must be at least 8")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def xs(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def subgrid(self, i0: int, i1: int) -> "GridSpec":
        """Grid covering nodes i0..i1 inclusive (spacing unchanged)."""
        if not (0 <= i0 and i1 < self.n_points and i1 - i0 + 1 >= 8):
            raise ValueError("subgrid needs at least 8 nodes inside the parent grid")
        xs = self.xs()
        return GridSpec(float(xs[i0]), float(xs[i1]), i1 - i0 + 1)


def _frozen_values(values: np.ndarray, shape_tail: tuple, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    if arr.ndim != 1 + len(shape_tail) or arr.shape[1:] != shape_tail:
        raise ValueError(f"values must have shape (n,{',' .join(map(str, shape_tail))})")
    if not np.isfinite(arr).all():
        raise ValueError("field values must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class WaveField:
    """Bicomplex-valued function on a grid at one time."""

    grid: GridSpec
    values: np.ndarray = field(repr=False)
    time: float = 0.0

    def __post_init__(self) -> None:
        arr = _frozen_values(self.values, (4,), float)
        if arr.shape[0] != self.grid.n_points:
            raise ValueError("values length does not match the grid")
        object.__setattr__(self, "values", arr)

    def at(self, i: int) -> Bicomplex:
        return Bicomplex.from_components(self.values[i])


@dataclass(frozen=True)
class ComplexField:
    """C(i1)-valued function on a grid at one time."""

    grid: GridSpec
    values: np.ndarray = field(repr=False)
    time: float = 0.0

    def __post_init__(self) -> None:
        arr = _frozen_values(self.values, (), complex)
        if arr.shape[0] != self.grid.n_points:
            raise ValueError("values length does not match the grid")
        object.__setattr__(self, "values", arr)


def _eval_profile(profile, xs: np.ndarray) -> np.ndarray:
    if callable(profile):
        out = np.asarray(profile(xs), dtype=float)
    else:
        out = np.asarray(profile, dtype=float)
    return np.broadcast_to(out, xs.shape)


def from_hyper_polar(grid: GridSpec, alpha, beta, gamma, delta, time: float = 0.0) -> WaveField:
    """Sample exp(alpha + beta*i1 + gamma*i2 + delta*j) on the grid.

    The profiles may be callables of the node array, scalars, or arrays of
    matching length.
    """
    xs = grid.xs()
    a = _eval_profile(alpha, xs)
    b = _eval_profile(beta, xs)
    g = _eval_profile(gamma, xs)
    d = _eval_profile(delta, xs)
    with np.errstate(over="ignore", invalid="ignore"):
        p = np.exp((a + d) + 1j * (b - g))
        m = np.exp((a - d) + 1j * (b + g))
    if not (np.isfinite(p).all() and np.isfinite(m).all()):
        raise ExpOverflowError("hyper-polar exponent overflows the exponential")
    return WaveField(grid, algebra.join4(p, m), time)


def to_hyper_polar(f: WaveField) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Invert the hyper-polar chart pointwise.

    Returns (alpha, beta, gamma, delta) with beta and gamma assembled from
    principal-branch arguments in (-pi, pi]; any 2*pi ambiguity is shared
    between beta + gamma and beta - gamma so that re-exponentiation always
    reproduces the field.  Raises NullConeValueError where either
    idempotent component vanishes (the chart does not exist there).
    """
    p, m = algebra.split4(f.values)
    ap = np.abs(p)
    am = np.abs(m)
    if np.any(ap == 0.0) or np.any(am == 0.0):
        raise NullConeValueError("field touches the null cone; no hyper-polar chart")
    lp = np.log(ap)
    lm = np.log(am)
    tp = np.angle(p)
    tm = np.angle(m)
    return 0.5 * (lp + lm), 0.5 * (tp + tm), 0.5 * (tm - tp), 0.5 * (lp - lm)


def idempotent_split(f: WaveField) -> tuple[ComplexField, ComplexField]:
    """Pointwise idempotent components (psi_plus, psi_minus)."""
    p, m = algebra.split4(f.values)
    return ComplexField(f.grid, p, f.time), ComplexField(f.grid, m, f.time)


def recombine(plus: ComplexField, minus: ComplexField) -> WaveField:
    """Assemble psi_plus*e1 + psi_minus*e2; inverse of idempotent_split."""
    if plus.grid != minus.grid or plus.time != minus.time:
        raise GridMismatchError("idempotent components live on different grids or times")
    return WaveField(plus.grid, algebra.join4(plus.values, minus.values), plus.time)


def embed_complex(cf: ComplexField) -> WaveField:
    """Embed a C(i1)-valued field: the i2 and j components are zero."""
    return WaveField(cf.grid, algebra.join4(cf.values, cf.values), cf.time)


def component_norms(f: WaveField) -> tuple[float, float]:
    """Trapezoidal L2 norms squared of (psi_plus, psi_minus)."""
    p, m = algebra.split4(f.values)
    dx = f.grid.dx
    return (
        float(np.trapezoid(np.abs(p) ** 2, dx=dx)),
        float(np.trapezoid(np.abs(m) ** 2, dx=dx)),
    )


def normalize(f: WaveField) -> WaveField:
    """Scale each idempotent component to unit trapezoidal L2 norm."""
    p, m = algebra.split4(f.values)
    dx = f.grid.dx
    np2 = float(np.trapezoid(np.abs(p) ** 2, dx=dx))
    nm2 = float(np.trapezoid(np.abs(m) ** 2, dx=dx))
    if np2 <= 0.0 or nm2 <= 0.0:
        raise ZeroNormError("an idempotent component has zero norm")
    return WaveField(
        f.grid, algebra.join4(p / np.sqrt(np2), m / np.sqrt(nm2)), f.time
    )


def scale(f: WaveField, c: Bicomplex | float | int) -> WaveField:
    """Pointwise product with a constant."""
    if isinstance(c, (int, float)):
        return WaveField(f.grid, f.values * float(c), f.time)
    return WaveField(f.grid, algebra.mul4(f.values, c.components), f.time)


def add_fields(f: WaveField, g: WaveField) -> WaveField:
    if f.grid != g.grid or f.time != g.time:
        raise GridMismatchError("fields live on different grids or times")
    return WaveField(f.grid, f.values + g.values, f.time)


def restrict(f: WaveField, i0: int, i1: int) -> WaveField:
    """Field on the sub-grid of nodes i0..i1 inclusive."""
    return WaveField(f.grid.subgrid(i0, i1), f.values[i0 : i1 + 1], f.time)


def first_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    """Second-order d/dx along axis 0, one-sided at the two ends."""
    return np.gradient(values, dx, axis=0, edge_order=2)
