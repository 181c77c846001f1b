"""Finite-difference discretization of every operator in the library.

Conventions:

* Uniform grid of n_points nodes spanning [x_min, x_max]; dx is the node
  spacing.  Dirichlet walls sit one spacing OUTSIDE the stored domain (at
  x_min - dx and x_max + dx), so all stored nodes are unknowns.  A grid of N
  nodes on [dx, L - dx] therefore discretizes the classic zero-boundary
  problem on [0, L] with dx = L/(N+1).
* Second derivatives use the 3-point stencil, first derivatives the central
  2-point stencil; both are O(dx^2).
* Isotonic models are discretized in the dimensionless coordinate
  xi = x/x0, matching the closed forms; their grids must satisfy x_min > 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, LengthError, ShapeError, WeightOverflowError
from .models import (
    ConstantGaugeModel,
    CustomModel,
    IsotonicModel,
    ModelSpec,
    SwansonModel,
)

__all__ = [
    "Grid",
    "SymTridiag",
    "BandedReal",
    "build_hermitian",
    "build_nonhermitian",
    "dyson_weights",
    "build_supercharge",
    "weighted_inner_product",
    "assemble_hermitian",
    "assemble_nonhermitian",
]


@dataclass(frozen=True)
class Grid:
    x_min: float
    x_max: float
    n_points: int
    boundary: str = "dirichlet"

    def __post_init__(self):
        if self.n_points < 3:
            raise DomainError(f"n_points must be >= 3, got {self.n_points}")
        if not self.x_min < self.x_max:
            raise DomainError(f"need x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if self.boundary != "dirichlet":
            raise DomainError(f"unsupported boundary {self.boundary!r}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @cached_property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def refined(self) -> "Grid":
        """Same endpoints with dx halved (2N - 1 nodes) — ratio-test partner."""
        return Grid(self.x_min, self.x_max, 2 * self.n_points - 1, self.boundary)

    @classmethod
    def for_model(cls, spec: ModelSpec, n_points: int = 4001) -> "Grid":
        """Default domain: half-width 12/sqrt(m*omega) for harmonic-type
        models, [dx, 14] in xi for the isotonic one."""
        model = spec.model
        if spec.kind == "swanson":
            omega = model.omega
            if omega <= 0:
                raise DomainError("lam = 0 leaves no length scale; pass an explicit grid")
            half = 12.0 / math.sqrt(model.m * omega)
            return cls(-half, half, n_points)
        if spec.kind == "constant_gauge":
            half = 12.0 / math.sqrt(model.m * model.omega)
            return cls(-half, half, n_points)
        if spec.kind == "isotonic":
            xi_max = 14.0
            dxi = xi_max / n_points
            return cls(dxi, xi_max, n_points)
        raise DomainError("custom models need an explicit grid")


@dataclass(frozen=True)
class SymTridiag:
    """Real symmetric tridiagonal matrix — the Hermitian equivalents h."""

    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diagonal, dtype=float)
        e = np.asarray(self.off_diagonal, dtype=float)
        if d.ndim != 1 or e.shape != (d.shape[0] - 1,):
            raise ShapeError("SymTridiag needs diagonal (n,) and off_diagonal (n-1,)")
        object.__setattr__(self, "diagonal", d)
        object.__setattr__(self, "off_diagonal", e)

    @property
    def n(self) -> int:
        return self.diagonal.shape[0]

    def matvec(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape != (self.n,):
            raise LengthError(f"expected vector of length {self.n}")
        y = self.diagonal * v
        y[:-1] += self.off_diagonal * v[1:]
        y[1:] += self.off_diagonal * v[:-1]
        return y


@dataclass(frozen=True)
class BandedReal:
    """Real tridiagonal matrix with independent sub/super bands — the
    non-Hermitian H in position space."""

    sub: np.ndarray
    main: np.ndarray
    sup: np.ndarray
    symmetric: bool = False

    def __post_init__(self):
        sub = np.asarray(self.sub, dtype=float)
        main = np.asarray(self.main, dtype=float)
        sup = np.asarray(self.sup, dtype=float)
        n = main.shape[0]
        if main.ndim != 1 or sub.shape != (n - 1,) or sup.shape != (n - 1,):
            raise ShapeError("BandedReal needs main (n,) and sub/sup (n-1,)")
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "main", main)
        object.__setattr__(self, "sup", sup)

    @property
    def n(self) -> int:
        return self.main.shape[0]

    def matvec(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape != (self.n,):
            raise LengthError(f"expected vector of length {self.n}")
        y = self.main * v
        y[:-1] += self.sup * v[1:]
        y[1:] += self.sub * v[:-1]
        return y


def assemble_hermitian(c2: float, potential: np.ndarray, grid: Grid) -> SymTridiag:
    """-c2 d^2/dx^2 + potential on the grid's interior-node convention."""
    inv = c2 / grid.dx**2
    d = 2.0 * inv + np.asarray(potential, dtype=float)
    e = np.full(grid.n_points - 1, -inv)
    return SymTridiag(d, e)


def assemble_nonhermitian(c2: float, potential, gauge, grid: Grid) -> BandedReal:
    """-c2 d^2/dx^2 + potential + gauge(x) d/dx, central differences."""
    inv = c2 / grid.dx**2
    potential = np.asarray(potential, dtype=float)
    gauge = np.asarray(gauge, dtype=float)
    main = 2.0 * inv + potential
    sup = -inv + gauge[:-1] / (2.0 * grid.dx)
    sub = -inv - gauge[1:] / (2.0 * grid.dx)
    return BandedReal(sub, main, sup, symmetric=bool(np.all(gauge == 0.0)))


def _check_isotonic_domain(grid: Grid) -> None:
    if grid.x_min <= 0:
        raise DomainError("isotonic model needs a grid with x_min > 0")


def _gauge_derivative(model: CustomModel, x: np.ndarray, a: np.ndarray, dx: float) -> np.ndarray:
    if model.da_imag is not None:
        return np.broadcast_to(np.asarray(model.da_imag(x), dtype=float), x.shape).copy()
    da = np.empty_like(a)
    da[1:-1] = (a[2:] - a[:-2]) / (2.0 * dx)
    da[0] = (-3.0 * a[0] + 4.0 * a[1] - a[2]) / (2.0 * dx)
    da[-1] = (3.0 * a[-1] - 4.0 * a[-2] + a[-3]) / (2.0 * dx)
    return da


def build_hermitian(spec: ModelSpec, grid: Grid) -> SymTridiag:
    """Discretize the Hermitian equivalent h of the model.

    Swanson: h = -(1/2m) d^2/dx^2 + m omega^2 x^2 / 2 with omega = lam/sigma.
    Isotonic (in xi): h = -(4 v0/eta^2) d^2/dxi^2 + v0 (xi - 1/xi)^2
                          + v0 eta^2 lam0^2 xi^2 / 16.
    Constant gauge / custom: kinetic + V(x) alone.
    """
    x = grid.x
    model = spec.model
    if spec.kind == "swanson":
        omega = model.omega
        u = 0.5 * model.m * omega**2 * x * x
        return assemble_hermitian(1.0 / (2.0 * model.m), u, grid)
    if spec.kind == "isotonic":
        _check_isotonic_domain(grid)
        eta, lam0 = model.eta, model.lam0
        u = model.v0 * ((x - 1.0 / x) ** 2 + eta**2 * lam0**2 * x * x / 16.0)
        return assemble_hermitian(4.0 * model.v0 / eta**2, u, grid)
    if spec.kind == "constant_gauge":
        u = 0.5 * model.m * model.omega**2 * x * x
        return assemble_hermitian(1.0 / (2.0 * model.m), u, grid)
    if spec.kind == "custom":
        u = np.broadcast_to(np.asarray(model.v(x), dtype=float), x.shape)
        return assemble_hermitian(1.0 / (2.0 * model.m), u, grid)
    raise DomainError(f"unknown model kind {spec.kind!r}")


def build_nonhermitian(spec: ModelSpec, grid: Grid) -> BandedReal:
    """Discretize the non-Hermitian H (original potential plus gauge terms).

    Swanson: kinetic + m cap_omega^2 x^2/2 + lam (x d/dx + 1/2).
    Isotonic (in xi): kinetic + v0 (xi - 1/xi)^2 + v0 lam0 (xi d/dxi + 1/2).
    Constant gauge: kinetic + V - delta^2/(2m) + (delta/m) d/dx.
    Custom with A = -i a(x): kinetic + V - a^2/(2m) + a'/(2m) + (a/m) d/dx.
    """
    x = grid.x
    model = spec.model
    if spec.kind == "swanson":
        u = 0.5 * model.m * model.cap_omega**2 * x * x + 0.5 * model.lam
        b = model.lam * x
        return assemble_nonhermitian(1.0 / (2.0 * model.m), u, b, grid)
    if spec.kind == "isotonic":
        _check_isotonic_domain(grid)
        lam0, v0 = model.lam0, model.v0
        u = v0 * (x - 1.0 / x) ** 2 + 0.5 * v0 * lam0
        b = v0 * lam0 * x
        return assemble_nonhermitian(4.0 * v0 / model.eta**2, u, b, grid)
    if spec.kind == "constant_gauge":
        m, delta = model.m, model.delta
        u = 0.5 * m * model.omega**2 * x * x - delta**2 / (2.0 * m)
        b = np.full(grid.n_points, delta / m)
        return assemble_nonhermitian(1.0 / (2.0 * m), u, b, grid)
    if spec.kind == "custom":
        m = model.m
        v = np.broadcast_to(np.asarray(model.v(x), dtype=float), x.shape)
        a = np.broadcast_to(np.asarray(model.a_imag(x), dtype=float), x.shape).copy()
        da = _gauge_derivative(model, x, a, grid.dx)
        u = v - a * a / (2.0 * m) + da / (2.0 * m)
        return assemble_nonhermitian(1.0 / (2.0 * m), u, a / m, grid)
    raise DomainError(f"unknown model kind {spec.kind!r}")


def dyson_weights(spec: ModelSpec, grid: Grid) -> np.ndarray:
    """Similarity weight g(x) on the grid nodes; h = g H g^{-1}.

    For custom models g = exp(-cumulative trapezoid of a_imag), anchored at
    the first node (the free constant rescales g globally and drops out of
    every conjugation and normalization).
    """
    x = grid.x
    model = spec.model
    if spec.kind == "swanson":
        w = np.exp(-0.5 * model.m * model.lam * x * x)
    elif spec.kind == "isotonic":
        _check_isotonic_domain(grid)
        w = np.exp(-model.lam0 * model.eta**2 * x * x / 16.0)
    elif spec.kind == "constant_gauge":
        w = np.exp(-model.delta * x)
    elif spec.kind == "custom":
        a = np.broadcast_to(np.asarray(model.a_imag(x), dtype=float), x.shape)
        integral = np.concatenate(
            [[0.0], np.cumsum(0.5 * (a[1:] + a[:-1]) * grid.dx)]
        )
        with np.errstate(over="ignore"):  # overflow is caught as inf below
            w = np.exp(-integral)
    else:
        raise DomainError(f"unknown model kind {spec.kind!r}")
    if not np.all(np.isfinite(w)):
        raise WeightOverflowError("dyson weight overflowed; shrink the domain")
    if np.any(w == 0.0):
        raise WeightOverflowError("dyson weight underflowed to zero; shrink the domain")
    return w


def build_supercharge(w_kind: str, omega: float, lam: float, grid: Grid, which: str) -> BandedReal:
    """First-order supercharge Q1 = (1/sqrt2) d/dx + K + W or
    Q2 = -(1/sqrt2) d/dx - K + W, with K = -lam x / sqrt2 and W the harmonic
    (omega x / sqrt2) or isotonic ((omega x + 1/x)/sqrt2) superpotential; m = 1.
    """
    if not omega > 0:
        raise DomainError("omega must be positive")
    if lam < 0:
        raise DomainError("lam must be non-negative")
    x = grid.x
    if w_kind == "harmonic":
        w = omega * x / math.sqrt(2.0)
    elif w_kind == "isotonic":
        _check_isotonic_domain(grid)
        w = (omega * x + 1.0 / x) / math.sqrt(2.0)
    else:
        raise DomainError(f"unknown superpotential kind {w_kind!r}")
    k = -lam * x / math.sqrt(2.0)
    deriv = 1.0 / (math.sqrt(2.0) * 2.0 * grid.dx)
    n = grid.n_points
    if which == "Q1":
        main = k + w
        sup = np.full(n - 1, deriv)
        sub = np.full(n - 1, -deriv)
    elif which == "Q2":
        main = w - k
        sup = np.full(n - 1, -deriv)
        sub = np.full(n - 1, deriv)
    else:
        raise DomainError(f"which must be 'Q1' or 'Q2', got {which!r}")
    return BandedReal(sub, main, sup, symmetric=False)


def weighted_inner_product(f, h2, weight, grid: Grid) -> float:
    """Trapezoid value of the metric inner product (f, weight * h2)."""
    f = np.asarray(f, dtype=float)
    h2 = np.asarray(h2, dtype=float)
    weight = np.asarray(weight, dtype=float)
    n = grid.n_points
    for name, arr in (("f", f), ("h2", h2), ("weight", weight)):
        if arr.shape != (n,):
            raise LengthError(f"{name} has shape {arr.shape}, expected ({n},)")
    integrand = f * weight * h2
    return float(np.trapezoid(integrand, dx=grid.dx))
