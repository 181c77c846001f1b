"""Model parameter records shared by the closed-form and grid layers.

All models describe operators of the form

    H = p^2/(2m) + V(x) + gauge terms from A(x) = -i * A_imag(x),

with a real similarity weight g(x) = exp(-integral of A_imag) mapping H to a
Hermitian partner h.  The records only hold parameters and derived scales;
evaluation lives in `closedform` (analytic) and `grid` (discretized).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainError

__all__ = [
    "SwansonModel",
    "IsotonicModel",
    "ConstantGaugeModel",
    "CustomModel",
    "ModelSpec",
    "swanson",
    "isotonic",
    "isotonic_from_eta",
    "constant_gauge",
    "custom",
]


@dataclass(frozen=True)
class SwansonModel:
    """Gauge-coupled harmonic oscillator, parametrized by (m, lam, sigma).

    lam is the gauge strength (inverse length at hbar = 1) and sigma in (0, 1]
    fixes the frequency ratio: the Hermitian partner oscillates at
    omega = lam/sigma while the non-Hermitian form carries the reduced
    frequency cap_omega = lam*omega_r with omega_r = sqrt(1/sigma^2 - 1).
    Only the oscillatory regime (real omega_r) is representable.
    """

    m: float = 1.0
    lam: float = 0.6
    sigma: float = 0.75

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")
        if self.lam < 0:
            raise DomainError(f"gauge strength must be non-negative, got {self.lam}")
        if not 0 < self.sigma <= 1:
            raise DomainError(f"sigma must lie in (0, 1], got {self.sigma}")

    @property
    def omega(self) -> float:
        """Frequency of the Hermitian partner oscillator."""
        return self.lam / self.sigma

    @property
    def omega_r(self) -> float:
        return math.sqrt(1.0 / self.sigma**2 - 1.0)

    @property
    def cap_omega(self) -> float:
        """Frequency appearing in the non-Hermitian potential."""
        return self.lam * self.omega_r

    @property
    def gauge_slope(self) -> float:
        """Slope of A_imag(x) = gauge_slope * x."""
        return self.m * self.lam


@dataclass(frozen=True)
class IsotonicModel:
    """Gauge-coupled isotonic oscillator V = v0 (x/x0 - x0/x)^2 on x > 0.

    Everything downstream works in the dimensionless coordinate xi = x/x0
    with the two derived combinations eta^2 = 8 m v0 x0^2 and lam0 = lam/v0.
    """

    v0: float = 1.0
    x0: float = 1.0
    m: float = 1.0
    lam: float = 0.0

    def __post_init__(self):
        if not self.v0 > 0:
            raise DomainError(f"well depth must be positive, got {self.v0}")
        if not self.x0 > 0:
            raise DomainError(f"well position must be positive, got {self.x0}")
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")
        if self.lam < 0:
            raise DomainError(f"gauge strength must be non-negative, got {self.lam}")

    @classmethod
    def from_eta(cls, v0: float, eta: float, lam0: float, m: float = 1.0) -> "IsotonicModel":
        """Build the record from the dimensionless pair (eta, lam0)."""
        if not eta > 0:
            raise DomainError(f"eta must be positive, got {eta}")
        x0 = eta / math.sqrt(8.0 * m * v0)
        return cls(v0=v0, x0=x0, m=m, lam=lam0 * v0)

    @property
    def eta(self) -> float:
        return math.sqrt(8.0 * self.m * self.v0) * self.x0

    @property
    def lam0(self) -> float:
        return self.lam / self.v0


@dataclass(frozen=True)
class ConstantGaugeModel:
    """Harmonic oscillator with constant imaginary gauge A = -i*delta.

    Breaks PT symmetry for delta != 0 yet stays isospectral to the plain
    oscillator: the similarity weight is exp(-delta*x).
    """

    omega: float = 1.0
    delta: float = 0.0
    m: float = 1.0

    def __post_init__(self):
        if not self.omega > 0:
            raise DomainError(f"frequency must be positive, got {self.omega}")
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")


@dataclass(frozen=True)
class CustomModel:
    """User-supplied potential and imaginary gauge profile.

    v and a_imag are callables evaluated on the grid.  da_imag (derivative of
    a_imag) may be omitted, in which case the grid layer differences the
    samples.  v_coeffs / a_coeffs optionally carry exponent -> coefficient
    maps (Laurent allowed) so the symbolic parity check can run; without them
    the model is treated as non-polynomial.
    """

    v: Callable[[object], object]
    a_imag: Callable[[object], object]
    m: float = 1.0
    da_imag: Optional[Callable[[object], object]] = None
    v_coeffs: Optional[dict] = None
    a_coeffs: Optional[dict] = None

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")


_KINDS = ("swanson", "isotonic", "constant_gauge", "custom")


@dataclass(frozen=True)
class ModelSpec:
    """Tagged union of the model records, as consumed by the grid layer."""

    kind: str
    model: object

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown model kind {self.kind!r}; expected one of {_KINDS}")
        expected = {
            "swanson": SwansonModel,
            "isotonic": IsotonicModel,
            "constant_gauge": ConstantGaugeModel,
            "custom": CustomModel,
        }[self.kind]
        if not isinstance(self.model, expected):
            raise DomainError(f"kind {self.kind!r} needs a {expected.__name__}")

    @classmethod
    def swanson(cls, m: float = 1.0, lam: float = 0.6, sigma: float = 0.75) -> "ModelSpec":
        return cls("swanson", SwansonModel(m=m, lam=lam, sigma=sigma))

    @classmethod
    def isotonic(cls, v0: float = 1.0, x0: float = 1.0, m: float = 1.0, lam: float = 0.0) -> "ModelSpec":
        return cls("isotonic", IsotonicModel(v0=v0, x0=x0, m=m, lam=lam))

    @classmethod
    def isotonic_from_eta(cls, v0: float, eta: float, lam0: float, m: float = 1.0) -> "ModelSpec":
        return cls("isotonic", IsotonicModel.from_eta(v0, eta, lam0, m=m))

    @classmethod
    def constant_gauge(cls, omega: float = 1.0, delta: float = 0.0, m: float = 1.0) -> "ModelSpec":
        return cls("constant_gauge", ConstantGaugeModel(omega=omega, delta=delta, m=m))

    @classmethod
    def custom(cls, v, a_imag, m: float = 1.0, **kwargs) -> "ModelSpec":
        return cls("custom", CustomModel(v=v, a_imag=a_imag, m=m, **kwargs))


# module-level spellings of the ModelSpec constructors
swanson = ModelSpec.swanson
isotonic = ModelSpec.isotonic
isotonic_from_eta = ModelSpec.isotonic_from_eta
constant_gauge = ModelSpec.constant_gauge
custom = ModelSpec.custom
