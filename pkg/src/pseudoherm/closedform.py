"""Closed-form spectra, eigenfunctions, and similarity weights.

Conventions (hbar = 1 throughout):

* The non-Hermitian operators H act on the plain L^2 inner product; their
  eigenfunctions psi_n are real but not orthonormal there.
* g(x) is the similarity weight mapping H to its Hermitian partner,
  h = g H g^{-1}; theta = g^2 is the metric weight, and {g * psi_n} is an
  orthonormal family for the plain inner product (equivalently {psi_n} for
  the theta-weighted one).
* Isotonic quantities are expressed in the dimensionless coordinate
  xi = x/x0 and the combinations eta, lam0, s = sqrt(eta^2*lam0^2 + 16).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .models import ConstantGaugeModel, IsotonicModel, SwansonModel
from .specfun import hermite, laguerre, log_factorial

__all__ = [
    "harmonic_wavefunction",
    "swanson_energy",
    "swanson_wavefunction",
    "swanson_dyson_weight",
    "swanson_metric_weight",
    "swanson_alpha0",
    "isotonic_s",
    "isotonic_alpha0",
    "isotonic_beta0",
    "isotonic_energy",
    "isotonic_energy_zero_gauge",
    "isotonic_wavefunction_unnormalized",
    "isotonic_dyson_weight",
    "isotonic_metric_weight",
    "constant_gauge_energy",
    "constant_gauge_dyson_weight",
    "susy_partner_spectra",
]


def _check_level(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"level index must be a non-negative integer, got {n!r}")


def harmonic_wavefunction(n: int, x, m: float = 1.0, omega: float = 1.0):
    """Normalized eigenfunction of the Hermitian oscillator p^2/2m + m w^2 x^2/2.

    The prefactor is evaluated in log space so large n does not overflow the
    2^n n! normalization.
    """
    _check_level(n)
    if not (m > 0 and omega > 0):
        raise DomainError("m and omega must be positive")
    y = np.sqrt(m * omega) * np.asarray(x, dtype=float)
    log_norm = 0.25 * math.log(m * omega / math.pi) - 0.5 * (
        n * math.log(2.0) + log_factorial(n)
    )
    return math.exp(log_norm) * np.exp(-0.5 * y * y) * hermite(n, y)


# ---------------------------------------------------------------------------
# Gauge-coupled harmonic oscillator
# ---------------------------------------------------------------------------


def swanson_energy(model: SwansonModel, n: int) -> float:
    """E_n = lam (2n + 1) / (2 sigma); real for every sigma in (0, 1]."""
    _check_level(n)
    return model.lam * (2 * n + 1) / (2.0 * model.sigma)


def swanson_wavefunction(model: SwansonModel, n: int, x):
    """Eigenfunction of the non-Hermitian H, normalized in the metric sense.

    Equals harmonic_wavefunction(n, x, m, omega=lam/sigma) divided by the
    similarity weight; written out directly so the Gaussian exponents combine
    analytically instead of through a quotient of two decaying factors.
    """
    _check_level(n)
    m, lam, sigma = model.m, model.lam, model.sigma
    if lam == 0:
        raise DomainError("lam = 0 collapses the oscillator; no bound states")
    x = np.asarray(x, dtype=float)
    y = np.sqrt(m * lam / sigma) * x
    log_norm = 0.25 * math.log(m * lam / (sigma * math.pi)) - 0.5 * (
        n * math.log(2.0) + log_factorial(n)
    )
    # exponent (sigma - 1) m lam x^2 / (2 sigma): grows relative to the
    # Hermitian partner by the inverse similarity weight exp(+m lam x^2 / 2)
    expo = (sigma - 1.0) * m * lam / (2.0 * sigma) * x * x
    return math.exp(log_norm) * np.exp(expo) * hermite(n, y)


def swanson_dyson_weight(model: SwansonModel, x):
    """g(x) = exp(-m lam x^2 / 2)."""
    x = np.asarray(x, dtype=float)
    return np.exp(-0.5 * model.m * model.lam * x * x)


def swanson_metric_weight(model: SwansonModel, x):
    """theta(x) = g(x)^2 = exp(-m lam x^2)."""
    x = np.asarray(x, dtype=float)
    return np.exp(-model.m * model.lam * x * x)


def swanson_alpha0(model: SwansonModel) -> float:
    """Gaussian shape coefficient (sigma - 1)/2 of psi_n in units of m*omega*x^2.

    Strictly negative on sigma in (0, 1); vanishes at sigma = 1 where H is
    already Hermitian and psi_n reduces to the plain oscillator state.
    """
    return (model.sigma - 1.0) / 2.0


# ---------------------------------------------------------------------------
# Gauge-coupled isotonic oscillator (dimensionless coordinate xi = x/x0)
# ---------------------------------------------------------------------------


def isotonic_s(model: IsotonicModel) -> float:
    return math.sqrt(model.eta**2 * model.lam0**2 + 16.0)


def isotonic_alpha0(model: IsotonicModel) -> float:
    """Gaussian coefficient (s - eta lam0)/8; positive for every lam0 >= 0."""
    return (isotonic_s(model) - model.eta * model.lam0) / 8.0


def isotonic_beta0(model: IsotonicModel) -> float:
    """Power-law exponent (sqrt(eta^2 + 1) + 1)/4 fixing the xi -> 0 falloff."""
    return (math.sqrt(model.eta**2 + 1.0) + 1.0) / 4.0


def isotonic_energy(model: IsotonicModel, n: int) -> float:
    """E_n = (2 v0 s / eta) (n + 1/2 + sqrt(eta^2+1)/4 - eta/s)."""
    _check_level(n)
    eta = model.eta
    s = isotonic_s(model)
    return (2.0 * model.v0 * s / eta) * (
        n + 0.5 + math.sqrt(eta**2 + 1.0) / 4.0 - eta / s
    )


def isotonic_energy_zero_gauge(v0: float, eta: float, n: int) -> float:
    """Ungauged limit E_n = (8 v0/eta)(n + 1/2 + (sqrt(eta^2+1) - eta)/4).

    Kept as a separate formula (not a lam0 -> 0 call) so the two expressions
    can be checked against each other.
    """
    _check_level(n)
    if not (v0 > 0 and eta > 0):
        raise DomainError("v0 and eta must be positive")
    return (8.0 * v0 / eta) * (n + 0.5 + (math.sqrt(eta**2 + 1.0) - eta) / 4.0)


def isotonic_wavefunction_unnormalized(model: IsotonicModel, n: int, xi):
    """psi_n(xi) up to normalization, on the half line xi > 0.

    psi_n = exp(-eta (s - eta lam0) xi^2 / 16) * xi^(2 beta0) * L_n^a(eta s xi^2/8)
    with a = sqrt(eta^2 + 1)/2.  The xi^(2 beta0) factor enforces the
    regular behaviour at the origin, so xi <= 0 is rejected.
    """
    _check_level(n)
    xi = np.asarray(xi, dtype=float)
    if np.any(xi <= 0):
        raise DomainError("isotonic wavefunctions live on xi > 0")
    eta, lam0 = model.eta, model.lam0
    s = isotonic_s(model)
    a = math.sqrt(eta**2 + 1.0) / 2.0
    b = (math.sqrt(eta**2 + 1.0) + 1.0) / 2.0
    u = eta * s * xi * xi / 8.0
    return np.exp(-eta * (s - eta * lam0) * xi * xi / 16.0) * xi**b * laguerre(n, a, u)


def isotonic_dyson_weight(model: IsotonicModel, xi):
    """g(xi) = exp(-lam0 eta^2 xi^2 / 16)."""
    xi = np.asarray(xi, dtype=float)
    return np.exp(-model.lam0 * model.eta**2 * xi * xi / 16.0)


def isotonic_metric_weight(model: IsotonicModel, xi):
    """theta(xi) = exp(-lam0 eta^2 xi^2 / 8)."""
    xi = np.asarray(xi, dtype=float)
    return np.exp(-model.lam0 * model.eta**2 * xi * xi / 8.0)


# ---------------------------------------------------------------------------
# Constant imaginary gauge
# ---------------------------------------------------------------------------


def constant_gauge_energy(omega: float, n: int) -> float:
    """Spectrum is delta-independent: omega (n + 1/2)."""
    _check_level(n)
    if not omega > 0:
        raise DomainError("omega must be positive")
    return omega * (n + 0.5)


def constant_gauge_dyson_weight(model: ConstantGaugeModel, x):
    """g(x) = exp(-delta x); unbounded on one side, so transport overflows
    on wide grids — callers must guard."""
    x = np.asarray(x, dtype=float)
    return np.exp(-model.delta * x)


# ---------------------------------------------------------------------------
# Supersymmetric partner spectra (m = 1)
# ---------------------------------------------------------------------------


def susy_partner_spectra(kind: str, omega: float, n: int):
    """Level-n energies (E_I, E_II) of the partner pair h_I = Q1 Q2, h_II = Q2 Q1.

    harmonic: h_I = HO + w/2 gives E_I = w(n+1); h_II = HO - w/2 gives
    E_II = w n, so the partners are degenerate except for the unpaired E = 0
    ground state of h_II.
    isotonic: h_I is the half-line oscillator shifted by 3w/2 and h_II adds
    the 1/x^2 barrier; both sit at E = w(2n+3) (isospectral, no unpaired
    state).
    """
    _check_level(n)
    if not omega > 0:
        raise DomainError("omega must be positive")
    if kind == "harmonic":
        return omega * (n + 1), omega * n
    if kind == "isotonic":
        return omega * (2 * n + 3), omega * (2 * n + 3)
    raise DomainError(f"unknown susy kind {kind!r}")
