"""Closed-form spectra, eigenfunctions, and weights.

Energy formulas are pinned against independent re-derivations of their
brackets; wavefunctions are validated by substituting them into the full
differential operator with 5-point stencils (O(dx^4), so the stencil error
sits far below the 1e-6 residual bound); the weights close the loop through
metric Gram matrices computed by trapezoid quadrature.
"""
import math

import numpy as np
import pytest

from pseudoherm import models
from pseudoherm.closedform import (
    constant_gauge_dyson_weight,
    constant_gauge_energy,
    harmonic_wavefunction,
    isotonic_alpha0,
    isotonic_beta0,
    isotonic_dyson_weight,
    isotonic_energy,
    isotonic_energy_zero_gauge,
    isotonic_metric_weight,
    isotonic_s,
    isotonic_wavefunction_unnormalized,
    susy_partner_spectra,
    swanson_alpha0,
    swanson_dyson_weight,
    swanson_energy,
    swanson_metric_weight,
    swanson_wavefunction,
)
from pseudoherm.errors import DomainError
from pseudoherm.grid import Grid, weighted_inner_product


def d1_5pt(f, dx):
    return (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / (12.0 * dx)


def d2_5pt(f, dx):
    return (-f[:-4] + 16.0 * f[1:-3] - 30.0 * f[2:-2] + 16.0 * f[3:-1] - f[4:]) / (
        12.0 * dx * dx
    )


# ---------------------------------------------------------------------------
# gauge-coupled harmonic oscillator

def test_swanson_energy_values():
    assert swanson_energy(models.swanson(lam=1.0, sigma=1.0).model, 0) == 0.5
    e3 = swanson_energy(models.swanson(lam=0.6, sigma=0.75).model, 3)
    assert abs(e3 - 2.8) <= 1e-14


def test_swanson_energy_is_harmonic_ladder():
    rng = np.random.default_rng(5)
    for _ in range(10):
        lam = float(rng.uniform(0.1, 2.0))
        sigma = float(rng.uniform(0.1, 1.0))
        m = models.swanson(lam=lam, sigma=sigma).model
        for n in range(6):
            want = (lam / sigma) * (n + 0.5)
            assert abs(swanson_energy(m, n) - want) <= 1e-12 * want


def test_swanson_wavefunction_values():
    m = models.swanson(m=1.0, lam=1.0, sigma=1.0).model
    assert abs(swanson_wavefunction(m, 0, 0.0) - math.pi ** -0.25) <= 1e-14
    for spec in (models.swanson(), models.swanson(m=2.0, lam=0.4, sigma=0.5)):
        assert swanson_wavefunction(spec.model, 1, 0.0) == 0.0


def test_swanson_gaussian_exponent_coefficient():
    # log psi_0 = const + c x^2 with c = (sigma-1) m lam / (2 sigma) = -0.1,
    # equivalently alpha0 * (m lam / sigma)
    m = models.swanson(m=1.0, lam=0.6, sigma=0.75).model
    c = math.log(swanson_wavefunction(m, 0, 2.0) / swanson_wavefunction(m, 0, 0.0)) / 4.0
    assert abs(c - (-0.1)) <= 1e-12
    assert abs(swanson_alpha0(m) * m.m * m.lam / m.sigma - c) <= 1e-12


def test_swanson_alpha0_branch():
    for sigma in (0.05, 0.3, 0.75, 0.99):
        assert swanson_alpha0(models.swanson(sigma=sigma).model) < 0.0
    assert swanson_alpha0(models.swanson(sigma=1.0).model) == 0.0
    assert swanson_alpha0(models.swanson(sigma=0.75).model) == -0.125


def test_swanson_weights():
    m = models.swanson(m=1.0, lam=1.0).model
    assert swanson_metric_weight(m, 0.0) == 1.0
    m06 = models.swanson(m=1.0, lam=0.6).model
    assert abs(swanson_metric_weight(m06, 1.0) - math.exp(-0.6)) <= 1e-15
    assert abs(swanson_dyson_weight(m06, 1.0) - math.exp(-0.3)) <= 1e-15
    x = np.linspace(-3.0, 3.0, 11)
    assert np.allclose(
        swanson_metric_weight(m06, x), swanson_dyson_weight(m06, x) ** 2, rtol=1e-14
    )


def test_swanson_large_n_log_normalization():
    # direct prefactor arithmetic would overflow-ish; the log route must agree
    m = models.swanson(m=1.0, lam=0.6, sigma=0.75).model
    n = 25
    from pseudoherm.specfun import hermite

    y = math.sqrt(m.m * m.lam / m.sigma) * 1.3
    direct = (
        (m.m * m.lam / (m.sigma * math.pi)) ** 0.25
        * math.exp((m.sigma - 1.0) * m.m * m.lam / (2.0 * m.sigma) * 1.3 ** 2)
        * hermite(n, y)
        / math.sqrt(2.0 ** n * math.factorial(n))
    )
    got = swanson_wavefunction(m, n, 1.3)
    assert abs(got - direct) <= 1e-12 * abs(direct)


def test_swanson_ode_residual():
    # H psi = -(1/2m) psi'' + (m capOmega^2 x^2/2 + lam/2) psi + lam x psi'
    for (mm, lam, sigma) in [(1.0, 0.6, 0.75), (2.0, 0.5, 0.9), (1.0, 1.0, 1.0)]:
        model = models.swanson(m=mm, lam=lam, sigma=sigma).model
        dx = 12.0 / 12000
        xs = np.arange(-6.0 - 2 * dx, 6.0 + 2.5 * dx, dx)
        xin = xs[2:-2]
        for n in range(7):
            psi = swanson_wavefunction(model, n, xs)
            e = swanson_energy(model, n)
            h_psi = (
                (-1.0 / (2.0 * mm)) * d2_5pt(psi, dx)
                + (0.5 * mm * model.cap_omega ** 2 * xin ** 2 + 0.5 * lam) * psi[2:-2]
                + lam * xin * d1_5pt(psi, dx)
            )
            resid = np.max(np.abs(h_psi - e * psi[2:-2]))
            assert resid <= 1e-6 * np.max(np.abs(psi[2:-2])), (mm, lam, sigma, n)


def test_swanson_metric_gram():
    # normalized psi_n orthonormal under theta, including the sigma = 1 case
    # where psi_n is a bare polynomial and the metric supplies all decay
    for (lam, sigma) in [(0.6, 0.75), (1.0, 1.0)]:
        model = models.swanson(lam=lam, sigma=sigma).model
        g = Grid(-15.0, 15.0, 20001)
        th = swanson_metric_weight(model, g.x)
        vs = [swanson_wavefunction(model, n, g.x) for n in range(6)]
        gram = np.array(
            [[weighted_inner_product(va, vb, th, g) for vb in vs] for va in vs]
        )
        assert np.max(np.abs(gram - np.eye(6))) <= 1e-6


def test_swanson_wavefunction_rejects_lam_zero():
    with pytest.raises(DomainError):
        swanson_wavefunction(models.swanson(lam=0.0, sigma=0.75).model, 0, 0.0)
    with pytest.raises(DomainError):
        swanson_energy(models.swanson().model, -1)


# ---------------------------------------------------------------------------
# gauge-coupled isotonic oscillator

def test_isotonic_energy_value():
    # independent bracket: s = 5, E_0 = (10/3)(1/2 + sqrt(10)/4 - 3/5)
    m = models.isotonic_from_eta(v0=1.0, eta=3.0, lam0=1.0).model
    assert isotonic_s(m) == 5.0
    want = (10.0 / 3.0) * (0.5 + math.sqrt(10.0) / 4.0 - 0.6)
    assert abs(isotonic_energy(m, 0) - want) <= 1e-15
    assert abs(isotonic_energy(m, 0) - 2.3018980501403163) <= 1e-15


def test_isotonic_energy_hermitian_limit_value():
    m = models.isotonic_from_eta(v0=1.0, eta=0.75, lam0=0.0).model
    assert abs(isotonic_energy(m, 0) - 20.0 / 3.0) <= 1e-13


def test_isotonic_energy_level_spacing():
    rng = np.random.default_rng(17)
    for _ in range(8):
        v0 = float(rng.uniform(0.2, 3.0))
        eta = float(rng.uniform(0.3, 4.0))
        lam0 = float(rng.uniform(0.0, 2.0))
        m = models.isotonic_from_eta(v0=v0, eta=eta, lam0=lam0).model
        gap = 2.0 * v0 * isotonic_s(m) / eta
        for n in range(5):
            got = isotonic_energy(m, n + 1) - isotonic_energy(m, n)
            assert abs(got - gap) <= 1e-12 * gap


def test_isotonic_zero_gauge_consistency():
    # closed formula at lam0 = 0 equals the dedicated ungauged expression
    for eta in (0.5, 0.75, 1.0, 3.0):
        m = models.isotonic_from_eta(v0=1.3, eta=eta, lam0=0.0).model
        for n in range(6):
            a = isotonic_energy(m, n)
            b = isotonic_energy_zero_gauge(1.3, eta, n)
            assert abs(a - b) <= 1e-12 * max(1.0, abs(b))


def test_isotonic_shape_parameters():
    m = models.isotonic_from_eta(v0=1.0, eta=3.0, lam0=1.0).model
    assert isotonic_alpha0(m) == 0.25
    assert abs(isotonic_beta0(m) - (math.sqrt(10.0) + 1.0) / 4.0) <= 1e-16
    assert abs(isotonic_metric_weight(m, 1.0) - math.exp(-9.0 / 8.0)) <= 1e-16
    x = np.linspace(0.1, 4.0, 9)
    assert np.allclose(
        isotonic_metric_weight(m, x), isotonic_dyson_weight(m, x) ** 2, rtol=1e-14
    )
    m0 = models.isotonic_from_eta(v0=1.0, eta=3.0, lam0=0.0).model
    assert np.all(isotonic_metric_weight(m0, x) == 1.0)


def test_isotonic_wavefunction_origin_and_domain():
    m = models.isotonic_from_eta(v0=1.0, eta=3.0, lam0=1.0).model
    small = isotonic_wavefunction_unnormalized(m, 0, 1e-8)
    assert 0.0 < small < 1e-16
    with pytest.raises(DomainError):
        isotonic_wavefunction_unnormalized(m, 0, 0.0)
    with pytest.raises(DomainError):
        isotonic_wavefunction_unnormalized(m, 0, -0.3)
    with pytest.raises(DomainError):
        isotonic_wavefunction_unnormalized(m, -2, 1.0)


def test_isotonic_zero_gauge_wavefunction_reduction():
    # lam0 = 0: psi_n = exp(-eta xi^2/4) xi^(2 beta0) L_n^a(eta xi^2 / 2)
    from pseudoherm.specfun import laguerre

    m = models.isotonic_from_eta(v0=1.0, eta=0.75, lam0=0.0).model
    a = math.sqrt(m.eta ** 2 + 1.0) / 2.0
    b = math.sqrt(m.eta ** 2 + 1.0) / 2.0 + 0.5
    xi = np.linspace(0.05, 6.0, 400)
    for n in range(4):
        want = np.exp(-m.eta * xi ** 2 / 4.0) * xi ** b * laguerre(n, a, m.eta * xi ** 2 / 2.0)
        got = isotonic_wavefunction_unnormalized(m, n, xi)
        assert np.max(np.abs(got - want)) <= 1e-12 * np.max(np.abs(want))


def test_isotonic_ode_residual():
    # H psi = -(4 v0/eta^2) psi'' + (v0 (xi - 1/xi)^2 + v0 lam0/2) psi
    #         + v0 lam0 xi psi'
    for (v0, eta, lam0) in [(1.0, 3.0, 1.0), (1.0, 0.75, 0.0), (2.0, 1.5, 0.5)]:
        model = models.isotonic_from_eta(v0=v0, eta=eta, lam0=lam0).model
        dx = (8.0 - 0.05) / 30000
        xs = np.arange(0.05 - 2 * dx, 8.0 + 2.5 * dx, dx)
        xin = xs[2:-2]
        for n in range(7):
            psi = isotonic_wavefunction_unnormalized(model, n, xs)
            e = isotonic_energy(model, n)
            h_psi = (
                (-4.0 * v0 / eta ** 2) * d2_5pt(psi, dx)
                + (v0 * (xin - 1.0 / xin) ** 2 + 0.5 * v0 * lam0) * psi[2:-2]
                + v0 * lam0 * xin * d1_5pt(psi, dx)
            )
            resid = np.max(np.abs(h_psi - e * psi[2:-2]))
            assert resid <= 1e-6 * np.max(np.abs(psi[2:-2])), (v0, eta, lam0, n)


def test_isotonic_metric_gram_after_normalization():
    for (eta, lam0) in [(3.0, 1.0), (0.75, 0.0)]:
        model = models.isotonic_from_eta(v0=1.0, eta=eta, lam0=lam0).model
        g = Grid(14.0 / 200001, 14.0, 200001)
        th = isotonic_metric_weight(model, g.x)
        vs = []
        for n in range(6):
            p = isotonic_wavefunction_unnormalized(model, n, g.x)
            p = p / math.sqrt(weighted_inner_product(p, p, th, g))
            vs.append(p)
        gram = np.array(
            [[weighted_inner_product(va, vb, th, g) for vb in vs] for va in vs]
        )
        assert np.max(np.abs(gram - np.eye(6))) <= 1e-6


# ---------------------------------------------------------------------------
# constant gauge and susy ladders

def test_constant_gauge_energy_values():
    assert constant_gauge_energy(1.0, 0) == 0.5
    assert constant_gauge_energy(1.0, 5) == 5.5
    assert constant_gauge_energy(0.7, 2) == 0.7 * 2.5
    with pytest.raises(DomainError):
        constant_gauge_energy(0.0, 1)
    with pytest.raises(DomainError):
        constant_gauge_energy(1.0, -1)


def test_constant_gauge_dyson_weight():
    m = models.constant_gauge(omega=1.0, delta=0.3).model
    assert abs(constant_gauge_dyson_weight(m, 2.0) - math.exp(-0.6)) <= 1e-15
    m0 = models.constant_gauge(omega=1.0, delta=0.0).model
    assert constant_gauge_dyson_weight(m0, 5.0) == 1.0


def test_susy_partner_spectra_values():
    assert susy_partner_spectra("harmonic", 1.0, 0) == (1.0, 0.0)
    assert susy_partner_spectra("harmonic", 2.0, 3) == (8.0, 6.0)
    assert susy_partner_spectra("isotonic", 1.0, 0) == (3.0, 3.0)
    for n in range(5):
        e1, e2 = susy_partner_spectra("isotonic", 1.3, n)
        assert e1 == e2 == 1.3 * (2 * n + 3)
        e1, e2 = susy_partner_spectra("harmonic", 0.8, n)
        assert abs(e1 - e2 - 0.8) <= 1e-15
    with pytest.raises(DomainError):
        susy_partner_spectra("morse", 1.0, 0)
    with pytest.raises(DomainError):
        susy_partner_spectra("harmonic", -1.0, 0)


# ---------------------------------------------------------------------------
# plain harmonic reference states

def test_harmonic_wavefunction_normalization_and_value():
    assert abs(harmonic_wavefunction(0, 0.0) - math.pi ** -0.25) <= 1e-15
    g = Grid(-12.0, 12.0, 10001)
    for (m, omega) in [(1.0, 1.0), (2.0, 0.8)]:
        for n in range(5):
            psi = harmonic_wavefunction(n, g.x, m=m, omega=omega)
            norm = weighted_inner_product(psi, psi, np.ones_like(psi), g)
            assert abs(norm - 1.0) <= 1e-8
    with pytest.raises(DomainError):
        harmonic_wavefunction(0, 0.0, m=-1.0)
