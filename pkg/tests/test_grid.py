"""Discretization layer: grids, assembled operators, weights, supercharges.

Matrix entries are checked against hand-computed stencil values; the
virtual-wall Dirichlet convention is pinned by the exactly solvable free
particle, whose discrete eigenvalues are (1 - cos(k pi/(N+1)))/(m dx^2).
"""
import math

import numpy as np
import pytest

from pseudoherm import models
from pseudoherm.bandops import BandMatrix
from pseudoherm.eigensolve import tridiag_eigen
from pseudoherm.errors import (
    DomainError,
    LengthError,
    ShapeError,
    WeightOverflowError,
)
from pseudoherm.grid import (
    BandedReal,
    Grid,
    SymTridiag,
    assemble_hermitian,
    assemble_nonhermitian,
    build_hermitian,
    build_nonhermitian,
    build_supercharge,
    dyson_weights,
    weighted_inner_product,
)


# ---------------------------------------------------------------------------
# Grid basics

def test_grid_spacing_and_nodes():
    g = Grid(-2.0, 2.0, 5)
    assert g.dx == 1.0
    assert np.array_equal(g.x, np.array([-2.0, -1.0, 0.0, 1.0, 2.0]))


def test_grid_refined_halves_spacing():
    g = Grid(-3.0, 5.0, 401)
    r = g.refined()
    assert r.n_points == 2 * g.n_points - 1
    assert (r.x_min, r.x_max) == (g.x_min, g.x_max)
    assert abs(r.dx - g.dx / 2.0) <= 1e-15 * g.dx


def test_grid_validation():
    with pytest.raises(DomainError):
        Grid(0.0, 1.0, 2)
    with pytest.raises(DomainError):
        Grid(1.0, 1.0, 5)
    with pytest.raises(DomainError):
        Grid(2.0, 1.0, 5)
    with pytest.raises(DomainError):
        Grid(0.0, 1.0, 5, boundary="periodic")


def test_grid_for_model_defaults():
    g = Grid.for_model(models.swanson(m=1.0, lam=0.6, sigma=0.75))
    assert g.n_points == 4001
    assert abs(g.x_max - 12.0 / math.sqrt(0.8)) <= 1e-12
    assert g.x_min == -g.x_max

    gc = Grid.for_model(models.constant_gauge(omega=1.0, delta=0.4), 801)
    assert (gc.x_min, gc.x_max, gc.n_points) == (-12.0, 12.0, 801)

    gi = Grid.for_model(models.isotonic_from_eta(v0=1.0, eta=3.0, lam0=1.0), 6001)
    assert gi.x_max == 14.0
    assert abs(gi.x_min - 14.0 / 6001) <= 1e-15
    assert gi.x_min > 0

    with pytest.raises(DomainError):
        Grid.for_model(models.swanson(lam=0.0, sigma=0.75))
    with pytest.raises(DomainError):
        Grid.for_model(models.custom(lambda x: 0.0 * x, lambda x: 0.0 * x))


# ---------------------------------------------------------------------------
# matrix containers

def test_symtridiag_matvec_and_shapes():
    t = SymTridiag([2.0, 2.0, 2.0], [-1.0, -1.0])
    assert np.array_equal(t.matvec([1.0, 0.0, 0.0]), [2.0, -1.0, 0.0])
    with pytest.raises(LengthError):
        t.matvec([1.0, 2.0])
    with pytest.raises(ShapeError):
        SymTridiag([1.0, 2.0], [0.5, 0.5])


def test_bandedreal_matvec_and_shapes():
    b = BandedReal([1.0, 2.0], [5.0, 5.0, 5.0], [3.0, 4.0])
    # row 0: 5*v0 + 3*v1 ; row 1: 1*v0 + 5*v1 + 4*v2 ; row 2: 2*v1 + 5*v2
    assert np.array_equal(b.matvec([1.0, 1.0, 1.0]), [8.0, 10.0, 7.0])
    with pytest.raises(LengthError):
        b.matvec([1.0])
    with pytest.raises(ShapeError):
        BandedReal([1.0], [1.0, 1.0, 1.0], [1.0, 1.0])


# ---------------------------------------------------------------------------
# assembled operators

def test_free_particle_spectrum_virtual_walls():
    # custom model, V = 0, grid on [dx, pi - dx]: walls sit exactly at 0, pi
    n = 199
    dx = math.pi / (n + 1)
    g = Grid(dx, math.pi - dx, n)
    spec = models.custom(lambda x: 0.0 * x, lambda x: 0.0 * x, m=1.0)
    t = build_hermitian(spec, g)
    es = tridiag_eigen(t, 12)
    for k in range(1, 13):
        want = (1.0 - math.cos(k * math.pi / (n + 1))) / (1.0 * g.dx ** 2)
        assert abs(es.eigenvalues[k - 1] - want) <= 1e-10 * want


def test_swanson_nonhermitian_entries():
    spec = models.swanson(m=1.0, lam=0.6, sigma=0.75)
    g = Grid(-5.0, 5.0, 101)
    h = build_nonhermitian(spec, g)
    x = g.x
    inv = 0.5 / g.dx ** 2
    # capOmega^2 = lam^2 (1/sigma^2 - 1) = 0.28
    assert abs(spec.model.cap_omega ** 2 - 0.28) <= 1e-15
    want_main = 2.0 * inv + 0.14 * x ** 2 + 0.3
    assert np.max(np.abs(h.main - want_main)) <= 1e-12 * np.max(np.abs(want_main))
    want_sup = -inv + 0.6 * x[:-1] / (2.0 * g.dx)
    want_sub = -inv - 0.6 * x[1:] / (2.0 * g.dx)
    assert np.max(np.abs(h.sup - want_sup)) <= 1e-9
    assert np.max(np.abs(h.sub - want_sub)) <= 1e-9
    assert not h.symmetric


def test_swanson_hermitian_entries():
    spec = models.swanson(m=2.0, lam=0.6, sigma=0.75)
    g = Grid(-4.0, 4.0, 81)
    t = build_hermitian(spec, g)
    omega = 0.8
    inv = (1.0 / 4.0) / g.dx ** 2
    want = 2.0 * inv + 0.5 * 2.0 * omega ** 2 * g.x ** 2
    assert np.max(np.abs(t.diagonal - want)) <= 1e-12 * np.max(np.abs(want))
    assert np.allclose(t.off_diagonal, -inv, rtol=0, atol=1e-15)


def test_isotonic_operators_and_domain():
    spec = models.isotonic_from_eta(v0=2.0, eta=3.0, lam0=1.0)
    g = Grid(0.1, 10.0, 100)
    t = build_hermitian(spec, g)
    # at xi = 1: (xi - 1/xi)^2 = 0, extra term v0 eta^2 lam0^2 /16 = 0.5625 v0
    i = int(np.argmin(np.abs(g.x - 1.0)))
    xi = g.x[i]
    inv = (4.0 * 2.0 / 9.0) / g.dx ** 2
    want = 2.0 * inv + 2.0 * ((xi - 1.0 / xi) ** 2 + 9.0 * xi ** 2 / 16.0)
    assert abs(t.diagonal[i] - want) <= 1e-12 * abs(want)

    h = build_nonhermitian(spec, g)
    want_main = 2.0 * inv + 2.0 * (xi - 1.0 / xi) ** 2 + 0.5 * 2.0 * 1.0
    assert abs(h.main[i] - want_main) <= 1e-12 * abs(want_main)

    bad = Grid(-1.0, 10.0, 50)
    for fn in (build_hermitian, build_nonhermitian, dyson_weights):
        with pytest.raises(DomainError):
            fn(spec, bad)


def test_constant_gauge_entries():
    spec = models.constant_gauge(omega=1.2, delta=0.4, m=2.0)
    g = Grid(-6.0, 6.0, 121)
    h = build_nonhermitian(spec, g)
    inv = 0.25 / g.dx ** 2
    want_main = 2.0 * inv + 1.44 * g.x ** 2 - 0.16 / 4.0
    assert np.max(np.abs(h.main - want_main)) <= 1e-12 * np.max(np.abs(want_main))
    assert np.allclose(h.sup, -inv + 0.2 / (2.0 * g.dx), rtol=1e-14)
    assert np.allclose(h.sub, -inv - 0.2 / (2.0 * g.dx), rtol=1e-14)


def test_zero_gauge_collapses_to_hermitian():
    g = Grid(-6.0, 6.0, 121)
    spec = models.constant_gauge(omega=1.2, delta=0.0, m=2.0)
    h = build_nonhermitian(spec, g)
    t = build_hermitian(spec, g)
    assert h.symmetric
    assert np.array_equal(h.main, t.diagonal)
    assert np.array_equal(h.sup, t.off_diagonal)
    assert np.array_equal(h.sub, t.off_diagonal)


def test_custom_gauge_terms_follow_derivative():
    # a(x) = c x has a' = c; V_eff = V - a^2/2m + a'/2m
    c, m = 0.7, 1.3
    g = Grid(-3.0, 3.0, 61)
    spec = models.custom(lambda x: 0.0 * x, lambda x: c * x, m=m)
    h = build_nonhermitian(spec, g)
    inv = (1.0 / (2.0 * m)) / g.dx ** 2
    want_main = 2.0 * inv - (c * g.x) ** 2 / (2.0 * m) + c / (2.0 * m)
    assert np.max(np.abs(h.main - want_main)) <= 1e-9


def test_assemble_symmetric_flag():
    g = Grid(-1.0, 1.0, 11)
    b = assemble_nonhermitian(0.5, np.zeros(11), np.zeros(11), g)
    assert b.symmetric
    b2 = assemble_nonhermitian(0.5, np.zeros(11), np.ones(11), g)
    assert not b2.symmetric
    t = assemble_hermitian(0.5, np.zeros(11), g)
    assert np.array_equal(t.diagonal, b.main)


# ---------------------------------------------------------------------------
# dyson weights

def test_dyson_weight_values():
    g = Grid(-2.0, 2.0, 5)
    w = dyson_weights(models.swanson(m=1.0, lam=0.6, sigma=0.75), g)
    assert abs(w[3] - math.exp(-0.3)) <= 1e-15  # x = 1

    gi = Grid(0.5, 2.0, 4)
    wi = dyson_weights(models.isotonic_from_eta(v0=1.0, eta=4.0, lam0=1.0), gi)
    assert abs(wi[1] - math.exp(-1.0)) <= 1e-15  # xi = 1, eta^2/16 = 1

    gc = Grid(-2.0, 2.0, 5)
    wc = dyson_weights(models.constant_gauge(omega=1.0, delta=0.5), gc)
    assert abs(wc[0] - math.exp(1.0)) <= 1e-14  # x = -2


def test_dyson_weights_custom_matches_closed_form():
    # a(x) = m lam x reproduces the gauge-model weight up to a global factor
    m_, lam = 1.0, 0.6
    g = Grid(-8.0, 8.0, 4001)
    spec = models.custom(lambda x: 0.0 * x, lambda x: m_ * lam * x, m=m_)
    w = dyson_weights(spec, g)
    want = np.exp(-0.5 * m_ * lam * (g.x ** 2 - g.x[0] ** 2))
    assert np.max(np.abs(w - want) / want) <= 1e-5


def test_dyson_weights_overflow_guards():
    wide = Grid(-60.0, 60.0, 301)
    with pytest.raises(WeightOverflowError):
        dyson_weights(models.swanson(m=1.0, lam=3.0, sigma=0.75), wide)
    spec = models.custom(lambda x: 0.0 * x, lambda x: 40.0 * x, m=1.0)
    with pytest.raises(WeightOverflowError):
        dyson_weights(spec, wide)


# ---------------------------------------------------------------------------
# supercharges

def test_supercharge_diagonals():
    g = Grid(0.25, 4.0, 16)
    q1 = build_supercharge("harmonic", 1.0, 0.4, g, "Q1")
    want = (1.0 - 0.4) * g.x / math.sqrt(2.0)
    assert np.max(np.abs(q1.main - want)) <= 1e-14
    # isotonic with omega = lam: W + K = 1/(sqrt2 x)
    qi = build_supercharge("isotonic", 0.7, 0.7, g, "Q1")
    assert np.max(np.abs(qi.main - 1.0 / (math.sqrt(2.0) * g.x))) <= 1e-14
    d = 1.0 / (math.sqrt(2.0) * 2.0 * g.dx)
    assert np.allclose(q1.sup, d) and np.allclose(q1.sub, -d)


def test_supercharge_adjoint_pair_at_lam_zero():
    g = Grid(-3.0, 3.0, 31)
    q1 = build_supercharge("harmonic", 1.1, 0.0, g, "Q1")
    q2 = build_supercharge("harmonic", 1.1, 0.0, g, "Q2")
    assert np.array_equal(q1.main, q2.main)
    assert np.array_equal(q1.sup, -q2.sup)
    assert np.array_equal(q1.sub, -q2.sub)
    # Q2 = Q1^T exactly
    assert np.array_equal(q2.sub, q1.sup)
    assert np.array_equal(q2.sup, q1.sub)


def test_supercharge_validation():
    g = Grid(-3.0, 3.0, 31)
    with pytest.raises(DomainError):
        build_supercharge("harmonic", 0.0, 0.1, g, "Q1")
    with pytest.raises(DomainError):
        build_supercharge("harmonic", 1.0, -0.1, g, "Q1")
    with pytest.raises(DomainError):
        build_supercharge("morse", 1.0, 0.1, g, "Q1")
    with pytest.raises(DomainError):
        build_supercharge("harmonic", 1.0, 0.1, g, "Q3")
    with pytest.raises(DomainError):
        build_supercharge("isotonic", 1.0, 0.1, g, "Q1")  # grid crosses zero


# ---------------------------------------------------------------------------
# inner product

def test_weighted_inner_product_polynomial():
    g = Grid(0.0, 1.0, 1001)
    f = g.x
    val = weighted_inner_product(f, f, np.ones_like(f), g)
    assert abs(val - 1.0 / 3.0) <= 1e-6
    val_w = weighted_inner_product(f, f, g.x, g)  # integral of x^3
    assert abs(val_w - 0.25) <= 1e-6


def test_weighted_inner_product_shapes():
    g = Grid(0.0, 1.0, 11)
    with pytest.raises(LengthError):
        weighted_inner_product(np.ones(10), np.ones(11), np.ones(11), g)
    with pytest.raises(LengthError):
        weighted_inner_product(np.ones(11), np.ones(11), np.ones(12), g)


# ---------------------------------------------------------------------------
# band matrices backing the SUSY products

def test_bandmatrix_roundtrip_and_product():
    rng = np.random.default_rng(3)
    n = 12
    sub, main, sup = rng.normal(size=n - 1), rng.normal(size=n), rng.normal(size=n - 1)
    b = BandMatrix.from_tridiagonal(sub, main, sup)
    dense = np.diag(sub, -1) + np.diag(main) + np.diag(sup, 1)
    assert np.allclose(b.to_dense(), dense)

    c = BandMatrix.from_tridiagonal(rng.normal(size=n - 1), rng.normal(size=n), rng.normal(size=n - 1))
    prod = b @ c
    assert np.allclose(prod.to_dense(), dense @ c.to_dense(), atol=1e-12)
    diff = b - c
    assert np.allclose(diff.to_dense(), dense - c.to_dense(), atol=1e-14)
    assert abs(b.frobenius() - np.linalg.norm(dense)) <= 1e-12
    v = rng.normal(size=n)
    assert np.allclose(b.matvec(v), dense @ v, atol=1e-12)


def test_bandmatrix_shape_errors():
    b = BandMatrix.from_tridiagonal([1.0], [1.0, 1.0], [1.0])
    c = BandMatrix.from_tridiagonal([1.0, 1.0], [1.0, 1.0, 1.0], [1.0, 1.0])
    with pytest.raises(ShapeError):
        _ = b @ c
    with pytest.raises(ShapeError):
        b.set_diag(5, [1.0, 1.0])
    with pytest.raises(ShapeError):
        BandMatrix(0)
