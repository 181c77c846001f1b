"""Identity checks: pseudo-Hermiticity, metric Gram matrices, SUSY
factorization/intertwining, closed-form-versus-grid spectra, PT symmetry.

Residuals whose continuum identity is exact are reported with a two-grid
ratio: halving dx must shrink the residual by about 4 (second-order
stencils), and the reports encode |ratio - 4| <= 0.5 so a CheckReport stays
a plain value/tolerance pair.

Residual form: matrix identities are probed by their action on a fixed
smooth bump (see smooth_probe) rather than by entrywise Frobenius norms.
The entrywise residual of Theta H - H^T Theta mixes the O(dx) entry decay
with the O(1/dx^2) operator scale and falls off as dx^3, which no dx^2
window can bracket; the action on a smooth vector isolates the consistent
O(dx^2) part.  probe="matrix" keeps the raw Frobenius form available.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bandops import BandMatrix
from .closedform import (
    constant_gauge_energy,
    isotonic_energy,
    susy_partner_spectra,
    swanson_energy,
)
from .eigensolve import tridiag_eigen
from .errors import (
    DomainError,
    ResolutionError,
    UnsupportedModelError,
)
from .grid import (
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
from .models import ModelSpec

__all__ = [
    "CheckReport",
    "smooth_probe",
    "pseudo_hermiticity_residual",
    "pseudo_hermiticity_ratio",
    "metric_gram",
    "gram_identity_report",
    "susy_checks",
    "closedform_vs_grid",
    "pt_symmetry_check",
]

RATIO_TARGET = 4.0
RATIO_HALF_WIDTH = 0.5


@dataclass(frozen=True)
class CheckReport:
    name: str
    value: float
    tolerance: float
    passed: bool
    context: dict = field(default_factory=dict)


def report(name: str, value: float, tolerance: float, context: dict | None = None) -> CheckReport:
    value = float(value)
    return CheckReport(name, value, float(tolerance), bool(value <= tolerance), context or {})


def _ratio_report(name: str, coarse: float, fine: float, context: dict | None = None) -> CheckReport:
    ctx = dict(context or {})
    ctx.update({"residual_coarse": coarse, "residual_fine": fine})
    if fine == 0.0:
        # identically satisfied on both grids (e.g. gauge switched off)
        ratio = RATIO_TARGET if coarse == 0.0 else np.inf
    else:
        ratio = coarse / fine
    ctx["ratio"] = ratio
    return report(name, abs(ratio - RATIO_TARGET), RATIO_HALF_WIDTH, ctx)


def smooth_probe(grid: Grid) -> np.ndarray:
    """Fixed C^infinity bump vanishing at the walls: (1-t^2)^4 (1+t/2) on the
    grid mapped to t in [-1, 1].  The odd factor keeps antisymmetric residual
    parts from cancelling by accident."""
    t = (2.0 * grid.x - (grid.x_min + grid.x_max)) / (grid.x_max - grid.x_min)
    return (1.0 - t * t) ** 4 * (1.0 + 0.5 * t)


def pseudo_hermiticity_residual(h: BandedReal, theta, grid: Grid, probe: str = "smooth") -> float:
    """Relative residual of Theta H = H^T Theta for diagonal positive Theta.

    probe="smooth": ||(Theta H - H^T Theta) u|| / ||(Theta H) u|| on the
    smooth bump u — decays as dx^2.  probe="matrix": Frobenius norm over the
    banded structure — decays as dx^3 (see module docstring).
    """
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (h.n,):
        raise DomainError(f"theta has shape {theta.shape}, expected ({h.n},)")
    if not np.all(theta > 0):
        raise DomainError("theta must be strictly positive")
    if grid.n_points != h.n:
        raise DomainError("grid does not match operator size")
    # theta H bands
    th_sub = theta[1:] * h.sub
    th_main = theta * h.main
    th_sup = theta[:-1] * h.sup
    # (theta H - H^T theta): diagonal cancels exactly; bands are antisymmetric
    d_sup = th_sup - theta[1:] * h.sub
    if probe == "matrix":
        num = np.sqrt(2.0 * float(np.dot(d_sup, d_sup)))
        den = np.sqrt(
            float(np.dot(th_sub, th_sub))
            + float(np.dot(th_main, th_main))
            + float(np.dot(th_sup, th_sup))
        )
        return num / den
    if probe == "smooth":
        u = smooth_probe(grid)
        du = np.zeros(h.n)
        du[:-1] += d_sup * u[1:]
        du[1:] -= d_sup * u[:-1]
        tu = th_main * u
        tu[:-1] += th_sup * u[1:]
        tu[1:] += th_sub * u[:-1]
        return float(np.linalg.norm(du) / np.linalg.norm(tu))
    raise DomainError(f"unknown probe {probe!r}")


def pseudo_hermiticity_ratio(spec: ModelSpec, grid: Grid, probe: str = "smooth") -> CheckReport:
    """Two-grid dx^2 ratio test of the pseudo-Hermiticity identity."""

    def _residual(g: Grid) -> float:
        w = dyson_weights(spec, g)
        return pseudo_hermiticity_residual(build_nonhermitian(spec, g), w * w, g, probe=probe)

    coarse = _residual(grid)
    fine = _residual(grid.refined())
    return _ratio_report(
        "pseudo_hermiticity_ratio",
        coarse,
        fine,
        {"probe": probe, "kind": spec.kind, "n_coarse": grid.n_points},
    )


def metric_gram(vectors, theta, grid: Grid) -> np.ndarray:
    """Gram matrix G_mn = (psi_m, theta psi_n) under trapezoid quadrature."""
    vectors = [np.asarray(v, dtype=float) for v in vectors]
    k = len(vectors)
    g = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            val = weighted_inner_product(vectors[i], vectors[j], theta, grid)
            g[i, j] = val
            g[j, i] = val
    return g


def gram_identity_report(vectors, theta, grid: Grid, tolerance: float,
                         name: str = "metric_gram_identity", context: dict | None = None) -> CheckReport:
    g = metric_gram(vectors, theta, grid)
    dev = float(np.max(np.abs(g - np.eye(g.shape[0]))))
    ctx = dict(context or {})
    ctx["n_vectors"] = g.shape[0]
    return report(name, dev, tolerance, ctx)


# ---------------------------------------------------------------------------
# SUSY
# ---------------------------------------------------------------------------


def _printed_partner(kind: str, omega: float, lam: float, grid: Grid, which: str) -> BandedReal:
    # direct discretization of the printed partner operators (m = 1)
    x = grid.x
    base = 0.5 * (omega**2 - lam**2) * x * x
    if kind == "harmonic":
        u = base + (0.5 * (lam + omega) if which == "I" else 0.5 * (lam - omega))
    elif kind == "isotonic":
        if which == "I":
            u = base + 0.5 * lam + 1.5 * omega
        else:
            u = base + 1.0 / (x * x) + 0.5 * lam + 0.5 * omega
    else:
        raise DomainError(f"unknown susy kind {kind!r}")
    return assemble_nonhermitian(0.5, u, lam * x, grid)


def _printed_hermitian(kind: str, omega: float, grid: Grid, which: str) -> SymTridiag:
    x = grid.x
    base = 0.5 * omega**2 * x * x
    if kind == "harmonic":
        u = base + (0.5 * omega if which == "I" else -0.5 * omega)
    elif kind == "isotonic":
        u = base + (1.5 * omega if which == "I" else 1.0 / (x * x) + 0.5 * omega)
    else:
        raise DomainError(f"unknown susy kind {kind!r}")
    return assemble_hermitian(0.5, u, grid)


def _band(b: BandedReal) -> BandMatrix:
    return BandMatrix.from_tridiagonal(b.sub, b.main, b.sup)


def _factorization_residuals(kind, omega, lam, grid):
    q1 = _band(build_supercharge(kind, omega, lam, grid, "Q1"))
    q2 = _band(build_supercharge(kind, omega, lam, grid, "Q2"))
    p_first = q1 @ q2
    p_second = q2 @ q1
    u = smooth_probe(grid)
    out = []
    for which, prod in (("I", p_first), ("II", p_second)):
        printed = _band(_printed_partner(kind, omega, lam, grid, which))
        num = np.linalg.norm((prod - printed).matvec(u))
        den = np.linalg.norm(printed.matvec(u))
        out.append(float(num / den))
    return out, q1, q2, p_first, p_second


def susy_checks(omega: float, lam: float, kind: str, grid: Grid,
                levels: int | None = None, spectrum_tol: float | None = None) -> list:
    """Factorization (dx^2 ratio), intertwining (associativity to rounding),
    and partner-spectrum checks for the supercharge pair at (omega, lam)."""
    if kind not in ("harmonic", "isotonic"):
        raise DomainError(f"unknown susy kind {kind!r}")
    if kind == "isotonic" and grid.x_min <= 0:
        raise DomainError("isotonic susy checks need a grid with x_min > 0")
    if levels is None:
        levels = 6 if kind == "harmonic" else 5
    if spectrum_tol is None:
        spectrum_tol = 1e-4 if kind == "harmonic" else 1e-3
    ctx = {"kind": kind, "omega": omega, "lam": lam, "n": grid.n_points}
    reports = []

    coarse, q1, q2, p_first, p_second = _factorization_residuals(kind, omega, lam, grid)
    fine, *_ = _factorization_residuals(kind, omega, lam, grid.refined())
    for i, which in enumerate(("I", "II")):
        reports.append(
            _ratio_report(f"susy_factorization_ratio_{which}", coarse[i], fine[i], ctx)
        )

    assoc = ((q2 @ p_first) - (p_second @ q2)).frobenius()
    tol_assoc = 1e-12 * q2.frobenius() ** 3
    reports.append(report("susy_intertwining_associativity", assoc, tol_assoc, ctx))

    for which in ("I", "II"):
        h = _printed_hermitian(kind, omega, grid, which)
        es = tridiag_eigen(h, levels)
        worst = 0.0
        table = []
        for n in range(levels):
            e_first, e_second = susy_partner_spectra(kind, omega, n)
            target = e_first if which == "I" else e_second
            e_grid = float(es.eigenvalues[n])
            if target == 0.0:
                err = abs(e_grid) / omega  # zero mode: absolute, in units of omega
            else:
                err = abs(e_grid - target) / abs(target)
            worst = max(worst, err)
            table.append({"n": n, "e_expected": target, "e_grid": e_grid})
        c = dict(ctx)
        c["levels"] = table
        reports.append(report(f"susy_spectrum_{which}", worst, spectrum_tol, c))
    return reports


# ---------------------------------------------------------------------------
# Closed form vs grid
# ---------------------------------------------------------------------------


def _closed_energy(spec: ModelSpec, n: int) -> float:
    if spec.kind == "swanson":
        return swanson_energy(spec.model, n)
    if spec.kind == "isotonic":
        return isotonic_energy(spec.model, n)
    if spec.kind == "constant_gauge":
        return constant_gauge_energy(spec.model.omega, n)
    raise UnsupportedModelError(f"no closed-form spectrum for kind {spec.kind!r}")


def _kinetic_scale(spec: ModelSpec) -> float:
    if spec.kind == "isotonic":
        return 4.0 * spec.model.v0 / spec.model.eta**2
    return 1.0 / (2.0 * spec.model.m)


def closedform_vs_grid(spec: ModelSpec, grid: Grid, n_max: int,
                       tolerance: float = 1e-4) -> list:
    """Per-level comparison table; each report carries (n, e_closed, e_grid)."""
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    c2 = _kinetic_scale(spec)
    ceiling = 4.0 * c2 / grid.dx**2  # top of the discrete kinetic band
    e_top = _closed_energy(spec, n_max)
    if e_top > 0.25 * ceiling:
        raise ResolutionError(
            f"level {n_max} at E={e_top:.6g} exceeds a quarter of the discrete "
            f"spectral ceiling {ceiling:.6g}; refine the grid"
        )
    es = tridiag_eigen(build_hermitian(spec, grid), n_max + 1)
    reports = []
    for n in range(n_max + 1):
        e_c = _closed_energy(spec, n)
        e_g = float(es.eigenvalues[n])
        rel = abs(e_g - e_c) / abs(e_c) if e_c != 0.0 else float("inf")
        reports.append(
            report(
                f"spectrum_level_{n}",
                rel,
                tolerance,
                {"n": n, "e_closed": e_c, "e_grid": e_g, "kind": spec.kind},
            )
        )
    return reports


# ---------------------------------------------------------------------------
# PT symmetry (symbolic coefficient level)
# ---------------------------------------------------------------------------


def _pt_coefficients(spec: ModelSpec):
    """Laurent coefficients of the potential part of H and polynomial
    coefficients of the first-derivative gauge factor b(x) (H contains
    b(x) d/dx).  Only affine b is representable."""
    m = spec.model
    if spec.kind == "swanson":
        return {2: 0.5 * m.m * m.cap_omega**2, 0: 0.5 * m.lam}, {1: m.lam}
    if spec.kind == "isotonic":
        v = {2: m.v0, 0: -2.0 * m.v0 + 0.5 * m.v0 * m.lam0, -2: m.v0}
        return v, {1: m.v0 * m.lam0}
    if spec.kind == "constant_gauge":
        v = {2: 0.5 * m.m * m.omega**2, 0: -m.delta**2 / (2.0 * m.m)}
        return v, {0: m.delta / m.m}
    if spec.kind == "custom":
        if m.v_coeffs is None or m.a_coeffs is None:
            raise UnsupportedModelError(
                "custom model without coefficient data; supply v_coeffs and a_coeffs"
            )
        if any(k not in (0, 1) for k in m.a_coeffs):
            raise UnsupportedModelError("PT check supports affine imaginary gauges only")
        a0 = float(m.a_coeffs.get(0, 0.0))
        a1 = float(m.a_coeffs.get(1, 0.0))
        v = {int(k): float(c) for k, c in m.v_coeffs.items()}
        v[0] = v.get(0, 0.0) - a0 * a0 / (2.0 * m.m) + a1 / (2.0 * m.m)
        v[1] = v.get(1, 0.0) - a0 * a1 / m.m
        v[2] = v.get(2, 0.0) - a1 * a1 / (2.0 * m.m)
        return v, {0: a0 / m.m, 1: a1 / m.m}
    raise UnsupportedModelError(f"unknown model kind {spec.kind!r}")


def pt_symmetry_check(spec: ModelSpec) -> CheckReport:
    """Coefficient-level PT mismatch of H: the map sends V(x) -> V(-x) and
    b(x) d/dx -> -b(-x) d/dx, so odd potential coefficients and even gauge
    coefficients each contribute twice their magnitude."""
    v, b = _pt_coefficients(spec)
    mismatch = 0.0
    for k, c in v.items():
        if k % 2 != 0:
            mismatch += 2.0 * abs(c)
    for k, c in b.items():
        if k % 2 == 0:
            mismatch += 2.0 * abs(c)
    return report("pt_symmetry_mismatch", mismatch, 1e-12, {"kind": spec.kind})
