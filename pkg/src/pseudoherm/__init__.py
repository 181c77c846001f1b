"""Pseudo-Hermitian oscillator models: closed forms, grids, and checks.

Non-Hermitian Hamiltonians built from imaginary gauge couplings are
similarity-equivalent to Hermitian ones; this package constructs both sides
(harmonic, isotonic, constant-gauge, and custom-profile models), solves them
in closed form and on finite-difference grids, and verifies the defining
identities: real spectra, metric orthonormality, pseudo-Hermiticity
residuals, and supersymmetric factorization.
"""

from ._kernels import BACKEND
from .closedform import (
    constant_gauge_energy,
    harmonic_wavefunction,
    isotonic_alpha0,
    isotonic_beta0,
    isotonic_energy,
    isotonic_energy_zero_gauge,
    isotonic_wavefunction_unnormalized,
    susy_partner_spectra,
    swanson_alpha0,
    swanson_energy,
    swanson_wavefunction,
)
from .eigensolve import EigenSet, transport_eigenvectors, tridiag_eigen
from .errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    LengthError,
    PseudohermError,
    ResolutionError,
    ShapeError,
    UnsupportedModelError,
    WeightOverflowError,
)
from .grid import (
    BandedReal,
    Grid,
    SymTridiag,
    build_hermitian,
    build_nonhermitian,
    build_supercharge,
    dyson_weights,
    weighted_inner_product,
)
from .models import (
    ConstantGaugeModel,
    CustomModel,
    IsotonicModel,
    ModelSpec,
    SwansonModel,
    constant_gauge,
    custom,
    isotonic,
    isotonic_from_eta,
    swanson,
)
from .opalg import (
    LadderPoly,
    QuadraticXP,
    SwansonParams,
    extract_swanson,
    from_xp_scheme_one,
    from_xp_scheme_two,
    normal_product,
)
from .specfun import hermite, laguerre, log_factorial
from .verify import (
    CheckReport,
    closedform_vs_grid,
    metric_gram,
    pseudo_hermiticity_ratio,
    pseudo_hermiticity_residual,
    pt_symmetry_check,
    susy_checks,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # models
    "SwansonModel", "IsotonicModel", "ConstantGaugeModel", "CustomModel",
    "ModelSpec", "swanson", "isotonic", "isotonic_from_eta", "constant_gauge",
    "custom",
    # closed forms
    "harmonic_wavefunction", "swanson_energy", "swanson_wavefunction",
    "swanson_alpha0", "isotonic_energy", "isotonic_energy_zero_gauge",
    "isotonic_wavefunction_unnormalized", "isotonic_alpha0", "isotonic_beta0",
    "constant_gauge_energy", "susy_partner_spectra",
    # grid layer
    "Grid", "SymTridiag", "BandedReal", "build_hermitian", "build_nonhermitian",
    "build_supercharge", "dyson_weights", "weighted_inner_product",
    # eigensolver
    "EigenSet", "tridiag_eigen", "transport_eigenvectors",
    # operator algebra
    "LadderPoly", "QuadraticXP", "SwansonParams", "normal_product",
    "from_xp_scheme_one", "from_xp_scheme_two", "extract_swanson",
    # special functions
    "hermite", "laguerre", "log_factorial",
    # verification
    "CheckReport", "pseudo_hermiticity_residual", "pseudo_hermiticity_ratio",
    "metric_gram", "susy_checks", "closedform_vs_grid", "pt_symmetry_check",
    # errors
    "PseudohermError", "DomainError", "ShapeError", "ConsistencyError",
    "LengthError", "ConvergenceError", "ResolutionError",
    "WeightOverflowError", "UnsupportedModelError",
]
