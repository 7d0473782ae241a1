"""Bounds, constants and spectral estimates for discrete Hilbert-type bilinear forms.

The package computes and cross-verifies the norm bracket
max(2/a, zeta(1+2a), test-vector bound) <= ||B_a|| <= max(2/a, zeta(1+a))
for the kernel family (xy)^(a-1/2) / max(x,y)^(2a), together with the
named threshold constants, finite-section spectral lower bounds, and the
derived composition-operator scalars.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    RestatedCheck,
    SupResult,
    alpha0_value,
    composition_bounds,
    disc_bounds,
    h1,
    h2,
    lemma4_estimate,
    restated_factor_check,
    s_alpha,
    s_alpha_sup,
    theorem_bounds,
    transfer_alpha_r,
)
from .errors import AccuracyError, BracketError, ConvergenceError
from .kernel import (
    continuous_extremal_ratio,
    continuous_norm_quadrature,
    i_alpha,
    kernel_eval,
)
from .normest import (
    EigenResult,
    FailureCheck,
    MaxMaxSum,
    TruncatedKernelMatrix,
    build_truncated,
    failure_check,
    kernel_matvec,
    maxmax_double_sum,
    rayleigh_quotient,
    top_eigen,
    top_eigen_matrix_free,
)
from .roots import (
    Crossings,
    HRoots,
    RootResult,
    refine_root,
    solve_alpha0,
    solve_crossings,
    solve_h_roots,
)
from .special import (
    EMResult,
    bernoulli_number,
    bernoulli_poly,
    em_partial_sum,
    em_tail_sum,
    remainder_sign_check,
    tail_power_sum,
    zeta,
)
from .verify import SUITES, VerifyOutcome, run_suite

__all__ = [
    "__version__",
    "AccuracyError",
    "BracketError",
    "ConvergenceError",
    "BoundReport",
    "RestatedCheck",
    "SupResult",
    "EMResult",
    "EigenResult",
    "FailureCheck",
    "MaxMaxSum",
    "TruncatedKernelMatrix",
    "RootResult",
    "HRoots",
    "Crossings",
    "VerifyOutcome",
    "SUITES",
    "alpha0_value",
    "bernoulli_number",
    "bernoulli_poly",
    "build_truncated",
    "composition_bounds",
    "continuous_extremal_ratio",
    "continuous_norm_quadrature",
    "disc_bounds",
    "em_partial_sum",
    "em_tail_sum",
    "failure_check",
    "h1",
    "h2",
    "i_alpha",
    "kernel_eval",
    "kernel_matvec",
    "lemma4_estimate",
    "maxmax_double_sum",
    "rayleigh_quotient",
    "refine_root",
    "remainder_sign_check",
    "restated_factor_check",
    "run_suite",
    "s_alpha",
    "s_alpha_sup",
    "solve_alpha0",
    "solve_crossings",
    "solve_h_roots",
    "tail_power_sum",
    "theorem_bounds",
    "top_eigen",
    "top_eigen_matrix_free",
    "transfer_alpha_r",
    "zeta",
]
