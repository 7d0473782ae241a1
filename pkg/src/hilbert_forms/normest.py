"""Finite-section spectral lower bounds for the discrete form norm.

The N x N truncation of the kernel matrix is entrywise positive and
symmetric, so its dominant eigenvalue is simple and every section value
is a certified lower bound for the full form norm.  A kernel multiply
needs only prefix sums of n^(a-1/2) v_n and suffix sums of n^(-a-1/2) v_n,
which gives an O(N) matrix-free path for large sections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import special
from .errors import ConvergenceError

__all__ = [
    "DENSE_CAP",
    "TruncatedKernelMatrix",
    "EigenResult",
    "MaxMaxSum",
    "FailureCheck",
    "build_truncated",
    "kernel_matvec",
    "top_eigen",
    "top_eigen_matrix_free",
    "rayleigh_quotient",
    "maxmax_double_sum",
    "failure_check",
]

DENSE_CAP = 20_000  # dense storage stays under ~3.2 GB of binary64
_ZETA_TOL = 1e-12
_BLOCK = 2048


@dataclass(frozen=True)
class TruncatedKernelMatrix:
    alpha: float
    n: int
    entries: np.ndarray


@dataclass(frozen=True)
class EigenResult:
    value: float
    iterations: int
    residual: float


class MaxMaxSum(NamedTuple):
    truncated: float
    closed_form: float


class FailureCheck(NamedTuple):
    improved_lower: float
    two_over_alpha: float
    violates: bool


def _check_alpha(alpha: float) -> float:
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise ValueError(f"alpha={alpha} must be a positive finite real")
    return float(alpha)


def build_truncated(alpha: float, n: int) -> TruncatedKernelMatrix:
    """Dense symmetric section K(m, k) for 1 <= m, k <= n."""
    _check_alpha(alpha)
    if n < 1 or int(n) != n:
        raise ValueError(f"n={n} must be a positive integer")
    if n > DENSE_CAP:
        raise ValueError(f"n={n} exceeds the dense section cap {DENSE_CAP}")
    n = int(n)
    idx = np.arange(1, n + 1, dtype=float)
    half = idx ** (alpha - 0.5)
    entries = np.empty((n, n))
    for lo in range(0, n, _BLOCK):
        hi = min(lo + _BLOCK, n)
        mx = np.maximum(idx[lo:hi, None], idx[None, :])
        entries[lo:hi] = half[lo:hi, None] * half[None, :] / mx ** (2.0 * alpha)
    return TruncatedKernelMatrix(alpha, n, entries)


def kernel_matvec(alpha: float, v: np.ndarray) -> np.ndarray:
    """Multiply the n-section against v in O(n) via prefix/suffix sums."""
    _check_alpha(alpha)
    v = np.asarray(v, dtype=float)
    n = v.shape[0]
    idx = np.arange(1, n + 1, dtype=float)
    grow = idx ** (alpha - 0.5)
    decay = idx ** (-alpha - 0.5)
    prefix = np.cumsum(grow * v)
    rev = np.cumsum(decay * v)
    suffix = rev[-1] - rev  # strictly-above-diagonal part; exactly 0 at m = n
    return decay * prefix + grow * suffix


def _power_iterate(matvec, n, tol, max_iter):
    """Power iteration from the deterministic start v_m = m^(-1/2).

    Converged when both the Rayleigh-quotient delta and the residual
    ||Av - lv|| (v normalized) are at most tol.
    """
    v = np.arange(1, n + 1, dtype=float) ** -0.5
    v /= np.linalg.norm(v)
    lam_prev = -math.inf
    lam = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        w = matvec(v)
        lam = float(v @ w)
        residual = float(np.linalg.norm(w - lam * v))
        if abs(lam - lam_prev) <= tol and residual <= tol:
            return lam, it, residual
        lam_prev = lam
        v = w / np.linalg.norm(w)
    raise ConvergenceError(
        f"power iteration not converged after {max_iter} steps",
        best=lam,
        residual=residual,
    )


def top_eigen(matrix: TruncatedKernelMatrix, tol: float = 1e-8, max_iter: int = 100_000) -> EigenResult:
    """Dominant eigenvalue of a dense section; a lower bound for the form norm."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    entries = matrix.entries
    lam, iterations, residual = _power_iterate(lambda v: entries @ v, matrix.n, tol, max_iter)
    return EigenResult(lam, iterations, residual)


def top_eigen_matrix_free(
    alpha: float, n: int, tol: float = 1e-8, max_iter: int = 100_000
) -> EigenResult:
    """Dominant eigenvalue of the n-section without storing it."""
    _check_alpha(alpha)
    if n < 1 or int(n) != n:
        raise ValueError(f"n={n} must be a positive integer")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    lam, iterations, residual = _power_iterate(
        lambda v: kernel_matvec(alpha, v), int(n), tol, max_iter
    )
    return EigenResult(lam, iterations, residual)


def rayleigh_quotient(alpha: float, n: int, kind: str = "eps_family", eps: float | None = None) -> float:
    """Quadratic-form quotient of a named test vector over the first n coordinates.

    eps_family uses a_m = m^(-1/2-eps) with 0 < eps < alpha; alpha_family
    uses a_m = m^(-alpha+1/2) and needs alpha > 1 strictly for square
    summability.  The numerator is summed directly (O(n) prefix form); the
    denominator comes from the zeta closed form minus its Euler-Maclaurin
    tail beyond n, which equals the truncated square norm.
    """
    _check_alpha(alpha)
    if n < 1 or int(n) != n:
        raise ValueError(f"n={n} must be a positive integer")
    n = int(n)
    idx = np.arange(1, n + 1, dtype=float)
    if kind == "eps_family":
        if eps is None or not 0.0 < eps < alpha:
            raise ValueError(f"eps_family needs 0 < eps < alpha, got eps={eps}")
        vec = idx ** (-0.5 - eps)
        s = 1.0 + 2.0 * eps
    elif kind == "alpha_family":
        if alpha <= 1.0:
            raise ValueError(
                f"alpha_family diverges for alpha={alpha} <= 1 (not square summable)"
            )
        vec = idx ** (-alpha + 0.5)
        s = 2.0 * alpha - 1.0
    else:
        raise ValueError(f"unknown test vector kind {kind!r}")
    numerator = float(vec @ kernel_matvec(alpha, vec))
    denominator = special.zeta(s, _ZETA_TOL) - special.tail_power_sum(-s, n, 1e-12).value
    return numerator / denominator


def maxmax_double_sum(alpha: float, n: int) -> MaxMaxSum:
    """Truncated and closed-form values of sum_{m,k} max(m,k)^(-2a).

    The truncation is computed in O(n): exactly 2k-1 pairs share the
    maximum k.  The full double sum equals 2*zeta(2a-1) - zeta(2a), which
    needs alpha > 1.
    """
    _check_alpha(alpha)
    if alpha <= 1.0:
        raise ValueError(f"double sum diverges for alpha={alpha} <= 1")
    if n < 1 or int(n) != n:
        raise ValueError(f"n={n} must be a positive integer")
    k = np.arange(1, int(n) + 1, dtype=float)
    truncated = float(np.sum((2.0 * k - 1.0) * k ** (-2.0 * alpha)))
    closed = 2.0 * special.zeta(2.0 * alpha - 1.0, _ZETA_TOL) - special.zeta(2.0 * alpha, _ZETA_TOL)
    return MaxMaxSum(truncated, closed)


def failure_check(alpha: float) -> FailureCheck:
    """Whether the improved lower bound overtakes 2/alpha at this alpha."""
    _check_alpha(alpha)
    if alpha <= 1.0:
        raise ValueError(f"improved lower bound needs alpha > 1, got {alpha}")
    improved = 2.0 - special.zeta(2.0 * alpha, _ZETA_TOL) / special.zeta(
        2.0 * alpha - 1.0, _ZETA_TOL
    )
    two_over = 2.0 / alpha
    return FailureCheck(improved, two_over, improved > two_over)
