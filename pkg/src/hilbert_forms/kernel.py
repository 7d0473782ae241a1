"""The homogeneous max-type kernel and its continuous bilinear form.

The kernel K(x, y) = (xy)^(a-1/2) / max(x, y)^(2a) is positive, symmetric
and homogeneous of degree -1.  The continuous form it induces on
L^2(0, inf) has norm 2/a; ``continuous_norm_quadrature`` reproduces that
constant numerically and ``continuous_extremal_ratio`` evaluates the
truncated power-law test family that attains it in the limit.
"""

from __future__ import annotations

import math

from .errors import AccuracyError

__all__ = [
    "kernel_eval",
    "i_alpha",
    "continuous_norm_quadrature",
    "continuous_extremal_ratio",
]


def _check_alpha(alpha: float) -> float:
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise ValueError(f"alpha={alpha} must be a positive finite real")
    return float(alpha)


def kernel_eval(alpha: float, x: float, y: float) -> float:
    """K(x, y) = (xy)^(alpha-1/2) / max(x, y)^(2 alpha) for x, y > 0."""
    _check_alpha(alpha)
    if x <= 0.0 or y <= 0.0:
        raise ValueError(f"kernel arguments must be positive, got x={x}, y={y}")
    return (x * y) ** (alpha - 0.5) / max(x, y) ** (2.0 * alpha)


def i_alpha(alpha: float, x: float) -> float:
    """Closed form 1 / max(x, 1/x)^alpha of the Poisson-type integral."""
    _check_alpha(alpha)
    if x <= 0.0:
        raise ValueError(f"x={x} must be positive")
    return x**alpha if x <= 1.0 else x**-alpha


def _adaptive_simpson(f, a, b, tol, max_depth):
    """Recursive Simpson bisection; absolute tolerance splits tol/2 per half."""

    def simpson(lo, flo, hi, fhi):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        return mid, fmid, (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, flo, hi, fhi, whole, mid, fmid, eps, depth):
        lm, flm, left = simpson(lo, flo, mid, fmid)
        rm, frm, right = simpson(mid, fmid, hi, fhi)
        delta = left + right - whole
        if abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        if depth >= max_depth:
            raise AccuracyError(
                f"quadrature budget exhausted at depth {depth}",
                best=left + right + delta / 15.0,
                error_bound=abs(delta),
            )
        return recurse(lo, flo, mid, fmid, left, lm, flm, 0.5 * eps, depth + 1) + recurse(
            mid, fmid, hi, fhi, right, rm, frm, 0.5 * eps, depth + 1
        )

    fa, fb = f(a), f(b)
    mid, fmid, whole = simpson(a, fa, b, fb)
    return recurse(a, fa, b, fb, whole, mid, fmid, tol, 0)


def _power_integral(exponent: float, tol: float, max_depth: int) -> float:
    """int_0^1 y^exponent dy for exponent > -1.

    The substitution y = t^q with q >= 3/(exponent+1) turns the endpoint
    singularity into an integrand with two continuous derivatives at 0.
    """
    q = max(1, math.ceil(3.0 / (exponent + 1.0)))
    power = q * (exponent + 1.0) - 1.0

    def g(t):
        return q * t**power if t > 0.0 else 0.0

    return _adaptive_simpson(g, 0.0, 1.0, tol, max_depth)


def continuous_norm_quadrature(alpha: float, tol: float = 1e-8, max_refinements: int = 60) -> float:
    """Numerically evaluate int_0^1 y^(a-1) dy + int_1^inf y^(-a-1) dy.

    The second integral is mapped onto (0, 1) by y -> 1/y, which turns it
    into the same power integral as the first.  The result reproduces the
    continuous form norm 2/alpha to within tol.
    """
    _check_alpha(alpha)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_refinements < 1:
        raise ValueError("max_refinements must be positive")
    near_zero = _power_integral(alpha - 1.0, 0.5 * tol, max_refinements)
    # y -> 1/y sends int_1^inf y^(-alpha-1) dy to int_0^1 u^(alpha-1) du
    past_one = _power_integral(alpha - 1.0, 0.5 * tol, max_refinements)
    return near_zero + past_one


def continuous_extremal_ratio(alpha: float, eps: float) -> float:
    """H(f, f) / ||f||^2 for the truncated family f(t) = t^(-1/2-eps) on (1, inf).

    Both pieces have elementary closed forms: the quadratic form is
    (1/(a-e) + 1/(a+e)) ||f||^2 - 1/((a-e)(a+e)) with ||f||^2 = 1/(2e).
    The ratio increases to 2/alpha as eps decreases to 0.
    """
    _check_alpha(alpha)
    if not 0.0 < eps < alpha:
        raise ValueError(f"eps={eps} must lie strictly inside (0, alpha={alpha})")
    norm_sq = 1.0 / (2.0 * eps)
    form = norm_sq * (1.0 / (alpha - eps) + 1.0 / (alpha + eps)) - 1.0 / (
        (alpha - eps) * (alpha + eps)
    )
    return form / norm_sq
