"""Deterministic bracketing root refinement for the named crossing points.

Every solver first scans its default interval on a 0.01 grid and insists
on exactly one sign change before refining; a surprise in the scan aborts
with a diagnostic instead of silently widening the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from . import bounds
from .errors import BracketError, ConvergenceError
from .special import zeta

__all__ = [
    "RootResult",
    "HRoots",
    "Crossings",
    "refine_root",
    "solve_alpha0",
    "solve_h_roots",
    "solve_crossings",
]

_DEFAULT_TOL = 1e-10
_GRID_STEP = 0.01


@dataclass(frozen=True)
class RootResult:
    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int


class HRoots(NamedTuple):
    alpha1: RootResult
    alpha2: RootResult


class Crossings(NamedTuple):
    zeta_vs_2a: RootResult
    zeta2_vs_2a: RootResult
    improved_vs_2a: RootResult


def refine_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = _DEFAULT_TOL,
    max_iter: int = 200,
) -> RootResult:
    """Shrink a sign-change bracket [a, b] until its width is <= tol.

    Bisection alternates with secant steps; a secant step is taken only
    when it lands strictly inside the current bracket, so the width halves
    at least every other iteration and the run is fully deterministic.
    """
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return RootResult(a, a, a, 0.0, 0)
    if fb == 0.0:
        return RootResult(b, b, b, 0.0, 0)
    if fa * fb > 0.0:
        raise BracketError(f"no sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}")

    iterations = 0
    while b - a > tol:
        if iterations >= max_iter:
            mid = 0.5 * (a + b)
            raise ConvergenceError(
                f"bracket still {b - a:.3e} wide after {max_iter} iterations",
                best=mid,
                residual=abs(f(mid)),
            )
        x = 0.5 * (a + b)
        if iterations % 2 == 1 and fb != fa:
            secant = b - fb * (b - a) / (fb - fa)
            if a < secant < b:
                x = secant
        fx = f(x)
        iterations += 1
        if fx == 0.0:
            a = b = x
            fa = fb = 0.0
            break
        if fa * fx < 0.0:
            b, fb = x, fx
        else:
            a, fa = x, fx

    value = 0.5 * (a + b)
    return RootResult(value, a, b, abs(f(value)), iterations)


def _scan_single_sign_change(f, a, b, step=_GRID_STEP):
    """Locate the unique sign change of f on a grid over [a, b]."""
    count = max(2, round((b - a) / step))
    xs = [a + (b - a) * i / count for i in range(count + 1)]
    ys = [f(x) for x in xs]
    changes = [i for i in range(count) if ys[i] * ys[i + 1] < 0.0]
    if len(changes) != 1:
        raise BracketError(
            f"expected exactly one sign change on [{a}, {b}] at step {step}, found {len(changes)}"
        )
    i = changes[0]
    return xs[i], xs[i + 1]


def _solve_on(f, a, b, tol, max_iter=200):
    lo, hi = _scan_single_sign_change(f, a, b)
    return refine_root(f, lo, hi, tol, max_iter)


def solve_alpha0(tol: float = _DEFAULT_TOL) -> RootResult:
    """The unique positive solution of a*zeta(1+a) = 2, on [1, 2]."""
    ztol = tol / 100.0

    def f(a):
        return a * zeta(1.0 + a, ztol) - 2.0

    return _solve_on(f, 1.0, 2.0, tol)


def solve_h_roots(tol: float = _DEFAULT_TOL) -> HRoots:
    """Roots of the auxiliary functions h1 (decreasing) and h2 (increasing) on [1, 2]."""
    alpha1 = _solve_on(bounds.h1, 1.0, 2.0, tol)
    alpha2 = _solve_on(bounds.h2, 1.0, 2.0, tol)
    if not alpha1.value > alpha2.value:
        raise ArithmeticError(
            f"expected alpha1 > alpha2, got {alpha1.value} <= {alpha2.value}"
        )
    return HRoots(alpha1, alpha2)


def solve_crossings(tol: float = _DEFAULT_TOL) -> Crossings:
    """The three crossing points against 2/alpha inside (1, 2).

    zeta(1+a) = 2/a reproduces the exactness threshold; zeta(1+2a) = 2/a is
    the second intersection of the bound pair; the third equation locates
    the first alpha where the improved lower bound 2 - z(2a)/z(2a-1)
    overtakes 2/a.  That last function has a removable limit 0 at a = 1
    (pole of z(2a-1)), so its scan starts at 1.01.
    """
    ztol = tol / 100.0

    def f_upper(a):
        return zeta(1.0 + a, ztol) - 2.0 / a

    def f_point(a):
        return zeta(1.0 + 2.0 * a, ztol) - 2.0 / a

    def f_improved(a):
        return (2.0 - zeta(2.0 * a, ztol) / zeta(2.0 * a - 1.0, ztol)) - 2.0 / a

    return Crossings(
        zeta_vs_2a=_solve_on(f_upper, 1.0, 2.0, tol),
        zeta2_vs_2a=_solve_on(f_point, 1.0, 2.0, tol),
        improved_vs_2a=_solve_on(f_improved, 1.01, 2.0, tol),
    )
