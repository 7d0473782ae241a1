"""Row-sum majorants, the closed-form estimates behind them, and the bound pair.

The weighted Cauchy-Schwarz argument bounds the discrete form norm by
sup_m S(m), where S(m) mixes a scaled partial sum and a scaled tail of
power laws.  This module scans that sequence, evaluates the four
closed-form estimates that control it, assembles the lower/upper bound
pair for the form norm, and exposes the derived composition-operator and
disc-transference scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

import numpy as np

from . import special
from .errors import AccuracyError

__all__ = [
    "BoundReport",
    "SupResult",
    "RestatedCheck",
    "alpha0_value",
    "s_alpha",
    "s_alpha_sup",
    "lemma4_estimate",
    "h1",
    "h2",
    "theorem_bounds",
    "composition_bounds",
    "disc_bounds",
    "transfer_alpha_r",
    "restated_factor_check",
]

_ZETA_TOL = 1e-12

LOWER_METHODS = ("continuous_limit", "point_evaluation", "improved", "rayleigh")
UPPER_METHODS = ("cauchy_schwarz_sup",)


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper bracket for the form norm at one parameter value."""

    alpha: float
    lower: float
    upper: float
    exact: bool
    lower_method: str
    upper_method: str


class SupResult(NamedTuple):
    sup: float
    argmax: Union[int, str]  # finite index, or "limit" for the m -> infinity candidate


class RestatedCheck(NamedTuple):
    holds: bool
    sharpness_fails: bool


def _check_alpha(alpha: float) -> float:
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise ValueError(f"alpha={alpha} must be a positive finite real")
    return float(alpha)


def alpha0_value() -> float:
    """The threshold parameter where a*zeta(1+a) = 2, computed once per process."""
    return _alpha0_cached()


@lru_cache(maxsize=1)
def _alpha0_cached() -> float:
    from . import roots  # deferred: roots imports this module for h1/h2

    return roots.solve_alpha0(1e-12).value


def s_alpha(alpha: float, m: int, tol: float = 1e-10) -> float:
    """The majorant S(m) = m^-a sum_{n<=m} n^(a-1) + m^a sum_{n>m} n^(-a-1).

    The front sum is direct (in the scale-free form (n/m)^(a-1) / m); the
    tail goes through the Euler-Maclaurin engine with its remainder budget
    reduced by m^-a so the assembled value is accurate to about tol.
    """
    _check_alpha(alpha)
    if m < 1 or int(m) != m:
        raise ValueError(f"m={m} must be a positive integer")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    m = int(m)
    if m > 4096:
        n = np.arange(1, m + 1, dtype=float)
        front = float(np.sum((n / m) ** (alpha - 1.0))) / m
    else:
        front = math.fsum((n / m) ** (alpha - 1.0) for n in range(1, m + 1)) / m
    tail_tol = max(tol * m ** (-alpha), 1e-280)
    tail = special.tail_power_sum(-alpha - 1.0, m, tail_tol)
    return front + m**alpha * tail.value


def _scaled_tail_em(alpha: float, m):
    """m^a * sum_{n>m} n^(-a-1) by the order-2 expansion, in scaled form."""
    return (
        1.0 / alpha
        - 1.0 / (2.0 * m)
        + (alpha + 1.0) / (12.0 * m**2)
        - (alpha + 1.0) * (alpha + 2.0) * (alpha + 3.0) / (720.0 * m**4)
    )


def _em_switch_index(alpha: float, tol: float) -> int:
    """First index where the scaled order-2 tail budget drops below tol."""
    coeff = (
        (alpha + 1.0)
        * (alpha + 2.0)
        * (alpha + 3.0)
        * (alpha + 4.0)
        * (alpha + 5.0)
        / 30240.0
    )
    return max(16, math.ceil((coeff / tol) ** 0.2))


def s_alpha_sup(alpha: float, m_max: int, tol: float = 1e-10) -> SupResult:
    """Maximum of {S(1), ..., S(m_max), 2/alpha} with its achiever.

    The 2/alpha candidate stands for the m -> infinity limit of the
    sequence; it is listed explicitly rather than extrapolated.  Ties go
    to the limit.
    """
    _check_alpha(alpha)
    if m_max < 2:
        raise ValueError(f"m_max={m_max} must be at least 2")
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    mvec = np.arange(1, m_max + 1, dtype=float)
    front = np.cumsum(mvec ** (alpha - 1.0)) * mvec**-alpha

    switch = min(_em_switch_index(alpha, tol), m_max + 1)
    tail = np.empty(m_max)
    if switch <= m_max:
        tail[switch - 1 :] = _scaled_tail_em(alpha, mvec[switch - 1 :])
    # below the switch the scaled tail is summed directly up to the switch
    # point, then stitched to the expansion there
    em_at_switch = _scaled_tail_em(alpha, float(switch))
    for m in range(1, switch):
        n = np.arange(m + 1, switch + 1, dtype=float)
        direct = float(np.sum((m / n) ** alpha / n))
        tail[m - 1] = direct + (m / switch) ** alpha * em_at_switch

    values = front + tail
    best = int(np.argmax(values))
    limit = 2.0 / alpha
    if values[best] > limit:
        return SupResult(float(values[best]), best + 1)
    return SupResult(limit, "limit")


def lemma4_estimate(which: str, alpha: float, m: int | None = None) -> float:
    """The four closed-form Euler-Maclaurin estimates.

    tail_upper bounds the scaled tail from above for every alpha;
    zeta_lower bounds zeta(1+alpha) from below (m is ignored);
    partial_upper_12 and partial_upper_23 bound the scaled partial sum on
    1 <= alpha <= 2 and 2 <= alpha <= 3 respectively.
    """
    _check_alpha(alpha)
    if which == "zeta_lower":
        return (
            1.0 / alpha
            + 0.5
            + (alpha + 1.0) / 12.0
            - (alpha + 1.0) * (alpha + 2.0) * (alpha + 3.0) / 720.0
        )
    if m is None or m < 1 or int(m) != m:
        raise ValueError(f"m={m} must be a positive integer for {which!r}")
    m = float(m)
    if which == "tail_upper":
        return 1.0 / alpha - 1.0 / (2.0 * m) + (alpha + 1.0) / (12.0 * m**2)
    if which == "partial_upper_12":
        if not 1.0 <= alpha <= 2.0:
            raise ValueError(f"partial_upper_12 needs 1 <= alpha <= 2, got {alpha}")
        return (
            1.0 / alpha
            + 1.0 / (2.0 * m)
            + (alpha - 1.0) / (12.0 * m**2)
            - (alpha - 3.0) * (alpha - 4.0) / (12.0 * alpha) * m**-alpha
        )
    if which == "partial_upper_23":
        if not 2.0 <= alpha <= 3.0:
            raise ValueError(f"partial_upper_23 needs 2 <= alpha <= 3, got {alpha}")
        return 1.0 / alpha + 1.0 / (2.0 * m) + (alpha - 1.0) / (12.0 * m**2)
    raise ValueError(f"unknown estimate {which!r}")


def h1(alpha: float) -> float:
    """(a-3)(a-4)/(12a) * 2^-a - a/24; strictly decreasing on [1, 2]."""
    if not 1.0 <= alpha <= 2.0:
        raise ValueError(f"h1 is defined on [1, 2], got alpha={alpha}")
    return (alpha - 3.0) * (alpha - 4.0) / (12.0 * alpha) * 2.0**-alpha - alpha / 24.0


def h2(alpha: float) -> float:
    """1/2 + (a+1)/12 - (a+1)(a+2)(a+3)/720 - 1/a + h1(a); strictly increasing on [1, 2]."""
    if not 1.0 <= alpha <= 2.0:
        raise ValueError(f"h2 is defined on [1, 2], got alpha={alpha}")
    return (
        0.5
        + (alpha + 1.0) / 12.0
        - (alpha + 1.0) * (alpha + 2.0) * (alpha + 3.0) / 720.0
        - 1.0 / alpha
        + h1(alpha)
    )


def improved_lower_value(alpha: float) -> float:
    """The test-vector lower bound 2 - zeta(2a)/zeta(2a-1); needs alpha > 1."""
    _check_alpha(alpha)
    if alpha <= 1.0:
        raise ValueError(f"improved lower bound needs alpha > 1, got {alpha}")
    return 2.0 - special.zeta(2.0 * alpha, _ZETA_TOL) / special.zeta(2.0 * alpha - 1.0, _ZETA_TOL)


def theorem_bounds(alpha: float) -> BoundReport:
    """The bound pair for the form norm at alpha, with method provenance.

    lower = max(2/a, zeta(1+2a), improved test-vector bound for a > 1);
    upper = max(2/a, zeta(1+a)).  Both collapse to 2/a up to the threshold
    alpha0, where the bracket is exact.
    """
    _check_alpha(alpha)
    two_over = 2.0 / alpha
    candidates = [
        (two_over, "continuous_limit"),
        (special.zeta(1.0 + 2.0 * alpha, _ZETA_TOL), "point_evaluation"),
    ]
    if alpha > 1.0:
        candidates.append((improved_lower_value(alpha), "improved"))
    lower, lower_method = candidates[0]
    for value, method in candidates[1:]:
        if value > lower:
            lower, lower_method = value, method
    upper = max(two_over, special.zeta(1.0 + alpha, _ZETA_TOL))
    exact = alpha <= alpha0_value()
    return BoundReport(alpha, lower, upper, exact, lower_method, "cauchy_schwarz_sup")


def composition_bounds(re_w: float) -> tuple[float, float]:
    """Point-evaluation lower and form-norm upper bound for symbols with limit re_w.

    With a = re_w - 1/2: lower = sqrt(zeta(2 re_w)), upper is the square
    root of the form-norm upper bound; for a <= alpha0 the upper equals
    sqrt(2/a) and is attained.
    """
    if not (re_w > 0.5 and math.isfinite(re_w)):
        raise ValueError(f"re_w={re_w} must exceed 1/2")
    alpha = re_w - 0.5
    lower = math.sqrt(special.zeta(2.0 * re_w, _ZETA_TOL))
    upper = math.sqrt(theorem_bounds(alpha).upper)
    return lower, upper


def disc_bounds(r: float) -> tuple[float, float]:
    """Sharp composition bounds on the disc: (sqrt(1/(1-r^2)), sqrt((1+r)/(1-r)))."""
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r={r} must lie in [0, 1)")
    return math.sqrt(1.0 / (1.0 - r * r)), math.sqrt((1.0 + r) / (1.0 - r))


def transfer_alpha_r(alpha: float, r: float) -> float:
    """Effective parameter a(1-r)/(1+r) after transferring a disc symbol."""
    _check_alpha(alpha)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r={r} must lie in [0, 1)")
    return alpha * (1.0 - r) / (1.0 + r)


def restated_factor_check(alpha: float, r: float) -> RestatedCheck:
    """Check the transferred upper bound against the factored form.

    holds: sqrt(upper at a_r) <= sqrt(upper at a) * sqrt((1+r)/(1-r)).
    sharpness_fails: zeta(1+a_r)/zeta(1+2a) < (1+r)/(1-r), which certifies
    that the factored bound cannot be attained at this (alpha, r).
    """
    alpha_r = transfer_alpha_r(alpha, r)
    lhs = math.sqrt(theorem_bounds(alpha_r).upper)
    rhs = math.sqrt(theorem_bounds(alpha).upper) * disc_bounds(r)[1]
    holds = lhs <= rhs * (1.0 + 1e-12) + 1e-12
    ratio = special.zeta(1.0 + alpha_r, _ZETA_TOL) / special.zeta(1.0 + 2.0 * alpha, _ZETA_TOL)
    sharpness_fails = ratio < (1.0 + r) / (1.0 - r)
    return RestatedCheck(holds, sharpness_fails)
