"""Bernoulli polynomials, real-argument zeta, and Euler-Maclaurin power sums.

Everything here works on monomials f(x) = x^p.  The two summation formulas
(tail sums over n > m and partial sums over n <= m) are expanded to order
k in {1, 2}; the dropped remainder is certified in two ways:

* its magnitude is budgeted by the first omitted correction term, and
* its sign is derived from the sign pattern of the odd Bernoulli
  polynomials against a positive decreasing integrand, whenever that
  argument applies (``remainder_sign_check`` verifies the pattern by
  quadrature).

All arithmetic is binary64.  Direct sums run in ascending index order
through ``math.fsum``, so repeated runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import AccuracyError

__all__ = [
    "EMResult",
    "bernoulli_poly",
    "bernoulli_number",
    "zeta",
    "em_tail_sum",
    "em_partial_sum",
    "tail_power_sum",
    "remainder_sign_check",
]

# B_k(x) coefficients, highest degree first, k = 0..5.
_BERNOULLI_COEFFS = {
    0: (1.0,),
    1: (1.0, -0.5),
    2: (1.0, -1.0, 1.0 / 6.0),
    3: (1.0, -1.5, 0.5, 0.0),
    4: (1.0, -2.0, 1.0, 0.0, -1.0 / 30.0),
    5: (1.0, -2.5, 5.0 / 3.0, 0.0, -1.0 / 6.0, 0.0),
}

_BERNOULLI_NUMBERS = {2: 1.0 / 6.0, 4: -1.0 / 30.0}

# Correction-term factors B_{2j}/(2j)!.  B_6 = 1/42 is only ever used to
# budget the k=2 remainder, so it stays internal.
_B2_OVER_2F = (1.0 / 6.0) / 2.0
_B4_OVER_4F = (-1.0 / 30.0) / 24.0
_B6_OVER_6F = (1.0 / 42.0) / 720.0

_ZETA_CUTOFF_CAP = 10**6
_TAIL_START_CAP = 10**7

_SIGN_QUAD_PANELS = 1024
_SIGN_ZERO_THRESHOLD = 1e-13


@dataclass(frozen=True)
class EMResult:
    """An Euler-Maclaurin evaluation.

    ``value`` excludes the remainder.  ``remainder_sign`` is "negative"
    when the true sum lies below ``value`` (so ``value`` is an upper
    bound), "positive" when it lies above, and "unknown" when the sign
    argument does not apply.  ``remainder_bound`` is the magnitude of the
    first omitted correction term.
    """

    value: float
    remainder_bound: float
    remainder_sign: str


def bernoulli_poly(k: int, x: float) -> float:
    """Evaluate B_k(x) for k in 0..5 and 0 <= x <= 1."""
    if k not in _BERNOULLI_COEFFS:
        raise ValueError(f"unsupported Bernoulli degree {k}; need 0 <= k <= 5")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    acc = 0.0
    for c in _BERNOULLI_COEFFS[k]:
        acc = acc * x + c
    return acc


def bernoulli_number(k: int) -> float:
    """B_2 = 1/6 and B_4 = -1/30; other degrees are rejected."""
    try:
        return _BERNOULLI_NUMBERS[k]
    except KeyError:
        raise ValueError(f"unsupported Bernoulli number index {k}; need k in {{2, 4}}") from None


def _falling(p: float, order: int) -> float:
    """Coefficient of the order-th derivative of x^p, i.e. p(p-1)...(p-order+1)."""
    c = 1.0
    for i in range(order):
        c *= p - i
    return c


def _remainder_sign(p: float, k: int) -> str:
    """Sign of the order-k remainder for f(x) = x^p, via the odd-polynomial lemma.

    The remainder integrates f^(2k+1) against the periodized B_{2k+1}.  When
    |f^(2k+1)| is decreasing (p < 2k+1) the unit-interval sign is
    (-1)^(k-1) times the sign of the derivative coefficient.
    """
    c = _falling(p, 2 * k + 1)
    if c == 0.0:
        return "unknown"  # remainder vanishes identically
    if p - (2 * k + 1) >= 0.0:
        return "unknown"  # integrand not decreasing; lemma inapplicable
    s = 1.0 if c > 0.0 else -1.0
    if k % 2 == 0:
        s = -s
    return "positive" if s > 0 else "negative"


def em_tail_sum(p: float, m: int, k: int = 1) -> EMResult:
    """Sum_{n>m} n^p by the Euler-Maclaurin expansion at m.

    Requires p < -1 (convergence), integer m >= 1 and order k in {1, 2}.
    The returned certificate makes the value a signed bound: k=1 gives an
    upper bound for the true tail, k=2 a lower bound.
    """
    if p >= -1.0:
        raise ValueError(f"tail sum diverges for p={p} >= -1")
    if m < 1 or int(m) != m:
        raise ValueError(f"start index m={m} must be a positive integer")
    if k not in (1, 2):
        raise ValueError(f"order k={k} not supported; need k in {{1, 2}}")
    m = float(m)
    integral = -(m ** (p + 1.0)) / (p + 1.0)
    value = integral - 0.5 * m**p
    value -= _B2_OVER_2F * _falling(p, 1) * m ** (p - 1.0)
    if k == 2:
        value -= _B4_OVER_4F * _falling(p, 3) * m ** (p - 3.0)
        bound = abs(_B6_OVER_6F * _falling(p, 5)) * m ** (p - 5.0)
    else:
        bound = abs(_B4_OVER_4F * _falling(p, 3)) * m ** (p - 3.0)
    return EMResult(value, bound, _remainder_sign(p, k))


def em_partial_sum(p: float, m_end: int, k: int = 1) -> EMResult:
    """Sum_{n=1}^{m_end} n^p by the Euler-Maclaurin expansion over [1, m_end]."""
    if m_end < 1 or int(m_end) != m_end:
        raise ValueError(f"end index m_end={m_end} must be a positive integer")
    if k not in (1, 2):
        raise ValueError(f"order k={k} not supported; need k in {{1, 2}}")
    m = float(m_end)
    if p == -1.0:
        integral = math.log(m)
    else:
        integral = (m ** (p + 1.0) - 1.0) / (p + 1.0)
    value = integral + 0.5 * (m**p + 1.0)
    value += _B2_OVER_2F * _falling(p, 1) * (m ** (p - 1.0) - 1.0)
    if k == 2:
        value += _B4_OVER_4F * _falling(p, 3) * (m ** (p - 3.0) - 1.0)
        bound = abs(_B6_OVER_6F * _falling(p, 5) * (m ** (p - 5.0) - 1.0))
    else:
        bound = abs(_B4_OVER_4F * _falling(p, 3) * (m ** (p - 3.0) - 1.0))
    return EMResult(value, bound, _remainder_sign(p, k))


def _tail_start(p: float, tol: float) -> int:
    """Smallest start index where the order-2 tail remainder budget is <= tol/2."""
    c5 = abs(_falling(p, 5)) * abs(_B6_OVER_6F)
    if c5 == 0.0:
        return 1
    start = math.ceil((c5 / (0.5 * tol)) ** (1.0 / (5.0 - p)))
    return max(1, start)


def tail_power_sum(p: float, m: int, tol: float) -> EMResult:
    """Sum_{n>m} n^p with remainder budget at most tol.

    Advances the expansion point past m until the order-2 remainder budget
    meets tol, summing the gap directly; the sign certificate is inherited
    from the Euler-Maclaurin piece.
    """
    if p >= -1.0:
        raise ValueError(f"tail sum diverges for p={p} >= -1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    start = max(int(m), _tail_start(p, tol))
    if start > _TAIL_START_CAP:
        raise AccuracyError(
            f"tail tolerance {tol} needs expansion point {start} beyond cap {_TAIL_START_CAP}",
            error_bound=tol,
        )
    gap = math.fsum(float(n) ** p for n in range(int(m) + 1, start + 1))
    em = em_tail_sum(p, start, k=2)
    return EMResult(gap + em.value, em.remainder_bound, em.remainder_sign)


@lru_cache(maxsize=None)
def _zeta_cached(s: float, tol: float) -> float:
    cutoff = max(10, _tail_start(-s, tol))
    if cutoff > _ZETA_CUTOFF_CAP:
        raise AccuracyError(
            f"zeta tolerance {tol} unattainable within summation cap {_ZETA_CUTOFF_CAP}",
            error_bound=tol,
        )
    direct = math.fsum(float(n) ** -s for n in range(1, cutoff + 1))
    return direct + em_tail_sum(-s, cutoff, k=2).value


def zeta(s: float, tol: float = 1e-12) -> float:
    """Riemann zeta for real s > 1, to absolute accuracy tol.

    Direct summation up to a cutoff chosen so the order-2 Euler-Maclaurin
    tail budget is at most tol/2.
    """
    if s <= 1.0:
        raise ValueError(f"zeta({s}) is outside the convergent range s > 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    return _zeta_cached(float(s), float(tol))


def remainder_sign_check(g_exponent: float, k: int, x0: float = 1.0) -> str:
    """Sign of int_0^1 (x0+x)^g_exponent * B_{2k+1}(x) dx by composite Simpson.

    The integrand's power factor must be positive, continuous and
    decreasing on [0, 1], i.e. g_exponent < 0.  A magnitude below 1e-13 is
    reported as "unknown" rather than guessed.
    """
    if g_exponent >= 0.0:
        raise ValueError(f"g_exponent={g_exponent} must be negative for a decreasing integrand")
    if k not in (1, 2):
        raise ValueError(f"order k={k} not supported; need k in {{1, 2}}")
    if x0 < 1.0:
        raise ValueError(f"x0={x0} must be at least 1")
    deg = 2 * k + 1

    def f(x):
        return (x0 + x) ** g_exponent * bernoulli_poly(deg, x)

    n = _SIGN_QUAD_PANELS
    h = 1.0 / n
    interior = math.fsum(
        (4.0 if i % 2 else 2.0) * f(i * h) for i in range(1, n)
    )
    integral = (f(0.0) + interior + f(1.0)) * h / 3.0
    if abs(integral) < _SIGN_ZERO_THRESHOLD:
        return "unknown"
    return "positive" if integral > 0.0 else "negative"
