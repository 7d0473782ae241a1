"""Named verification suites over the module invariants.

Each suite replays one family of inequalities or identities against
elementary direct computations and reports every violation with its
inputs.  Direct tail sums are enclosed from above by a midpoint-rule
bracket (the integrand is convex with positive fourth derivative), so a
reported pass never rests on a truncated comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import bounds, normest, special

__all__ = ["VerifyOutcome", "SUITES", "run_suite"]

_FP_GRACE = 1e-12
_TAIL_EXTRA = 8000


@dataclass
class VerifyOutcome:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, inputs: dict, expected: str, observed) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(
                {"inputs": inputs, "expected": expected, "observed": observed}
            )

    @property
    def passed(self) -> bool:
        return not self.failures


def _scaled_tail_upper(alpha: float, m: int) -> float:
    """Upper enclosure of m^a * sum_{n>m} n^(-a-1) by direct summation.

    Terms up to N are summed in the scale-free form (m/n)^a / n; the rest
    is bounded by the midpoint integral minus a one-sided curvature
    correction, both elementary.
    """
    n_hi = max(2 * m, m + _TAIL_EXTRA)
    n = np.arange(m + 1, n_hi + 1, dtype=float)
    direct = float(np.sum((m / n) ** alpha / n))
    rest = (m / (n_hi + 0.5)) ** alpha / alpha - (alpha + 1.0) / 24.0 * (
        m / (n_hi + 1.0)
    ) ** alpha / (n_hi + 1.0) ** 2
    return direct + rest


def _scaled_partial(alpha: float, m: int) -> float:
    """m^-a * sum_{n<=m} n^(a-1), summed in the scale-free form."""
    n = np.arange(1, m + 1, dtype=float)
    return float(np.sum((n / m) ** (alpha - 1.0))) / m


def suite_lemma4(m_max: int = 1000) -> VerifyOutcome:
    """The four closed-form estimates against direct sums on the alpha grid."""
    out = VerifyOutcome("lemma4")
    for i in range(1, 31):
        alpha = i / 10.0
        zl = bounds.lemma4_estimate("zeta_lower", alpha)
        z = special.zeta(1.0 + alpha, 1e-13)
        out.check(z >= zl - _FP_GRACE, {"alpha": alpha, "which": "zeta_lower"}, f"zeta(1+a) >= {zl}", z)
        for m in range(1, m_max + 1):
            tail = _scaled_tail_upper(alpha, m)
            rhs = bounds.lemma4_estimate("tail_upper", alpha, m)
            out.check(
                tail <= rhs + _FP_GRACE,
                {"alpha": alpha, "m": m, "which": "tail_upper"},
                f"scaled tail <= {rhs}",
                tail,
            )
        if 1.0 <= alpha <= 2.0:
            for m in range(1, m_max + 1):
                part = _scaled_partial(alpha, m)
                rhs = bounds.lemma4_estimate("partial_upper_12", alpha, m)
                out.check(
                    part <= rhs + _FP_GRACE,
                    {"alpha": alpha, "m": m, "which": "partial_upper_12"},
                    f"scaled partial <= {rhs}",
                    part,
                )
        if 2.0 <= alpha <= 3.0:
            for m in range(1, m_max + 1):
                part = _scaled_partial(alpha, m)
                rhs = bounds.lemma4_estimate("partial_upper_23", alpha, m)
                out.check(
                    part <= rhs + _FP_GRACE,
                    {"alpha": alpha, "m": m, "which": "partial_upper_23"},
                    f"scaled partial <= {rhs}",
                    part,
                )
    return out


def suite_signs() -> VerifyOutcome:
    """Remainder-sign quadrature equals (-1)^(k-1) across the documented grid."""
    out = VerifyOutcome("signs")
    for k in (1, 2):
        expected = "positive" if k == 1 else "negative"
        for g_exp in (-0.5, -2.0, -3.0):
            for x0 in (1.0, 5.0, 50.0):
                got = special.remainder_sign_check(g_exp, k, x0)
                out.check(
                    got == expected,
                    {"g_exponent": g_exp, "k": k, "x0": x0},
                    expected,
                    got,
                )
    return out


def suite_monotone_h() -> VerifyOutcome:
    """h1 strictly decreasing and h2 strictly increasing on the 0.001 grid."""
    out = VerifyOutcome("monotone_h")
    grid = [i / 1000.0 for i in range(1000, 2001)]
    h1v = [bounds.h1(a) for a in grid]
    h2v = [bounds.h2(a) for a in grid]
    for i in range(len(grid) - 1):
        out.check(
            h1v[i + 1] < h1v[i],
            {"alpha": grid[i], "alpha_next": grid[i + 1], "which": "h1"},
            "strictly decreasing",
            (h1v[i], h1v[i + 1]),
        )
        out.check(
            h2v[i + 1] > h2v[i],
            {"alpha": grid[i], "alpha_next": grid[i + 1], "which": "h2"},
            "strictly increasing",
            (h2v[i], h2v[i + 1]),
        )
    return out


def suite_identity() -> VerifyOutcome:
    """Truncated max-kernel double sum against 2*zeta(2a-1) - zeta(2a).

    Truncations increase with n, stay below the closed form, and their gap
    shrinks; the gap itself decays like n^(2-2a), so a fixed-n tolerance is
    only checked where that rate supports it (alpha = 1.5 at n = 1e5).
    """
    out = VerifyOutcome("identity")
    grid = (10**2, 10**3, 10**4, 10**5)
    for alpha in (1.25, 1.5, 2.0):
        gaps = []
        prev = -math.inf
        for n in grid:
            truncated, closed = normest.maxmax_double_sum(alpha, n)
            out.check(
                truncated >= prev,
                {"alpha": alpha, "n": n},
                "truncated nondecreasing in n",
                (prev, truncated),
            )
            out.check(
                truncated < closed,
                {"alpha": alpha, "n": n},
                "truncated below closed form",
                (truncated, closed),
            )
            gaps.append(closed - truncated)
            prev = truncated
        out.check(
            all(gaps[i + 1] < gaps[i] for i in range(len(gaps) - 1)),
            {"alpha": alpha, "n_grid": grid},
            "gap shrinks monotonically",
            gaps,
        )
    truncated, closed = normest.maxmax_double_sum(1.5, 10**5)
    out.check(
        abs(closed - truncated) <= 1e-4,
        {"alpha": 1.5, "n": 10**5},
        "within 1e-4 of closed form",
        closed - truncated,
    )
    return out


def suite_sup_formula(m_max: int = 10**5) -> VerifyOutcome:
    """Scanned supremum against max(2/alpha, zeta(1+alpha))."""
    out = VerifyOutcome("sup_formula")
    for alpha in (0.5, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0, 4.0):
        sup, _ = bounds.s_alpha_sup(alpha, m_max)
        formula = max(2.0 / alpha, special.zeta(1.0 + alpha, 1e-12))
        out.check(
            abs(sup - formula) <= 1e-6,
            {"alpha": alpha, "m_max": m_max},
            f"sup within 1e-6 of {formula}",
            sup,
        )
    return out


def suite_transference() -> VerifyOutcome:
    """Factored transference bound holds across the grid; sharpness flag spot-checked."""
    out = VerifyOutcome("transference")
    for alpha in (0.25, 0.5, 1.0, 1.48, 2.0, 3.0, 6.0):
        for r in (0.0, 0.1, 0.5, 0.9):
            check = bounds.restated_factor_check(alpha, r)
            out.check(
                check.holds,
                {"alpha": alpha, "r": r},
                "factored upper bound dominates",
                check,
            )
    flagged = bounds.restated_factor_check(6.0, 0.9)
    out.check(
        flagged.sharpness_fails,
        {"alpha": 6.0, "r": 0.9},
        "zeta ratio below Mobius factor",
        flagged,
    )
    return out


SUITES = {
    "lemma4": suite_lemma4,
    "signs": suite_signs,
    "monotone_h": suite_monotone_h,
    "identity": suite_identity,
    "sup_formula": suite_sup_formula,
    "transference": suite_transference,
}


def run_suite(name: str) -> VerifyOutcome:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn()
