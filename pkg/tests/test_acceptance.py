"""Acceptance suite: one test per criterion, with a pass/fail line for each.

Criteria 7 and 11 are implemented exactly as stated and are expected to
fail: the closed-form partial-sum bound for 1 < alpha < 2 is numerically
false (its proof drops a positive term), and the truncated double sum at
alpha = 1.25 converges like n^(-1/2), far slower than the stated 1e-4 at
n = 1e5.  Both defects are pinned precisely by these tests and analysed
in the repository notes.
"""

import math
import time
from contextlib import contextmanager

import pytest

from hilbert_forms import bounds, kernel, normest, roots, verify

ALPHA0 = 1.4838999907612911
ZETA_2_5 = 1.3414872572509172
EIG_2X2_HALF = 1.3090169943749475


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"acceptance {number:02d} {name}: FAIL")
        raise
    else:
        print(f"acceptance {number:02d} {name}: PASS")


def test_criterion_1_named_constants():
    with criterion(1, "named constants"):
        start = time.perf_counter()
        a0 = roots.solve_alpha0(1e-10)
        h = roots.solve_h_roots(1e-10)
        elapsed = time.perf_counter() - start
        assert round(a0.value, 2) == 1.48
        assert round(h.alpha1.value, 3) == 1.553
        assert round(h.alpha2.value, 3) == 1.507
        assert h.alpha1.value > h.alpha2.value
        for res in (a0, h.alpha1, h.alpha2):
            assert res.bracket_hi - res.bracket_lo <= 1e-10
        assert elapsed < 1.0


def test_criterion_2_exact_norm_regime():
    with criterion(2, "exact-norm regime"):
        start = time.perf_counter()
        for alpha in (0.5, 1.0, 1.48):
            report = bounds.theorem_bounds(alpha)
            assert abs(report.lower - 2.0 / alpha) <= 1e-9
            assert abs(report.upper - 2.0 / alpha) <= 1e-9
            assert report.exact
        assert abs(bounds.theorem_bounds(0.5).upper - 4.0) <= 1e-9
        assert abs(bounds.theorem_bounds(1.0).upper - 2.0) <= 1e-9
        assert time.perf_counter() - start < 1.0


def test_criterion_3_three_halves_special_case():
    with criterion(3, "alpha = 3/2 special case"):
        report = bounds.theorem_bounds(1.5)
        assert abs(report.lower - 4.0 / 3.0) <= 1e-9
        assert abs(report.upper - ZETA_2_5) <= 1e-9
        assert 1.34 < report.upper < 1.35


def test_criterion_4_failure_threshold():
    with criterion(4, "failure threshold"):
        start = time.perf_counter()
        assert normest.failure_check(1.7).violates
        for i in range(101, 149):
            assert not normest.failure_check(i / 100.0).violates
        crossing = roots.solve_crossings(1e-10).improved_vs_2a.value
        assert ALPHA0 < crossing <= 1.7
        assert time.perf_counter() - start < 5.0


def test_criterion_5_figure_reproduction(run_cli):
    with criterion(5, "bound-curve scan"):
        res = run_cli(["scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "1001"])
        assert res.code == 0
        lines = res.stdout.strip().splitlines()
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 1001
        alphas = [float(r[0]) for r in rows]
        upper_curve = [float(r[2]) - float(r[1]) for r in rows]
        point_curve = [float(r[3]) - float(r[1]) for r in rows]
        upper_flips = [
            i for i in range(len(rows) - 1) if upper_curve[i] * upper_curve[i + 1] < 0
        ]
        point_flips = [
            i for i in range(len(rows) - 1) if point_curve[i] * point_curve[i + 1] < 0
        ]
        assert len(upper_flips) == 1
        assert len(point_flips) == 1
        step = alphas[1] - alphas[0]
        assert abs(alphas[upper_flips[0]] - ALPHA0) <= step
        assert 1.0 < alphas[point_flips[0]] < 2.0


def test_criterion_6_continuous_norm():
    with criterion(6, "continuous form norm"):
        for alpha in (0.25, 0.5, 1.0, 2.0, 4.0):
            value = kernel.continuous_norm_quadrature(alpha, 1e-8)
            assert abs(value - 2.0 / alpha) <= 1e-8


def test_criterion_7_lemma4_suite():
    with criterion(7, "closed-form estimate suite"):
        start = time.perf_counter()
        outcome = verify.run_suite("lemma4")
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0
        assert not outcome.failures, (
            f"{len(outcome.failures)} inequality violations, first: "
            f"{outcome.failures[0]} -- the printed bound for 1 < alpha < 2 is "
            "genuinely false; see the repository notes for the analysis"
        )


def test_criterion_8_sign_suite():
    with criterion(8, "remainder sign suite"):
        outcome = verify.run_suite("signs")
        assert outcome.cases == 18
        assert not outcome.failures


def test_criterion_9_sup_formula():
    with criterion(9, "supremum formula"):
        outcome = verify.run_suite("sup_formula")
        assert outcome.cases == 8
        assert not outcome.failures


def test_criterion_10_spectral_sandwich():
    with criterion(10, "spectral sandwich"):
        sizes = [2**k for k in range(1, 12)]
        for alpha in (0.5, 1.0, 1.5, 2.0):
            upper = bounds.theorem_bounds(alpha).upper
            previous = -math.inf
            for n in sizes:
                section = normest.top_eigen(normest.build_truncated(alpha, n), 1e-12)
                assert section.value >= previous - 1e-12
                assert section.value <= upper + 1e-9
                quotients = [
                    normest.rayleigh_quotient(alpha, n, kind="eps_family", eps=alpha / 2.0)
                ]
                if alpha > 1.0:
                    quotients.append(
                        normest.rayleigh_quotient(alpha, n, kind="alpha_family")
                    )
                for q in quotients:
                    assert q <= section.value + 1e-8
                previous = section.value
        two_by_two = normest.top_eigen(normest.build_truncated(0.5, 2), 1e-13)
        assert abs(two_by_two.value - EIG_2X2_HALF) <= 1e-10


def test_criterion_11_identity_check():
    with criterion(11, "max-kernel identity"):
        for alpha in (1.25, 1.5, 2.0):
            truncated, closed = normest.maxmax_double_sum(alpha, 10**5)
            assert truncated < closed
            assert abs(closed - truncated) <= 1e-4, (
                f"alpha={alpha}: truncation gap {closed - truncated:.3e} exceeds 1e-4; "
                "the gap decays like n^(2-2a), so 1e-4 at n=1e5 is unattainable at "
                "alpha=1.25 -- see the repository notes"
            )


def test_criterion_12_composition_corollary():
    with criterion(12, "composition corollary"):
        lower, upper = bounds.composition_bounds(1.0)
        assert abs(upper - 2.0) <= 1e-9
        assert abs(lower - math.sqrt(math.pi**2 / 6.0)) <= 1e-9
