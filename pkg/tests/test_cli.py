import json
import math

import pytest


def _rows(csv_text):
    lines = csv_text.strip().splitlines()
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


class TestBoundsCommand:
    def test_exact_case_json(self, run_cli):
        res = run_cli(["bounds", "--alpha", "0.5"])
        assert res.code == 0
        payload = json.loads(res.stdout)
        assert payload["lower"] == 4.0
        assert payload["upper"] == 4.0
        assert payload["exact"] is True
        assert payload["lower_method"] == "continuous_limit"
        assert payload["upper_method"] == "cauchy_schwarz_sup"
        assert payload["composition"]["upper"] == 2.0

    def test_three_halves(self, run_cli):
        res = run_cli(["bounds", "--alpha", "1.5"])
        payload = json.loads(res.stdout)
        assert payload["lower"] == pytest.approx(4.0 / 3.0, abs=1e-9)
        assert 1.34 < payload["upper"] < 1.35
        assert payload["exact"] is False

    def test_csv_header(self, run_cli):
        res = run_cli(["bounds", "--alpha", "1.0", "--format", "csv"])
        header, rows = _rows(res.stdout)
        assert header[:4] == ["alpha", "lower", "upper", "exact"]
        assert len(rows) == 1

    def test_invalid_alpha_usage_error(self, run_cli):
        assert run_cli(["bounds", "--alpha", "-1"]).code == 2
        assert run_cli(["bounds", "--alpha", "0"]).code == 2


class TestScanCommand:
    def test_figure_grid(self, run_cli):
        res = run_cli(["scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "101"])
        assert res.code == 0
        header, rows = _rows(res.stdout)
        assert header == [
            "alpha", "two_over_alpha", "zeta_1p_alpha", "zeta_1p_2alpha",
            "improved_lower", "lower", "upper",
        ]
        assert len(rows) == 101
        first = rows[0]
        assert float(first[1]) == 2.0
        assert float(first[2]) == pytest.approx(1.644934066848, abs=1e-9)
        assert math.isnan(float(first[4]))  # improved bound undefined at alpha = 1

    def test_sign_changes_bracket_crossings(self, run_cli):
        res = run_cli(["scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "101"])
        _, rows = _rows(res.stdout)
        upper_curve = [float(r[2]) - float(r[1]) for r in rows]
        point_curve = [float(r[3]) - float(r[1]) for r in rows]
        n_upper = sum(
            1 for i in range(len(upper_curve) - 1) if upper_curve[i] * upper_curve[i + 1] < 0
        )
        n_point = sum(
            1 for i in range(len(point_curve) - 1) if point_curve[i] * point_curve[i + 1] < 0
        )
        assert n_upper == 1
        assert n_point == 1

    def test_byte_identical_reruns(self, run_cli):
        argv = ["scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "51"]
        assert run_cli(argv).stdout == run_cli(argv).stdout

    def test_threaded_run_matches(self, run_cli, monkeypatch):
        argv = ["scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "51"]
        sequential = run_cli(argv).stdout
        monkeypatch.setenv("HILBERT_FORMS_THREADS", "4")
        assert run_cli(argv).stdout == sequential

    def test_output_file(self, run_cli, tmp_path):
        target = tmp_path / "scan.csv"
        argv = [
            "scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "11",
            "--output", str(target),
        ]
        res = run_cli(argv)
        assert res.code == 0
        assert target.read_text().startswith("alpha,two_over_alpha")

    def test_unwritable_output(self, run_cli):
        res = run_cli([
            "scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "11",
            "--output", "/nonexistent-dir/scan.csv",
        ])
        assert res.code == 1

    def test_bad_grid(self, run_cli):
        assert run_cli(["scan", "--alpha-min", "2", "--alpha-max", "1"]).code == 2
        assert run_cli(["scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "1"]).code == 2


class TestSupCommand:
    def test_limit_case(self, run_cli):
        res = run_cli(["sup", "--alpha", "0.5", "--m-max", "1000"])
        payload = json.loads(res.stdout)
        assert payload["sup"] == 4.0
        assert payload["argmax"] == "limit"

    def test_first_index_case(self, run_cli):
        res = run_cli(["sup", "--alpha", "3.0", "--m-max", "1000"])
        payload = json.loads(res.stdout)
        assert payload["argmax"] == 1
        assert payload["sup"] == pytest.approx(1.0823232337111382, abs=1e-8)


class TestEigCommand:
    def test_two_by_two(self, run_cli):
        res = run_cli(["eig", "--alpha", "0.5", "--n", "2", "--tol", "1e-13"])
        payload = json.loads(res.stdout)
        assert payload["value"] == pytest.approx(1.3090169943749475, abs=1e-10)
        assert payload["residual"] <= 1e-13
        assert payload["iterations"] >= 1

    def test_matrix_free_path(self, run_cli):
        dense = json.loads(run_cli(["eig", "--alpha", "1.0", "--n", "512"]).stdout)
        free = json.loads(
            run_cli(["eig", "--alpha", "1.0", "--n", "5000", "--tol", "1e-10"]).stdout
        )
        assert free["value"] > dense["value"]  # larger section dominates


class TestRayleighCommand:
    def test_eps_family(self, run_cli):
        res = run_cli([
            "rayleigh", "--alpha", "1.0", "--kind", "eps_family", "--eps", "0.1",
            "--n", "10000",
        ])
        payload = json.loads(res.stdout)
        assert payload["value"] == pytest.approx(1.8261927869599555, abs=1e-8)

    def test_usage_errors(self, run_cli):
        assert run_cli(["rayleigh", "--alpha", "1.0", "--n", "10"]).code == 2  # missing eps
        assert run_cli([
            "rayleigh", "--alpha", "1.0", "--kind", "alpha_family", "--n", "10",
        ]).code == 2  # alpha_family needs alpha > 1


class TestRootsCommand:
    def test_named_constants(self, run_cli):
        res = run_cli(["roots"])
        assert res.code == 0
        payload = json.loads(res.stdout)
        assert set(payload) == {
            "alpha0", "alpha1", "alpha2", "zeta_vs_2a", "zeta2_vs_2a", "improved_vs_2a",
        }
        for record in payload.values():
            assert set(record) == {"value", "bracket_lo", "bracket_hi", "residual", "iterations"}
        assert round(payload["alpha0"]["value"], 2) == 1.48
        assert round(payload["alpha1"]["value"], 3) == 1.553
        assert round(payload["alpha2"]["value"], 3) == 1.507


class TestVerifyCommand:
    def test_signs_suite_passes(self, run_cli):
        res = run_cli(["verify", "--suite", "signs"])
        assert res.code == 0
        payload = json.loads(res.stdout)
        assert payload["cases"] == 18
        assert payload["failures"] == []

    def test_identity_suite_passes(self, run_cli):
        res = run_cli(["verify", "--suite", "identity"])
        assert res.code == 0

    def test_unknown_suite(self, run_cli):
        assert run_cli(["verify", "--suite", "nope"]).code == 2

    def test_lemma4_reports_known_paper_defect(self, run_cli):
        # The stated partial-sum bound for 1 < alpha < 2 is numerically false
        # (see notes in the repository history); the suite must detect it and
        # exit nonzero, pinning the failure shape exactly.
        res = run_cli(["verify", "--suite", "lemma4"])
        assert res.code == 1
        payload = json.loads(res.stdout)
        assert len(payload["failures"]) == 8991
        assert all(f["inputs"]["which"] == "partial_upper_12" for f in payload["failures"])
        assert all(1.1 <= f["inputs"]["alpha"] <= 1.9 for f in payload["failures"])


class TestSandwichCommand:
    def test_columns_bounded(self, run_cli):
        res = run_cli(["sandwich", "--alpha-min", "2", "--alpha-max", "8", "--steps", "25"])
        assert res.code == 0
        header, rows = _rows(res.stdout)
        assert header == [
            "alpha", "lower_minus_1_times_4_pow_alpha", "upper_minus_1_times_2_pow_alpha",
        ]
        lower_col = [float(r[1]) for r in rows]
        upper_col = [float(r[2]) for r in rows]
        assert all(0.0 < v < 10.0 for v in lower_col)
        assert all(0.0 < v < 10.0 for v in upper_col)

    def test_below_two_rejected(self, run_cli):
        assert run_cli(["sandwich", "--alpha-min", "1.5", "--alpha-max", "3"]).code == 2


class TestTopLevel:
    def test_seed_info(self, run_cli):
        res = run_cli(["--seed-info"])
        assert res.code == 0
        payload = json.loads(res.stdout)
        assert round(payload["alpha0"], 2) == 1.48
        assert round(payload["alpha1"], 3) == 1.553
        assert round(payload["alpha2"], 3) == 1.507
        assert payload["version"]

    def test_no_command(self, run_cli):
        assert run_cli([]).code == 2
