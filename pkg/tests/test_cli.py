"""Command line surface: formats, determinism, exit codes."""

import json
import math

import numpy as np
import pytest

from hilfer_dfc import HilferOrder, IvpSpec, Linear, solve_linear
from hilfer_dfc.cli import main


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


class TestSolve:
    def test_linear_row_count_and_header(self, tmp_path):
        code = main(
            [
                "solve", "--linear", "--lambda", "0.1", "--mu", "0.8",
                "--nu", "0.5", "--zeta", "1", "--a", "0", "--steps", "30",
                "--out", str(tmp_path),
            ]
        )
        assert code == 0
        lines = (tmp_path / "solution.csv").read_text().splitlines()
        assert lines[0] == "n,x,u"
        assert len(lines) == 32  # header + steps + 1
        meta = json.loads((tmp_path / "solution.json").read_text())
        assert meta["solver"] == "linear-recursion"
        assert meta["max_residual"] < 1e-10
        assert meta["lambda"] == 0.1

    def test_zero_lambda_emits_monomial_column(self, tmp_path):
        code = main(
            [
                "solve", "--linear", "--lambda", "0", "--mu", "0.6",
                "--nu", "0.25", "--zeta", "2", "--steps", "8",
                "--out", str(tmp_path),
            ]
        )
        assert code == 0
        lines = (tmp_path / "solution.csv").read_text().splitlines()[1:]
        eta = HilferOrder(0.6, 0.25).eta
        for n, line in enumerate(lines):
            u = float(line.split(",")[2])
            expect = 2.0 * math.gamma(n + eta) / (math.gamma(eta) * math.gamma(n + 1))
            assert u == pytest.approx(expect, rel=1e-12)

    def test_registry_nonlinear(self, tmp_path):
        code = main(
            [
                "solve", "--nonlinear", "--g", "example45", "--a", "0.3",
                "--steps", "9", "--mu", "0.7", "--nu", "0.5",
                "--out", str(tmp_path),
            ]
        )
        assert code == 0
        lines = (tmp_path / "solution.csv").read_text().splitlines()
        assert len(lines) == 11

    def test_affine_g(self, tmp_path):
        code = main(
            [
                "solve", "--nonlinear", "--g-affine", "0.1", "-0.05",
                "--mu", "0.5", "--nu", "0.5", "--steps", "10",
                "--out", str(tmp_path),
            ]
        )
        assert code == 0

    def test_nonhomogeneous_constant_forcing(self, tmp_path):
        code = main(
            [
                "solve", "--nonhomogeneous", "--lambda", "0.1",
                "--forcing-const", "0.5", "--mu", "0.8", "--nu", "0.5",
                "--steps", "12", "--out", str(tmp_path),
            ]
        )
        assert code == 0
        meta = json.loads((tmp_path / "solution.json").read_text())
        assert meta["max_residual"] < 1e-10

    def test_byte_identical_reruns(self, tmp_path):
        args = [
            "solve", "--linear", "--lambda", "0.1", "--mu", "0.8",
            "--nu", "0.5", "--steps", "30",
        ]
        main(args + ["--out", str(tmp_path / "one")])
        main(args + ["--out", str(tmp_path / "two")])
        assert read(tmp_path / "one/solution.csv") == read(tmp_path / "two/solution.csv")
        assert read(tmp_path / "one/solution.json") == read(tmp_path / "two/solution.json")

    def test_missing_rhs_is_config_error(self, tmp_path, capsys):
        code = main(["solve", "--mu", "0.5", "--out", str(tmp_path)])
        assert code == 2
        assert not (tmp_path / "solution.csv").exists()

    def test_invalid_order_is_config_error(self, tmp_path):
        code = main(
            ["solve", "--linear", "--lambda", "0.1", "--mu", "1.5",
             "--out", str(tmp_path)]
        )
        assert code == 2
        assert not (tmp_path / "solution.csv").exists()

    def test_overflow_exit_code_with_partial_output(self, tmp_path):
        code = main(
            [
                "solve", "--nonlinear", "--g-affine", "0", "1e6",
                "--mu", "0.5", "--nu", "0.5", "--steps", "64",
                "--zeta", "5", "--out", str(tmp_path),
            ]
        )
        assert code == 3
        lines = (tmp_path / "solution.csv").read_text().splitlines()
        assert 1 < len(lines) < 66
        meta = json.loads((tmp_path / "solution.json").read_text())
        assert meta["overflow_at"] is not None


class TestFigures:
    def test_files_and_shape(self, tmp_path):
        code = main(["figures", "--out", str(tmp_path)])
        assert code == 0
        for tag in ("fig1", "fig2"):
            lines = (tmp_path / f"{tag}.csv").read_text().splitlines()
            assert lines[0] == "n,nu_0.00,nu_0.25,nu_0.50,nu_0.75,nu_1.00"
            assert len(lines) == 32

    def test_endpoint_columns_bit_match_standalone_solvers(self, tmp_path):
        main(["figures", "--out", str(tmp_path)])
        lines = (tmp_path / "fig1.csv").read_text().splitlines()[1:]
        rl = solve_linear(IvpSpec(0.0, 30, HilferOrder(0.8, 0.0), 1.0, Linear(0.1)))
        cap = solve_linear(IvpSpec(0.0, 30, HilferOrder(0.8, 1.0), 1.0, Linear(0.1)))
        for n, line in enumerate(lines):
            cells = line.split(",")
            assert cells[1] == f"{float(rl.values.values[n]):.16e}"
            assert cells[-1] == f"{float(cap.values.values[n]):.16e}"

    def test_intermediate_types_interpolate(self, tmp_path):
        main(["figures", "--out", str(tmp_path)])
        for tag in ("fig1", "fig2"):
            data = np.loadtxt(tmp_path / f"{tag}.csv", delimiter=",", skiprows=1)
            lo = np.minimum(data[:, 1], data[:, 5])
            hi = np.maximum(data[:, 1], data[:, 5])
            for col in (2, 3, 4):
                assert np.all(data[:, col] >= lo - 1e-12)
                assert np.all(data[:, col] <= hi + 1e-12)

    def test_deterministic(self, tmp_path):
        main(["figures", "--out", str(tmp_path / "a")])
        main(["figures", "--out", str(tmp_path / "b")])
        assert read(tmp_path / "a/fig1.csv") == read(tmp_path / "b/fig1.csv")
        assert read(tmp_path / "a/fig2.csv") == read(tmp_path / "b/fig2.csv")


class TestVerify:
    def test_fresh_tree_passes(self, tmp_path, capsys):
        code = main(["verify", "--out", str(tmp_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "all checks passed" in out
        payload = json.loads((tmp_path / "verify.json").read_text())
        assert payload["all_passed"]
        assert all(c["passed"] for c in payload["checks"])

    def test_subset_run(self, tmp_path, capsys):
        code = main(
            ["verify", "--only", "laplace", "--y", "2.0", "--tol", "1e-8",
             "--out", str(tmp_path)]
        )
        assert code == 0
        payload = json.loads((tmp_path / "verify.json").read_text())
        assert len(payload["checks"]) == 3

    def test_failure_exit_code(self, tmp_path):
        code = main(
            ["verify", "--only", "power-rule", "--tol", "1e-30",
             "--out", str(tmp_path)]
        )
        assert code == 1


class TestBound:
    def test_threshold_print(self, capsys):
        code = main(["bound", "--a", "0.3", "--T", "9.3", "--mu", "0.7"])
        assert code == 0
        out = capsys.readouterr().out
        assert "0.1974" in out

    def test_single_step_is_one(self, capsys):
        code = main(["bound", "--a", "0", "--T", "1", "--mu", "0.5"])
        assert code == 0
        assert "1.0" in capsys.readouterr().out

    def test_uniqueness_comparison(self, capsys):
        code = main(["bound", "--a", "0.3", "--T", "9.3", "--mu", "0.7", "--K", "0.25"])
        assert code == 0
        out = capsys.readouterr().out
        assert "satisfied = False" in out

    def test_bad_horizon_is_config_error(self, capsys):
        code = main(["bound", "--a", "0.0", "--T", "5.5", "--mu", "0.7"])
        assert code == 2


class TestEvaluators:
    def test_laplace_json(self, capsys):
        code = main(["laplace", "--y", "2.0", "--f-kind", "const"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["transform"] == pytest.approx(0.5, rel=1e-8)
        assert payload["fractional_sum_identity"]["error"] < 1e-8
        assert payload["hilfer_identity"]["error"] < 1e-8

    def test_laplace_domain_error(self, capsys):
        code = main(["laplace", "--y", "0.1"])
        assert code == 2

    def test_ml_json(self, capsys):
        code = main(["ml", "--mu", "1.0", "--lambda", "0.5", "--z", "10"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["value"] == pytest.approx(1.5**10, rel=1e-12)
        assert payload["exact_termination"] is True

    def test_ml_bad_params(self, capsys):
        code = main(["ml", "--mu", "1.0", "--lambda", "1.5", "--z", "3"])
        assert code == 2
