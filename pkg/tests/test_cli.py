import io
import json

import numpy as np
import pandas as pd
import pytest

from app.main import main
from app.schemas.report_schema import FOUR_QUBIT_COLUMNS, MEASURE_COLUMNS
from app.services import verification_service
from app.services.export_service import write_state
from app.services.state_service import basis_state
from tests.conftest import FailingCheck, PassingCheck


@pytest.fixture
def ghz_file(tmp_path, ghz):
    path = tmp_path / "ghz.json"
    write_state(ghz, path)
    return path


def read_csv(text: str) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(text))


class TestMeasure:
    def test_csv(self, ghz_file, capsys):
        assert main(["measure", "--input", str(ghz_file)]) == 0
        frame = read_csv(capsys.readouterr().out)
        assert list(frame.columns) == MEASURE_COLUMNS
        assert frame.loc[0, "t_min"] == pytest.approx(1.0)
        assert frame.loc[0, "tangle"] == pytest.approx(1.0)

    def test_json(self, ghz_file, capsys):
        assert main(["measure", "--input", str(ghz_file), "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["t_min_pair"] == "AB"
        assert document["c_gm"] == pytest.approx(1.0)

    def test_writes_to_file(self, ghz_file, tmp_path, capsys):
        out = tmp_path / "report.csv"
        assert main(["measure", "--input", str(ghz_file), "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert list(read_csv(out.read_text()).columns) == MEASURE_COLUMNS

    def test_four_qubit_input_gets_four_qubit_report(self, tmp_path, capsys):
        path = tmp_path / "zero4.json"
        write_state(basis_state("0000"), path)
        assert main(["measure", "--input", str(path)]) == 0
        frame = read_csv(capsys.readouterr().out)
        assert list(frame.columns) == FOUR_QUBIT_COLUMNS
        assert frame.loc[0, "f4_ab"] == pytest.approx(2 / 3)


class TestInvalidInput:
    def test_missing_file(self, tmp_path, capsys):
        assert main(["measure", "--input", str(tmp_path / "missing.json")]) == 2
        assert "error: Cannot read state file" in capsys.readouterr().err

    def test_wrong_length(self, tmp_path):
        path = tmp_path / "short.json"
        path.write_text(json.dumps({"n_qubits": 3, "amplitudes": [[1, 0], [0, 0]]}))
        assert main(["measure", "--input", str(path)]) == 2

    def test_unnormalized(self, tmp_path):
        path = tmp_path / "loose.json"
        path.write_text(json.dumps({"n_qubits": 3, "amplitudes": [[1, 0]] * 8}))
        assert main(["measure", "--input", str(path)]) == 2

    def test_two_qubit_state(self, tmp_path, bell):
        path = tmp_path / "bell.json"
        write_state(bell, path)
        assert main(["measure", "--input", str(path)]) == 2

    def test_measure_needs_input(self, capsys):
        assert main(["measure"]) == 2
        assert "--input" in capsys.readouterr().err

    def test_pivot_d_outside_four(self, ghz_file):
        assert main(["measure", "--input", str(ghz_file), "--pivot", "D"]) == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit):
            main(["plot"])


class TestFamily:
    def test_psi_sweep(self, capsys):
        assert main(["family", "--family", "psi_r", "--grid-points", "11"]) == 0
        frame = read_csv(capsys.readouterr().out)
        assert list(frame.columns) == ["param"] + MEASURE_COLUMNS
        assert len(frame) == 11
        row = frame[np.isclose(frame["param"], 0.7)].iloc[0]
        assert row["c_gm"] > 0.8 > row["t_gm"]

    def test_single_parameter(self, capsys):
        assert main(["family", "--family", "phi_t", "--param", "0.6"]) == 0
        frame = read_csv(capsys.readouterr().out)
        assert len(frame) == 1
        assert frame.loc[0, "t_gm"] == pytest.approx(2 * 0.6 * 0.8)

    def test_fixed_family_has_empty_param(self, capsys):
        assert main(["family", "--family", "ghz3"]) == 0
        frame = read_csv(capsys.readouterr().out)
        assert len(frame) == 1
        assert pd.isna(frame.loc[0, "param"])

    def test_fixed_family_rejects_param(self):
        assert main(["family", "--family", "w3", "--param", "0.5"]) == 2

    def test_output_is_reproducible(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (first, second):
            assert main(["family", "--family", "xi_r", "--grid-points", "7", "--out", str(out)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_family_needs_name(self):
        assert main(["family"]) == 2


class TestVerify:
    def test_passes(self, monkeypatch, capsys):
        monkeypatch.setattr(verification_service, "CHECKS", [PassingCheck])
        assert main(["verify", "--trials", "5", "--seed", "3"]) == 0
        assert capsys.readouterr().out.startswith("PASS PassingCheck/always")

    def test_failure_exits_one(self, monkeypatch, capsys):
        monkeypatch.setattr(verification_service, "CHECKS", [PassingCheck, FailingCheck])
        assert main(["verify"]) == 1
        captured = capsys.readouterr()
        assert "FAIL FailingCheck/never" in captured.out
        assert "error: 1 check(s) failed: FailingCheck/never" in captured.err

    def test_json_summary(self, monkeypatch, capsys):
        monkeypatch.setattr(verification_service, "CHECKS", [PassingCheck])
        assert main(["verify", "--seed", "5", "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["seed"] == 5
        assert document["results"][0]["passed"] is True


class TestOracleCompare:
    def test_small_run(self, capsys):
        argv = ["oracle-compare", "--trials", "2", "--coarse-grid", "16", "--format", "json"]
        assert main(argv) == 0
        document = json.loads(capsys.readouterr().out)
        assert len(document["rows"]) == 6
        assert document["max_deviation"] < 1e-2
        assert {row["pair"] for row in document["rows"]} == {"AB", "BC", "CA"}

    def test_csv_columns(self, capsys):
        assert main(["oracle-compare", "--trials", "1", "--coarse-grid", "16"]) == 0
        frame = read_csv(capsys.readouterr().out)
        assert list(frame.columns) == [
            "state", "pair", "f_analytic", "f_oracle", "deviation", "theta", "phi",
        ]


class TestFour:
    def test_product_state_report(self, tmp_path, capsys):
        path = tmp_path / "zero4.json"
        write_state(basis_state("0000"), path)
        assert main(["four", "--input", str(path), "--pivot", "D", "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["witness_pivot"] == "D"
        assert document["genuinely_entangled"] is False
        assert len(document["separable_cuts"]) == 7
