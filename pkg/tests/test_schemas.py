from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from app.enums.enums import FamilyName, OutputFormat, Party, Subcommand
from app.schemas.config_schema import OptimizerConfig, RunConfig
from app.schemas.report_schema import FOUR_QUBIT_COLUMNS
from app.schemas.state_schema import StateFile


class TestStateFile:
    def test_builds_complex_amplitudes(self):
        parsed = StateFile.model_validate_json(
            '{"n_qubits": 2, "amplitudes": [[0.6, 0], [0, 0.8], [0, 0], [0, 0]]}'
        )
        state = parsed.to_state()
        assert state.n_qubits == 2
        assert state.amplitudes[1] == pytest.approx(0.8j)

    def test_rejects_wrong_length(self):
        with pytest.raises(ValidationError, match="need 8 amplitudes"):
            StateFile(n_qubits=3, amplitudes=[(1.0, 0.0)] * 4)

    def test_rejects_too_many_qubits(self):
        with pytest.raises(ValidationError):
            StateFile(n_qubits=6, amplitudes=[(0.0, 0.0)] * 64)

    def test_rejects_unknown_fields(self):
        with pytest.raises(ValidationError):
            StateFile.model_validate({"n_qubits": 2, "amplitudes": [[1, 0]] * 4, "label": "x"})

    def test_from_state(self, bell):
        parsed = StateFile.from_state(bell)
        assert parsed.amplitudes[3] == (pytest.approx(1 / np.sqrt(2)), 0.0)


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig(subcommand=Subcommand.VERIFY)
        assert cfg.format == OutputFormat.CSV
        assert cfg.output_path == "-"
        assert cfg.pivot == Party.A
        assert cfg.grid_points == 201

    def test_measure_requires_input(self):
        with pytest.raises(ValidationError, match="requires --input"):
            RunConfig(subcommand=Subcommand.MEASURE)

    def test_family_requires_name(self):
        with pytest.raises(ValidationError, match="requires --family"):
            RunConfig(subcommand=Subcommand.FAMILY)

    def test_pivot_d_only_for_four(self):
        with pytest.raises(ValidationError):
            RunConfig(subcommand=Subcommand.MEASURE, input_path=Path("s.json"), pivot=Party.D)
        cfg = RunConfig(subcommand=Subcommand.FOUR, input_path=Path("s.json"), pivot=Party.D)
        assert cfg.pivot == Party.D

    def test_grid_points_lower_bound(self):
        with pytest.raises(ValidationError):
            RunConfig(subcommand=Subcommand.FAMILY, family=FamilyName.PSI_R, grid_points=1)

    def test_optimizer_inherits_seed_and_grid(self):
        cfg = RunConfig(subcommand=Subcommand.ORACLE_COMPARE, seed=9, coarse_grid=16)
        optimizer = cfg.optimizer()
        assert optimizer.coarse_grid == 16
        assert optimizer.seed == 9

    def test_optimizer_keeps_default_grid(self):
        assert RunConfig(subcommand=Subcommand.VERIFY).optimizer().coarse_grid == 48


class TestOptimizerConfig:
    def test_defaults(self):
        cfg = OptimizerConfig()
        assert (cfg.coarse_grid, cfg.assistant_grid, cfg.five_qubit_grid) == (48, 24, 16)
        assert cfg.refine_iters == 200

    def test_rejects_coarse_grid_below_eight(self):
        with pytest.raises(ValidationError):
            OptimizerConfig(coarse_grid=4)

    def test_rejects_non_positive_tolerance(self):
        with pytest.raises(ValidationError):
            OptimizerConfig(refine_tol=0.0)

    def test_is_frozen(self):
        cfg = OptimizerConfig()
        with pytest.raises(ValidationError):
            cfg.coarse_grid = 12


def test_four_qubit_columns():
    assert FOUR_QUBIT_COLUMNS[0] == "f4_ab"
    assert FOUR_QUBIT_COLUMNS[-1] == "t4b_gm"
    assert len(FOUR_QUBIT_COLUMNS) == 16
