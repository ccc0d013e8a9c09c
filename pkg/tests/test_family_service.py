import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.core.exceptions import ParameterOutOfRange
from app.enums.enums import FamilyName
from app.schemas.config_schema import FamilyId
from app.services.family_service import (
    build,
    build_named,
    default_grid,
    opposite_order_witness,
    phi_value,
    solve_phi_parameter,
    sweep,
)
from app.services.measure_service import report

MIN_ORDERING_POINTS = (0.72, 0.76, 0.80, 0.84, 0.88)


class TestBuild:
    @pytest.mark.parametrize("name", list(FamilyName))
    def test_every_family_is_normalized(self, name):
        parameter = 0.3 if name.is_parameterized else None
        state = build_named(name, parameter)
        assert state.norm == pytest.approx(1.0, abs=1e-12)

    def test_xi_endpoint(self):
        state = build_named(FamilyName.XI_R, 1.0)
        assert state.amplitudes[0b100] == pytest.approx(1.0)
        assert np.count_nonzero(state.amplitudes) == 1

    def test_psi_endpoint(self):
        state = build_named(FamilyName.PSI_R, 0.0)
        assert state.amplitudes[0b000] == 0
        assert state.amplitudes[0b101] == pytest.approx(0.5)
        assert state.amplitudes[0b110] == pytest.approx(1 / math.sqrt(2))
        assert state.amplitudes[0b111] == pytest.approx(0.5)

    def test_product_n_takes_qubit_count(self):
        state = build(FamilyId(name=FamilyName.PRODUCT_N, n_qubits=4))
        assert state.n_qubits == 4
        assert state.amplitudes[0] == 1

    def test_zero_ghz3_leaves_a_unentangled(self):
        state = build_named(FamilyName.ZERO_GHZ3)
        assert state.amplitudes[0b0000] == pytest.approx(1 / math.sqrt(2))
        assert state.amplitudes[0b0111] == pytest.approx(1 / math.sqrt(2))

    def test_parameter_out_of_range(self):
        with pytest.raises(ParameterOutOfRange):
            build_named(FamilyName.PHI_T, 1.5)

    def test_missing_parameter(self):
        with pytest.raises(ValidationError):
            FamilyId(name=FamilyName.PSI_R)

    def test_unexpected_parameter(self):
        with pytest.raises(ValidationError):
            FamilyId(name=FamilyName.GHZ3, parameter=0.5)

    def test_qubit_count_only_for_product_n(self):
        with pytest.raises(ValidationError):
            FamilyId(name=FamilyName.GHZ3, n_qubits=4)


class TestSweep:
    def test_default_grid(self):
        assert np.allclose(default_grid(5), [0.0, 0.25, 0.5, 0.75, 1.0])
        assert default_grid().size == 201

    def test_phi_sweep_follows_reference_curve(self):
        grid = default_grid(11)
        for t, rep in sweep(FamilyName.PHI_T, grid):
            assert rep.t_gm == pytest.approx(phi_value(t), abs=1e-9)
            assert rep.c_min == pytest.approx(phi_value(t), abs=1e-9)

    def test_sweep_keeps_grid_order(self):
        grid = [0.9, 0.1, 0.5]
        assert [t for t, _ in sweep(FamilyName.XI_R, grid)] == grid

    def test_fixed_family_cannot_be_swept(self):
        with pytest.raises(ParameterOutOfRange):
            sweep(FamilyName.GHZ3, [0.5])

    def test_rejects_out_of_range_grid(self):
        with pytest.raises(ParameterOutOfRange):
            sweep(FamilyName.PSI_R, [0.5, 1.2])

    def test_xi_has_no_tangle(self):
        for _, rep in sweep(FamilyName.XI_R, default_grid(21)):
            assert rep.tangle <= 1e-8


class TestOrderings:
    def test_geometric_means_disagree_on_psi(self):
        rep = report(build_named(FamilyName.PSI_R, 0.7))
        assert rep.c_gm > 0.8 > rep.t_gm

    @pytest.mark.parametrize("r", MIN_ORDERING_POINTS)
    def test_minima_disagree_between_xi_and_psi(self, r):
        xi = report(build_named(FamilyName.XI_R, r))
        psi = report(build_named(FamilyName.PSI_R, r))
        assert xi.c_min > psi.c_min
        assert xi.t_min < psi.t_min


class TestReferenceScale:
    def test_phi_value_peak(self):
        assert phi_value(1 / math.sqrt(2)) == pytest.approx(1.0)
        assert phi_value(0.0) == 0.0

    def test_solve_phi_parameter(self):
        assert solve_phi_parameter(0.8) == pytest.approx(math.sqrt(0.2))
        assert phi_value(solve_phi_parameter(0.37)) == pytest.approx(0.37)

    def test_solve_rejects_out_of_range(self):
        with pytest.raises(ParameterOutOfRange):
            solve_phi_parameter(1.1)

    def test_opposite_order_witness(self):
        psi = build_named(FamilyName.PSI_R, 0.7)
        rep = report(psi)
        t_prime = opposite_order_witness("c_gm", "t_gm", psi)
        assert t_prime is not None
        assert rep.c_gm > phi_value(t_prime) > rep.t_gm
        assert opposite_order_witness("t_gm", "c_gm", psi) is None

    def test_witness_rejects_unknown_column(self, ghz):
        with pytest.raises(ParameterOutOfRange):
            opposite_order_witness("c_fill", "t_gm", ghz)
