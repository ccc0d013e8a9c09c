import numpy as np
import pytest

from app.core.exceptions import (
    DimensionMismatch,
    EmptyKeepSet,
    FullKeepSet,
    IndexOutOfRange,
    NotNormalized,
    NotUnitary,
)
from app.models.measurement_model import Bipartition, MeasurementBasis
from app.models.state_model import DensityMatrix, PureState
from app.services.state_service import (
    all_bipartitions,
    apply_local_unitary,
    basis_state,
    is_biseparable_pure,
    measure_qubit,
    partial_trace,
    permute_qubits,
    renormalize,
    tensor,
    validate,
)
from tests.conftest import haar, same_up_to_phase


class TestValidate:
    def test_accepts_normalized_state(self, ghz):
        assert validate(ghz) is ghz

    def test_rejects_unnormalized_state(self):
        with pytest.raises(NotNormalized):
            validate(PureState(n_qubits=2, amplitudes=[1, 1, 0, 0]))

    def test_rejects_wrong_length(self):
        with pytest.raises(DimensionMismatch):
            validate(PureState(n_qubits=3, amplitudes=[1, 0, 0, 0]))

    def test_rejects_single_qubit(self):
        with pytest.raises(DimensionMismatch):
            validate(PureState(n_qubits=1, amplitudes=[1, 0]))

    def test_renormalize_repairs_scale(self):
        state = renormalize([3, 0, 0, 4])
        assert state.n_qubits == 2
        assert np.allclose(state.amplitudes, [0.6, 0, 0, 0.8])

    def test_renormalize_rejects_zero_vector(self):
        with pytest.raises(NotNormalized):
            renormalize([0, 0, 0, 0])

    def test_amplitudes_are_read_only(self, ghz):
        with pytest.raises(ValueError):
            ghz.amplitudes[0] = 0


class TestComposition:
    def test_tensor_orders_first_factor_as_leading_qubits(self):
        assert tensor(basis_state("10"), basis_state("1")).amplitudes[0b101] == 1

    def test_permute_qubits(self):
        permuted = permute_qubits(basis_state("100"), [1, 2, 0])
        assert permuted.amplitudes[0b001] == 1

    def test_permute_rejects_non_permutation(self, ghz):
        with pytest.raises(IndexOutOfRange):
            permute_qubits(ghz, [0, 0, 1])


class TestPartialTrace:
    def test_ghz_pair_marginal(self, ghz):
        rho = partial_trace(ghz, [0, 1])
        assert np.allclose(rho.entries, np.diag([0.5, 0, 0, 0.5]))

    def test_keeping_every_qubit_is_rejected(self, ghz):
        with pytest.raises(FullKeepSet):
            partial_trace(ghz, [2, 0, 1])

    def test_density_path_matches_pure_path(self, rng):
        state = haar(rng, 4)
        from_pure = partial_trace(state, [1, 3])
        from_density = partial_trace(DensityMatrix.from_pure(state), [1, 3])
        assert np.allclose(from_pure.entries, from_density.entries, atol=1e-12)

    def test_single_qubit_marginal_of_w(self, w_state):
        rho = partial_trace(w_state, [0])
        assert np.allclose(rho.entries, np.diag([2 / 3, 1 / 3]))

    def test_empty_keep_set(self, ghz):
        with pytest.raises(EmptyKeepSet):
            partial_trace(ghz, [])

    def test_index_out_of_range(self, ghz):
        with pytest.raises(IndexOutOfRange):
            partial_trace(ghz, [3])


class TestMeasurement:
    def test_ghz_x_measurement_gives_bell_pairs(self, ghz):
        outcomes = measure_qubit(ghz, 2, MeasurementBasis.x())
        plus = PureState(n_qubits=2, amplitudes=np.array([1, 0, 0, 1]) / np.sqrt(2))
        minus = PureState(n_qubits=2, amplitudes=np.array([1, 0, 0, -1]) / np.sqrt(2))
        assert [o.probability for o in outcomes] == pytest.approx([0.5, 0.5], abs=1e-12)
        assert np.allclose(outcomes[0].state.amplitudes, plus.amplitudes)
        assert np.allclose(outcomes[1].state.amplitudes, minus.amplitudes)

    def test_w_z_measurement_up_to_phase(self, w_state):
        outcomes = measure_qubit(w_state, 0, MeasurementBasis.z())
        assert [o.probability for o in outcomes] == pytest.approx([2 / 3, 1 / 3], abs=1e-12)
        bell_psi = PureState(n_qubits=2, amplitudes=np.array([0, 1, 1, 0]) / np.sqrt(2))
        assert same_up_to_phase(outcomes[0].state, bell_psi)
        assert same_up_to_phase(outcomes[1].state, basis_state("00"))

    def test_probabilities_sum_to_one(self, rng):
        state = haar(rng, 3)
        basis = MeasurementBasis.from_angles(1.1, 4.0)
        outcomes = measure_qubit(state, 1, basis)
        assert sum(o.probability for o in outcomes) == pytest.approx(1.0, abs=1e-12)

    def test_zero_probability_branch_is_flagged(self):
        outcomes = measure_qubit(basis_state("000"), 0, MeasurementBasis.z())
        assert not outcomes[0].negligible
        assert outcomes[1].negligible
        assert outcomes[1].probability == 0.0
        assert outcomes[1].state.amplitudes[0] == 1

    def test_two_qubit_state_cannot_be_measured(self, bell):
        with pytest.raises(DimensionMismatch):
            measure_qubit(bell, 0, MeasurementBasis.z())

    def test_basis_folding(self):
        basis = MeasurementBasis.from_angles(3 * np.pi / 2, 0.0)
        assert basis.theta == pytest.approx(np.pi / 2)
        assert basis.phi == pytest.approx(np.pi)


class TestLocalOperations:
    def test_rejects_non_unitary(self, ghz):
        with pytest.raises(NotUnitary):
            apply_local_unitary(ghz, 0, np.array([[1, 1], [0, 1]]))

    def test_unitary_preserves_norm(self, ghz):
        rotated = apply_local_unitary(ghz, 1, np.array([[0, 1], [1, 0]]))
        assert rotated.norm == pytest.approx(1.0)
        assert rotated.amplitudes[0b010] == pytest.approx(1 / np.sqrt(2))


class TestSeparability:
    def test_bisep_xi_factorizes_off_c(self, xi_bisep):
        assert is_biseparable_pure(xi_bisep, Bipartition.from_left([2], 3))
        assert not is_biseparable_pure(xi_bisep, Bipartition.from_left([0], 3))

    def test_bipartition_counts(self):
        assert len(all_bipartitions(3)) == 3
        cuts = all_bipartitions(4)
        assert len(cuts) == 7
        assert {c.label for c in cuts} == {
            "A|BCD", "AB|CD", "AC|BD", "AD|BC", "ABC|D", "ABD|C", "ACD|B",
        }

    def test_bipartition_rejects_overlap(self):
        with pytest.raises(IndexOutOfRange):
            Bipartition(left=frozenset({0, 1}), right=frozenset({1, 2}))
