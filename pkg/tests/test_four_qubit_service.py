import pytest

from app.core.exceptions import DimensionMismatch
from app.enums.enums import FamilyName, Pair, Party
from app.schemas.report_schema import FOUR_QUBIT_COLUMNS, FOUR_QUBIT_PAIR_KEYS
from app.services.family_service import build_named
from app.services.four_qubit_service import (
    bisep_cut_scan,
    fidelity_from_fef,
    genuine_entanglement_witness,
    pivot_pairs,
    report4,
)
from app.services.state_service import basis_state
from tests.conftest import haar

TOL = 2e-3
TWO_THIRDS = 2.0 / 3.0


@pytest.fixture(scope="module")
def ghz4_report():
    return report4(build_named(FamilyName.GHZ4))


@pytest.fixture(scope="module")
def bell_bell_report():
    return report4(build_named(FamilyName.BELL_BELL4))


class TestHelpers:
    def test_fidelity_from_fef(self):
        assert fidelity_from_fef(0.5) == pytest.approx(TWO_THIRDS)
        assert fidelity_from_fef(1.0) == pytest.approx(1.0)

    def test_pivot_pairs(self):
        assert pivot_pairs(Party.D) == [Pair.AD, Pair.BD, Pair.CD]
        assert pivot_pairs(Party.A) == [Pair.AB, Pair.AC, Pair.AD]


class TestCutScan:
    def test_product_state_factorizes_everywhere(self):
        assert len(bisep_cut_scan(basis_state("0000"))) == 7

    def test_ghz4_has_no_cut(self, ghz4):
        assert bisep_cut_scan(ghz4) == []

    def test_bell_pairs(self, bell_bell):
        assert [cut.label for cut in bisep_cut_scan(bell_bell)] == ["AB|CD"]

    def test_rejects_three_qubits(self, ghz):
        with pytest.raises(DimensionMismatch):
            bisep_cut_scan(ghz)


class TestReport:
    def test_ghz4_is_perfect(self, ghz4_report):
        for key in FOUR_QUBIT_PAIR_KEYS:
            assert ghz4_report.f4[key] == pytest.approx(1.0, abs=TOL)
            assert ghz4_report.f4_bar[key] == pytest.approx(1.0, abs=TOL)
        assert ghz4_report.t4_min == pytest.approx(1.0, abs=3 * TOL)
        assert ghz4_report.t4_bar_gm == pytest.approx(1.0, abs=3 * TOL)

    def test_ghz4_witness(self, ghz4_report):
        assert ghz4_report.witness_pivot == "A"
        assert ghz4_report.genuinely_entangled is True
        assert ghz4_report.separable_cuts == []

    def test_bell_pairs_split_by_the_cut(self, bell_bell_report):
        for key in ("ac", "ad", "bc", "bd"):
            assert bell_bell_report.f4[key] == pytest.approx(TWO_THIRDS, abs=TOL)
            assert bell_bell_report.f4_bar[key] == pytest.approx(TWO_THIRDS, abs=TOL)
        assert bell_bell_report.f4["ab"] == pytest.approx(1.0, abs=TOL)
        assert bell_bell_report.t4_min == pytest.approx(0.0, abs=3 * TOL)

    def test_bell_pairs_witness(self, bell_bell_report):
        assert bell_bell_report.genuinely_entangled is False
        assert bell_bell_report.separable_cuts == ["AB|CD"]

    def test_row_layout(self, bell_bell_report):
        assert list(bell_bell_report.to_row()) == FOUR_QUBIT_COLUMNS
        assert bell_bell_report.to_json_dict()["separable_cuts"] == ["AB|CD"]

    def test_without_pivot(self):
        rep = report4(basis_state("0000"), pivot=None)
        assert rep.witness_pivot is None
        assert rep.genuinely_entangled is None
        assert rep.separable_cuts == []
        assert rep.t4_gm == 0.0

    def test_sequential_dominates_product(self, rng):
        rep = report4(haar(rng, 4))
        for key in FOUR_QUBIT_PAIR_KEYS:
            assert rep.f4_bar[key] >= rep.f4[key] - 1e-6
            assert rep.f4[key] >= TWO_THIRDS

    def test_rejects_three_qubits(self, ghz):
        with pytest.raises(DimensionMismatch):
            report4(ghz)


class TestWitness:
    def test_ghz4_is_genuinely_entangled(self, ghz4):
        assert genuine_entanglement_witness(ghz4, Party.C)

    def test_unentangled_party_fails(self):
        assert not genuine_entanglement_witness(build_named(FamilyName.ZERO_GHZ3), Party.A)

    @pytest.mark.slow
    def test_random_states_are_genuinely_entangled(self, rng):
        for _ in range(10):
            assert genuine_entanglement_witness(haar(rng, 4), Party.B)
