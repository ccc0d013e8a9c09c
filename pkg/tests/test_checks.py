import pytest

from app.checks.base_check import CheckContext, biseparable_state
from app.checks.ckw_check import CkwConsistencyCheck
from app.checks.concurrence_fidelity_check import ConcurrenceFidelityCheck
from app.checks.family_check import PHI_MEASURES, FamilyOrderingCheck
from app.checks.four_qubit_check import FourQubitCheck
from app.checks.local_unitary_check import LocalUnitaryCheck
from app.checks.monotonicity_check import MonotonicityCheck
from app.checks.oracle_check import OracleAgreementCheck
from app.checks.separability_check import SeparabilityCheck
from app.schemas.report_schema import MEASURE_COLUMNS
from app.services.state_service import is_biseparable_pure
from app.services.verification_service import verify
from tests.conftest import FailingCheck, PassingCheck


@pytest.fixture
def small_context() -> CheckContext:
    return CheckContext(
        seed=7,
        trials=40,
        oracle_states=3,
        four_qubit_states=1,
        biseparable_states=15,
    )


@pytest.mark.parametrize(
    "check_cls, labels",
    [
        (ConcurrenceFidelityCheck, {"concurrence_vs_fidelity"}),
        (SeparabilityCheck, {"threshold_forward", "threshold_converse", "triple_property"}),
        (CkwConsistencyCheck, {"pivot_spread", "negative_tangle"}),
        (LocalUnitaryCheck, {"measure_invariance", "min_below_pivot_min"}),
        (
            FamilyOrderingCheck,
            {"phi_identity", "phi_symmetry", "xi_tangle", "gm_ordering", "min_ordering"},
        ),
        (OracleAgreementCheck, {"fidelity_agreement", "oracle_lower_bound", "fef_agreement"}),
    ],
)
def test_check_passes_on_small_corpus(small_context, check_cls, labels):
    results = check_cls().run(small_context)
    assert {r.label for r in results} == labels
    for result in results:
        assert result.passed, result
        assert result.check == check_cls.__name__


def test_monotonicity_check_reports_every_measure(small_context):
    results = MonotonicityCheck().run(small_context)
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    assert "concurrence_increase" in {r.label for r in results}


@pytest.mark.parametrize("seed", [1, 42])
def test_separability_forward_on_default_constructions(seed):
    context = CheckContext(seed=seed, trials=40)
    assert context.biseparable_states == 500
    results = {r.label: r for r in SeparabilityCheck().run(context)}
    assert results["threshold_forward"].passed, results["threshold_forward"]
    assert results["threshold_converse"].passed, results["threshold_converse"]


@pytest.mark.slow
def test_separability_check_at_default_size():
    results = SeparabilityCheck().run(CheckContext())
    assert all(r.passed for r in results), [r for r in results if not r.passed]


@pytest.mark.slow
def test_four_qubit_check(small_context):
    results = FourQubitCheck().run(small_context)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_phi_identity_covers_every_pivot_measure():
    pivot_columns = {c for c in MEASURE_COLUMNS if c.startswith(("t_min_", "t_gm_"))}
    assert pivot_columns == {"t_min_a", "t_gm_a", "t_min_b", "t_gm_b", "t_min_c", "t_gm_c"}
    assert pivot_columns <= set(PHI_MEASURES)


def test_checks_draw_from_separate_streams(small_context):
    first = PassingCheck().generators(small_context, 1)[0].random()
    second = FailingCheck().generators(small_context, 1)[0].random()
    assert first != second


def test_biseparable_sampler_reports_its_cut(rng):
    for left_size in (1, 2):
        state, cut = biseparable_state(rng, 4, left_size)
        assert len(cut.left) == left_size
        assert is_biseparable_pure(state, cut)


class TestVerify:
    def test_all_passing(self, small_context):
        summary = verify(small_context, [PassingCheck])
        assert summary.all_passed
        assert summary.seed == 7
        assert summary.results[0].summary_line().startswith("PASS PassingCheck/always trials=1")

    def test_one_failure_fails_the_run(self, small_context):
        summary = verify(small_context, [PassingCheck, FailingCheck])
        assert not summary.all_passed
        assert [r.label for r in summary.failed] == ["never"]
        assert summary.failed[0].summary_line().endswith("(forced)")

