"""
Teleportation GME: LOCC Monotonicity Harness

Random one-party two-outcome POVMs applied to pure three-qubit states:
  random_povm()                    → Haar factors, uniform singular values
  apply_povm()                     → Born weights and normalized branches
  monotonicity_trial()             → pre − Σ p_t·post for one measure
  monotonicity_deltas()            → the same for every measure, one report per branch
  concurrence_increase_witness()   → C_AB of GHZ before/after an X measurement on C
  run_corpus()                     → seeded trial corpus summarized per measure

A measure passes a trial iff delta ≥ −MONOTONICITY_TOL.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from joblib import Parallel, delayed

from app.core.config import settings
from app.core.logger import get_logger
from app.enums.enums import MeasureId
from app.models.measurement_model import Bipartition, MeasurementBasis, MeasurementOutcome
from app.models.povm_model import TwoOutcomePovm
from app.models.state_model import PureState
from app.schemas.check_schema import MonotonicitySummary
from app.schemas.report_schema import MeasureReport
from app.services import measure_service
from app.services.state_service import (
    apply_local_operator,
    branch,
    measure_qubit,
    partial_trace,
    validate,
)
from app.utils.random_utils import haar_amplitudes, haar_unitary, spawn_generators

logger = get_logger(__name__)

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]

# MeasureReport field carrying each monotone. √(τ + C²_ij) is T_ij itself.
MEASURE_FIELDS: Dict[MeasureId, str] = {
    MeasureId.T_AB: "t_ab",
    MeasureId.T_BC: "t_bc",
    MeasureId.T_CA: "t_ca",
    MeasureId.T_MIN: "t_min",
    MeasureId.T_GM: "t_gm",
    MeasureId.T_MIN_A: "t_min_a",
    MeasureId.T_GM_A: "t_gm_a",
    MeasureId.T_MIN_B: "t_min_b",
    MeasureId.T_GM_B: "t_gm_b",
    MeasureId.T_MIN_C: "t_min_c",
    MeasureId.T_GM_C: "t_gm_c",
    MeasureId.ASSISTED_AB: "t_ab",
    MeasureId.ASSISTED_BC: "t_bc",
    MeasureId.ASSISTED_CA: "t_ca",
}

ALL_MEASURES: Tuple[MeasureId, ...] = tuple(MeasureId)


def evaluate(measure_id: MeasureId, report: MeasureReport) -> float:
    return float(getattr(report, MEASURE_FIELDS[measure_id]))


# ── POVMs ─────────────────────────────────────────────────────────────────────


def random_povm(seed: SeedLike = None) -> TwoOutcomePovm:
    """u0, u1, v Haar-random on U(2); a, b uniform on [0, 1]."""
    rng = np.random.default_rng(seed)
    u0, u1, v = (haar_unitary(rng) for _ in range(3))
    a, b = rng.uniform(0.0, 1.0, size=2)
    return TwoOutcomePovm(u0=u0, u1=u1, v=v, a=float(a), b=float(b))


def apply_povm(state: PureState, qubit: int, povm: TwoOutcomePovm) -> List[MeasurementOutcome]:
    """
    Branches A_t|φ>/√p_t with p_t = <φ|A_t†A_t|φ>. Empty branches come back
    flagged `negligible` with a placeholder state.
    """
    validate(state)
    return [branch(apply_local_operator(state, qubit, op), state.n_qubits) for op in povm.kraus]


# ── Trials ────────────────────────────────────────────────────────────────────


def _average_after(outcomes: Sequence[MeasurementOutcome]) -> List[Tuple[float, MeasureReport]]:
    return [(o.probability, measure_service.report(o.state)) for o in outcomes if not o.negligible]


def monotonicity_deltas(
    state: PureState,
    qubit: int,
    povm: TwoOutcomePovm,
    measures: Iterable[MeasureId] = ALL_MEASURES,
) -> Dict[MeasureId, float]:
    before = measure_service.report(state)
    after = _average_after(apply_povm(state, qubit, povm))
    return {
        m: evaluate(m, before) - sum(p * evaluate(m, rep) for p, rep in after)
        for m in measures
    }


def monotonicity_trial(
    measure_id: MeasureId, state: PureState, qubit: int, povm: TwoOutcomePovm
) -> float:
    """delta = measure(state) − Σ_t p_t·measure(post_t)."""
    return monotonicity_deltas(state, qubit, povm, [measure_id])[measure_id]


def concurrence_increase_witness() -> Tuple[float, float]:
    """
    (C_AB of GHZ, average C_AB after measuring C in the X basis).
    The second value is 1 while the first is 0: concurrence alone is not an
    LOCC monotone for the assisted pair.
    """
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = 1 / np.sqrt(2)
    state = PureState(n_qubits=3, amplitudes=ghz)
    before = measure_service.concurrence_wootters(partial_trace(state, [0, 1]))
    cut = Bipartition.from_left([0], 2)
    after = sum(
        o.probability * measure_service.concurrence_pure(o.state, cut)
        for o in measure_qubit(state, 2, MeasurementBasis.x())
        if not o.negligible
    )
    return before, float(after)


# ── Corpus ────────────────────────────────────────────────────────────────────


def random_trial(rng: np.random.Generator) -> Tuple[PureState, int, TwoOutcomePovm]:
    """One (Haar state, qubit, POVM) triple drawn from `rng`."""
    state = PureState(n_qubits=3, amplitudes=haar_amplitudes(rng, 3))
    qubit = int(rng.integers(3))
    return state, qubit, random_povm(rng)


def _run_trial(rng: np.random.Generator, measures: Tuple[MeasureId, ...]) -> Dict[MeasureId, float]:
    state, qubit, povm = random_trial(rng)
    return monotonicity_deltas(state, qubit, povm, measures)


def run_corpus(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    measures: Sequence[MeasureId] = ALL_MEASURES,
    n_jobs: Optional[int] = None,
) -> List[MonotonicitySummary]:
    """
    Seeded monotonicity corpus. Trial n always draws from the n-th child of
    SeedSequence(seed), so results do not depend on the worker count.
    """
    trials = settings.VERIFY_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    n_jobs = settings.N_JOBS if n_jobs is None else n_jobs
    measures = tuple(measures)

    logger.info("Monotonicity corpus started", extra={"trials": trials, "seed": seed})
    rows = Parallel(n_jobs=n_jobs)(
        delayed(_run_trial)(rng, measures) for rng in spawn_generators(seed, trials)
    )

    summaries = []
    for m in measures:
        min_delta = min((row[m] for row in rows), default=0.0)
        summaries.append(
            MonotonicitySummary(
                measure=m,
                trials=trials,
                min_delta=float(min_delta),
                passed=min_delta >= -settings.MONOTONICITY_TOL,
            )
        )
    failed = [s.measure.value for s in summaries if not s.passed]
    if failed:
        logger.warning("Monotonicity violated", extra={"measures": failed})
    logger.info("Monotonicity corpus finished", extra={"trials": trials, "failed": len(failed)})
    return summaries
