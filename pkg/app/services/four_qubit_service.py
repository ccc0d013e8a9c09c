"""
Teleportation GME: Four-Qubit Measures

report4() runs the product and sequential oracles on all six pairs and
aggregates T^(4)_ij = 3·F^(4)_ij − 2 by minimum and sixth-root geometric mean.

A pure four-qubit state is genuinely entangled iff, for a fixed pivot i,
every F^(4)_ij exceeds 2/3. At optimizer precision the witness asks for a
margin of WITNESS_MARGIN above 2/3.
"""

from typing import Dict, List, Optional

from joblib import Parallel, delayed

from app.core.config import settings
from app.core.exceptions import DimensionMismatch
from app.core.logger import get_logger
from app.enums.enums import FOUR_QUBIT_PAIRS, Pair, Party
from app.models.measurement_model import Bipartition
from app.models.state_model import PureState
from app.schemas.config_schema import OptimizerConfig
from app.schemas.report_schema import FourQubitReport
from app.services.oracle_service import f_ij_product_N, f_ij_sequential_4
from app.services.state_service import all_bipartitions, is_biseparable_pure, validate
from app.utils.linalg_utils import geometric_mean

logger = get_logger(__name__)


def _require_four(state: PureState) -> None:
    if state.n_qubits != 4:
        raise DimensionMismatch(f"Expected a four-qubit state, got {state.n_qubits} qubits")
    validate(state)


def fidelity_from_fef(f: float) -> float:
    """Average teleportation fidelity (2f + 1)/3."""
    return (2.0 * f + 1.0) / 3.0


def pivot_pairs(pivot: Party) -> List[Pair]:
    return [p for p in FOUR_QUBIT_PAIRS if pivot in p.parties]


def _pair_fidelities(state: PureState, pair: Pair, cfg: OptimizerConfig):
    i, j = pair.parties
    product = fidelity_from_fef(f_ij_product_N(state, i, j, cfg))
    sequential = fidelity_from_fef(f_ij_sequential_4(state, i, j, cfg))
    return product, sequential


def _witness(f4: Dict[str, float], pivot: Party) -> bool:
    threshold = 2.0 / 3.0 + settings.WITNESS_MARGIN
    return min(f4[p.value.lower()] for p in pivot_pairs(pivot)) > threshold


def report4(
    state: PureState,
    cfg: OptimizerConfig | None = None,
    pivot: Optional[Party] = Party.A,
    n_jobs: Optional[int] = None,
) -> FourQubitReport:
    """
    All six product and sequential fidelities plus their T-aggregates.
    When `pivot` is given the witness verdict and separable cuts are attached.
    """
    cfg = cfg or OptimizerConfig()
    _require_four(state)
    logger.info("Four-qubit report started", extra={"pairs": len(FOUR_QUBIT_PAIRS)})

    results = Parallel(n_jobs=n_jobs or settings.N_JOBS)(
        delayed(_pair_fidelities)(state, pair, cfg) for pair in FOUR_QUBIT_PAIRS
    )
    f4: Dict[str, float] = {}
    f4_bar: Dict[str, float] = {}
    for pair, (product, sequential) in zip(FOUR_QUBIT_PAIRS, results):
        f4[pair.value.lower()] = product
        f4_bar[pair.value.lower()] = sequential

    t4 = [max(3.0 * f - 2.0, 0.0) for f in f4.values()]
    t4_bar = [max(3.0 * f - 2.0, 0.0) for f in f4_bar.values()]

    result = FourQubitReport(
        f4=f4,
        f4_bar=f4_bar,
        t4_min=min(t4),
        t4_gm=geometric_mean(t4),
        t4_bar_min=min(t4_bar),
        t4_bar_gm=geometric_mean(t4_bar),
        witness_pivot=pivot.value if pivot else None,
        genuinely_entangled=_witness(f4, pivot) if pivot else None,
        separable_cuts=[cut.label for cut in bisep_cut_scan(state)] if pivot else [],
    )
    logger.info(
        "Four-qubit report finished",
        extra={"t4_min": result.t4_min, "t4_bar_min": result.t4_bar_min},
    )
    return result


def genuine_entanglement_witness(
    state: PureState, pivot: Party = Party.A, cfg: OptimizerConfig | None = None
) -> bool:
    """True iff min over the pivot's three pairs of F^(4) exceeds 2/3 + WITNESS_MARGIN."""
    cfg = cfg or OptimizerConfig()
    _require_four(state)
    f4 = {}
    for pair in pivot_pairs(pivot):
        i, j = pair.parties
        f4[pair.value.lower()] = fidelity_from_fef(f_ij_product_N(state, i, j, cfg))
    verdict = _witness(f4, pivot)
    logger.debug("Witness evaluated", extra={"pivot": pivot.value, "verdict": verdict})
    return verdict


def bisep_cut_scan(state: PureState, tol: Optional[float] = None) -> List[Bipartition]:
    """Every cut across which the pure state factorizes (purity ≥ 1 − tol on one side)."""
    _require_four(state)
    tol = settings.FOUR_QUBIT_PURITY_TOL if tol is None else tol
    return [cut for cut in all_bipartitions(4) if is_biseparable_pure(state, cut, tol)]
