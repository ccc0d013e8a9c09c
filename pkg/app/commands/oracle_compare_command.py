"""
`oracle-compare [--trials n] [--seed s] [--coarse-grid G]`

Per random three-qubit state and pair: the closed-form fidelity, the
brute-force fidelity, their deviation and the maximizing basis angles.
"""

from typing import Any, Dict, List

from joblib import Parallel, delayed

from app.checks.base_check import haar_state
from app.core.config import settings
from app.core.logger import get_logger
from app.enums.enums import THREE_QUBIT_PAIRS
from app.schemas.config_schema import OptimizerConfig, RunConfig
from app.services.export_service import write_output
from app.services.measure_service import fidelity_f_ij
from app.services.oracle_service import f_ij_bruteforce
from app.utils.random_utils import spawn_generators

logger = get_logger(__name__)

COLUMNS = ["state", "pair", "f_analytic", "f_oracle", "deviation", "theta", "phi"]


def _compare(index: int, rng, cfg: OptimizerConfig) -> List[Dict[str, Any]]:
    state = haar_state(rng, 3)
    rows = []
    for pair in THREE_QUBIT_PAIRS:
        i, j = pair.parties
        analytic = fidelity_f_ij(state, i, j)
        f, basis = f_ij_bruteforce(state, i, j, cfg)
        oracle = (2.0 * f + 1.0) / 3.0
        rows.append(
            {
                "state": index,
                "pair": pair.value,
                "f_analytic": analytic,
                "f_oracle": oracle,
                "deviation": abs(analytic - oracle),
                "theta": basis.theta,
                "phi": basis.phi,
            }
        )
    return rows


def handle(cfg: RunConfig) -> int:
    n_states = cfg.trials or settings.VERIFY_ORACLE_STATES
    optimizer = cfg.optimizer()
    per_state = Parallel(n_jobs=settings.N_JOBS)(
        delayed(_compare)(k, rng, optimizer)
        for k, rng in enumerate(spawn_generators(cfg.seed, n_states))
    )
    rows = [row for block in per_state for row in block]
    max_deviation = max(row["deviation"] for row in rows)
    logger.info(
        "Oracle comparison finished",
        extra={"states": n_states, "max_deviation": max_deviation},
    )
    write_output(
        rows,
        COLUMNS,
        {"max_deviation": max_deviation, "rows": rows},
        cfg.format,
        cfg.output_path,
    )
    return 0
