"""
Local-unitary invariance of every reported measure, plus the ordering
T_min ≤ T^(i)_min that follows from minimizing over more pairs.
"""

from typing import List

from app.checks.base_check import BaseCheck, CheckContext, CheckResult, haar_state
from app.schemas.report_schema import MEASURE_COLUMNS
from app.services.measure_service import report
from app.services.state_service import apply_local_unitary
from app.utils.random_utils import haar_unitary

TOLERANCE = 1e-8
MAX_TRIALS = 2_000


class LocalUnitaryCheck(BaseCheck):
    stream = 4

    def run(self, context: CheckContext) -> List[CheckResult]:
        trials = min(context.trials, MAX_TRIALS)
        deviation = 0.0
        ordering = 0.0
        for rng in self.generators(context, trials):
            state = haar_state(rng, 3)
            rotated = state
            for qubit in range(3):
                rotated = apply_local_unitary(rotated, qubit, haar_unitary(rng))
            before, after = report(state), report(rotated)
            for column in MEASURE_COLUMNS:
                deviation = max(deviation, abs(getattr(before, column) - getattr(after, column)))
            for pivot_min in (before.t_min_a, before.t_min_b, before.t_min_c):
                ordering = max(ordering, before.t_min - pivot_min)
        return [
            self.deviation("measure_invariance", trials, deviation, TOLERANCE),
            self.deviation("min_below_pivot_min", trials, ordering, 0.0),
        ]
