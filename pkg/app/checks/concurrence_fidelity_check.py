"""
Two-qubit pure states: concurrence equals 3·F_max − 2, where F_max = (2f + 1)/3
and f is evaluated through the mixed-state magic-basis route.
"""

from typing import List

from app.checks.base_check import BaseCheck, CheckContext, CheckResult, haar_state
from app.models.measurement_model import Bipartition
from app.models.state_model import DensityMatrix
from app.services.measure_service import concurrence_pure, max_fidelity_2q

TOLERANCE = 1e-9


class ConcurrenceFidelityCheck(BaseCheck):
    stream = 1

    def run(self, context: CheckContext) -> List[CheckResult]:
        cut = Bipartition.from_left([0], 2)
        worst = 0.0
        for rng in self.generators(context, context.trials):
            state = haar_state(rng, 2)
            fidelity = max_fidelity_2q(DensityMatrix.from_pure(state))
            worst = max(worst, abs(concurrence_pure(state, cut) - (3.0 * fidelity - 2.0)))
        return [self.deviation("concurrence_vs_fidelity", context.trials, worst, TOLERANCE)]
