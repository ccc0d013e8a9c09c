"""
Three-tangle consistency: the CKW residual is the same from every pivot and
never meaningfully negative.
"""

from typing import List

from app.checks.base_check import BaseCheck, CheckContext, CheckResult, haar_state
from app.core.config import settings
from app.services.measure_service import tangle_pivot_values


class CkwConsistencyCheck(BaseCheck):
    stream = 3

    def run(self, context: CheckContext) -> List[CheckResult]:
        spread = 0.0
        lowest = 0.0
        for rng in self.generators(context, context.trials):
            values = list(tangle_pivot_values(haar_state(rng, 3)).values())
            spread = max(spread, max(values) - min(values))
            lowest = min(lowest, min(values))
        return [
            self.deviation("pivot_spread", context.trials, spread, settings.CKW_TOL),
            self.deviation(
                "negative_tangle", context.trials, -lowest, settings.NEGATIVE_TANGLE_TOL
            ),
        ]
