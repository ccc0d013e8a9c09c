"""
LOCC monotonicity corpus over random one-party POVMs, and the GHZ witness
showing that the pair concurrence alone can increase on average.
"""

from typing import List

from app.checks.base_check import BaseCheck, CheckContext, CheckResult
from app.core.config import settings
from app.services.locc_service import concurrence_increase_witness, run_corpus


class MonotonicityCheck(BaseCheck):
    stream = 5

    def run(self, context: CheckContext) -> List[CheckResult]:
        results = [
            CheckResult(
                check=self.name,
                label=summary.measure.value,
                trials=summary.trials,
                worst=summary.min_delta,
                threshold=-settings.MONOTONICITY_TOL,
                passed=summary.passed,
            )
            for summary in run_corpus(context.trials, context.seed)
        ]
        before, after = concurrence_increase_witness()
        results.append(
            self.margin(
                "concurrence_increase",
                1,
                after - before,
                detail=f"C_AB {before:.3g} -> {after:.3g}",
            )
        )
        return results
