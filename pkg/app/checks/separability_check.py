"""
Teleportation threshold and biseparability (three qubits):

  forward   a state that factorizes with i and j on opposite sides has F_ij = 2/3
  converse  F_ij ≤ 2/3 only when the state factorizes as {i}|{jk} or {j}|{ik}
  triple    F_ij > 2/3 and F_ik > 2/3 force F_jk > 2/3
"""

from typing import List, Tuple

from app.checks.base_check import (
    BaseCheck,
    CheckContext,
    CheckResult,
    biseparable_state,
    haar_state,
)
from app.enums.enums import THREE_QUBIT_PAIRS, Pair
from app.models.measurement_model import Bipartition
from app.models.state_model import PureState
from app.schemas.report_schema import MeasureReport
from app.services.measure_service import report
from app.services.state_service import is_biseparable_pure

FORWARD_TOL = 1e-8
CONVERSE_SLACK = 1e-9
TRIPLE_EPSILON = 1e-6
TWO_THIRDS = 2.0 / 3.0


def _converse_violations(state: PureState, rep: MeasureReport) -> int:
    count = 0
    for pair in THREE_QUBIT_PAIRS:
        if rep.fidelity(pair) > TWO_THIRDS + CONVERSE_SLACK:
            continue
        i, j = pair.indices
        cuts = (Bipartition.from_left([i], 3), Bipartition.from_left([j], 3))
        if not any(is_biseparable_pure(state, cut) for cut in cuts):
            count += 1
    return count


def _triple_violations(rep: MeasureReport) -> int:
    high = TWO_THIRDS + TRIPLE_EPSILON
    count = 0
    for pivot_pairs, other in (
        ((Pair.AB, Pair.CA), Pair.BC),
        ((Pair.AB, Pair.BC), Pair.CA),
        ((Pair.BC, Pair.CA), Pair.AB),
    ):
        if all(rep.fidelity(p) > high for p in pivot_pairs) and rep.fidelity(other) <= TWO_THIRDS:
            count += 1
    return count


class SeparabilityCheck(BaseCheck):
    stream = 2

    def _forward(self, context: CheckContext) -> Tuple[float, int, int]:
        worst = 0.0
        converse = 0
        generators = self.generators(context, context.biseparable_states)
        for rng in generators:
            state, cut = biseparable_state(rng, 3, left_size=1)
            rep = report(state)
            for pair in THREE_QUBIT_PAIRS:
                if cut.separates(*pair.indices):
                    worst = max(worst, abs(rep.fidelity(pair) - TWO_THIRDS))
            converse += _converse_violations(state, rep)
        return worst, converse, len(generators)

    def run(self, context: CheckContext) -> List[CheckResult]:
        forward_worst, converse, n_bisep = self._forward(context)

        triple = 0
        for rng in self.generators(context, context.trials, substream=1):
            state = haar_state(rng, 3)
            rep = report(state)
            converse += _converse_violations(state, rep)
            triple += _triple_violations(rep)

        return [
            self.deviation("threshold_forward", n_bisep, forward_worst, FORWARD_TOL),
            self.deviation(
                "threshold_converse",
                n_bisep + context.trials,
                float(converse),
                0.0,
                detail="states at 2/3 that do not factorize",
            ),
            self.deviation(
                "triple_property",
                context.trials,
                float(triple),
                0.0,
                detail="pivots with two useful pairs and a useless third",
            ),
        ]
