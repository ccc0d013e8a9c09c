"""
Four-qubit constructions:

  straddling_pairs   product across a cut ⇒ F and F̄ of pairs split by the cut are 2/3
  ghz4_perfect       every F^(4) and F̄^(4) of GHZ4 is 1
  sequential_order   F̄ ≥ F on random states
  witness            GHZ4 positive, every product-across-a-cut construction negative
  useless_pairs_cut  F^(4)_ij ≈ 2/3 only when a separable cut splits i from j
"""

from typing import List, Tuple

from app.checks.base_check import BaseCheck, CheckContext, CheckResult, biseparable_state, haar_state
from app.core.config import settings
from app.enums.enums import FOUR_QUBIT_PAIRS, FamilyName, Party
from app.models.state_model import PureState
from app.services.family_service import build_named
from app.services.four_qubit_service import (
    bisep_cut_scan,
    fidelity_from_fef,
    genuine_entanglement_witness,
    report4,
)
from app.services.oracle_service import f_ij_product_N, f_ij_sequential_4

ORDER_TOL = 1e-6
USELESS_SLACK = 1e-3
TWO_THIRDS = 2.0 / 3.0
RANDOM_CUTS = 3


class FourQubitCheck(BaseCheck):
    stream = 8

    def _constructions(self, context: CheckContext) -> List[PureState]:
        states = [build_named(FamilyName.BELL_BELL4), build_named(FamilyName.ZERO_GHZ3)]
        for k, rng in enumerate(self.generators(context, RANDOM_CUTS, substream=1)):
            state, _ = biseparable_state(rng, 4, left_size=1 + k % 2)
            states.append(state)
        return states

    def _straddling(self, context: CheckContext, states: List[PureState]) -> Tuple[float, int, int]:
        """Worst |F − 2/3| over split pairs, plus the count of pairs near 2/3 with no splitting cut."""
        worst = 0.0
        unexplained = 0
        examined = 0
        for state in states:
            cuts = bisep_cut_scan(state)
            for pair in FOUR_QUBIT_PAIRS:
                i, j = pair.parties
                split = any(cut.separates(i.index, j.index) for cut in cuts)
                product = fidelity_from_fef(f_ij_product_N(state, i, j, context.optimizer))
                if split:
                    sequential = fidelity_from_fef(f_ij_sequential_4(state, i, j, context.optimizer))
                    worst = max(worst, abs(product - TWO_THIRDS), abs(sequential - TWO_THIRDS))
                    examined += 1
                elif product <= TWO_THIRDS + USELESS_SLACK:
                    unexplained += 1
        return worst, examined, unexplained

    def run(self, context: CheckContext) -> List[CheckResult]:
        tol = settings.FOUR_QUBIT_FIDELITY_TOL
        constructions = self._constructions(context)
        straddle_worst, examined, unexplained = self._straddling(context, constructions)

        ghz = report4(build_named(FamilyName.GHZ4), context.optimizer, pivot=None)
        ghz_gap = max(1.0 - f for f in list(ghz.f4.values()) + list(ghz.f4_bar.values()))

        order_gap = 0.0
        for rng in self.generators(context, context.four_qubit_states):
            state = haar_state(rng, 4)
            product = f_ij_product_N(state, Party.A, Party.B, context.optimizer)
            sequential = f_ij_sequential_4(state, Party.A, Party.B, context.optimizer)
            order_gap = max(order_gap, product - sequential)
            if fidelity_from_fef(product) <= TWO_THIRDS + USELESS_SLACK and not any(
                cut.separates(0, 1) for cut in bisep_cut_scan(state)
            ):
                unexplained += 1

        witness_ok = genuine_entanglement_witness(build_named(FamilyName.GHZ4), Party.A, context.optimizer)
        false_positives = sum(
            genuine_entanglement_witness(state, Party.A, context.optimizer) for state in constructions
        )

        return [
            self.deviation("straddling_pairs", examined, straddle_worst, tol),
            self.deviation("ghz4_perfect", 2 * len(FOUR_QUBIT_PAIRS), ghz_gap, tol),
            self.deviation("sequential_order", context.four_qubit_states, order_gap, ORDER_TOL),
            CheckResult(
                self.name,
                "witness",
                1 + len(constructions),
                float(false_positives),
                0.0,
                witness_ok and false_positives == 0,
                detail=f"ghz4={'positive' if witness_ok else 'negative'}",
            ),
            self.deviation(
                "useless_pairs_cut",
                len(constructions) * len(FOUR_QUBIT_PAIRS) + context.four_qubit_states,
                float(unexplained),
                0.0,
            ),
        ]

