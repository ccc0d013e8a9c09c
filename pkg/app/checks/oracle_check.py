"""
Closed forms against brute-force maximization:

  three-qubit F_ij         analytic vs single-assistant search, oracle never above analytic
  fully entangled fraction magic-basis eigenvalue vs search over (U ⊗ I)|Φ+>
"""

from typing import List

import numpy as np

from app.checks.base_check import BaseCheck, CheckContext, CheckResult, haar_state
from app.core.config import settings
from app.enums.enums import THREE_QUBIT_PAIRS
from app.models.state_model import DensityMatrix
from app.services.measure_service import fidelity_f_ij, fully_entangled_fraction
from app.services.oracle_service import f_ij_bruteforce, fef_bruteforce

OVERSHOOT_TOL = 1e-6
FEF_TOL = 5e-4
FEF_STATES = 20


def random_density(rng: np.random.Generator, dim: int = 4) -> DensityMatrix:
    """Hilbert–Schmidt random density matrix from a Ginibre matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.real(np.trace(rho)))


class OracleAgreementCheck(BaseCheck):
    stream = 6

    def run(self, context: CheckContext) -> List[CheckResult]:
        gap = 0.0
        overshoot = -np.inf
        for rng in self.generators(context, context.oracle_states):
            state = haar_state(rng, 3)
            for pair in THREE_QUBIT_PAIRS:
                i, j = pair.parties
                analytic = fidelity_f_ij(state, i, j)
                f, _ = f_ij_bruteforce(state, i, j, context.optimizer)
                oracle = (2.0 * f + 1.0) / 3.0
                gap = max(gap, abs(analytic - oracle))
                overshoot = max(overshoot, oracle - analytic)

        fef_gap = 0.0
        for rng in self.generators(context, FEF_STATES, substream=1):
            rho = random_density(rng)
            fef_gap = max(
                fef_gap, abs(fully_entangled_fraction(rho) - fef_bruteforce(rho, context.optimizer))
            )

        n_pairs = context.oracle_states * len(THREE_QUBIT_PAIRS)
        return [
            self.deviation("fidelity_agreement", n_pairs, gap, settings.ORACLE_AGREEMENT_TOL),
            self.deviation("oracle_lower_bound", n_pairs, float(max(overshoot, 0.0)), OVERSHOOT_TOL),
            self.deviation("fef_agreement", FEF_STATES, fef_gap, FEF_TOL),
        ]
