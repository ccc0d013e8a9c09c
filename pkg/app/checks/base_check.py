"""
Teleportation GME: Base Check Interface

Every verification suite run by `verify` extends BaseCheck, so the
orchestrator can treat them uniformly and report one line per result.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from app.core.config import settings
from app.models.measurement_model import Bipartition
from app.models.state_model import PureState
from app.schemas.check_schema import CheckRecord
from app.schemas.config_schema import OptimizerConfig
from app.services.state_service import permute_qubits, tensor
from app.utils.linalg_utils import BELL_PHI_PLUS
from app.utils.random_utils import haar_amplitudes, haar_unitary, spawn_generators


@dataclass
class CheckContext:
    """
    Sizes and seed shared by all checks of one `verify` run.

    Attributes:
        seed:               Root seed; each check derives its own stream from it.
        trials:             Random states / LOCC trials for the cheap property suites.
        oracle_states:      Random states compared against the brute-force oracle.
        four_qubit_states:  Random four-qubit states for the ordering checks.
        biseparable_states: Constructed biseparable states for the threshold checks.
        optimizer:          Oracle configuration.
    """

    seed: int = field(default_factory=lambda: settings.DEFAULT_SEED)
    trials: int = field(default_factory=lambda: settings.VERIFY_TRIALS)
    oracle_states: int = field(default_factory=lambda: settings.VERIFY_ORACLE_STATES)
    four_qubit_states: int = field(default_factory=lambda: settings.VERIFY_FOUR_QUBIT_STATES)
    biseparable_states: int = field(default_factory=lambda: settings.VERIFY_BISEPARABLE_STATES)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)


@dataclass
class CheckResult:
    """
    Outcome of one property inside a check.

    Attributes:
        check:      Class name of the check that produced it.
        label:      Property name within the check.
        trials:     Number of cases examined.
        worst:      Worst observation: the minimum margin or the maximum deviation.
        threshold:  Bound the worst observation was compared against.
        passed:     Verdict.
        detail:     Optional human-readable context.
    """

    check: str
    label: str
    trials: int
    worst: float
    threshold: float
    passed: bool
    detail: str = ""

    def to_record(self) -> CheckRecord:
        return CheckRecord(
            check=self.check,
            label=self.label,
            trials=self.trials,
            worst=float(self.worst),
            threshold=float(self.threshold),
            passed=bool(self.passed),
            detail=self.detail,
        )


class BaseCheck(ABC):
    """
    Abstract base class for verification suites.

    Subclasses set `stream` to a distinct integer and implement run().
    """

    stream: int = 0

    @property
    def name(self) -> str:
        return self.__class__.__name__

    def generators(
        self, context: CheckContext, count: int, substream: int = 0
    ) -> List[np.random.Generator]:
        return spawn_generators([context.seed, self.stream, substream], count)

    def deviation(self, label: str, trials: int, worst: float, threshold: float, detail: str = "") -> CheckResult:
        """Result that passes when `worst` stays within `threshold`."""
        return CheckResult(self.name, label, trials, worst, threshold, worst <= threshold, detail)

    def margin(self, label: str, trials: int, worst: float, detail: str = "") -> CheckResult:
        """Result that passes when `worst` is strictly positive."""
        return CheckResult(self.name, label, trials, worst, 0.0, worst > 0.0, detail)

    @abstractmethod
    def run(self, context: CheckContext) -> List[CheckResult]:
        """Evaluate the suite and return one result per property."""


# ── Sampling ──────────────────────────────────────────────────────────────────


def haar_state(rng: np.random.Generator, n_qubits: int) -> PureState:
    return PureState(n_qubits=n_qubits, amplitudes=haar_amplitudes(rng, n_qubits))


def bell_class_state(rng: np.random.Generator) -> PureState:
    """(U ⊗ V)|Φ+> with Haar-random U, V."""
    local = np.kron(haar_unitary(rng), haar_unitary(rng))
    return PureState(n_qubits=2, amplitudes=local @ BELL_PHI_PLUS)


def biseparable_state(
    rng: np.random.Generator, n_qubits: int, left_size: int
) -> Tuple[PureState, Bipartition]:
    """
    Product of a random `left_size`-qubit state and a random state of the rest,
    with qubits randomly permuted. Two-qubit factors are Bell-class.
    Returns the state and the cut it factorizes across.
    """

    def factor(size: int) -> PureState:
        return bell_class_state(rng) if size == 2 else haar_state(rng, size)

    product = tensor(factor(left_size), factor(n_qubits - left_size))
    order = [int(q) for q in rng.permutation(n_qubits)]
    cut = Bipartition.from_left([q for q in range(n_qubits) if order[q] < left_size], n_qubits)
    return permute_qubits(product, order), cut
