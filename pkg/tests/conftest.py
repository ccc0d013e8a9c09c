from typing import List

import numpy as np
import pytest

from app.checks.base_check import BaseCheck, CheckContext, CheckResult
from app.enums.enums import FamilyName
from app.models.state_model import PureState
from app.services.family_service import build_named
from app.utils.random_utils import haar_amplitudes


def haar(rng: np.random.Generator, n_qubits: int) -> PureState:
    return PureState(n_qubits=n_qubits, amplitudes=haar_amplitudes(rng, n_qubits))


def same_up_to_phase(a: PureState, b: PureState, tol: float = 1e-9) -> bool:
    return a.n_qubits == b.n_qubits and abs(a.overlap(b) - 1.0) < tol


class PassingCheck(BaseCheck):
    stream = 101

    def run(self, context: CheckContext) -> List[CheckResult]:
        return [self.deviation("always", 1, 0.0, 1e-9)]


class FailingCheck(BaseCheck):
    stream = 102

    def run(self, context: CheckContext) -> List[CheckResult]:
        return [self.margin("never", 1, -1.0, detail="forced")]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def ghz() -> PureState:
    return build_named(FamilyName.GHZ3)


@pytest.fixture
def w_state() -> PureState:
    return build_named(FamilyName.W3)


@pytest.fixture
def xi_bisep() -> PureState:
    return build_named(FamilyName.BISEP_XI)


@pytest.fixture
def ghz4() -> PureState:
    return build_named(FamilyName.GHZ4)


@pytest.fixture
def bell_bell() -> PureState:
    return build_named(FamilyName.BELL_BELL4)


@pytest.fixture
def bell() -> PureState:
    return PureState(n_qubits=2, amplitudes=np.array([1, 0, 0, 1]) / np.sqrt(2))
