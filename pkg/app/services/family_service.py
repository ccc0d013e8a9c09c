"""
Teleportation GME: State Families

Closed-form constructors for the named states and parameter sweeps over them:

  ghz3        (|000> + |111>)/√2
  w3          (|001> + |010> + |100>)/√3
  phi_t       t|000> + √(1−t²)|111>
  psi_r       r|000> + (s/2)|101> + (s/√2)|110> + (s/2)|111>,   s = √(1−r²)
  xi_r        (s/√2)|001> + (s/√2)|010> + r|100>,                s = √(1−r²)
  bisep_xi    (|000> + |110>)/√2
  ghz4        (|0000> + |1111>)/√2
  product_n   |0…0> on n qubits (default 3)
  bell_bell4  Bell_AB ⊗ Bell_CD
  zero_ghz3   |0>_A ⊗ GHZ_BCD

Every measure of phi_t equals 2t√(1−t²), so phi_t is the reference scale
against which two measures can be shown to order other states oppositely.
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from app.core.config import settings
from app.core.exceptions import ParameterOutOfRange
from app.core.logger import get_logger
from app.enums.enums import FamilyName
from app.models.state_model import PureState
from app.schemas.config_schema import FamilyId
from app.schemas.report_schema import MEASURE_COLUMNS, MeasureReport
from app.services import measure_service
from app.services.state_service import basis_state, tensor, validate

logger = get_logger(__name__)

_HALF = 1 / math.sqrt(2)


def _from_terms(n_qubits: int, terms: Dict[str, float]) -> PureState:
    vec = np.zeros(2**n_qubits, dtype=complex)
    for bits, amp in terms.items():
        vec[int(bits, 2)] = amp
    return PureState(n_qubits=n_qubits, amplitudes=vec)


def _ghz(n_qubits: int) -> PureState:
    return _from_terms(n_qubits, {"0" * n_qubits: _HALF, "1" * n_qubits: _HALF})


def _bell() -> PureState:
    return _ghz(2)


def _check_parameter(name: FamilyName, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ParameterOutOfRange(f"Parameter of {name.value} must lie in [0, 1], got {value}")
    return float(value)


def build(family: FamilyId) -> PureState:
    """Exact closed-form amplitudes; the result always passes validate()."""
    name = family.name

    if name == FamilyName.GHZ3:
        state = _ghz(3)
    elif name == FamilyName.W3:
        w = 1 / math.sqrt(3)
        state = _from_terms(3, {"001": w, "010": w, "100": w})
    elif name == FamilyName.PHI_T:
        t = _check_parameter(name, family.parameter)
        state = _from_terms(3, {"000": t, "111": math.sqrt(1 - t * t)})
    elif name == FamilyName.PSI_R:
        r = _check_parameter(name, family.parameter)
        s = math.sqrt(1 - r * r)
        state = _from_terms(3, {"000": r, "101": s / 2, "110": s * _HALF, "111": s / 2})
    elif name == FamilyName.XI_R:
        r = _check_parameter(name, family.parameter)
        s = math.sqrt(1 - r * r)
        state = _from_terms(3, {"001": s * _HALF, "010": s * _HALF, "100": r})
    elif name == FamilyName.BISEP_XI:
        state = _from_terms(3, {"000": _HALF, "110": _HALF})
    elif name == FamilyName.GHZ4:
        state = _ghz(4)
    elif name == FamilyName.PRODUCT_N:
        state = basis_state("0" * (family.n_qubits or 3))
    elif name == FamilyName.BELL_BELL4:
        state = tensor(_bell(), _bell())
    else:
        state = tensor(basis_state("0"), _ghz(3))
    return validate(state)


def build_named(name: FamilyName | str, parameter: Optional[float] = None) -> PureState:
    return build(FamilyId(name=FamilyName(name), parameter=parameter))


# ── Sweeps ────────────────────────────────────────────────────────────────────


def default_grid(points: Optional[int] = None) -> np.ndarray:
    """Uniform grid on [0, 1], FIGURE_GRID_POINTS points unless overridden."""
    return np.linspace(0.0, 1.0, points or settings.FIGURE_GRID_POINTS)


def _point(name: FamilyName, value: float) -> MeasureReport:
    return measure_service.report(build(FamilyId(name=name, parameter=value)))


def sweep(
    name: FamilyName, grid: Sequence[float], n_jobs: Optional[int] = None
) -> List[Tuple[float, MeasureReport]]:
    """One MeasureReport per grid point, in grid order."""
    if not name.is_parameterized:
        raise ParameterOutOfRange(f"Family {name.value} has no parameter to sweep")
    values = [_check_parameter(name, float(v)) for v in grid]
    logger.info("Family sweep started", extra={"family": name.value, "points": len(values)})
    reports = Parallel(n_jobs=n_jobs or settings.N_JOBS)(
        delayed(_point)(name, v) for v in values
    )
    logger.info("Family sweep finished", extra={"family": name.value})
    return list(zip(values, reports))


# ── Reference scale ───────────────────────────────────────────────────────────


def phi_value(t: float) -> float:
    """Common value 2t√(1−t²) of every measure on phi_t."""
    return 2.0 * t * math.sqrt(max(0.0, 1.0 - t * t))


def solve_phi_parameter(value: float) -> float:
    """Smaller root t in [0, 1/√2] of 2t√(1−t²) = value."""
    if not 0.0 <= value <= 1.0:
        raise ParameterOutOfRange(f"phi_t measures lie in [0, 1], got {value}")
    return math.sqrt((1.0 - math.sqrt(1.0 - value * value)) / 2.0)


def opposite_order_witness(first: str, second: str, state: PureState) -> Optional[float]:
    """
    If measure `first` rates `state` strictly above measure `second`, return t'
    with first(state) > 2t'√(1−t'²) > second(state). The two measures then
    order `state` and phi_t(t') oppositely. Returns None otherwise.
    Measures are MeasureReport column names such as "c_gm" or "t_gm".
    """
    for column in (first, second):
        if column not in MEASURE_COLUMNS:
            raise ParameterOutOfRange(f"Unknown measure column '{column}'")
    rep = measure_service.report(state)
    high, low = getattr(rep, first), getattr(rep, second)
    if high <= low:
        return None
    t_prime = solve_phi_parameter((high + low) / 2.0)
    logger.debug(
        "Opposite-order witness found",
        extra={"first": first, "second": second, "t_prime": t_prime},
    )
    return t_prime
