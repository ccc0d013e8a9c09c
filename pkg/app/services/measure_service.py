"""
Teleportation GME: Measure Service

Analytic entanglement quantities for two- and three-qubit pure states:
  concurrence_pure()          one-vs-rest (or group-vs-group) pure concurrence
  concurrence_wootters()      two-qubit mixed-state concurrence
  three_tangle()              residual tangle, asserted against the CKW relation on every pivot
  fully_entangled_fraction()  max overlap with a maximally entangled state
  max_fidelity_2q()           standard-teleportation fidelity (2f + 1)/3
  fidelity_f_ij()             maximal average three-qubit teleportation fidelity
  report()                    every measure for one three-qubit state

Three-qubit teleportation measures:
  T_ij    = 3·F_ij − 2 = √(τ + C_ij²)
  T_min   = min over the three pairs,  T_GM = cube root of their product
  T^(i)   = min / geometric mean over the two pairs containing pivot i
  C_min, C_GM from the one-vs-rest pure concurrences (comparison measures)
"""

from typing import Dict, Tuple, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import (
    CkwInconsistency,
    DimensionMismatch,
    NegativeTangle,
    NumericalFailure,
)
from app.core.logger import get_logger
from app.enums.enums import PIVOT_PAIRS, THREE_QUBIT_PAIRS, Pair, Party
from app.models.measurement_model import Bipartition
from app.models.state_model import DensityMatrix, PureState
from app.schemas.report_schema import MeasureReport
from app.services.state_service import partial_trace, reduced_purity, validate, validate_density
from app.utils.linalg_utils import (
    MAGIC_BASIS,
    cayley_tangle,
    concurrence_from_values,
    geometric_mean,
    spin_flip_values,
)

logger = get_logger(__name__)

TwoQubitInput = Union[PureState, DensityMatrix]


def _require_qubits(state: PureState, n: int) -> None:
    if state.n_qubits != n:
        raise DimensionMismatch(f"Expected a {n}-qubit state, got {state.n_qubits} qubits")


# ── Concurrences ──────────────────────────────────────────────────────────────


def concurrence_pure(state: PureState, cut: Bipartition) -> float:
    """√(2(1 − Tr ρ_left²)); clipped to [0, 1] when one side is a single qubit."""
    if cut.n_qubits != state.n_qubits:
        raise DimensionMismatch(
            f"Cut {cut.label} is for {cut.n_qubits} qubits, state has {state.n_qubits}"
        )
    value = float(np.sqrt(2.0 * max(0.0, 1.0 - reduced_purity(state, cut.left))))
    if min(len(cut.left), len(cut.right)) == 1:
        value = min(value, 1.0)
    return value


def one_vs_rest_concurrence(state: PureState, party: Party) -> float:
    return concurrence_pure(state, Bipartition.from_left([party.index], state.n_qubits))


def _squared_one_vs_rest(state: PureState, qubit: int) -> float:
    return 2.0 * max(0.0, 1.0 - reduced_purity(state, [qubit]))


def concurrence_wootters(rho: DensityMatrix) -> float:
    """
    max(0, λ1 − λ2 − λ3 − λ4) with λ the decreasing square roots of the
    spectrum of ρ·ρ̃, ρ̃ = (σy⊗σy) ρ* (σy⊗σy).

    The λ are taken as singular values of Vᵀ(σy⊗σy)V for a square-root factor
    ρ = V V†, which avoids square roots of near-zero eigenvalues. Eigen-components
    of ρ below WOOTTERS_RANK_CUTOFF are dropped as noise.
    """
    if rho.dim != 4:
        raise DimensionMismatch(f"Wootters concurrence needs a 4×4 matrix, got {rho.dim}")
    validate_density(rho)
    return _wootters(rho.entries)


def _wootters(entries: np.ndarray) -> float:
    weights, vectors = np.linalg.eigh(entries)
    if np.min(weights) < -settings.WOOTTERS_NEGATIVE_TOL:
        raise NumericalFailure(
            f"Two-qubit state has eigenvalue {np.min(weights):.3g} below "
            f"−{settings.WOOTTERS_NEGATIVE_TOL}"
        )
    keep = weights > settings.WOOTTERS_RANK_CUTOFF
    if not np.any(keep):
        return 0.0
    factor = vectors[:, keep] * np.sqrt(weights[keep])
    values = spin_flip_values(factor)
    return float(np.clip(concurrence_from_values(values), 0.0, 1.0))


def squared_pair_concurrence(state: PureState, pair: Pair) -> float:
    # Marginals of a validated state skip the density re-validation
    return _wootters(partial_trace(state, pair.indices).entries) ** 2


# ── Three-tangle ──────────────────────────────────────────────────────────────


def _tangle_by_pivot(state: PureState) -> Tuple[Dict[Party, float], Dict[Pair, float]]:
    c2 = {pair: squared_pair_concurrence(state, pair) for pair in THREE_QUBIT_PAIRS}
    by_pivot: Dict[Party, float] = {}
    for pivot, (first, second) in PIVOT_PAIRS.items():
        by_pivot[pivot] = _squared_one_vs_rest(state, pivot.index) - c2[first] - c2[second]
    return by_pivot, c2


def _checked_tangle(state: PureState, by_pivot: Dict[Party, float]) -> float:
    tau = cayley_tangle(state.amplitudes)
    values = [tau, *by_pivot.values()]
    spread = max(values) - min(values)
    if spread > settings.CKW_TOL:
        raise CkwInconsistency(
            f"Three-tangle {tau:.12g} differs across pivots: "
            + ", ".join(f"{p.value}={v:.12g}" for p, v in by_pivot.items())
        )
    if by_pivot[Party.A] < -settings.NEGATIVE_TANGLE_TOL:
        raise NegativeTangle(f"Three-tangle evaluated to {by_pivot[Party.A]:.3g}")
    return min(tau, 1.0)


def three_tangle(state: PureState) -> float:
    """
    Cayley hyperdeterminant form of τ, asserted equal to the CKW residual
    C²_{i(jk)} − C²_{ij} − C²_{ik} for every pivot i.
    """
    _require_qubits(state, 3)
    by_pivot, _ = _tangle_by_pivot(state)
    return _checked_tangle(state, by_pivot)


def tangle_pivot_values(state: PureState) -> Dict[Party, float]:
    """Raw (unclamped) CKW evaluations for each pivot."""
    _require_qubits(state, 3)
    return _tangle_by_pivot(state)[0]


# ── Teleportation fidelities ──────────────────────────────────────────────────


def fully_entangled_fraction(rho: TwoQubitInput) -> float:
    """
    Pure inputs: (1 + C)/2. Mixed inputs: largest eigenvalue of the real part of
    ρ in the magic basis, since maximally entangled states are the real unit
    vectors there.
    """
    if isinstance(rho, PureState):
        _require_qubits(rho, 2)
        c = concurrence_pure(rho, Bipartition.from_left([0], 2))
        return float(np.clip((1.0 + c) / 2.0, 0.25, 1.0))
    if rho.dim != 4:
        raise DimensionMismatch(f"Expected a two-qubit state, got dimension {rho.dim}")
    validate_density(rho)
    in_magic = MAGIC_BASIS.conj().T @ rho.entries @ MAGIC_BASIS
    largest = float(np.linalg.eigvalsh(np.real(in_magic))[-1])
    return float(np.clip(largest, 0.25, 1.0))


def max_fidelity_2q(rho: TwoQubitInput) -> float:
    return (2.0 * fully_entangled_fraction(rho) + 1.0) / 3.0


def _assisted(tau: float, c2: float) -> float:
    """√(τ + C²) with numerical zeros snapped to 0."""
    total = tau + c2
    if total < settings.ASSISTED_ZERO:
        return 0.0
    return float(min(np.sqrt(total), 1.0))


def _pair(i: Party, j: Party) -> Pair:
    for pair in THREE_QUBIT_PAIRS:
        if set(pair.parties) == {i, j}:
            return pair
    raise DimensionMismatch(f"No three-qubit pair for parties {i.value}, {j.value}")


def fidelity_f_ij(state: PureState, i: Party, j: Party) -> float:
    """F_ij = (√(τ + C_ij²) + 2)/3, in [2/3, 1]."""
    _require_qubits(state, 3)
    if i == j:
        raise DimensionMismatch("fidelity_f_ij needs two distinct parties")
    pair = _pair(i, j)
    tau = three_tangle(state)
    return (_assisted(tau, squared_pair_concurrence(state, pair)) + 2.0) / 3.0


def useful_for_teleportation(state: PureState) -> bool:
    """min{F_AB, F_BC, F_CA} > 2/3, i.e. T_min > 0."""
    return report(state).t_min > 0.0


# ── Comparison measures ───────────────────────────────────────────────────────


def concurrence_fill(state: PureState) -> float:
    """(16/3 · Q · Π(Q − C²_{i(jk)}))^{1/4} with Q half the sum of the squares."""
    _require_qubits(state, 3)
    c2 = [_squared_one_vs_rest(state, q) for q in range(3)]
    q = 0.5 * sum(c2)
    area = (16.0 / 3.0) * q * np.prod([max(q - x, 0.0) for x in c2])
    return float(min(max(area, 0.0) ** 0.25, 1.0))


def two_concurrence_min(state: PureState, omitted: Party = Party.C) -> float:
    """Minimum of the one-vs-rest concurrences of the two parties other than `omitted`."""
    _require_qubits(state, 3)
    return min(
        one_vs_rest_concurrence(state, p) for p in (Party.A, Party.B, Party.C) if p != omitted
    )


# ── Report ────────────────────────────────────────────────────────────────────


def report(state: PureState) -> MeasureReport:
    """All three-qubit measures for one pure state."""
    _require_qubits(state, 3)
    validate(state)
    by_pivot, c2 = _tangle_by_pivot(state)
    tau = _checked_tangle(state, by_pivot)

    t = {pair: _assisted(tau, c2[pair]) for pair in THREE_QUBIT_PAIRS}
    # min() keeps the first minimum, so ties resolve to AB < BC < CA
    min_pair = min(THREE_QUBIT_PAIRS, key=lambda p: t[p])

    pivot_min = {}
    pivot_gm = {}
    for pivot, (first, second) in PIVOT_PAIRS.items():
        pivot_min[pivot] = min(t[first], t[second])
        pivot_gm[pivot] = geometric_mean([t[first], t[second]])

    one_vs_rest = [one_vs_rest_concurrence(state, p) for p in (Party.A, Party.B, Party.C)]

    result = MeasureReport(
        t_ab=t[Pair.AB],
        t_bc=t[Pair.BC],
        t_ca=t[Pair.CA],
        t_min=t[min_pair],
        t_gm=geometric_mean(list(t.values())),
        t_min_a=pivot_min[Party.A],
        t_gm_a=pivot_gm[Party.A],
        t_min_b=pivot_min[Party.B],
        t_gm_b=pivot_gm[Party.B],
        t_min_c=pivot_min[Party.C],
        t_gm_c=pivot_gm[Party.C],
        c_min=min(one_vs_rest),
        c_gm=geometric_mean(one_vs_rest),
        tangle=tau,
        c2_ab=c2[Pair.AB],
        c2_bc=c2[Pair.BC],
        c2_ca=c2[Pair.CA],
        t_min_pair=min_pair,
        c_a_bc=one_vs_rest[0],
        c_b_ca=one_vs_rest[1],
        c_c_ab=one_vs_rest[2],
    )
    logger.debug(
        "Measure report computed",
        extra={"t_min": result.t_min, "t_gm": result.t_gm, "tangle": tau},
    )
    return result
