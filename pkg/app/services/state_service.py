"""
Teleportation GME: State Service

Core state manipulation on dense amplitude vectors:
  validate()              → invariant check (never repairs normalization)
  renormalize()           → explicit repair for closed-form family amplitudes
  partial_trace()         → reduced density operator on kept qubits
  apply_local_unitary()   → single-qubit unitary on one qubit
  apply_local_operator()  → single-qubit Kraus operator, unnormalized
  measure_qubit()         → two-outcome projective measurement
  is_biseparable_pure()   → purity test across a bipartition
  all_bipartitions()      → every unordered cut of n qubits

All functions are pure: inputs are never mutated.
"""

from itertools import combinations
from typing import Iterable, List, Sequence, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import (
    DimensionMismatch,
    EmptyKeepSet,
    FullKeepSet,
    IndexOutOfRange,
    NotNormalized,
    NotUnitary,
)
from app.models.measurement_model import Bipartition, MeasurementBasis, MeasurementOutcome
from app.models.state_model import DensityMatrix, PureState
from app.utils.linalg_utils import is_unitary, purity

MIN_QUBITS = 2
MAX_QUBITS = 5

# ── Validation ────────────────────────────────────────────────────────────────


def validate(state: PureState) -> PureState:
    """Return `state` unchanged if its invariants hold, otherwise raise."""
    if not MIN_QUBITS <= state.n_qubits <= MAX_QUBITS:
        raise DimensionMismatch(
            f"n_qubits must be in {MIN_QUBITS}..{MAX_QUBITS}, got {state.n_qubits}"
        )
    if state.amplitudes.shape != (state.dim,):
        raise DimensionMismatch(
            f"Expected {state.dim} amplitudes for {state.n_qubits} qubits, "
            f"got {state.amplitudes.size}"
        )
    deviation = abs(state.norm - 1.0)
    if deviation > settings.NORMALIZATION_TOL:
        raise NotNormalized(
            f"State norm {state.norm:.12g} deviates from 1 by {deviation:.3g}"
        )
    return state


def validate_density(rho: DensityMatrix) -> DensityMatrix:
    entries = rho.entries
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise DimensionMismatch(f"Density matrix must be square, got {entries.shape}")
    dim = entries.shape[0]
    if dim < 2 or dim & (dim - 1):
        raise DimensionMismatch(f"Density matrix dimension {dim} is not a power of 2")
    tol = settings.HERMITIAN_TOL
    if not np.allclose(entries, entries.conj().T, atol=tol, rtol=0):
        raise DimensionMismatch("Density matrix is not Hermitian")
    if abs(rho.trace - 1.0) > tol:
        raise NotNormalized(f"Density matrix trace {rho.trace:.12g} is not 1")
    if np.min(rho.eigenvalues()) < -tol:
        raise NotNormalized("Density matrix has a negative eigenvalue")
    return rho


def renormalize(amplitudes: Sequence[complex], n_qubits: int | None = None) -> PureState:
    """Build a unit-norm state from amplitudes that are correct up to scale."""
    vec = np.asarray(amplitudes, dtype=complex).ravel()
    if n_qubits is None:
        n_qubits = int(round(np.log2(vec.size)))
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise NotNormalized("Cannot renormalize the zero vector")
    return validate(PureState(n_qubits=n_qubits, amplitudes=vec / norm))


def basis_state(bits: str) -> PureState:
    """Computational basis state from a bit string, e.g. '010'."""
    n = len(bits)
    vec = np.zeros(2**n, dtype=complex)
    vec[int(bits, 2)] = 1.0
    return PureState(n_qubits=n, amplitudes=vec)


# ── Composition ───────────────────────────────────────────────────────────────


def tensor(first: PureState, second: PureState) -> PureState:
    """|first> ⊗ |second>; the qubits of `first` become the leading ones."""
    return PureState(
        n_qubits=first.n_qubits + second.n_qubits,
        amplitudes=np.kron(first.amplitudes, second.amplitudes),
    )


def permute_qubits(state: PureState, order: Sequence[int]) -> PureState:
    """New state whose qubit q is qubit order[q] of the input."""
    if sorted(order) != list(range(state.n_qubits)):
        raise IndexOutOfRange(f"{list(order)} is not a permutation of the qubits")
    return PureState(
        n_qubits=state.n_qubits,
        amplitudes=np.transpose(state.as_tensor(), axes=list(order)).ravel(),
    )


# ── Reductions ────────────────────────────────────────────────────────────────


def _check_indices(indices: Iterable[int], n_qubits: int) -> List[int]:
    out = sorted({int(q) for q in indices})
    for q in out:
        if q < 0 or q >= n_qubits:
            raise IndexOutOfRange(f"Qubit {q} out of range for {n_qubits} qubits")
    return out


def partial_trace(
    state: Union[PureState, DensityMatrix], keep: Iterable[int]
) -> DensityMatrix:
    """
    Reduced density operator on `keep`, kept qubits in ascending original order.
    `keep` must be a nonempty proper subset of the register.
    """
    n = state.n_qubits
    kept = _check_indices(keep, n)
    if not kept:
        raise EmptyKeepSet("partial_trace needs at least one kept qubit")
    if len(kept) == n:
        raise FullKeepSet("partial_trace needs at least one traced-out qubit")
    traced = [q for q in range(n) if q not in kept]
    k_dim = 2 ** len(kept)

    if isinstance(state, PureState):
        psi = np.transpose(state.as_tensor(), axes=kept + traced).reshape(k_dim, -1)
        return DensityMatrix(psi @ psi.conj().T)

    rho = state.entries.reshape((2,) * (2 * n))
    current = n
    # Trace highest indices first so lower axis numbers stay valid
    for q in sorted(traced, reverse=True):
        rho = np.trace(rho, axis1=q, axis2=q + current)
        current -= 1
    return DensityMatrix(rho.reshape(k_dim, k_dim))


def reduced_purity(state: PureState, keep: Iterable[int]) -> float:
    return purity(partial_trace(state, keep).entries)


# ── Local operations ──────────────────────────────────────────────────────────


def _apply_on_axis(tensor_: np.ndarray, qubit: int, op: np.ndarray) -> np.ndarray:
    out = np.tensordot(op, tensor_, axes=([1], [qubit]))
    return np.moveaxis(out, 0, qubit)


def apply_local_operator(state: PureState, qubit: int, op: np.ndarray) -> np.ndarray:
    """Raw amplitudes of (op on `qubit`)|state>; no normalization."""
    _check_indices([qubit], state.n_qubits)
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        raise DimensionMismatch(f"Local operator must be 2×2, got {op.shape}")
    return _apply_on_axis(state.as_tensor(), qubit, op).ravel()


def apply_local_unitary(state: PureState, qubit: int, u: np.ndarray) -> PureState:
    if not is_unitary(u):
        raise NotUnitary(f"Operator on qubit {qubit} is not unitary")
    return PureState(
        n_qubits=state.n_qubits, amplitudes=apply_local_operator(state, qubit, u)
    )


def branch(raw: np.ndarray, n_qubits: int) -> MeasurementOutcome:
    """Wrap unnormalized branch amplitudes as an outcome, flagging empty branches."""
    probability = float(np.real(np.vdot(raw, raw)))
    if probability < settings.ZERO_PROBABILITY:
        placeholder = np.zeros(2**n_qubits, dtype=complex)
        placeholder[0] = 1.0
        return MeasurementOutcome(
            probability=max(probability, 0.0),
            state=PureState(n_qubits=n_qubits, amplitudes=placeholder),
            negligible=True,
        )
    return MeasurementOutcome(
        probability=probability,
        state=PureState(n_qubits=n_qubits, amplitudes=raw / np.sqrt(probability)),
    )


def measure_qubit(
    state: PureState, qubit: int, basis: MeasurementBasis
) -> List[MeasurementOutcome]:
    """
    Project `qubit` onto the two basis vectors. Post-states live on the
    remaining n−1 qubits in their original relative order.
    """
    _check_indices([qubit], state.n_qubits)
    if state.n_qubits <= MIN_QUBITS:
        raise DimensionMismatch(
            f"Measuring a {state.n_qubits}-qubit state would leave fewer than "
            f"{MIN_QUBITS} qubits"
        )
    psi = state.as_tensor()
    outcomes = []
    for vec in basis.vectors():
        raw = np.tensordot(vec.conj(), psi, axes=([0], [qubit])).ravel()
        outcomes.append(branch(raw, state.n_qubits - 1))
    return outcomes


# ── Separability ──────────────────────────────────────────────────────────────


def is_biseparable_pure(
    state: PureState, cut: Bipartition, tol: float | None = None
) -> bool:
    """True iff Tr(rho_left^2) ≥ 1 − tol."""
    tol = settings.BISEPARABILITY_TOL if tol is None else tol
    if cut.n_qubits != state.n_qubits:
        raise DimensionMismatch(
            f"Cut {cut.label} is for {cut.n_qubits} qubits, state has {state.n_qubits}"
        )
    return reduced_purity(state, cut.left) >= 1.0 - tol


def all_bipartitions(n_qubits: int) -> List[Bipartition]:
    """Every unordered cut, listed with qubit 0 on the left, smaller sides first."""
    others = range(1, n_qubits)
    cuts = []
    for size in range(0, n_qubits - 1):
        for extra in combinations(others, size):
            cuts.append(Bipartition.from_left((0, *extra), n_qubits))
    return cuts
