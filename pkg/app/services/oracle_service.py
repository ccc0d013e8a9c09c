"""
Teleportation GME: Brute-Force Oracles

Variational re-derivations of the teleportation fidelities, used as ground
truth for the closed forms in measure_service:

  fef_bruteforce()      max of <e|rho|e> over maximally entangled |e> = (U ⊗ I)|Φ+>
  f_ij_bruteforce()     best single-assistant measurement on a three-qubit state
  f_ij_product_N()      independent assistant measurements on N ∈ {4, 5} qubits
  f_ij_sequential_4()   one assistant measures, the other adapts (four qubits)

Every search is a deterministic grid followed by Nelder–Mead refinement from
the best grid points. Grids nest: θ_k = πk/G (k = 0..G), φ_l = 2πl/G
(l = 0..G−1), so doubling G only adds candidates. Grid ties resolve to the
smallest (θ, φ) in lexicographic order.

Post-measurement states of pure inputs are pure, so f = (1 + C)/2 per branch.
For an unnormalized two-qubit branch m (as a 2×2 matrix) p·C = 2|det m|,
which keeps every objective division-free.
"""

from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize

from app.core.exceptions import DimensionMismatch
from app.core.logger import get_logger
from app.enums.enums import Party
from app.models.measurement_model import MeasurementBasis
from app.models.state_model import DensityMatrix, PureState
from app.schemas.config_schema import OptimizerConfig
from app.services.state_service import validate, validate_density
from app.utils.linalg_utils import bloch_vectors, concurrence_from_values, spin_flip_values

logger = get_logger(__name__)

QubitRef = Union[Party, int]

# Complex entries allowed in one vectorized product-grid block
_BLOCK_ELEMENTS = 1 << 21
# Grid candidates that seed local refinement
_REFINE_STARTS = 3
_TIE_DECIMALS = 12


# ── Grid and refinement helpers ───────────────────────────────────────────────


def grid_angles(points: int) -> Tuple[np.ndarray, np.ndarray]:
    """Flattened (θ, φ) candidates, θ-major."""
    theta = np.pi * np.arange(points + 1) / points
    phi = 2.0 * np.pi * np.arange(points) / points
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    return tt.ravel(), pp.ravel()


def _top_indices(values: np.ndarray, count: int) -> np.ndarray:
    # Values equal to 12 decimals tie; the stable sort then keeps grid order
    keys = -np.round(values.ravel(), _TIE_DECIMALS)
    return np.argsort(keys, kind="stable")[:count]


def _refine(
    objective: Callable[[np.ndarray], float],
    starts: Sequence[np.ndarray],
    step: float,
    cfg: OptimizerConfig,
) -> Tuple[float, np.ndarray]:
    """Maximize `objective` with Nelder–Mead from each start; best (value, x) wins."""
    best_value = -np.inf
    best_x = np.asarray(starts[0], dtype=float)
    for x0 in starts:
        x0 = np.asarray(x0, dtype=float)
        simplex = np.vstack([x0] + [x0 + step * e for e in np.eye(x0.size)])
        result = minimize(
            lambda x: -objective(x),
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": cfg.refine_iters,
                "xatol": cfg.refine_tol,
                "fatol": cfg.refine_tol,
                "initial_simplex": simplex,
            },
        )
        value = -float(result.fun)
        if value > best_value:
            best_value, best_x = value, np.asarray(result.x, dtype=float)
    return best_value, best_x


def _qubit(ref: QubitRef) -> int:
    return ref.index if isinstance(ref, Party) else int(ref)


def _assistants(n_qubits: int, i: QubitRef, j: QubitRef) -> Tuple[int, int, List[int]]:
    qi, qj = _qubit(i), _qubit(j)
    for q in (qi, qj):
        if not 0 <= q < n_qubits:
            raise DimensionMismatch(f"Qubit {q} out of range for {n_qubits} qubits")
    if qi == qj:
        raise DimensionMismatch("Teleportation needs two distinct parties")
    return qi, qj, [q for q in range(n_qubits) if q not in (qi, qj)]


def _abs_det(m: np.ndarray) -> np.ndarray:
    return np.abs(m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0])


# ── Fully entangled fraction ──────────────────────────────────────────────────


def _euler_unitaries(alpha: np.ndarray, beta: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    """Rz(α)·Ry(β)·Rz(γ) for broadcast angle arrays, shape (..., 2, 2)."""
    c = np.cos(beta / 2)
    s = np.sin(beta / 2)
    plus = np.exp(-0.5j * (alpha + gamma))
    minus = np.exp(-0.5j * (alpha - gamma))
    row0 = np.stack([plus * c, -minus * s], axis=-1)
    row1 = np.stack([np.conj(minus) * s, np.conj(plus) * c], axis=-1)
    return np.stack([row0, row1], axis=-2)


def _fef_values(rho: np.ndarray, alpha, beta, gamma) -> np.ndarray:
    # (U ⊗ I)|Φ+> has amplitude U[k, i]/√2 at basis index 2k + i
    e = _euler_unitaries(alpha, beta, gamma).reshape(*np.shape(alpha), 4) / np.sqrt(2)
    return np.real(np.einsum("...i,ij,...j->...", e.conj(), rho, e))


def fef_bruteforce(rho: Union[PureState, DensityMatrix], cfg: OptimizerConfig | None = None) -> float:
    """
    Fully entangled fraction by direct search. Every maximally entangled
    two-qubit state is (U ⊗ I)|Φ+> up to phase, and U = Rz·Ry·Rz covers SU(2).
    """
    cfg = cfg or OptimizerConfig()
    if isinstance(rho, PureState):
        if rho.n_qubits != 2:
            raise DimensionMismatch(f"Expected a two-qubit state, got {rho.n_qubits} qubits")
        entries = validate(rho).projector()
    else:
        if rho.dim != 4:
            raise DimensionMismatch(f"Expected a two-qubit state, got dimension {rho.dim}")
        entries = validate_density(rho).entries

    g = cfg.coarse_grid
    turn = 2.0 * np.pi * np.arange(g) / g
    half = np.pi * np.arange(g + 1) / g
    aa, bb, cc = np.meshgrid(turn, half, turn, indexing="ij")
    values = _fef_values(entries, aa, bb, cc)

    best = float(values.max())
    if cfg.refine_iters > 0:
        starts = [
            np.array([aa.ravel()[k], bb.ravel()[k], cc.ravel()[k]])
            for k in _top_indices(values, _REFINE_STARTS)
        ]
        refined, _ = _refine(
            lambda x: float(_fef_values(entries, x[0], x[1], x[2])),
            starts,
            np.pi / g,
            cfg,
        )
        best = max(best, refined)
    return float(np.clip(best, 0.25, 1.0))


# ── Three qubits, one assistant ───────────────────────────────────────────────


def _single_assistant_values(psi: np.ndarray, k: int, vectors: np.ndarray) -> np.ndarray:
    """Σ_t p_t·f(post_t) for a batch of bases on qubit k of a three-qubit tensor."""
    remaining = np.moveaxis(psi, k, 0)
    m = np.einsum("...ts,sab->...tab", vectors.conj(), remaining)
    return 0.5 + np.sum(_abs_det(m), axis=-1)


def f_ij_bruteforce(
    state: PureState, i: QubitRef, j: QubitRef, cfg: OptimizerConfig | None = None
) -> Tuple[float, MeasurementBasis]:
    """
    Best average fully entangled fraction between i and j after the third party
    measures. Returns the value and the maximizing basis.
    """
    cfg = cfg or OptimizerConfig()
    if state.n_qubits != 3:
        raise DimensionMismatch(f"Expected a three-qubit state, got {state.n_qubits} qubits")
    validate(state)
    _, _, (k,) = _assistants(3, i, j)
    psi = state.as_tensor()

    theta, phi = grid_angles(cfg.coarse_grid)
    values = _single_assistant_values(psi, k, bloch_vectors(theta, phi))
    top = _top_indices(values, _REFINE_STARTS)
    best_value = float(values[top[0]])
    best_angles = (float(theta[top[0]]), float(phi[top[0]]))

    if cfg.refine_iters > 0:
        refined, x = _refine(
            lambda x: float(_single_assistant_values(psi, k, bloch_vectors(x[0], x[1]))),
            [np.array([theta[t], phi[t]]) for t in top],
            np.pi / cfg.coarse_grid,
            cfg,
        )
        if refined > best_value + cfg.refine_tol:
            best_value, best_angles = refined, (float(x[0]), float(x[1]))

    basis = MeasurementBasis.from_angles(*best_angles)
    logger.debug(
        "Single-assistant oracle done",
        extra={"assistant": k, "value": best_value, "theta": basis.theta, "phi": basis.phi},
    )
    return float(min(best_value, 1.0)), basis


# ── N qubits, independent assistants ──────────────────────────────────────────


def _contract_assistant(x: np.ndarray, vectors: np.ndarray, n_batch: int, n_out: int) -> np.ndarray:
    """
    Contract the first remaining assistant axis of x, laid out as
    (*batch, *outcomes, *assistants, 2, 2), with candidate bases `vectors`
    of shape (n, 2, 2). The candidate axis joins the batch, the outcome axis
    joins the outcomes.
    """
    out = np.tensordot(vectors.conj(), x, axes=([2], [n_batch + n_out]))
    return np.moveaxis(out, [0, 1], [n_batch, n_batch + n_out + 1])


def _product_values(x: np.ndarray, candidate_vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Objective over the full product grid of assistant bases."""
    n_assist = len(candidate_vectors)
    for depth, vectors in enumerate(candidate_vectors):
        x = _contract_assistant(x, vectors, depth, depth)
    det = _abs_det(x)
    return 0.5 + det.sum(axis=tuple(range(n_assist, 2 * n_assist)))


def _product_layout(state: PureState, qi: int, qj: int, assistants: List[int]) -> np.ndarray:
    return np.transpose(state.as_tensor(), axes=assistants + [qi, qj])


def f_ij_product_N(
    state: PureState, i: QubitRef, j: QubitRef, cfg: OptimizerConfig | None = None
) -> float:
    """
    Best average fully entangled fraction between i and j when every other
    qubit is measured in its own basis, with no communication between them.
    """
    cfg = cfg or OptimizerConfig()
    if state.n_qubits not in (4, 5):
        raise DimensionMismatch(
            f"Product-measurement oracle needs 4 or 5 qubits, got {state.n_qubits}"
        )
    validate(state)
    qi, qj, assistants = _assistants(state.n_qubits, i, j)
    x = _product_layout(state, qi, qj, assistants)

    g = cfg.assistant_grid if state.n_qubits == 4 else cfg.five_qubit_grid
    theta, phi = grid_angles(g)
    vectors = bloch_vectors(theta, phi)
    n_cand = theta.size
    n_assist = len(assistants)

    per_first = n_cand ** (n_assist - 1) * 2**n_assist * 4
    chunk = max(1, _BLOCK_ELEMENTS // per_first)
    blocks = [
        _product_values(x, [vectors[start : start + chunk]] + [vectors] * (n_assist - 1))
        for start in range(0, n_cand, chunk)
    ]
    values = np.concatenate(blocks, axis=0)

    top = _top_indices(values, _REFINE_STARTS)
    best = float(values.ravel()[top[0]])

    if cfg.refine_iters > 0:
        starts = []
        for flat in top:
            idx = np.unravel_index(flat, values.shape)
            starts.append(np.concatenate([[theta[c], phi[c]] for c in idx]))

        def objective(angles: np.ndarray) -> float:
            pairs = angles.reshape(n_assist, 2)
            single = [bloch_vectors(t, p)[None] for t, p in pairs]
            return float(_product_values(x, single).ravel()[0])

        refined, _ = _refine(objective, starts, np.pi / g, cfg)
        if refined > best + cfg.refine_tol:
            best = refined

    logger.debug(
        "Product-measurement oracle done",
        extra={"pair": (qi, qj), "n_qubits": state.n_qubits, "value": best},
    )
    return float(min(best, 1.0))


# ── Four qubits, sequential assistants ────────────────────────────────────────


def _sequential_values(x: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """
    Σ_t p_t·f^(3)_ij(post_t) with the first assistant on axis 0 of x, whose
    axes are (first, i, j, other). The inner three-qubit value is the closed
    form (1 + √(τ + C_ij²))/2, written through unnormalized branches r_t:
    p²(τ + C_ij²) = 2(p² − Tr ρ_i²) − (p·C_ik)².
    """
    r = np.einsum("...ts,sijk->...tijk", vectors.conj(), x)
    batch = r.shape[:-3]
    p = np.sum(np.abs(r) ** 2, axis=(-3, -2, -1))

    m_i = r.reshape(*batch, 2, 4)
    rho_i = m_i @ np.swapaxes(m_i.conj(), -1, -2)
    purity_i = np.sum(np.abs(rho_i) ** 2, axis=(-2, -1))

    factor_ik = np.swapaxes(r, -1, -2).reshape(*batch, 4, 2)
    pc_ik = concurrence_from_values(spin_flip_values(factor_ik))

    assisted_sq = 2.0 * (p**2 - purity_i) - pc_ik**2
    return 0.5 + 0.5 * np.sum(np.sqrt(np.maximum(assisted_sq, 0.0)), axis=-1)


def f_ij_sequential_4(
    state: PureState, i: QubitRef, j: QubitRef, cfg: OptimizerConfig | None = None
) -> float:
    """
    Best average fully entangled fraction between i and j when one assistant
    measures first and the second assistant chooses its measurement knowing
    the outcome. Searches both orders of the assistants.
    """
    cfg = cfg or OptimizerConfig()
    if state.n_qubits != 4:
        raise DimensionMismatch(f"Expected a four-qubit state, got {state.n_qubits} qubits")
    validate(state)
    qi, qj, assistants = _assistants(4, i, j)
    theta, phi = grid_angles(cfg.coarse_grid)
    vectors = bloch_vectors(theta, phi)

    best = -np.inf
    for first in assistants:
        other = next(q for q in assistants if q != first)
        x = np.transpose(state.as_tensor(), axes=[first, qi, qj, other])
        values = _sequential_values(x, vectors)
        top = _top_indices(values, _REFINE_STARTS)
        value = float(values[top[0]])
        if cfg.refine_iters > 0:
            refined, _ = _refine(
                lambda a, x=x: float(_sequential_values(x, bloch_vectors(a[0], a[1]))),
                [np.array([theta[t], phi[t]]) for t in top],
                np.pi / cfg.coarse_grid,
                cfg,
            )
            value = max(value, refined)
        best = max(best, value)

    logger.debug("Sequential oracle done", extra={"pair": (qi, qj), "value": best})
    return float(min(best, 1.0))
