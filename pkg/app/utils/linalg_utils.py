"""Dense linear-algebra helpers shared by the measure and oracle services."""

from typing import Sequence

import numpy as np

from app.core.config import settings

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

# sigma_y ⊗ sigma_y is real: the spin flip never mixes real and imaginary parts
SPIN_FLIP = np.real(np.kron(PAULI_Y, PAULI_Y))

# Columns are the magic basis; real combinations of them are exactly the
# maximally entangled two-qubit states up to a global phase.
MAGIC_BASIS = (
    np.array(
        [
            [1, 1j, 0, 0],
            [0, 0, 1j, 1],
            [0, 0, 1j, -1],
            [1, -1j, 0, 0],
        ],
        dtype=complex,
    )
    / np.sqrt(2)
)

BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def is_unitary(u: np.ndarray, tol: float | None = None) -> bool:
    tol = settings.UNITARY_TOL if tol is None else tol
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.allclose(u.conj().T @ u, np.eye(u.shape[0]), atol=tol, rtol=0))


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2) for a Hermitian matrix, computed as the squared Frobenius norm."""
    return float(np.sum(np.abs(rho) ** 2))


def spin_flip_values(factors: np.ndarray) -> np.ndarray:
    """
    Wootters lambda values of rho = V V^dagger from a square-root factor V.

    `factors` has shape (..., 4, r). The lambda values are the singular values of
    the symmetric r×r matrix V^T (sigma_y ⊗ sigma_y) V, returned in decreasing
    order along the last axis. This equals the square roots of the spectrum of
    rho·rho_tilde without taking square roots of near-zero eigenvalues.
    """
    v = np.asarray(factors, dtype=complex)
    tau = np.swapaxes(v, -1, -2) @ SPIN_FLIP @ v
    return np.linalg.svd(tau, compute_uv=False)


def concurrence_from_values(values: np.ndarray) -> np.ndarray:
    """max(0, lambda_1 − sum of the rest) along the last axis."""
    values = np.asarray(values, dtype=float)
    return np.maximum(0.0, 2.0 * values[..., 0] - np.sum(values, axis=-1))


def cayley_tangle(amplitudes: np.ndarray) -> float:
    """
    4·|d1 − 2·d2 + 4·d3| for a normalized three-qubit vector a_ijk.

    Algebraically equal to the CKW residual but free of its cancellation
    noise: every term vanishes together on states that factorize.
    """
    a = np.asarray(amplitudes, dtype=complex).reshape(2, 2, 2)
    d1 = (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
    )
    d2 = (
        a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
        + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1]
    )
    d3 = (
        a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
        + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0]
    )
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))


def geometric_mean(values: Sequence[float], floor: float | None = None) -> float:
    """
    Geometric mean in log-space. Any factor below `floor` makes the result
    exactly 0.0 so near-zero products never come out as -0.0 or noise.
    """
    floor = settings.GEOMETRIC_MEAN_FLOOR if floor is None else floor
    arr = np.asarray(values, dtype=float)
    if arr.size == 0 or np.any(arr < floor):
        return 0.0
    return float(np.exp(np.mean(np.log(arr))))


def bloch_vectors(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """
    Measurement basis vectors for arrays of Bloch angles.

    Returns shape (..., 2, 2): index [..., t, :] is the basis vector for outcome t,
    |b0> = cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>, |b1> = sin(θ/2)|0> − e^{iφ} cos(θ/2)|1>.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    phase = np.exp(1j * phi)
    b0 = np.stack([c + 0j, phase * s], axis=-1)
    b1 = np.stack([s + 0j, -phase * c], axis=-1)
    return np.stack([b0, b1], axis=-2)
