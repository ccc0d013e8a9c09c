"""
Teleportation GME: Quantum State Value Types

PureState and DensityMatrix are immutable wrappers around numpy arrays.
Basis index convention: qubit 0 (party A) is the most significant bit, so for
three qubits |abc> lives at index 4a + 2b + c. The same big-endian rule holds
for every n.

Construction never normalizes or validates; use state_service.validate()
(or renormalize() for closed-form amplitudes) before trusting a state.
"""

from dataclasses import dataclass

import numpy as np


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=complex, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class PureState:
    """
    Amplitude vector over n qubits.

    Attributes:
        n_qubits:   Number of qubits.
        amplitudes: 2^n complex amplitudes in ascending basis-index order.
    """

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplitudes", _frozen(np.ravel(self.amplitudes)))

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def as_tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis of length 2 per qubit."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def overlap(self, other: "PureState") -> float:
        """|<self|other>|, insensitive to global phase."""
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)))

    def __repr__(self) -> str:
        return f"PureState(n_qubits={self.n_qubits}, amplitudes={np.round(self.amplitudes, 6).tolist()})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on qubits."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _frozen(self.entries))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def n_qubits(self) -> int:
        return int(round(np.log2(self.dim)))

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.entries)))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    @classmethod
    def from_pure(cls, state: PureState) -> "DensityMatrix":
        return cls(state.projector())

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        dim = 2**n_qubits
        return cls(np.eye(dim, dtype=complex) / dim)
