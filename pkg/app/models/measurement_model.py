"""
Teleportation GME: Measurement Value Types

MeasurementBasis: one-qubit orthogonal measurement from Bloch angles.
Bipartition:      a cut of the qubit register into two nonempty groups.
MeasurementOutcome: one branch of a measurement or POVM.
"""

import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable

import numpy as np

from app.core.exceptions import IndexOutOfRange
from app.models.state_model import PureState
from app.utils.linalg_utils import bloch_vectors

_TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class MeasurementBasis:
    """
    Basis {|b0>, |b1>} with |b0> = cos(θ/2)|0> + e^{iφ} sin(θ/2)|1> and
    |b1> = sin(θ/2)|0> − e^{iφ} cos(θ/2)|1>.

    theta in [0, π], phi in [0, 2π). Use from_angles() for arbitrary reals.
    """

    theta: float
    phi: float

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "MeasurementBasis":
        """
        Fold arbitrary angles into the canonical ranges. (2π − θ, φ + π) names
        the same basis as (θ, φ) up to phases of the basis vectors.
        """
        theta = math.fmod(float(theta), _TWO_PI)
        phi = float(phi)
        if theta < 0:
            theta += _TWO_PI
        if theta > math.pi:
            theta = _TWO_PI - theta
            phi += math.pi
        phi = math.fmod(phi, _TWO_PI)
        if phi < 0:
            phi += _TWO_PI
        if phi >= _TWO_PI:
            phi = 0.0
        return cls(theta=theta, phi=phi)

    @classmethod
    def z(cls) -> "MeasurementBasis":
        return cls(theta=0.0, phi=0.0)

    @classmethod
    def x(cls) -> "MeasurementBasis":
        return cls(theta=math.pi / 2, phi=0.0)

    @classmethod
    def y(cls) -> "MeasurementBasis":
        return cls(theta=math.pi / 2, phi=math.pi / 2)

    def vectors(self) -> np.ndarray:
        """Shape (2, 2): row t is the basis vector for outcome t."""
        return bloch_vectors(self.theta, self.phi)


@dataclass(frozen=True)
class Bipartition:
    """Disjoint nonempty qubit groups whose union is the whole register."""

    left: FrozenSet[int]
    right: FrozenSet[int]

    def __post_init__(self) -> None:
        if not self.left or not self.right:
            raise IndexOutOfRange("Both sides of a bipartition must be nonempty")
        if self.left & self.right:
            raise IndexOutOfRange(
                f"Bipartition sides overlap on qubits {sorted(self.left & self.right)}"
            )
        union = self.left | self.right
        if union != frozenset(range(len(union))):
            raise IndexOutOfRange(
                f"Bipartition must cover qubits 0..{len(union) - 1}, got {sorted(union)}"
            )

    @classmethod
    def from_left(cls, left: Iterable[int], n_qubits: int) -> "Bipartition":
        left_set = frozenset(int(q) for q in left)
        if any(q < 0 or q >= n_qubits for q in left_set):
            raise IndexOutOfRange(
                f"Qubit indices {sorted(left_set)} out of range for {n_qubits} qubits"
            )
        return cls(left=left_set, right=frozenset(range(n_qubits)) - left_set)

    @property
    def n_qubits(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def label(self) -> str:
        """E.g. 'A|BC' or 'AB|CD'."""
        names = "ABCDE"
        left = "".join(names[q] for q in sorted(self.left))
        right = "".join(names[q] for q in sorted(self.right))
        return f"{left}|{right}"

    def separates(self, i: int, j: int) -> bool:
        return (i in self.left) != (j in self.left)


@dataclass(frozen=True)
class MeasurementOutcome:
    """
    One branch of a measurement.

    Attributes:
        probability: Born-rule weight of the branch.
        state:       Normalized post-measurement state, or a |0…0> placeholder
                     when the branch is negligible.
        negligible:  True when probability < ZERO_PROBABILITY; downstream
                     averages skip the branch.
    """

    probability: float
    state: PureState
    negligible: bool = False
