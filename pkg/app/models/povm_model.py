"""
Teleportation GME: Two-Outcome POVM

Kraus pair in factored form A_t = U_t · D_t · V with a shared right unitary V:
  A_0 = u0 · diag(a, b) · v
  A_1 = u1 · diag(√(1−a²), √(1−b²)) · v
Completeness A_0†A_0 + A_1†A_1 = I holds by construction for any a, b in [0, 1].
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from app.core.exceptions import NotUnitary, ParameterOutOfRange
from app.utils.linalg_utils import IDENTITY_2, is_unitary


@dataclass(frozen=True, eq=False)
class TwoOutcomePovm:
    u0: np.ndarray
    u1: np.ndarray
    v: np.ndarray
    a: float
    b: float

    def __post_init__(self) -> None:
        for name in ("u0", "u1", "v"):
            mat = np.array(getattr(self, name), dtype=complex)
            if mat.shape != (2, 2) or not is_unitary(mat):
                raise NotUnitary(f"POVM factor {name} is not a 2×2 unitary")
            mat.setflags(write=False)
            object.__setattr__(self, name, mat)
        for name in ("a", "b"):
            value = float(getattr(self, name))
            if not 0.0 <= value <= 1.0:
                raise ParameterOutOfRange(
                    f"POVM singular value {name}={value} must lie in [0, 1]"
                )
            object.__setattr__(self, name, value)

    @classmethod
    def from_singular_values(cls, a: float, b: float) -> "TwoOutcomePovm":
        """Diagonal POVM with identity unitaries."""
        return cls(u0=IDENTITY_2, u1=IDENTITY_2, v=IDENTITY_2, a=a, b=b)

    @property
    def kraus(self) -> Tuple[np.ndarray, np.ndarray]:
        d0 = np.diag([self.a, self.b]).astype(complex)
        d1 = np.diag(
            [np.sqrt(1.0 - self.a**2), np.sqrt(1.0 - self.b**2)]
        ).astype(complex)
        return self.u0 @ d0 @ self.v, self.u1 @ d1 @ self.v

    def completeness_residual(self) -> float:
        """‖A_0†A_0 + A_1†A_1 − I‖ (spectral norm)."""
        a0, a1 = self.kraus
        total = a0.conj().T @ a0 + a1.conj().T @ a1
        return float(np.linalg.norm(total - IDENTITY_2, ord=2))
