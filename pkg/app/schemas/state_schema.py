"""
Teleportation GME: State File Schema

On-disk format consumed by the CLI:

    {"n_qubits": 3, "amplitudes": [[re, im], ...]}

Amplitudes are listed in ascending basis-index order, qubit 0 most significant.
"""

from typing import List, Tuple

import numpy as np
from pydantic import Field, model_validator

from app.models.state_model import PureState
from app.schemas.base_schema import BaseSchema


class StateFile(BaseSchema):
    n_qubits: int = Field(ge=2, le=5)
    amplitudes: List[Tuple[float, float]]

    @model_validator(mode="after")
    def check_length(self) -> "StateFile":
        expected = 2**self.n_qubits
        if len(self.amplitudes) != expected:
            raise ValueError(
                f"{self.n_qubits} qubits need {expected} amplitudes, "
                f"got {len(self.amplitudes)}"
            )
        return self

    def to_state(self) -> PureState:
        """Raw state; callers run state_service.validate() on it."""
        vec = np.array([complex(re, im) for re, im in self.amplitudes], dtype=complex)
        return PureState(n_qubits=self.n_qubits, amplitudes=vec)

    @classmethod
    def from_state(cls, state: PureState) -> "StateFile":
        return cls(
            n_qubits=state.n_qubits,
            amplitudes=[(float(a.real), float(a.imag)) for a in state.amplitudes],
        )
