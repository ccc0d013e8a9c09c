"""Seeded Haar sampling and seed splitting for reproducible property runs."""

from typing import List, Sequence, Union

import numpy as np
from scipy.stats import unitary_group


def spawn_generators(seed: Union[int, Sequence[int]], count: int) -> List[np.random.Generator]:
    """
    Independent generators derived from one root seed (or a seed plus stream ids).
    Item i always receives the same stream regardless of how items are scheduled.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def haar_amplitudes(rng: np.random.Generator, n_qubits: int) -> np.ndarray:
    """Haar-uniform pure state amplitudes: a normalized complex Gaussian vector."""
    dim = 2**n_qubits
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vec / np.linalg.norm(vec)


def haar_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    return np.asarray(unitary_group.rvs(dim, random_state=rng), dtype=complex)
