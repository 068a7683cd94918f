import numpy as np

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])
""" The Pauli matrices indexed by physical direction (0=x, 1=y, 2=z). """

PAULI.setflags(write=False)


def apply_sigma(direction: int, values: np.ndarray) -> np.ndarray:
    """ σ_direction acting on the spinor index (axis 0) of a (2, ...) array. """
    return np.einsum("ab,b...->a...", PAULI[direction], values)


def bilinear(left: np.ndarray, direction: int, right: np.ndarray) -> np.ndarray:
    """ Per-point left†·σ_direction·right for two (2, ...) arrays. """
    return np.einsum("a...,ab,b...->...", np.conj(left), PAULI[direction], right)
