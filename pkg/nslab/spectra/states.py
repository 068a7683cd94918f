import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import eval_hermite

from nslab.enum.pick_list import Families, Boundaries, Spins
from nslab.general.exceptions import LabConfigurationError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField

_ROOT_HALF = 1.0 / math.sqrt(2.0)

SPIN_VECTORS: dict[str, tuple[complex, complex]] = {
    Spins.UP: (1.0, 0.0),
    Spins.DOWN: (0.0, 1.0),
    Spins.X_PLUS: (_ROOT_HALF, _ROOT_HALF),
    Spins.X_MINUS: (_ROOT_HALF, -_ROOT_HALF),
    Spins.Y_PLUS: (_ROOT_HALF, 1j * _ROOT_HALF),
    Spins.Y_MINUS: (_ROOT_HALF, -1j * _ROOT_HALF),
}


def spin_vector(spin) -> tuple[complex, complex]:
    """ Resolves a named spin or passes a 2-component spin through. """
    if isinstance(spin, str):
        if spin not in SPIN_VECTORS:
            raise LabConfigurationError("Unknown spin '" + spin + "'. Expected one of " + ", ".join(Spins.ALL) + ".")
        return SPIN_VECTORS[spin]
    up, down = spin
    return complex(up), complex(down)


@dataclass(frozen=True)
class AnalyticState:
    """
    A closed-form eigenstate of the linear equation times a constant spin.

    Attributes:
        family (str): Families.BOX (walls at the grid edges) or Families.HARMONIC (unit frequency, centred at 0).
        quantum_numbers (tuple[int, ...]): One per axis; box numbers start at 1, harmonic numbers at 0.
        spin (tuple[complex, complex]): Normalised spin constant.
    """
    family: str
    quantum_numbers: tuple[int, ...]
    spin: tuple[complex, complex] = field(default=(1.0, 0.0))

    def __post_init__(self):
        if self.family not in Families.ALL:
            raise LabConfigurationError("Unknown state family '" + str(self.family) + "'.")
        numbers = tuple(int(n) for n in self.quantum_numbers)
        lowest = 1 if self.family == Families.BOX else 0
        if not numbers or any(n < lowest for n in numbers):
            raise LabConfigurationError(self.family + " quantum numbers must be integers >= " + str(lowest) + ".")
        spin = spin_vector(self.spin)
        if not math.isclose(abs(spin[0]) ** 2 + abs(spin[1]) ** 2, 1.0, rel_tol=0.0, abs_tol=1e-12):
            raise LabConfigurationError("The spin of an analytic state must be normalised.")
        object.__setattr__(self, "quantum_numbers", numbers)
        object.__setattr__(self, "spin", spin)

    def energy(self, grid: GridSpec, p: PhysicalParams = PhysicalParams()) -> float:
        """ Box: Σ ħ²(nπ/L)²/2m. Harmonic with unit frequency: Σ ħ(n + 1/2). """
        if self.family == Families.BOX:
            return sum(p.kinetic * (n * math.pi / length) ** 2
                       for n, length in zip(self.quantum_numbers, grid.lengths))
        return sum(p.hbar * (n + 0.5) for n in self.quantum_numbers)


def _box_profile(n: int, x: np.ndarray, origin: float, length: float) -> np.ndarray:
    profile = math.sqrt(2.0 / length) * np.sin(n * math.pi * (x - origin) / length)
    profile[0] = 0.0
    profile[-1] = 0.0
    return profile


def _harmonic_profile(n: int, x: np.ndarray, p: PhysicalParams) -> np.ndarray:
    scale = math.sqrt(p.m / p.hbar)
    xi = scale * x
    norm = (scale ** 2 / math.pi) ** 0.25 / math.sqrt(2.0 ** n * math.factorial(n))
    return norm * eval_hermite(n, xi) * np.exp(-0.5 * xi ** 2)


def make_eigenstate(s: AnalyticState, grid: GridSpec, p: PhysicalParams = PhysicalParams()) -> SpinorField:
    """
    Samples the closed-form eigenfunction on the grid. Box states need a dirichlet grid and vanish exactly on
    its walls; harmonic states are centred at the coordinate origin.
    """
    if len(s.quantum_numbers) != grid.dim:
        raise LabConfigurationError("The state has " + str(len(s.quantum_numbers)) + " quantum numbers but the grid "
                                    + "has " + str(grid.dim) + " axes.")
    if s.family == Families.BOX and grid.boundary != Boundaries.DIRICHLET:
        raise LabConfigurationError("Box eigenstates need a dirichlet grid.")

    profile = np.ones(grid.points)
    for axis, n in enumerate(s.quantum_numbers):
        x = grid.axis_coordinates(axis)
        if s.family == Families.BOX:
            factor = _box_profile(n, x, grid.origin[axis], grid.lengths[axis])
        else:
            factor = _harmonic_profile(n, x, p)
        shape = [1] * grid.dim
        shape[axis] = grid.points[axis]
        profile = profile * factor.reshape(shape)
    return SpinorField.from_spin(grid, profile, s.spin)
