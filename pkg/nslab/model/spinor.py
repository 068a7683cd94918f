from dataclasses import dataclass
from numbers import Number

import numpy as np

from nslab.general.exceptions import LabConfigurationError, DegenerateInputError
from nslab.model.grid import GridSpec


def _frozen(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class SpinorField:
    """
    A two-component complex field sampled on a grid. `values` has shape (2, *grid.points); index 0 is the
    spin-up component, index 1 the spin-down component. The array is read-only: operations return new fields.
    """
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128, copy=True)
        if values.shape != (2,) + self.grid.points:
            raise LabConfigurationError("Spinor values of shape " + str(values.shape) + " do not match the grid "
                                        + str((2,) + self.grid.points) + ".")
        if not np.all(np.isfinite(values)):
            raise DegenerateInputError("Spinor fields must be finite at every point.")
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def from_components(cls, grid: GridSpec, up, down=None) -> 'SpinorField':
        up = np.broadcast_to(np.asarray(up, dtype=np.complex128), grid.points)
        down = np.zeros(grid.points) if down is None else np.broadcast_to(np.asarray(down, dtype=np.complex128),
                                                                          grid.points)
        return cls(grid, np.stack([up, down]))

    @classmethod
    def from_spin(cls, grid: GridSpec, profile, spin) -> 'SpinorField':
        """ A scalar profile times a constant 2-component spin. """
        spin = np.asarray(spin, dtype=np.complex128)
        profile = np.broadcast_to(np.asarray(profile, dtype=np.complex128), grid.points)
        return cls(grid, spin.reshape((2,) + (1,) * grid.dim) * profile[np.newaxis])

    @classmethod
    def zeros(cls, grid: GridSpec) -> 'SpinorField':
        return cls(grid, np.zeros((2,) + grid.points, dtype=np.complex128))

    @property
    def up(self) -> np.ndarray:
        return self.values[0]

    @property
    def down(self) -> np.ndarray:
        return self.values[1]

    def density(self) -> np.ndarray:
        """ |φ|² per point. """
        return np.sum(self.values.real ** 2 + self.values.imag ** 2, axis=0)

    def with_values(self, values: np.ndarray) -> 'SpinorField':
        return SpinorField(self.grid, values)

    def require_same_grid(self, other: 'SpinorField'):
        if self.grid != other.grid:
            raise LabConfigurationError("Fields live on different grids.")

    def __add__(self, other: 'SpinorField') -> 'SpinorField':
        self.require_same_grid(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: 'SpinorField') -> 'SpinorField':
        self.require_same_grid(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar: Number) -> 'SpinorField':
        return self.with_values(self.values * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class GaugePotential:
    """
    An external vector potential A(x). `values` has shape (3, *grid.points) and holds the (x, y, z) components;
    only the components along the grid's directions enter the small component.
    """
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.shape != (3,) + self.grid.points:
            raise LabConfigurationError("Gauge potential values must have shape (3, *grid.points).")
        if not np.all(np.isfinite(values)):
            raise DegenerateInputError("Gauge potential values must be finite.")
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def constant(cls, grid: GridSpec, vector) -> 'GaugePotential':
        vector = np.asarray(vector, dtype=np.float64).reshape((3,) + (1,) * grid.dim)
        return cls(grid, np.broadcast_to(vector, (3,) + grid.points))

    def along_axis(self, axis: int) -> np.ndarray:
        return self.values[self.grid.directions[axis]]
