from dataclasses import dataclass, field

import numpy as np

from nslab.enum.pick_list import NonlinearityKinds, RegularizationModes, F2Readings
from nslab.general.exceptions import LabConfigurationError, MissingInputError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField

DEFAULT_FLOOR_TAU: float = 1e-8


@dataclass(frozen=True)
class NonlinearityKind:
    """
    Selects one of the catalogued nonlinearities or a raw ratio/composite structure, with its parameters.

    Attributes:
        name (str): One of NonlinearityKinds.ALL.
        a0 (float): Time component A₀ of the background field (F3, F4).
        avec (tuple[float, float, float]): Spatial background vector (x, y, z) (F3, F4).
        f2_reading (str): How F2's density Laplacian term is read, one of F2Readings.ALL.
    """
    name: str
    a0: float = 0.0
    avec: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0))
    f2_reading: str = F2Readings.LAPLACIAN_OF_DENSITY

    def __post_init__(self):
        if self.name not in NonlinearityKinds.ALL:
            raise LabConfigurationError("Unknown nonlinearity kind '" + str(self.name) + "'. Expected one of "
                                        + ", ".join(NonlinearityKinds.ALL) + ".")
        if self.f2_reading not in F2Readings.ALL:
            raise LabConfigurationError("Unknown F2 term reading '" + str(self.f2_reading) + "'.")
        avec = tuple(float(a) for a in self.avec)
        if len(avec) != 3:
            raise LabConfigurationError("The background vector needs exactly three components (x, y, z).")
        if not np.all(np.isfinite(avec)) or not np.isfinite(self.a0):
            raise LabConfigurationError("Background field components must be finite.")
        object.__setattr__(self, "avec", avec)
        object.__setattr__(self, "a0", float(self.a0))

    @classmethod
    def f1(cls) -> 'NonlinearityKind':
        return cls(NonlinearityKinds.F1)

    @classmethod
    def f2(cls, reading: str = F2Readings.LAPLACIAN_OF_DENSITY) -> 'NonlinearityKind':
        return cls(NonlinearityKinds.F2, f2_reading=reading)

    @classmethod
    def f3(cls, a0: float = 0.0, avec=(0.0, 0.0, 0.0)) -> 'NonlinearityKind':
        return cls(NonlinearityKinds.F3, a0, avec)

    @classmethod
    def f4(cls, a0: float = 0.0, avec=(0.0, 0.0, 0.0)) -> 'NonlinearityKind':
        return cls(NonlinearityKinds.F4, a0, avec)

    @property
    def is_f2(self) -> bool:
        return self.name == NonlinearityKinds.F2

    @property
    def has_spatial_background(self) -> bool:
        return any(a != 0.0 for a in self.avec)

    @property
    def denominator_order(self) -> int:
        """ The power of the denominator: 2 for the composites, 1 for everything else. """
        return 2 if self.name in NonlinearityKinds.COMPOSITES else 1

    def validate_against(self, grid: GridSpec):
        """ Background components along directions the grid does not have must be zero. """
        for direction in range(3):
            if direction not in grid.directions and self.avec[direction] != 0.0:
                raise LabConfigurationError("Background component " + "xyz"[direction] + " is non-zero but a "
                                            + str(grid.dim) + "D grid has no such axis.")


@dataclass(frozen=True)
class RegularizationMode:
    """
    How the nonlinear denominator is formed. `tau` is only used by the floored mode but must be positive always.
    """
    name: str = RegularizationModes.UNREGULARIZED
    tau: float = DEFAULT_FLOOR_TAU

    def __post_init__(self):
        if self.name not in RegularizationModes.ALL:
            raise LabConfigurationError("Unknown regularization mode '" + str(self.name) + "'.")
        if not np.isfinite(self.tau) or self.tau <= 0:
            raise LabConfigurationError("The floor tau must be positive, got " + str(self.tau) + ".")

    @classmethod
    def unregularized(cls) -> 'RegularizationMode':
        return cls(RegularizationModes.UNREGULARIZED)

    @classmethod
    def small_component(cls) -> 'RegularizationMode':
        return cls(RegularizationModes.SMALL_COMPONENT)

    @classmethod
    def floored(cls, tau: float = DEFAULT_FLOOR_TAU) -> 'RegularizationMode':
        return cls(RegularizationModes.SMALL_COMPONENT_FLOORED, tau)

    @property
    def is_regularized(self) -> bool:
        return self.name != RegularizationModes.UNREGULARIZED


@dataclass(frozen=True, eq=False)
class TimeInput:
    """
    The ∂ₜφ that F2 needs: either a supplied field or a stationary energy E, for which ∂ₜφ = −(iE/ħ)φ.
    """
    dphi_dt: SpinorField | None = None
    energy: float | None = None

    def __post_init__(self):
        if (self.dphi_dt is None) == (self.energy is None):
            raise LabConfigurationError("A time input takes exactly one of a supplied derivative or an energy.")

    @classmethod
    def stationary(cls, energy: float) -> 'TimeInput':
        return cls(energy=float(energy))

    @classmethod
    def supplied(cls, dphi_dt: SpinorField) -> 'TimeInput':
        return cls(dphi_dt=dphi_dt)

    def derivative(self, f: SpinorField, p: PhysicalParams) -> np.ndarray:
        if self.energy is not None:
            return (-1j * self.energy / p.hbar) * f.values
        f.require_same_grid(self.dphi_dt)
        return self.dphi_dt.values

    def scaled(self, factor: complex) -> 'TimeInput':
        """ The time input belonging to factor·φ. """
        if self.energy is not None:
            return self
        return TimeInput.supplied(self.dphi_dt * factor)


def require_time_input(kind: NonlinearityKind, time_input: TimeInput | None):
    if kind.is_f2 and time_input is None:
        raise MissingInputError("F2 needs a time input: a supplied time derivative or a stationary energy.")
