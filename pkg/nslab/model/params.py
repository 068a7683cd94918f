from dataclasses import dataclass

import numpy as np

from nslab.general.exceptions import LabConfigurationError
from nslab.model.grid import GridSpec


@dataclass(frozen=True)
class PhysicalParams:
    """
    Physical constants of a run, in dimensionless units by default (ħ = m = 1, c = 10).

    Attributes:
        hbar (float): Reduced Planck constant.
        m (float): Particle mass.
        c (float): Speed of light. Finite, so that the regularisation scale ħ/2mc is resolvable on a grid.
        e (float): Gauge charge.
        epsilon (float): Nonlinearity strength ε.
        delta (float): Second strength δ of F2.
    """
    hbar: float = 1.0
    m: float = 1.0
    c: float = 10.0
    e: float = 1.0
    epsilon: float = 1e-3
    delta: float = 0.0

    def __post_init__(self):
        for name in ("hbar", "m", "c"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise LabConfigurationError("Physical parameter '" + name + "' must be positive, got "
                                            + str(value) + ".")
        for name in ("e", "epsilon", "delta"):
            if not np.isfinite(getattr(self, name)):
                raise LabConfigurationError("Physical parameter '" + name + "' must be finite.")

    @property
    def compton_half(self) -> float:
        """ The half-Compton length ħ/2mc, the scale at which |χ₀|² competes with |φ|². """
        return self.hbar / (2.0 * self.m * self.c)

    @property
    def kinetic(self) -> float:
        """ ħ²/2m. """
        return self.hbar ** 2 / (2.0 * self.m)

    def validate_against(self, grid: GridSpec):
        """ Run setup check: the half-Compton length must be strictly smaller than every grid length. """
        if not self.compton_half < grid.smallest_length:
            raise LabConfigurationError("The half-Compton length hbar/2mc = " + format(self.compton_half, ".6g")
                                        + " is not smaller than the smallest grid length "
                                        + format(grid.smallest_length, ".6g") + "; raise c or enlarge the grid.")

    def replace(self, **changes) -> 'PhysicalParams':
        values = {name: getattr(self, name) for name in ("hbar", "m", "c", "e", "epsilon", "delta")}
        values.update(changes)
        return PhysicalParams(**values)
