import logging
from dataclasses import dataclass

import numpy as np

from nslab.enum.pick_list import RegularizationModes
from nslab.field.small_component import small_component
from nslab.general.exceptions import DegenerateInputError, LabConfigurationError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField, GaugePotential
from nslab.nonlinearity.kinds import RegularizationMode

logger = logging.getLogger(__name__)

SINGULAR_THRESHOLD: float = 1e-24
""" Denominator values at or below this fraction of max|φ|² count as singular. """


def _sign_change_points(values: np.ndarray) -> np.ndarray:
    """ Mask of samples whose sign differs from their forward neighbour along any axis. Zero counts as positive. """
    positive = values >= 0
    changes = np.zeros(values.shape, dtype=bool)
    for axis in range(values.ndim):
        head = [slice(None)] * values.ndim
        tail = [slice(None)] * values.ndim
        head[axis] = slice(None, -1)
        tail[axis] = slice(1, None)
        changes[tuple(head)] |= positive[tuple(head)] != positive[tuple(tail)]
    return changes


@dataclass(frozen=True, eq=False)
class DenominatorReport:
    """
    The denominator D of every nonlinearity, evaluated for one field and one regularisation mode.

    Attributes:
        grid (GridSpec): Grid of the field.
        mode (RegularizationMode): The mode D was built with.
        values (np.ndarray): D per point, real.
        density (np.ndarray): |φ|² per point.
        zero_crossings (int): Number of samples at which D changes sign relative to the next sample.
        floored_points (int): Number of samples the floor clamped.
        flags (np.ndarray): Boolean mask of singular samples.
    """
    grid: GridSpec
    mode: RegularizationMode
    values: np.ndarray
    density: np.ndarray
    zero_crossings: int
    floored_points: int
    flags: np.ndarray

    @property
    def flagged_points(self) -> int:
        return int(np.count_nonzero(self.flags))

    def flagged_positions(self) -> list[tuple[float, ...]]:
        return [self.grid.coordinates_of(index) for index in zip(*np.nonzero(self.flags))]

    def crossings(self) -> list[float]:
        """
        Positions of the sign changes of D on a 1D grid, linearly interpolated between the bracketing samples.
        """
        if self.grid.dim != 1:
            raise LabConfigurationError("Crossing positions are only available on 1D grids.")
        x = self.grid.axis_coordinates(0)
        d = self.values
        positions = []
        for i in np.nonzero(_sign_change_points(d))[0]:
            if d[i] == d[i + 1]:
                positions.append(float(x[i]))
                continue
            positions.append(float(x[i] + (x[i + 1] - x[i]) * d[i] / (d[i] - d[i + 1])))
        return positions


def denominator(f: SpinorField, p: PhysicalParams, mode: RegularizationMode,
                gauge: GaugePotential | None = None) -> DenominatorReport:
    """
    Builds the nonlinear denominator.

    unregularized: D = |φ|². small_component: D = |φ|² − |χ₀|². small_component_floored: as small_component, then
    |D| is clamped from below at tau·max|φ|² keeping its sign.
    """
    density = f.density()
    peak = float(np.max(density))
    if peak == 0.0:
        raise DegenerateInputError("The denominator of the zero field is undefined.")

    if mode.name == RegularizationModes.UNREGULARIZED:
        values = density
    else:
        values = density - small_component(f, p, gauge).density()

    zero_crossings = int(np.count_nonzero(_sign_change_points(values)))
    floored_points = 0
    if mode.name == RegularizationModes.SMALL_COMPONENT_FLOORED:
        floor = mode.tau * peak
        clamped = np.abs(values) < floor
        floored_points = int(np.count_nonzero(clamped))
        values = np.where(clamped, np.where(values >= 0, floor, -floor), values)
        if floored_points:
            logger.debug("Floor tau=%g clamped %d of %d points.", mode.tau, floored_points, f.grid.total_points)

    if mode.name == RegularizationModes.UNREGULARIZED:
        flags = values <= SINGULAR_THRESHOLD * peak
    else:
        flags = np.abs(values) <= SINGULAR_THRESHOLD * peak

    return DenominatorReport(f.grid, mode, values, density, zero_crossings, floored_points, flags)
