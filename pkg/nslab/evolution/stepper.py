import logging

import numpy as np

from nslab.enum.pick_list import Schemes
from nslab.evolution.config import EvolutionConfig, FIXED_POINT_TOLERANCE, FIXED_POINT_MAX_ITERATIONS
from nslab.field.operators import laplacian_array
from nslab.general.exceptions import StepFailureError
from nslab.manager.solver_retrievals import Solvers
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField
from nslab.nonlinearity.catalogue import kinetic_coefficient, nonlinear_potential
from nslab.nonlinearity.kinds import TimeInput
from nslab.nonlinearity.structures import NonlinearityField

logger = logging.getLogger(__name__)


def linear_energy(f: SpinorField, kinetic: float) -> float:
    """ ⟨φ|−K∇²|φ⟩/⟨φ|φ⟩. """
    numerator = np.sum(np.conj(f.values) * (-kinetic) * laplacian_array(f.values, f.grid))
    return float(numerator.real / np.sum(f.density()))


class Stepper:
    """
    Advances a field one step at a time under one EvolutionConfig. Keeps the previously accepted field, which F2's
    lagged time derivative (φₙ − φₙ₋₁)/dt needs; the first step uses −(iE₀/ħ)φ with E₀ the linear energy.
    """

    def __init__(self, grid: GridSpec, cfg: EvolutionConfig, p: PhysicalParams, previous: SpinorField | None = None):
        self.grid = grid
        self.cfg = cfg
        self.p = p
        self.kinetic = kinetic_coefficient(cfg.nonlinearity, p)
        self.previous = previous
        self.walls = grid.wall_mask()
        if cfg.scheme == Schemes.STRANG_SPLIT:
            self._linear = Solvers.linear_propagator(grid, self.kinetic, cfg.dt, p.hbar)
        else:
            self._implicit = Solvers.full_crank_nicolson(grid, self.kinetic, cfg.dt, p.hbar)

    def time_input(self, f: SpinorField) -> TimeInput | None:
        if not self.cfg.nonlinearity.is_f2:
            return None
        if self.previous is None:
            return TimeInput.stationary(linear_energy(f, self.kinetic))
        return TimeInput.supplied((f - self.previous) * (1.0 / self.cfg.dt))

    def potential(self, f: SpinorField, time_input: TimeInput | None) -> tuple[np.ndarray, NonlinearityField | None]:
        """ V on the field; singular points off the dirichlet walls raise SingularPointError. """
        return nonlinear_potential(self.cfg.nonlinearity, f, self.p, self.cfg.mode, time_input,
                                   exclude=self.walls)

    def _half_phase(self, values: np.ndarray, potential: np.ndarray) -> np.ndarray:
        return values * np.exp(-0.5j * potential.real * self.cfg.dt / self.p.hbar)[np.newaxis]

    def _strang_split(self, f: SpinorField, time_input: TimeInput | None) -> SpinorField:
        potential, _ = self.potential(f, time_input)
        values = self._linear(self._half_phase(f.values, potential))
        middle = f.with_values(values)
        potential, _ = self.potential(middle, time_input)
        return f.with_values(self._half_phase(values, potential))

    def _crank_nicolson_full(self, f: SpinorField, time_input: TimeInput | None) -> SpinorField:
        iterate = f.values
        residuals = []
        for iteration in range(FIXED_POINT_MAX_ITERATIONS):
            midpoint = f.with_values(0.5 * (f.values + iterate))
            potential, _ = self.potential(midpoint, time_input)
            updated = self._implicit.solve(f.values, potential)
            scale = max(float(np.max(np.abs(updated))), np.finfo(float).tiny)
            residuals.append(float(np.max(np.abs(updated - iterate))) / scale)
            iterate = updated
            logger.debug("Fixed-point iteration %d residual %.3e.", iteration + 1, residuals[-1])
            if residuals[-1] <= FIXED_POINT_TOLERANCE:
                return f.with_values(iterate)
        raise StepFailureError("The implicit step did not converge in " + str(FIXED_POINT_MAX_ITERATIONS)
                               + " iterations; last residual " + format(residuals[-1], ".3e") + ".", residuals)

    def step(self, f: SpinorField) -> SpinorField:
        time_input = self.time_input(f)
        if self.cfg.scheme == Schemes.STRANG_SPLIT:
            advanced = self._strang_split(f, time_input)
        else:
            advanced = self._crank_nicolson_full(f, time_input)
        self.previous = f
        return advanced


def step(f: SpinorField, cfg: EvolutionConfig, p: PhysicalParams, previous: SpinorField | None = None) -> SpinorField:
    """ One step of the configured scheme. `previous` is the field one step back, used only by F2. """
    return Stepper(f.grid, cfg, p, previous).step(f)
