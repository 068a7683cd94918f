import logging
import math

import numpy as np

from nslab.enum.pick_list import Observers
from nslab.evolution.config import EvolutionConfig, ObservationLog, ACCURACY_BOUND
from nslab.evolution.stepper import Stepper
from nslab.field.operators import norm2, laplacian_array
from nslab.general.exceptions import LabConfigurationError, StepFailureError, SingularPointError
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField
from nslab.spectra.nodes import node_scan

logger = logging.getLogger(__name__)


def energy_expectation(f: SpinorField, stepper: Stepper, potential: np.ndarray) -> float:
    """ Re⟨φ|−K∇² + V|φ⟩/⟨φ|φ⟩. """
    hamiltonian = -stepper.kinetic * laplacian_array(f.values, f.grid) + potential[np.newaxis] * f.values
    return float(np.sum(np.conj(f.values) * hamiltonian).real / np.sum(f.density()))


def observe(log: ObservationLog, time: float, f: SpinorField, stepper: Stepper):
    observers = stepper.cfg.observers
    energy = math.nan
    max_im_f = math.nan
    if Observers.ENERGY in observers or Observers.MAX_IM_F in observers:
        potential, result = stepper.potential(f, stepper.time_input(f))
        if Observers.ENERGY in observers:
            energy = energy_expectation(f, stepper, potential)
        if Observers.MAX_IM_F in observers:
            max_im_f = result.max_imag() if result is not None else 0.0
    log.append(time,
               norm2=norm2(f) if Observers.NORM in observers else math.nan,
               energy=energy,
               max_im_f=max_im_f,
               nodes=node_scan(f) if Observers.NODE_POSITIONS in observers else None)


def evolve(f: SpinorField, cfg: EvolutionConfig, p: PhysicalParams) -> tuple[SpinorField, ObservationLog]:
    """
    Steps the field `cfg.steps` times, sampling the observers every `cfg.observer_stride` steps and at t = 0.

    Args:
        f: Initial field, normalised or not.
        cfg: Evolution settings.
        p: Physical constants.
    Returns:
        The final field and its observation log.
    Raises:
        StepFailureError, SingularPointError: With the partial log attached as `.log`.
    """
    if Observers.NODE_POSITIONS in cfg.observers and f.grid.dim != 1:
        raise LabConfigurationError("The node_positions observer is only available on 1D grids.")
    cfg.nonlinearity.validate_against(f.grid)

    stepper = Stepper(f.grid, cfg, p)
    ratio = cfg.accuracy_ratio(f.grid, stepper.kinetic, p.hbar)
    if ratio > ACCURACY_BOUND:
        logger.warning("dt*lambda_max/hbar = %.3g exceeds %.3g; the fastest grid modes are not time-resolved.",
                       ratio, ACCURACY_BOUND)

    log = ObservationLog()
    current = f
    try:
        observe(log, 0.0, current, stepper)
        for n in range(1, cfg.steps + 1):
            current = stepper.step(current)
            if n % cfg.observer_stride == 0:
                observe(log, n * cfg.dt, current, stepper)
    except (StepFailureError, SingularPointError) as e:
        e.log = log
        raise

    logger.debug("Evolved %d steps of %s under %s.", cfg.steps, cfg.nonlinearity.name, cfg.scheme)
    return current, log
