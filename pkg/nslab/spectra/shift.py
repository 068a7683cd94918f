import logging
from dataclasses import dataclass

import numpy as np

from nslab.enum.pick_list import Measures
from nslab.field.operators import laplacian_array
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField, GaugePotential
from nslab.nonlinearity.catalogue import eval_f, potential_of
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode, TimeInput
from nslab.nonlinearity.structures import NonlinearityField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftReport:
    """
    First-order energy shift of a nonlinearity on an unperturbed state.

    Attributes:
        kind (str): The nonlinearity.
        mode (str): The regularisation mode.
        I (complex): ∫φ†fφ, the bare shift integral.
        delta_e (complex): The Hamiltonian-consistent shift ⟨φ|V|φ⟩, −εc·I for every kind but F2.
        im_fraction (float): |Im I|/|I|, 0 when I = 0.
        flagged_points (int): Singular samples left out of the quadrature.
    """
    kind: str
    mode: str
    I: complex
    delta_e: complex
    im_fraction: float
    flagged_points: int


def quadrature(values: np.ndarray, flags: np.ndarray, weights: np.ndarray) -> complex:
    """ Σ w·g over the unflagged samples, trapezoid on dirichlet grids and rectangle on periodic ones. """
    return complex(np.sum(np.where(flags, 0.0, values) * weights))


def integrate(result: NonlinearityField, measure: str = Measures.DENSITY) -> tuple[complex, int]:
    values, flags = result.integrand(measure)
    count = int(np.count_nonzero(flags))
    if count:
        logger.warning("%d flagged point(s) of %s left out of the %s quadrature.", count, result.kind, measure)
    return quadrature(values, flags, result.denominator.grid.quadrature_weights()), count


def shift_functional(f: SpinorField, kind: NonlinearityKind, p: PhysicalParams, mode: RegularizationMode,
                     time_input: TimeInput | None = None, gauge: GaugePotential | None = None) -> ShiftReport:
    """
    Computes I = ∫φ†f_NR φ by grid quadrature and δE = ⟨φ|V|φ⟩. For F2 δE also carries the extra kinetic piece
    (cδ/4)⟨φ|−∇²|φ⟩. Flagged singular points are excluded from the sum and counted.

    Args:
        f: The unperturbed state.
        kind: The nonlinearity.
        p: Physical constants.
        mode: Regularisation mode.
        time_input: For F2, normally the stationary energy of the state.
        gauge: Optional gauge potential entering the small component.
    Returns:
        The ShiftReport.
    """
    result = eval_f(kind, f, p, mode, time_input, gauge)
    shift, flagged = integrate(result)
    delta_e = complex(potential_of(kind, np.array(shift), p))
    if kind.is_f2 and p.delta != 0.0:
        kinetic = -np.sum(np.conj(f.values) * laplacian_array(f.values, f.grid), axis=0)
        delta_e += (p.c * p.delta / 4.0) * quadrature(kinetic, np.zeros(f.grid.points, dtype=bool),
                                                        f.grid.quadrature_weights())
    im_fraction = abs(shift.imag) / abs(shift) if shift != 0 else 0.0
    return ShiftReport(kind.name, mode.name, shift, delta_e, im_fraction, flagged)
