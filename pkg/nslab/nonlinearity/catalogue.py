import logging

import numpy as np

from nslab.enum.pick_list import NonlinearityKinds, F2Readings
from nslab.field.operators import spin_density, divergence_of_directions, laplacian_array
from nslab.field.spin_algebra import bilinear
from nslab.general.exceptions import SingularPointError
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField, GaugePotential
from nslab.nonlinearity.denominator import denominator, DenominatorReport
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode, TimeInput, require_time_input
from nslab.nonlinearity.structures import (FieldDerivatives, NonlinearityField, structure_field, x_numerator,
                                           y_numerator)

logger = logging.getLogger(__name__)


def _antihermitian(values: np.ndarray) -> np.ndarray:
    """ b − conj(b), i.e. a bracket of the form [φ†Oφ − (Oφ)†φ]. """
    return values - np.conj(values)


def _f1_numerator(f: SpinorField) -> np.ndarray:
    return divergence_of_directions(spin_density(f), f.grid).astype(np.complex128)


def _f2_numerator(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, d: FieldDerivatives,
                  time_input: TimeInput) -> np.ndarray:
    time_bracket = np.sum(np.conj(f.values) * time_input.derivative(f, p), axis=0)
    time_term = (-1j * p.delta * p.m * p.c / p.hbar) * _antihermitian(time_bracket)
    if kind.f2_reading == F2Readings.LAPLACIAN_OF_DENSITY:
        laplacian_term = laplacian_array(f.density(), f.grid)
    else:
        laplacian_term = np.sum(np.conj(d.laplacian) * f.values, axis=0)
    return time_term + p.epsilon * p.c * laplacian_term + p.delta * p.c * y_numerator(d)


def _f3_numerator(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, d: FieldDerivatives) -> np.ndarray:
    numerator = np.zeros(f.grid.points, dtype=np.complex128)
    if not kind.has_spatial_background:
        return numerator
    for axis, direction in enumerate(f.grid.directions):
        current = _antihermitian(np.sum(np.conj(f.values) * d.gradient[axis], axis=0))
        numerator = numerator + kind.avec[direction] * current
    return (-1j * p.compton_half) * numerator


def _f4_numerator(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, d: FieldDerivatives) -> np.ndarray:
    numerator = np.zeros(f.grid.points, dtype=np.complex128)
    for direction in range(3):
        if kind.avec[direction] != 0.0:
            numerator = numerator + kind.avec[direction] * bilinear(f.values, direction, f.values)
    if kind.a0 != 0.0:
        numerator = numerator - (1j * p.compton_half * kind.a0) * _antihermitian(x_numerator(d))
    return numerator


def eval_f(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, mode: RegularizationMode,
           time_input: TimeInput | None = None, gauge: GaugePotential | None = None,
           report: DenominatorReport | None = None) -> NonlinearityField:
    """
    Evaluates the non-relativistic nonlinearity f_NR of a kind on a field.

    F1 = ∇·(φ†σφ)/D.
    F2 = [(−δimc/ħ)(φ†∂ₜφ − c.c.) + εc·∇²(φ†φ) + δc·(∇φ†)·(∇φ)]/D, ε and δ already folded in.
    F3 = A₀ − (iħ/2mc)·A·[φ†∇φ − (∇φ†)φ]/D.
    F4 = φ†(A·σ)φ/D − (iħA₀/2mc)·[φ†σ·∇φ − (∇φ†)·σφ]/D.
    The ratio structures and composites are evaluated as themselves.

    Args:
        kind: Which nonlinearity, with its parameters.
        f: The field φ.
        p: Physical constants.
        mode: Regularisation mode of the denominator.
        time_input: ∂ₜφ for F2, ignored by the other kinds.
        gauge: Optional gauge potential entering the small component.
        report: A denominator already built for this field and mode, to skip rebuilding it.
    Returns:
        The NonlinearityField; its values carry NaN at flagged points.
    """
    require_time_input(kind, time_input)
    kind.validate_against(f.grid)
    if report is None:
        report = denominator(f, p, mode, gauge)
    d = FieldDerivatives(f)

    if kind.name == NonlinearityKinds.F1:
        result = NonlinearityField.build(kind.name, 0.0, _f1_numerator(f), 1, report)
    elif kind.name == NonlinearityKinds.F2:
        result = NonlinearityField.build(kind.name, 0.0, _f2_numerator(kind, f, p, d, time_input), 1, report)
    elif kind.name == NonlinearityKinds.F3:
        order = 1 if kind.has_spatial_background else 0
        result = NonlinearityField.build(kind.name, kind.a0, _f3_numerator(kind, f, p, d), order, report)
    elif kind.name == NonlinearityKinds.F4:
        order = 1 if kind.has_spatial_background or kind.a0 != 0.0 else 0
        result = NonlinearityField.build(kind.name, 0.0, _f4_numerator(kind, f, p, d), order, report)
    else:
        result = structure_field(kind.name, f, report, d)

    if result.flagged_points:
        logger.debug("%s has %d flagged points under %s.", kind.name, result.flagged_points, mode.name)
    return result


def potential_of(kind: NonlinearityKind, values: np.ndarray, p: PhysicalParams) -> np.ndarray:
    """ The multiplicative potential V in iħ∂ₜφ = ... + V·φ: −εc·f_NR, or f_NR itself for F2. """
    if kind.is_f2:
        return values
    return -p.epsilon * p.c * values


def kinetic_coefficient(kind: NonlinearityKind, p: PhysicalParams) -> float:
    """ The coefficient K of −K∇²φ: ħ²/2m, times (1 + mcδ/2ħ²) for F2. """
    if kind.is_f2:
        return p.kinetic + p.c * p.delta / 4.0
    return p.kinetic


def is_inert(kind: NonlinearityKind, p: PhysicalParams) -> bool:
    """ True when the couplings switch the nonlinear term off entirely. """
    if kind.is_f2:
        return p.epsilon == 0.0 and p.delta == 0.0
    return p.epsilon == 0.0


def nonlinear_potential(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, mode: RegularizationMode,
                        time_input: TimeInput | None = None, gauge: GaugePotential | None = None,
                        exclude: np.ndarray | None = None) -> tuple[np.ndarray, NonlinearityField | None]:
    """
    The real-or-complex potential V and the evaluated nonlinearity (None when the couplings are zero).

    Flagged points inside `exclude` (e.g. pinned dirichlet walls) get V = 0. Any other flagged point raises
    SingularPointError carrying the flagged coordinates.
    """
    if is_inert(kind, p):
        require_time_input(kind, time_input)
        return np.zeros(f.grid.points, dtype=np.complex128), None

    result = eval_f(kind, f, p, mode, time_input, gauge)
    excluded = np.zeros(f.grid.points, dtype=bool) if exclude is None else np.asarray(exclude, dtype=bool)
    offending = result.flags & ~excluded
    if np.any(offending):
        positions = [f.grid.coordinates_of(index) for index in zip(*np.nonzero(offending))]
        raise SingularPointError(kind.name + " is singular at " + str(len(positions)) + " point(s) under "
                                 + mode.name + ", first at " + str(positions[0]) + ".", positions)
    potential = potential_of(kind, np.where(result.flags, 0.0, result.values), p)
    return potential, result


def apply_nonlinear_term(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, mode: RegularizationMode,
                         time_input: TimeInput | None = None, gauge: GaugePotential | None = None,
                         exclude: np.ndarray | None = None) -> SpinorField:
    """
    The full nonlinear contribution to iħ∂ₜφ: −εc·f_NR·φ for every kind but F2. For F2 it is f_NR·φ plus the
    extra kinetic piece −(cδ/4)∇²φ from the (1 + mcδ/2ħ²) prefactor.

    Args:
        kind: Which nonlinearity.
        f: The field φ.
        p: Physical constants, ε and c set the coupling.
        mode: Regularisation mode.
        time_input: ∂ₜφ, required by F2.
        gauge: Optional gauge potential for the small component.
        exclude: Mask of points whose flags are accepted; the contribution there is zero.
    Returns:
        The contribution as a field on the same grid.
    """
    potential, _ = nonlinear_potential(kind, f, p, mode, time_input, gauge, exclude)
    values = potential[np.newaxis] * f.values
    if kind.is_f2 and p.delta != 0.0:
        values = values - (p.c * p.delta / 4.0) * laplacian_array(f.values, f.grid)
    return f.with_values(values)


def scale_invariance_check(kind: NonlinearityKind, f: SpinorField, p: PhysicalParams, mode: RegularizationMode,
                           lambdas: list[complex], time_input: TimeInput | None = None) -> float:
    """
    max over λ and points of |f_NR(λφ) − f_NR(φ)|, skipping points flagged in either evaluation.
    """
    reference = eval_f(kind, f, p, mode, time_input)
    deviation = 0.0
    for scale in lambdas:
        scaled_input = time_input.scaled(scale) if time_input is not None else None
        scaled = eval_f(kind, f * scale, p, mode, scaled_input)
        usable = ~(reference.flags | scaled.flags)
        if np.any(usable):
            deviation = max(deviation, float(np.max(np.abs(scaled.values[usable] - reference.values[usable]))))
    return deviation
