"""
Numerators of the ratio structures and the per-point result type shared by every nonlinearity.

A nonlinearity is always written as f = base + N/Dⁿ: `base` is the part not divided by the denominator (F3's A₀),
N the numerator and n the denominator power (2 for the composites, 1 otherwise, 0 when the kind's parameters leave
nothing over the denominator).
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from nslab.enum.pick_list import NonlinearityKinds, Measures, RegularizationModes
from nslab.field.operators import differentiate, laplacian_array
from nslab.field.small_component import sigma_dot
from nslab.general.exceptions import LabConfigurationError
from nslab.model.spinor import SpinorField
from nslab.nonlinearity.denominator import DenominatorReport


class FieldDerivatives:
    """ Lazily computed derivatives of one field, so several numerators can share them. """

    def __init__(self, f: SpinorField):
        self.field = f

    @cached_property
    def gradient(self) -> list[np.ndarray]:
        return [differentiate(self.field.values, self.field.grid, axis) for axis in range(self.field.grid.dim)]

    @cached_property
    def laplacian(self) -> np.ndarray:
        return laplacian_array(self.field.values, self.field.grid)

    @cached_property
    def sigma_gradient(self) -> np.ndarray:
        return sigma_dot(self.field, self.gradient)


def x_numerator(d: FieldDerivatives) -> np.ndarray:
    """ φ†σ·∇φ. Complex in general. """
    return np.sum(np.conj(d.field.values) * d.sigma_gradient, axis=0)


def y_numerator(d: FieldDerivatives) -> np.ndarray:
    """ (∇φ†)·(∇φ), a sum of squared moduli. """
    total = np.zeros(d.field.grid.points)
    for derivative in d.gradient:
        total = total + np.sum(derivative.real ** 2 + derivative.imag ** 2, axis=0)
    return total.astype(np.complex128)


def z_numerator(d: FieldDerivatives) -> np.ndarray:
    """ φ†∇²φ. """
    return np.sum(np.conj(d.field.values) * d.laplacian, axis=0)


@dataclass(frozen=True, eq=False)
class NonlinearityField:
    """
    A nonlinearity evaluated on a field. `values` is NaN wherever `flags` is set; singular points are reported,
    never left infinite.

    Attributes:
        kind (str): The NonlinearityKinds name.
        base (np.ndarray): The part of f not divided by the denominator.
        numerator (np.ndarray): N.
        order (int): The denominator power n.
        denominator (DenominatorReport): D and its diagnostics.
        values (np.ndarray): f = base + N/Dⁿ, complex per point.
        flags (np.ndarray): Boolean mask of singular points.
    """
    kind: str
    base: np.ndarray
    numerator: np.ndarray
    order: int
    denominator: DenominatorReport
    values: np.ndarray
    flags: np.ndarray

    @classmethod
    def build(cls, kind: str, base, numerator: np.ndarray, order: int,
              report: DenominatorReport) -> 'NonlinearityField':
        base = np.broadcast_to(np.asarray(base, dtype=np.complex128), report.grid.points)
        if order == 0:
            values = base + numerator
            flags = ~np.isfinite(values)
            return cls(kind, base, numerator, order, report, np.where(flags, np.nan, values), flags)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            values = base + numerator / report.values ** order
        flags = report.flags | ~np.isfinite(values)
        return cls(kind, base, numerator, order, report, np.where(flags, np.nan, values), flags)

    @property
    def flagged_points(self) -> int:
        return int(np.count_nonzero(self.flags))

    def max_imag(self) -> float:
        """ max|Im f| over the unflagged points; 0 when every point is flagged. """
        if np.all(self.flags):
            return 0.0
        return float(np.max(np.abs(self.values.imag[~self.flags])))

    def integrand(self, measure: str = Measures.DENSITY) -> tuple[np.ndarray, np.ndarray]:
        """
        The per-point integrand and its flag mask.

        The density measure gives φ†fφ = |φ|²·base + N·|φ|²/Dⁿ. Without regularisation |φ|²/D is identically one,
        so the integrand is evaluated as |φ|²·base + N/Dⁿ⁻¹ and first-order structures never flag. The bare
        measure is f itself.
        """
        if measure == Measures.BARE:
            return self.values, self.flags
        if measure != Measures.DENSITY:
            raise LabConfigurationError("Unknown measure '" + str(measure) + "'.")

        report = self.denominator
        weighted_base = report.density * self.base
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.order == 0:
                values = weighted_base + self.numerator * report.density
                flags = np.zeros(report.grid.points, dtype=bool)
            elif report.mode.name == RegularizationModes.UNREGULARIZED:
                if self.order == 1:
                    values = weighted_base + self.numerator
                    flags = np.zeros(report.grid.points, dtype=bool)
                else:
                    values = weighted_base + self.numerator / report.values ** (self.order - 1)
                    flags = report.flags.copy()
            else:
                values = weighted_base + self.numerator * report.density / report.values ** self.order
                flags = report.flags.copy()
        flags |= ~np.isfinite(values)
        return np.where(flags, np.nan, values), flags


def structure_field(kind: str, f: SpinorField, report: DenominatorReport,
                    derivatives: FieldDerivatives | None = None) -> NonlinearityField:
    """ X, Y, Z, V = Y·Y or W = Y·Z over the supplied denominator. """
    if report.grid != f.grid:
        raise LabConfigurationError("The denominator was built on a different grid than the field.")
    d = derivatives if derivatives is not None else FieldDerivatives(f)
    if kind == NonlinearityKinds.RATIO_X:
        return NonlinearityField.build(kind, 0.0, x_numerator(d), 1, report)
    if kind == NonlinearityKinds.RATIO_Y:
        return NonlinearityField.build(kind, 0.0, y_numerator(d), 1, report)
    if kind == NonlinearityKinds.RATIO_Z:
        return NonlinearityField.build(kind, 0.0, z_numerator(d), 1, report)
    if kind == NonlinearityKinds.COMPOSITE_V:
        y = y_numerator(d)
        return NonlinearityField.build(kind, 0.0, y * y, 2, report)
    if kind == NonlinearityKinds.COMPOSITE_W:
        return NonlinearityField.build(kind, 0.0, y_numerator(d) * z_numerator(d), 2, report)
    raise LabConfigurationError("'" + str(kind) + "' is not a ratio structure or composite.")


def ratio_structure(kind: str, f: SpinorField, report: DenominatorReport) -> np.ndarray:
    """ X = φ†σ·∇φ/D, Y = (∇φ†)·(∇φ)/D or Z = φ†∇²φ/D per point; NaN at flagged points. """
    if kind not in NonlinearityKinds.RATIOS:
        raise LabConfigurationError("'" + str(kind) + "' is not one of " + ", ".join(NonlinearityKinds.RATIOS) + ".")
    return structure_field(kind, f, report).values


def composite(kind: str, f: SpinorField, report: DenominatorReport) -> np.ndarray:
    """ V = Y² or W = Y·Z per point, with Y and Z over the same denominator; NaN at flagged points. """
    if kind not in NonlinearityKinds.COMPOSITES:
        raise LabConfigurationError("'" + str(kind) + "' is not one of "
                                    + ", ".join(NonlinearityKinds.COMPOSITES) + ".")
    return structure_field(kind, f, report).values
