import numpy as np

from nslab.field.operators import differentiate
from nslab.field.spin_algebra import apply_sigma
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField, GaugePotential
from nslab.general.exceptions import LabConfigurationError

GAUGE_COUPLING: complex = 1.0
"""
Factor on (e/c)A_k in the covariant derivative ∂_k − GAUGE_COUPLING·(e/c)A_k. The value 1 reproduces the displayed
operator verbatim (no i/ħ of textbook minimal coupling); set 1j/hbar for the textbook convention.
"""


def covariant_gradient(f: SpinorField, p: PhysicalParams, gauge: GaugePotential | None = None) -> list[np.ndarray]:
    """
    Per-axis (∂_k − GAUGE_COUPLING·(e/c)A_k)φ as (2, *points) arrays. Without a gauge potential this is the plain
    gradient.
    """
    if gauge is not None and gauge.grid != f.grid:
        raise LabConfigurationError("The gauge potential lives on a different grid than the field.")
    derivatives = []
    for axis in range(f.grid.dim):
        derivative = differentiate(f.values, f.grid, axis)
        if gauge is not None:
            derivative = derivative - GAUGE_COUPLING * (p.e / p.c) * gauge.along_axis(axis)[np.newaxis] * f.values
        derivatives.append(derivative)
    return derivatives


def sigma_dot(f: SpinorField, derivatives: list[np.ndarray]) -> np.ndarray:
    """ Σ_k σ_dir(k)·∂_kφ for per-axis derivative arrays, directions taken from the grid's axis mapping. """
    return sum(apply_sigma(direction, derivatives[axis]) for axis, direction in enumerate(f.grid.directions))


def small_component(f: SpinorField, p: PhysicalParams, gauge: GaugePotential | None = None) -> SpinorField:
    """
    The leading small component χ₀ = (iħ/2mc)·σ·∇φ, with ∇ replaced by the covariant derivative when a gauge
    potential is supplied.

    Args:
        f: The large component φ.
        p: Physical constants; only ħ, m, c and e enter.
        gauge: Optional external vector potential on the same grid.
    Returns:
        χ₀ on the same grid.
    """
    prefactor = 1j * p.compton_half
    return f.with_values(prefactor * sigma_dot(f, covariant_gradient(f, p, gauge)))
