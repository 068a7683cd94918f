"""
Derivative operators, inner products and spin densities on uniform grids.

Array-level helpers (`differentiate`, `second_derivative`) act on arrays whose trailing axes are the grid axes, with
any number of leading axes, so the nonlinearity code can differentiate densities and bilinears as well as spinors.
"""
import numpy as np

from nslab.enum.pick_list import Boundaries, Stencils
from nslab.field.spin_algebra import PAULI
from nslab.general.exceptions import LabConfigurationError, UnsupportedBoundaryError
from nslab.model.grid import GridSpec
from nslab.model.spinor import SpinorField


def _array_axis(values: np.ndarray, grid: GridSpec, axis: int) -> int:
    if values.ndim < grid.dim or values.shape[values.ndim - grid.dim:] != grid.points:
        raise LabConfigurationError("Array of shape " + str(values.shape) + " does not end in the grid shape "
                                    + str(grid.points) + ".")
    if not 0 <= axis < grid.dim:
        raise LabConfigurationError("Axis " + str(axis) + " does not exist on a " + str(grid.dim) + "D grid.")
    if grid.points[axis] < 3:
        raise LabConfigurationError("Derivatives need at least 3 points per axis.")
    return values.ndim - grid.dim + axis


def _wavenumbers(grid: GridSpec, axis: int, ndim: int, array_axis: int) -> np.ndarray:
    n = grid.points[axis]
    k = 2.0 * np.pi * np.fft.fftfreq(n, d=grid.spacing[axis])
    shape = [1] * ndim
    shape[array_axis] = n
    return k.reshape(shape)


def differentiate(values: np.ndarray, grid: GridSpec, axis: int) -> np.ndarray:
    """
    First derivative along a grid axis. Central second-order differences in the interior; dirichlet axes use
    second-order one-sided differences at the edges, periodic axes wrap. Spectral grids differentiate in Fourier
    space with the Nyquist mode dropped.
    """
    ax = _array_axis(values, grid, axis)
    h = grid.spacing[axis]
    if grid.stencil == Stencils.SPECTRAL:
        k = _wavenumbers(grid, axis, values.ndim, ax)
        if grid.points[axis] % 2 == 0:
            k = np.where(np.abs(k) == np.max(np.abs(k)), 0.0, k)
        return np.fft.ifft(1j * k * np.fft.fft(values, axis=ax), axis=ax)
    if grid.boundary == Boundaries.PERIODIC:
        return (np.roll(values, -1, axis=ax) - np.roll(values, 1, axis=ax)) / (2.0 * h)
    return np.gradient(values, h, axis=ax, edge_order=2)


def second_derivative(values: np.ndarray, grid: GridSpec, axis: int) -> np.ndarray:
    """
    Second derivative along a grid axis with the standard three-point stencil. Dirichlet edges use the
    second-order one-sided four-point stencil (three-point when the axis has only three samples).
    """
    ax = _array_axis(values, grid, axis)
    h2 = grid.spacing[axis] ** 2
    if grid.stencil == Stencils.SPECTRAL:
        k = _wavenumbers(grid, axis, values.ndim, ax)
        return np.fft.ifft(-(k ** 2) * np.fft.fft(values, axis=ax), axis=ax)
    if grid.boundary == Boundaries.PERIODIC:
        return (np.roll(values, -1, axis=ax) - 2.0 * values + np.roll(values, 1, axis=ax)) / h2

    moved = np.moveaxis(values, ax, 0)
    result = np.empty_like(moved, dtype=np.result_type(moved, np.float64))
    result[1:-1] = (moved[2:] - 2.0 * moved[1:-1] + moved[:-2]) / h2
    if moved.shape[0] >= 4:
        result[0] = (2.0 * moved[0] - 5.0 * moved[1] + 4.0 * moved[2] - moved[3]) / h2
        result[-1] = (2.0 * moved[-1] - 5.0 * moved[-2] + 4.0 * moved[-3] - moved[-4]) / h2
    else:
        result[0] = result[1]
        result[-1] = result[1]
    return np.moveaxis(result, 0, ax)


def laplacian_array(values: np.ndarray, grid: GridSpec) -> np.ndarray:
    return sum(second_derivative(values, grid, axis) for axis in range(grid.dim))


def gradient(f: SpinorField) -> list[SpinorField]:
    """ ∂_k φ for every grid axis k, in axis order. """
    return [f.with_values(differentiate(f.values, f.grid, axis)) for axis in range(f.grid.dim)]


def laplacian(f: SpinorField) -> SpinorField:
    """ ∇²φ, the per-axis second derivatives summed. """
    return f.with_values(laplacian_array(f.values, f.grid))


def spin_density(f: SpinorField) -> np.ndarray:
    """ S = φ†σφ, shape (3, *grid.points), indexed by physical direction. Real at every point. """
    return np.einsum("a...,iab,b...->i...", np.conj(f.values), PAULI, f.values).real


def divergence_of_directions(vector: np.ndarray, grid: GridSpec) -> np.ndarray:
    """ ∇·V for a (3, *points) field indexed by physical direction; only the grid's own directions contribute. """
    return sum(differentiate(vector[direction], grid, axis) for axis, direction in enumerate(grid.directions))


def inner(f: SpinorField, g: SpinorField) -> complex:
    """ Σ f†g·h^dim over the grid. """
    f.require_same_grid(g)
    return complex(np.sum(np.conj(f.values) * g.values) * f.grid.cell_volume)


def norm2(f: SpinorField) -> float:
    return float(np.sum(f.density()) * f.grid.cell_volume)


def parity_reflect(f: SpinorField) -> SpinorField:
    """
    φ_P(x) = φ(−x). The grid must be mirror symmetric about the origin; spin components are left untouched.
    """
    if not f.grid.is_symmetric():
        raise UnsupportedBoundaryError("Parity reflection needs a grid symmetric about the origin.")
    spatial_axes = tuple(range(1, f.grid.dim + 1))
    reflected = np.flip(f.values, axis=spatial_axes)
    if f.grid.boundary == Boundaries.PERIODIC:
        reflected = np.roll(reflected, 1, axis=spatial_axes)
    return f.with_values(reflected)
