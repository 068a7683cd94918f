"""
Linear propagators for −K∇²: exact Fourier phases on periodic grids, per-axis Crank–Nicolson on dirichlet grids,
and the sparse full Crank–Nicolson system with a potential on the diagonal.
"""
import numpy as np
import scipy.sparse as sp
from scipy.linalg import solve_banded
from scipy.sparse.linalg import splu

from nslab.enum.pick_list import Boundaries, Stencils
from nslab.general.exceptions import UnsupportedBoundaryError
from nslab.helper.banded_helper import BandedHelper
from nslab.model.grid import GridSpec


def stencil_symbol(grid: GridSpec, axis: int) -> np.ndarray:
    """ Eigenvalues of −∂² on a periodic axis, in FFT order: k² for spectral grids, (2 − 2cos kh)/h² otherwise. """
    h = grid.spacing[axis]
    k = 2.0 * np.pi * np.fft.fftfreq(grid.points[axis], d=h)
    if grid.stencil == Stencils.SPECTRAL:
        return k ** 2
    return (2.0 - 2.0 * np.cos(k * h)) / h ** 2


def max_eigenvalue(grid: GridSpec, kinetic: float) -> float:
    """ Largest eigenvalue of −K∇² on the grid's stencil. """
    if grid.stencil == Stencils.SPECTRAL:
        return kinetic * sum((np.pi / h) ** 2 for h in grid.spacing)
    return kinetic * sum(4.0 / h ** 2 for h in grid.spacing)


class SpectralPropagator:
    """ exp(−iK·λ(k)·dt/ħ) applied in Fourier space. Exact for the stencil, periodic grids only. """

    def __init__(self, grid: GridSpec, kinetic: float, dt: float, hbar: float):
        if grid.boundary != Boundaries.PERIODIC:
            raise UnsupportedBoundaryError("The spectral propagator needs a periodic grid.")
        self.grid = grid
        symbols = np.meshgrid(*[stencil_symbol(grid, axis) for axis in range(grid.dim)], indexing="ij")
        self._phase = np.exp(-1j * kinetic * dt / hbar * sum(symbols))[np.newaxis]
        self._axes = tuple(range(1, grid.dim + 1))

    def __call__(self, values: np.ndarray) -> np.ndarray:
        return np.fft.ifftn(np.fft.fftn(values, axes=self._axes) * self._phase, axes=self._axes)


class CrankNicolsonPropagator:
    """
    Crank–Nicolson for −K∇² applied axis by axis on the interior samples of a dirichlet grid; the walls stay zero.
    Each axis factor is a Cayley transform, so the step is unitary.
    """

    def __init__(self, grid: GridSpec, kinetic: float, dt: float, hbar: float):
        if grid.boundary != Boundaries.DIRICHLET:
            raise UnsupportedBoundaryError("The tridiagonal Crank–Nicolson propagator needs a dirichlet grid.")
        self.grid = grid
        coefficient = 1j * kinetic * dt / (2.0 * hbar)
        self._bands = [BandedHelper.crank_nicolson_bands(n - 2, h, coefficient)
                       for n, h in zip(grid.points, grid.spacing)]

    def __call__(self, values: np.ndarray) -> np.ndarray:
        result = np.array(values, dtype=np.complex128, copy=True)
        interior = (slice(None),) + (slice(1, -1),) * self.grid.dim
        inner = result[interior]
        for axis, (bands, (diagonal, off)) in enumerate(self._bands):
            moved = np.moveaxis(inner, axis + 1, 0)
            shape = moved.shape
            flat = moved.reshape(shape[0], -1)
            rhs = diagonal * flat
            rhs[1:] += off * flat[:-1]
            rhs[:-1] += off * flat[1:]
            solved = solve_banded((1, 1), bands, rhs)
            inner = np.moveaxis(solved.reshape(shape), 0, axis + 1)
        result[interior] = inner
        result[:, self.grid.wall_mask()] = 0.0
        return result


def second_difference_matrix(grid: GridSpec, axis: int) -> sp.csr_matrix:
    """ The three-point ∂² on the unknowns of one axis: interior points (dirichlet) or the full ring (periodic). """
    h2 = grid.spacing[axis] ** 2
    n = grid.points[axis] - 2 if grid.boundary == Boundaries.DIRICHLET else grid.points[axis]
    matrix = sp.diags([np.ones(n - 1), -2.0 * np.ones(n), np.ones(n - 1)], [-1, 0, 1], format="csr")
    if grid.boundary == Boundaries.PERIODIC:
        matrix = matrix + sp.csr_matrix(([1.0, 1.0], ([0, n - 1], [n - 1, 0])), shape=(n, n))
    return (matrix / h2).tocsr()


class FullCrankNicolson:
    """
    The implicit system (I + i·dt/2ħ·H)φ_new = (I − i·dt/2ħ·H)φ with H = −K∇² + diag(V), on the finite-difference
    Laplacian of either boundary. Dirichlet walls are not unknowns and stay zero.
    """

    def __init__(self, grid: GridSpec, kinetic: float, dt: float, hbar: float):
        self.grid = grid
        self.dt = dt
        self.hbar = hbar
        if grid.boundary == Boundaries.DIRICHLET:
            self._active = (slice(1, -1),) * grid.dim
        else:
            self._active = (slice(None),) * grid.dim
        sizes = [grid.points[axis] - 2 if grid.boundary == Boundaries.DIRICHLET else grid.points[axis]
                 for axis in range(grid.dim)]
        self._shape = tuple(sizes)
        laplacian = sp.csr_matrix((int(np.prod(sizes)),) * 2)
        for axis in range(grid.dim):
            factors = [sp.identity(n, format="csr") for n in sizes]
            factors[axis] = second_difference_matrix(grid, axis)
            term = factors[0]
            for factor in factors[1:]:
                term = sp.kron(term, factor, format="csr")
            laplacian = laplacian + term
        self._hamiltonian = (-kinetic * laplacian).tocsc()
        self._identity = sp.identity(laplacian.shape[0], format="csc")

    def solve(self, values: np.ndarray, potential: np.ndarray) -> np.ndarray:
        """ One implicit step of `values` with the potential held fixed at `potential`. """
        operator = self._hamiltonian + sp.diags(potential[self._active].ravel(), format="csc")
        a = 0.5j * self.dt / self.hbar
        factor = splu((self._identity + a * operator).tocsc())
        explicit = (self._identity - a * operator).tocsr()

        result = np.zeros_like(values, dtype=np.complex128)
        for component in range(values.shape[0]):
            rhs = explicit @ values[component][self._active].ravel()
            result[component][self._active] = factor.solve(rhs).reshape(self._shape)
        return result
