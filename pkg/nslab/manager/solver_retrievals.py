from nslab.enum.pick_list import Boundaries
from nslab.evolution.propagators import SpectralPropagator, CrankNicolsonPropagator, FullCrankNicolson
from nslab.model.grid import GridSpec


class Solvers:

    @staticmethod
    def linear_propagator(grid: GridSpec, kinetic: float, dt: float,
                          hbar: float) -> SpectralPropagator | CrankNicolsonPropagator:
        """ The exact-phase propagator on periodic grids, per-axis Crank–Nicolson on dirichlet grids. """
        if grid.boundary == Boundaries.PERIODIC:
            return Solvers.spectral_propagator(grid, kinetic, dt, hbar)
        return Solvers.crank_nicolson_propagator(grid, kinetic, dt, hbar)

    @staticmethod
    def spectral_propagator(grid: GridSpec, kinetic: float, dt: float, hbar: float) -> SpectralPropagator:
        return SpectralPropagator(grid, kinetic, dt, hbar)

    @staticmethod
    def crank_nicolson_propagator(grid: GridSpec, kinetic: float, dt: float,
                                  hbar: float) -> CrankNicolsonPropagator:
        return CrankNicolsonPropagator(grid, kinetic, dt, hbar)

    @staticmethod
    def full_crank_nicolson(grid: GridSpec, kinetic: float, dt: float, hbar: float) -> FullCrankNicolson:
        return FullCrankNicolson(grid, kinetic, dt, hbar)
