from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from nslab.enum.pick_list import Boundaries, Stencils
from nslab.general.exceptions import LabConfigurationError

DIRECTIONS_BY_DIM: dict[int, tuple[int, ...]] = {1: (2,), 2: (0, 1), 3: (0, 1, 2)}
""" The physical direction (0=x, 1=y, 2=z) each grid axis runs along. A 1D grid runs along z. """


@dataclass(frozen=True)
class GridSpec:
    """
    A uniform grid in one to three dimensions.

    Attributes:
        points (tuple[int, ...]): Number of samples along each axis.
        lengths (tuple[float, ...]): Extent of each axis in dimensionless units.
        boundary (str): One of Boundaries.ALL.
        origin (tuple[float, ...]): Coordinate of the first sample on each axis.
        stencil (str): One of Stencils.ALL. The spectral stencil needs a periodic grid.
    """
    points: tuple[int, ...]
    lengths: tuple[float, ...]
    boundary: str = Boundaries.DIRICHLET
    origin: tuple[float, ...] = field(default=())
    stencil: str = Stencils.FINITE_DIFFERENCE

    def __post_init__(self):
        points = tuple(int(n) for n in self.points)
        lengths = tuple(float(length) for length in self.lengths)
        origin = tuple(float(o) for o in self.origin) if self.origin else (0.0,) * len(points)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "origin", origin)

        if len(points) not in DIRECTIONS_BY_DIM:
            raise LabConfigurationError("A grid must have 1, 2 or 3 axes, got " + str(len(points)) + ".")
        if len(lengths) != len(points) or len(origin) != len(points):
            raise LabConfigurationError("Grid points, lengths and origin must list one entry per axis.")
        if any(n < 1 for n in points):
            raise LabConfigurationError("Every axis needs a positive number of points.")
        if any(not np.isfinite(length) or length <= 0 for length in lengths):
            raise LabConfigurationError("Every axis needs a positive, finite length.")
        if self.boundary not in Boundaries.ALL:
            raise LabConfigurationError("Unknown boundary '" + str(self.boundary) + "'.")
        if self.stencil not in Stencils.ALL:
            raise LabConfigurationError("Unknown stencil '" + str(self.stencil) + "'.")
        if self.stencil == Stencils.SPECTRAL and self.boundary != Boundaries.PERIODIC:
            raise LabConfigurationError("The spectral stencil is only available on periodic grids.")
        if self.boundary == Boundaries.DIRICHLET and any(n < 2 for n in points):
            raise LabConfigurationError("A dirichlet axis needs at least two points.")

    @classmethod
    def uniform(cls, dim: int, n: int, length: float, boundary: str = Boundaries.DIRICHLET,
                origin: float = 0.0, stencil: str = Stencils.FINITE_DIFFERENCE) -> 'GridSpec':
        """ Builds a grid with the same point count, length and origin on every axis. """
        return cls((n,) * dim, (length,) * dim, boundary, (origin,) * dim, stencil)

    @classmethod
    def from_cells(cls, dim: int, cells: int, length: float, boundary: str = Boundaries.DIRICHLET,
                   origin: float = 0.0, stencil: str = Stencils.FINITE_DIFFERENCE) -> 'GridSpec':
        """
        Builds a grid from an interval count, the unit refinement studies are expressed in. A dirichlet axis
        with `cells` intervals has cells+1 points, a periodic one has `cells` points.
        """
        n = cells + 1 if boundary == Boundaries.DIRICHLET else cells
        return cls.uniform(dim, n, length, boundary, origin, stencil)

    def with_cells(self, cells: int) -> 'GridSpec':
        """ The same box refined or coarsened to `cells` intervals on every axis. """
        n = cells + 1 if self.boundary == Boundaries.DIRICHLET else cells
        return GridSpec((n,) * self.dim, self.lengths, self.boundary, self.origin, self.stencil)

    @property
    def dim(self) -> int:
        return len(self.points)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.points

    @property
    def total_points(self) -> int:
        return int(np.prod(self.points))

    @property
    def directions(self) -> tuple[int, ...]:
        return DIRECTIONS_BY_DIM[self.dim]

    @cached_property
    def spacing(self) -> tuple[float, ...]:
        if self.boundary == Boundaries.DIRICHLET:
            return tuple(length / (n - 1) for n, length in zip(self.points, self.lengths))
        return tuple(length / n for n, length in zip(self.points, self.lengths))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def smallest_length(self) -> float:
        return min(self.lengths)

    def axis_coordinates(self, axis: int) -> np.ndarray:
        return self.origin[axis] + self.spacing[axis] * np.arange(self.points[axis])

    def mesh(self) -> list[np.ndarray]:
        """ Coordinate arrays of the grid's shape, one per axis. """
        return np.meshgrid(*[self.axis_coordinates(axis) for axis in range(self.dim)], indexing="ij")

    def coordinates_of(self, index: tuple[int, ...]) -> tuple[float, ...]:
        return tuple(self.origin[axis] + self.spacing[axis] * index[axis] for axis in range(self.dim))

    def quadrature_weights(self) -> np.ndarray:
        """
        Trapezoid weights on dirichlet grids, rectangle weights on periodic grids. The weights include the cell
        volume, so a quadrature is a plain weighted sum.
        """
        weights = np.full(self.points, self.cell_volume)
        if self.boundary == Boundaries.DIRICHLET:
            for axis in range(self.dim):
                edge = [slice(None)] * self.dim
                edge[axis] = 0
                weights[tuple(edge)] *= 0.5
                edge[axis] = -1
                weights[tuple(edge)] *= 0.5
        return weights

    def wall_mask(self) -> np.ndarray:
        """ True on the pinned edge samples of a dirichlet grid; all False on a periodic grid. """
        mask = np.zeros(self.points, dtype=bool)
        if self.boundary == Boundaries.DIRICHLET:
            for axis in range(self.dim):
                edge = [slice(None)] * self.dim
                edge[axis] = 0
                mask[tuple(edge)] = True
                edge[axis] = -1
                mask[tuple(edge)] = True
        return mask

    def is_symmetric(self) -> bool:
        """ True when the sample set is mirror symmetric about the origin on every axis. """
        for axis in range(self.dim):
            if self.boundary == Boundaries.DIRICHLET:
                end = self.origin[axis] + self.lengths[axis]
                if not np.isclose(self.origin[axis], -end, rtol=0.0, atol=1e-12 * self.lengths[axis]):
                    return False
            elif not np.isclose(self.origin[axis], -self.lengths[axis] / 2.0, rtol=0.0,
                                atol=1e-12 * self.lengths[axis]):
                return False
        return True

    def describe(self) -> str:
        return (str(self.dim) + "D " + self.boundary + " grid " + "x".join(str(n) for n in self.points)
                + ", h=" + ", ".join(format(h, ".6g") for h in self.spacing))
