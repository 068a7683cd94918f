import numpy as np
import pytest
from hypothesis import strategies as st

from nslab.enum.pick_list import Boundaries, Families
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField
from nslab.spectra.states import AnalyticState, make_eigenstate

# Interval count of the fine box grid; odd point count puts the n=2 node at x = 0.5 on a sample.
FINE_CELLS = 2048
NODE_INDEX = FINE_CELLS // 2


@pytest.fixture
def params() -> PhysicalParams:
    return PhysicalParams()


@pytest.fixture
def fine_grid() -> GridSpec:
    return GridSpec.from_cells(1, FINE_CELLS, 1.0)


@pytest.fixture
def box2(fine_grid, params) -> SpinorField:
    """ √2 sin(2πx) spin-up on the fine box grid. """
    return make_eigenstate(AnalyticState(Families.BOX, (2,)), fine_grid, params)


@pytest.fixture
def periodic_grid() -> GridSpec:
    return GridSpec.uniform(1, 128, 1.0, Boundaries.PERIODIC)


def smooth_spinor(grid: GridSpec, coefficients: list[float]) -> SpinorField:
    """
    A node-free periodic spinor from a handful of Fourier coefficients, each expected in [-0.1, 0.1]. The up
    component stays away from zero, so the field has no nodes.
    """
    z = grid.axis_coordinates(0)
    a1, a2, b1, b2, c1, c2 = coefficients
    up = (1.0 + a1 * np.cos(2 * np.pi * z) + a2 * np.sin(4 * np.pi * z)) * np.exp(1j * b1 * np.sin(2 * np.pi * z))
    down = (0.3 + b2 * np.cos(2 * np.pi * z)) * np.exp(2j * np.pi * z) + c1 + 1j * c2 * np.sin(2 * np.pi * z)
    return SpinorField.from_components(grid, up, down)


fourier_coefficients = st.lists(st.floats(min_value=-0.1, max_value=0.1, allow_nan=False), min_size=6, max_size=6)
