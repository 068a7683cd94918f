import numpy as np
import pytest
from numpy.testing import assert_allclose

from nslab.enum.pick_list import Boundaries, Stencils
from nslab.general.exceptions import LabConfigurationError, DegenerateInputError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField, GaugePotential


def test_spacing_follows_boundary():
    assert GridSpec.uniform(1, 11, 1.0).spacing == pytest.approx((0.1,))
    assert GridSpec.uniform(1, 10, 1.0, Boundaries.PERIODIC).spacing == pytest.approx((0.1,))


def test_from_cells_counts_intervals():
    assert GridSpec.from_cells(1, 256, 1.0).points == (257,)
    assert GridSpec.from_cells(2, 64, 1.0, Boundaries.PERIODIC).points == (64, 64)


def test_with_cells_keeps_box():
    grid = GridSpec.uniform(1, 33, 2.0, Boundaries.DIRICHLET, origin=-1.0)
    refined = grid.with_cells(64)
    assert refined.points == (65,)
    assert refined.lengths == grid.lengths
    assert refined.origin == grid.origin


def test_total_points_and_directions():
    grid = GridSpec((4, 5, 6), (1.0, 1.0, 1.0))
    assert grid.total_points == 120
    assert grid.directions == (0, 1, 2)
    assert GridSpec.uniform(1, 8, 1.0).directions == (2,)


@pytest.mark.parametrize("points, lengths, kwargs", [
    ((), (), {}),
    ((4, 4, 4, 4), (1.0,) * 4, {}),
    ((0,), (1.0,), {}),
    ((8,), (-1.0,), {}),
    ((8,), (1.0,), {"boundary": "neumann"}),
    ((8,), (1.0,), {"stencil": Stencils.SPECTRAL}),
    ((8, 8), (1.0,), {}),
])
def test_invalid_grids_are_rejected(points, lengths, kwargs):
    with pytest.raises(LabConfigurationError):
        GridSpec(points, lengths, **kwargs)


def test_quadrature_weights_sum_to_volume():
    assert np.sum(GridSpec.uniform(2, 17, 2.0).quadrature_weights()) == pytest.approx(4.0)
    assert np.sum(GridSpec.uniform(1, 16, 3.0, Boundaries.PERIODIC).quadrature_weights()) == pytest.approx(3.0)


def test_wall_mask_marks_edges_only():
    mask = GridSpec.uniform(2, 5, 1.0).wall_mask()
    assert np.count_nonzero(mask) == 16
    assert not mask[1:-1, 1:-1].any()
    assert not GridSpec.uniform(2, 5, 1.0, Boundaries.PERIODIC).wall_mask().any()


def test_symmetry_about_origin():
    assert GridSpec.uniform(1, 65, 1.0, origin=-0.5).is_symmetric()
    assert GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC, origin=-0.5).is_symmetric()
    assert not GridSpec.uniform(1, 65, 1.0).is_symmetric()


def test_compton_half_and_validation():
    p = PhysicalParams()
    assert p.compton_half == pytest.approx(0.05)
    p.validate_against(GridSpec.uniform(1, 9, 1.0))
    with pytest.raises(LabConfigurationError):
        PhysicalParams(c=0.4).validate_against(GridSpec.uniform(1, 9, 1.0))


@pytest.mark.parametrize("changes", [{"hbar": 0.0}, {"m": -1.0}, {"c": float("inf")}, {"epsilon": float("nan")}])
def test_invalid_params_are_rejected(changes):
    with pytest.raises(LabConfigurationError):
        PhysicalParams(**changes)


def test_spinor_is_read_only_and_checked():
    grid = GridSpec.uniform(1, 8, 1.0)
    f = SpinorField.from_components(grid, np.ones(8))
    with pytest.raises(ValueError):
        f.values[0, 0] = 2.0
    with pytest.raises(LabConfigurationError):
        SpinorField(grid, np.zeros((2, 7)))
    with pytest.raises(DegenerateInputError):
        SpinorField.from_components(grid, np.full(8, np.nan))


def test_spinor_arithmetic():
    grid = GridSpec.uniform(1, 8, 1.0)
    f = SpinorField.from_spin(grid, np.arange(8.0), (1.0, 1j))
    assert_allclose((f + f).values, (2 * f).values)
    assert_allclose((f - f).values, 0.0)
    assert_allclose(f.density(), 2.0 * np.arange(8.0) ** 2)
    with pytest.raises(LabConfigurationError):
        f + SpinorField.zeros(GridSpec.uniform(1, 8, 2.0))


def test_constant_gauge_potential():
    grid = GridSpec.uniform(1, 8, 1.0)
    gauge = GaugePotential.constant(grid, (0.0, 0.0, 2.5))
    assert_allclose(gauge.along_axis(0), 2.5)
