import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from numpy.testing import assert_allclose

from nslab.enum.pick_list import Boundaries, Families, Stencils
from nslab.field.operators import (gradient, laplacian, spin_density, inner, norm2, parity_reflect, differentiate,
                                   second_derivative)
from nslab.field.small_component import small_component
from nslab.field.spin_algebra import PAULI, apply_sigma, bilinear
from nslab.general.exceptions import LabConfigurationError, UnsupportedBoundaryError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField, GaugePotential
from nslab.spectra.states import AnalyticState, make_eigenstate

from conftest import NODE_INDEX

spinor_parts = arrays(np.float64, (2, 2, 16), elements=st.floats(min_value=-10, max_value=10, allow_nan=False))


def test_pauli_products():
    identity = np.eye(2)
    for i in range(3):
        for j in range(3):
            expected = identity * (i == j)
            for k in range(3):
                sign = np.linalg.det(np.eye(3)[[i, j, k]]) if len({i, j, k}) == 3 else 0.0
                expected = expected + 1j * sign * PAULI[k]
            assert_allclose(PAULI[i] @ PAULI[j], expected, atol=1e-15)


def test_bilinear_matches_matrix_product():
    rng = np.random.default_rng(3)
    left = rng.standard_normal((2, 5)) + 1j * rng.standard_normal((2, 5))
    right = rng.standard_normal((2, 5)) + 1j * rng.standard_normal((2, 5))
    for direction in range(3):
        expected = np.sum(np.conj(left) * apply_sigma(direction, right), axis=0)
        assert_allclose(bilinear(left, direction, right), expected, rtol=1e-14)


def test_gradient_of_constant_is_zero():
    f = SpinorField.from_components(GridSpec.uniform(2, 9, 1.0), 1.0)
    for derivative in gradient(f):
        assert_allclose(derivative.values, 0.0, atol=1e-12)


def test_gradient_of_sine(periodic_grid):
    z = periodic_grid.axis_coordinates(0)
    f = SpinorField.from_components(periodic_grid, np.sin(2 * np.pi * z))
    (derivative,) = gradient(f)
    assert_allclose(derivative.up.real, 2 * np.pi * np.cos(2 * np.pi * z), atol=5e-3)


def test_gradient_error_falls_by_four():
    k = 2 * np.pi * 4
    errors = []
    for n in (256, 512, 1024):
        grid = GridSpec.uniform(1, n, 1.0, Boundaries.PERIODIC)
        z = grid.axis_coordinates(0)
        f = SpinorField.from_components(grid, np.exp(1j * k * z))
        (derivative,) = gradient(f)
        errors.append(np.max(np.abs(derivative.up - 1j * k * f.up)))
    for coarse, fine in zip(errors[:-1], errors[1:]):
        assert coarse / fine == pytest.approx(4.0, rel=0.1)


def test_dirichlet_edges_are_second_order():
    errors = []
    for cells in (64, 128):
        grid = GridSpec.from_cells(1, cells, 1.0)
        z = grid.axis_coordinates(0)
        values = np.exp(z)
        errors.append(abs(differentiate(values, grid, 0)[0] - 1.0))
    assert errors[0] / errors[1] == pytest.approx(4.0, rel=0.15)


def test_laplacian_of_plane_wave_is_stencil_eigenvalue():
    grid = GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC)
    k = 2 * np.pi * 4
    h = grid.spacing[0]
    f = SpinorField.from_components(grid, np.exp(1j * k * grid.axis_coordinates(0)))
    eigenvalue = -(2 - 2 * math.cos(k * h)) / h ** 2
    assert_allclose(laplacian(f).up, eigenvalue * f.up, rtol=1e-10, atol=1e-9)


def test_spectral_laplacian_is_exact():
    grid = GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC, stencil=Stencils.SPECTRAL)
    k = 2 * np.pi * 4
    f = SpinorField.from_components(grid, np.exp(1j * k * grid.axis_coordinates(0)))
    assert_allclose(laplacian(f).up, -k ** 2 * f.up, rtol=1e-10, atol=1e-9)


def test_laplacian_of_sine_on_dirichlet_grid():
    grid = GridSpec.from_cells(1, 1024, 1.0)
    z = grid.axis_coordinates(0)
    f = SpinorField.from_components(grid, np.sin(2 * np.pi * z))
    assert_allclose(laplacian(f).up.real, -(2 * np.pi) ** 2 * np.sin(2 * np.pi * z), atol=1e-2)


def test_derivatives_need_three_points():
    grid = GridSpec.uniform(1, 2, 1.0)
    with pytest.raises(LabConfigurationError):
        second_derivative(np.zeros(2), grid, 0)
    with pytest.raises(LabConfigurationError):
        differentiate(np.zeros(5), GridSpec.uniform(1, 4, 1.0), 0)


def test_operators_are_linear():
    rng = np.random.default_rng(7)
    grid = GridSpec.uniform(2, 9, 1.0)
    f = SpinorField(grid, rng.standard_normal((2, 9, 9)) + 1j * rng.standard_normal((2, 9, 9)))
    g = SpinorField(grid, rng.standard_normal((2, 9, 9)) + 1j * rng.standard_normal((2, 9, 9)))
    a, b = 1.5 - 0.5j, -2.0
    combined = f * a + g * b
    assert_allclose(laplacian(combined).values, a * laplacian(f).values + b * laplacian(g).values, rtol=1e-12,
                    atol=1e-9)
    for left, right_f, right_g in zip(gradient(combined), gradient(f), gradient(g)):
        assert_allclose(left.values, a * right_f.values + b * right_g.values, rtol=1e-12, atol=1e-10)
    p = PhysicalParams()
    assert_allclose(small_component(combined, p).values,
                    a * small_component(f, p).values + b * small_component(g, p).values, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("spin, expected", [((1.0, 0.0), (0.0, 0.0, 1.0)),
                                            ((1 / math.sqrt(2), 1 / math.sqrt(2)), (1.0, 0.0, 0.0)),
                                            ((1 / math.sqrt(2), 1j / math.sqrt(2)), (0.0, 1.0, 0.0))])
def test_spin_density_of_pure_spins(spin, expected):
    f = SpinorField.from_spin(GridSpec.uniform(1, 4, 1.0), 1.0, spin)
    assert_allclose(spin_density(f)[:, 0], expected, atol=1e-15)


@given(spinor_parts)
def test_spin_density_squares_to_density(parts):
    f = SpinorField(GridSpec.uniform(1, 16, 1.0), parts[0] + 1j * parts[1])
    s = spin_density(f)
    scale = max(float(np.max(f.density())) ** 2, 1e-300)
    assert_allclose(np.sum(s * s, axis=0), f.density() ** 2, rtol=1e-12, atol=1e-12 * scale)


def test_box_states_are_orthonormal(params):
    grid = GridSpec.from_cells(1, 1024, 1.0)
    first = make_eigenstate(AnalyticState(Families.BOX, (1,)), grid, params)
    second = make_eigenstate(AnalyticState(Families.BOX, (2,)), grid, params)
    assert inner(second, second).real == pytest.approx(1.0, abs=1e-6)
    assert norm2(second) == pytest.approx(1.0, abs=1e-6)
    assert abs(inner(first, second)) < 1e-6


@settings(max_examples=25)
@given(spinor_parts, spinor_parts)
def test_inner_is_conjugate_symmetric(left, right):
    grid = GridSpec.uniform(1, 16, 1.0)
    f = SpinorField(grid, left[0] + 1j * left[1])
    g = SpinorField(grid, right[0] + 1j * right[1])
    assert inner(f, g) == pytest.approx(inner(g, f).conjugate(), rel=1e-12, abs=1e-9)
    assert inner(f, f).real >= 0.0


def test_inner_rejects_grid_mismatch():
    with pytest.raises(LabConfigurationError):
        inner(SpinorField.zeros(GridSpec.uniform(1, 8, 1.0)), SpinorField.zeros(GridSpec.uniform(1, 9, 1.0)))


def test_small_component_at_node(box2, params):
    chi = small_component(box2, params)
    assert chi.up[NODE_INDEX] == pytest.approx(-1j * 2 * math.sqrt(2) * math.pi / 20, rel=1e-5)
    assert chi.down[NODE_INDEX] == 0


def test_small_component_of_constant_is_zero(params):
    f = SpinorField.from_spin(GridSpec.uniform(1, 16, 1.0), 1.0, (0.6, 0.8j))
    assert_allclose(small_component(f, params).values, 0.0, atol=1e-14)


def test_doubling_c_halves_small_component(box2, params):
    coarse = np.max(np.abs(small_component(box2, params).values))
    fine = np.max(np.abs(small_component(box2, params.replace(c=20.0)).values))
    assert fine == pytest.approx(0.5 * coarse, rel=1e-14)


def test_gauge_leaves_node_value_unchanged(box2, params):
    a = 3.0
    gauge = GaugePotential.constant(box2.grid, (0.0, 0.0, a))
    plain = small_component(box2, params).density()
    gauged = small_component(box2, params, gauge).density()
    assert gauged[NODE_INDEX] == pytest.approx(plain[NODE_INDEX], rel=1e-10)

    g = box2.up.real
    slope = differentiate(g, box2.grid, 0).real
    coupling = params.e / params.c
    expected = params.compton_half ** 2 * (slope ** 2 - 2 * coupling * a * g * slope + coupling ** 2 * a ** 2 * g ** 2)
    assert_allclose(gauged, expected, rtol=1e-12, atol=1e-14)


def test_gauge_on_other_grid_is_rejected(box2, params):
    gauge = GaugePotential.constant(GridSpec.uniform(1, 9, 1.0), (0.0, 0.0, 1.0))
    with pytest.raises(LabConfigurationError):
        small_component(box2, params, gauge)


def test_parity_reflect_dirichlet():
    grid = GridSpec.uniform(1, 65, 1.0, origin=-0.5)
    z = grid.axis_coordinates(0)
    f = SpinorField.from_components(grid, np.exp(z), np.exp(2j * z))
    reflected = parity_reflect(f)
    assert_allclose(reflected.up, np.exp(-z), rtol=1e-12)
    assert_allclose(reflected.down, np.exp(-2j * z), rtol=1e-12)


def test_parity_reflect_periodic():
    grid = GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC, origin=-0.5)
    z = grid.axis_coordinates(0)
    f = SpinorField.from_components(grid, np.cos(2 * np.pi * z) + np.sin(2 * np.pi * z))
    assert_allclose(parity_reflect(f).up.real, np.cos(2 * np.pi * z) - np.sin(2 * np.pi * z), atol=1e-12)


def test_parity_needs_symmetric_grid():
    with pytest.raises(UnsupportedBoundaryError):
        parity_reflect(SpinorField.zeros(GridSpec.uniform(1, 16, 1.0)))
