import math

import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose

from nslab.enum.pick_list import Boundaries, F2Readings, NonlinearityKinds
from nslab.field.operators import parity_reflect
from nslab.general.exceptions import (DegenerateInputError, LabConfigurationError, MissingInputError,
                                      SingularPointError)
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField
from nslab.nonlinearity.catalogue import (apply_nonlinear_term, eval_f, kinetic_coefficient, nonlinear_potential,
                                          scale_invariance_check)
from nslab.nonlinearity.denominator import denominator
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode, TimeInput
from nslab.nonlinearity.structures import composite, ratio_structure

from conftest import NODE_INDEX, fourier_coefficients, smooth_spinor

UNREGULARIZED = RegularizationMode.unregularized()
SMALL_COMPONENT = RegularizationMode.small_component()
BACKGROUND = (0.0, 0.0, 0.5)
PARAMS = PhysicalParams()

ALL_KINDS = [NonlinearityKind.f1(), NonlinearityKind.f2(), NonlinearityKind.f3(1.0, BACKGROUND),
             NonlinearityKind.f4(1.0, BACKGROUND)] + [NonlinearityKind(name) for name in
                                                     NonlinearityKinds.RATIOS + NonlinearityKinds.COMPOSITES]
REAL_KINDS = ALL_KINDS[:4]


def time_input_for(kind):
    return TimeInput.stationary(1.0) if kind.is_f2 else None


def plane_wave(n: int = 64, waves: int = 3) -> SpinorField:
    grid = GridSpec.uniform(1, n, 1.0, Boundaries.PERIODIC)
    return SpinorField.from_components(grid, np.exp(2j * np.pi * waves * grid.axis_coordinates(0)))


def test_denominator_at_node(box2, params):
    report = denominator(box2, params, SMALL_COMPONENT)
    assert report.values[NODE_INDEX] == pytest.approx(-8 * math.pi ** 2 / 400, rel=1e-4)


@pytest.mark.parametrize("mode", [UNREGULARIZED, SMALL_COMPONENT, RegularizationMode.floored()])
def test_denominator_of_constant_field(params, mode):
    f = SpinorField.from_spin(GridSpec.uniform(1, 16, 1.0), 2.0, (0.6, 0.8))
    assert_allclose(denominator(f, params, mode).values, 4.0, rtol=1e-12)


def test_regularized_denominator_crosses_near_node(box2, params):
    report = denominator(box2, params, SMALL_COMPONENT)
    near_node = [x for x in report.crossings() if abs(x - 0.5) < 0.1]
    assert len(near_node) == 2
    # |φ|² = |χ₀|² where tan(2πΔ) = 2π·ħ/2mc.
    offset = math.atan(2 * math.pi * params.compton_half) / (2 * math.pi)
    assert_allclose(sorted(near_node), [0.5 - offset, 0.5 + offset], atol=1e-4)
    assert all(abs(x - 0.5) < params.compton_half for x in near_node)
    assert report.zero_crossings == 4


def test_regularization_only_lowers_denominator(box2, params):
    plain = denominator(box2, params, UNREGULARIZED).values
    regularized = denominator(box2, params, SMALL_COMPONENT).values
    assert np.all(plain >= regularized)


def test_floor_clamps_with_sign(box2, params):
    tau = 5e-2
    report = denominator(box2, params, RegularizationMode.floored(tau))
    peak = np.max(box2.density())
    assert report.floored_points > 0
    assert np.min(np.abs(report.values)) >= tau * peak * (1 - 1e-12)
    assert report.values[NODE_INDEX] < 0
    assert report.flagged_points == 0


def test_zero_field_is_degenerate(params):
    with pytest.raises(DegenerateInputError):
        denominator(SpinorField.zeros(GridSpec.uniform(1, 8, 1.0)), params, UNREGULARIZED)


def test_floor_tau_must_be_positive():
    with pytest.raises(LabConfigurationError):
        RegularizationMode.floored(0.0)
    with pytest.raises(LabConfigurationError):
        RegularizationMode(tau=-1.0)


def test_unregularized_node_is_flagged(box2, params):
    report = denominator(box2, params, UNREGULARIZED)
    assert report.flags[NODE_INDEX]
    assert report.flags[0] and report.flags[-1]
    assert report.flagged_points == 3
    assert report.flagged_positions()[1] == pytest.approx((0.5,))
    y = ratio_structure(NonlinearityKinds.RATIO_Y, box2, report)
    assert np.isnan(y[NODE_INDEX])
    assert np.all(np.isfinite(y[1:NODE_INDEX]))


def test_regularized_y_at_node(box2, params):
    report = denominator(box2, params, SMALL_COMPONENT)
    y = ratio_structure(NonlinearityKinds.RATIO_Y, box2, report)
    assert y[NODE_INDEX].real == pytest.approx(-(2 * params.m * params.c / params.hbar) ** 2, rel=1e-2)
    v = composite(NonlinearityKinds.COMPOSITE_V, box2, report)
    assert v[NODE_INDEX].real == pytest.approx(160000.0, rel=2e-2)


def test_ratio_x_of_constant_is_zero(params):
    f = SpinorField.from_spin(GridSpec.uniform(1, 16, 1.0), 1.0, (0.6, 0.8j))
    report = denominator(f, params, UNREGULARIZED)
    assert_allclose(ratio_structure(NonlinearityKinds.RATIO_X, f, report), 0.0, atol=1e-14)
    assert_allclose(composite(NonlinearityKinds.COMPOSITE_V, f, report), 0.0, atol=1e-14)


def test_plane_wave_structures_match_stencil(params):
    f = plane_wave()
    h = f.grid.spacing[0]
    k = 2 * np.pi * 3
    report = denominator(f, params, UNREGULARIZED)
    y_expected = (math.sin(k * h) / h) ** 2
    z_expected = -(2 - 2 * math.cos(k * h)) / h ** 2
    assert_allclose(ratio_structure(NonlinearityKinds.RATIO_Y, f, report), y_expected, rtol=1e-10)
    assert_allclose(ratio_structure(NonlinearityKinds.RATIO_Z, f, report), z_expected, rtol=1e-10)
    assert_allclose(composite(NonlinearityKinds.COMPOSITE_W, f, report), y_expected * z_expected, rtol=1e-10)


def test_structures_reject_catalogue_names(box2, params):
    report = denominator(box2, params, UNREGULARIZED)
    with pytest.raises(LabConfigurationError):
        ratio_structure(NonlinearityKinds.F1, box2, report)
    with pytest.raises(LabConfigurationError):
        composite(NonlinearityKinds.RATIO_Y, box2, report)


def test_f1_on_box_state(box2, params):
    result = eval_f(NonlinearityKind.f1(), box2, params, UNREGULARIZED)
    assert result.values[256].real == pytest.approx(4 * math.pi, rel=1e-4)
    assert result.flagged_points == 3


def test_f3_with_real_field_is_its_constant(box2, params):
    result = eval_f(NonlinearityKind.f3(0.7, (0.0, 0.0, 1.0)), box2, params, UNREGULARIZED)
    usable = ~result.flags
    assert_allclose(result.values[usable], 0.7, atol=1e-12)


def test_f3_time_only_never_divides(box2, params):
    result = eval_f(NonlinearityKind.f3(1.0), box2, params, UNREGULARIZED)
    assert result.order == 0
    assert result.flagged_points == 0
    assert_allclose(result.values, 1.0)


def test_f4_spin_part_for_spin_up(box2, params):
    result = eval_f(NonlinearityKind.f4(0.0, (0.0, 0.0, 1.0)), box2, params, UNREGULARIZED)
    usable = ~result.flags
    assert_allclose(result.values[usable], 1.0, rtol=1e-12)


def test_f2_needs_time_input(box2, params):
    with pytest.raises(MissingInputError):
        eval_f(NonlinearityKind.f2(), box2, params, SMALL_COMPONENT)


def test_f2_readings_differ_by_gradient_term(params):
    f = smooth_spinor(GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC), [0.1, 0.0, 0.0, 0.0, 0.0, 0.0])
    p = params.replace(delta=0.0)
    stationary = TimeInput.stationary(2.0)
    density_reading = eval_f(NonlinearityKind.f2(), f, p, UNREGULARIZED, stationary)
    conjugate_reading = eval_f(NonlinearityKind.f2(F2Readings.CONJUGATE_LAPLACIAN), f, p, UNREGULARIZED, stationary)
    assert np.max(np.abs(density_reading.values - conjugate_reading.values)) > 1e-6


def test_background_along_missing_axis_is_rejected(box2, params):
    with pytest.raises(LabConfigurationError):
        eval_f(NonlinearityKind.f4(0.0, (1.0, 0.0, 0.0)), box2, params, UNREGULARIZED)
    with pytest.raises(LabConfigurationError):
        NonlinearityKind("F5")


@pytest.mark.parametrize("kind", REAL_KINDS, ids=lambda kind: kind.name)
def test_zero_coupling_gives_zero_term(box2, params, kind):
    inert = params.replace(epsilon=0.0, delta=0.0)
    term = apply_nonlinear_term(kind, box2, inert, UNREGULARIZED, time_input_for(kind))
    assert_allclose(term.values, 0.0)


def test_f3_time_only_term(box2, params):
    term = apply_nonlinear_term(NonlinearityKind.f3(1.0), box2, params, UNREGULARIZED)
    assert_allclose(term.values, -0.01 * box2.values, atol=1e-15)


def test_f1_term_at_sample(box2, params):
    flags = denominator(box2, params, UNREGULARIZED).flags
    term = apply_nonlinear_term(NonlinearityKind.f1(), box2, params, UNREGULARIZED, exclude=flags)
    assert term.up[256] == pytest.approx(-0.01 * 4 * math.pi * box2.up[256], rel=1e-4)
    assert term.up[NODE_INDEX] == 0


def test_f2_term_carries_kinetic_piece(params):
    assert kinetic_coefficient(NonlinearityKind.f2(), params.replace(delta=0.2)) == pytest.approx(0.5 + 0.5)
    assert kinetic_coefficient(NonlinearityKind.f1(), params.replace(delta=0.2)) == pytest.approx(0.5)


def test_singular_points_raise_with_positions(box2, params):
    with pytest.raises(SingularPointError) as raised:
        nonlinear_potential(NonlinearityKind.f1(), box2, params, UNREGULARIZED, exclude=box2.grid.wall_mask())
    assert raised.value.positions == [pytest.approx((0.5,))]


@pytest.mark.parametrize("mode", [UNREGULARIZED, SMALL_COMPONENT], ids=lambda mode: mode.name)
@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda kind: kind.name)
@settings(max_examples=15, deadline=None)
@given(coefficients=fourier_coefficients)
def test_scale_invariance(kind, mode, coefficients):
    f = smooth_spinor(GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC), coefficients)
    lambdas = [2.0, 10.0, complex(math.cos(math.pi / 3), math.sin(math.pi / 3))]
    assert scale_invariance_check(kind, f, PARAMS, mode, lambdas, time_input_for(kind)) <= 1e-11


def test_unit_scale_is_exact(box2, params):
    assert scale_invariance_check(NonlinearityKind.f1(), box2, params, SMALL_COMPONENT, [1.0]) == 0.0


def test_large_scale_on_box_state(box2, params):
    assert scale_invariance_check(NonlinearityKind.f1(), box2, params, UNREGULARIZED, [1e6]) <= 1e-9


@pytest.mark.parametrize("kind", REAL_KINDS, ids=lambda kind: kind.name)
@settings(max_examples=15, deadline=None)
@given(coefficients=fourier_coefficients)
def test_catalogue_is_real(kind, coefficients):
    f = smooth_spinor(GridSpec.uniform(1, 64, 1.0, Boundaries.PERIODIC), coefficients)
    for mode in (UNREGULARIZED, SMALL_COMPONENT):
        assert eval_f(kind, f, PARAMS, mode, time_input_for(kind)).max_imag() <= 1e-8


def test_f1_is_parity_odd(params):
    grid = GridSpec.uniform(1, 128, 1.0, Boundaries.PERIODIC, origin=-0.5)
    f = smooth_spinor(grid, [0.1, 0.15, 0.2, -0.1, 0.05, 0.1])
    kind = NonlinearityKind.f1()
    reflected = eval_f(kind, parity_reflect(f), params, SMALL_COMPONENT).values
    original = eval_f(kind, f, params, SMALL_COMPONENT).values
    mirrored = parity_reflect(SpinorField.from_components(grid, original)).up
    assert_allclose(reflected, -mirrored, atol=1e-8)
