import logging
from dataclasses import dataclass

import numpy as np

from nslab.enum.pick_list import Classifications, Measures
from nslab.general.exceptions import LabConfigurationError
from nslab.model.grid import GridSpec
from nslab.model.params import PhysicalParams
from nslab.nonlinearity.catalogue import eval_f
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode, TimeInput
from nslab.spectra.shift import integrate
from nslab.spectra.states import AnalyticState, make_eigenstate
from nslab.spectra.stats import LinRegressData, fit_log_log

logger = logging.getLogger(__name__)

FLAT_SLOPE: float = 0.1
DIVERGENT_SLOPE: float = 0.5
RICHARDSON_AGREEMENT: float = 5e-2
MIN_LEVELS: int = 3


@dataclass(frozen=True)
class ConvergenceReport:
    """
    Grid-refinement behaviour of a shift integral.

    Attributes:
        levels (list[int]): Interval counts, coarsest first.
        values (list[complex]): The integral at each level.
        flagged_points (list[int]): Samples excluded at each level.
        classification (str): One of the Classifications constants.
        exponent (float): Fitted slope of log|I| against log N.
        limit (complex | None): Richardson limit when convergent.
        richardson_error (float | None): Difference of the last two extrapolants when convergent.
        fit (LinRegressData): The log-log fit.
    """
    levels: list[int]
    values: list[complex]
    flagged_points: list[int]
    classification: str
    exponent: float
    limit: complex | None
    richardson_error: float | None
    fit: LinRegressData

    def describe(self) -> str:
        if self.classification == Classifications.CONVERGENT:
            return (self.classification + ", limit " + format(self.limit.real, ".10g") + " +/- "
                    + format(self.richardson_error, ".3g"))
        if self.classification == Classifications.DIVERGENT:
            return (self.classification + ", exponent " + format(self.exponent, ".4g") + " +/- "
                    + format(self.fit.get_stderr(), ".2g"))
        return (self.classification + ", fitted slope " + format(self.exponent, ".4g") + " +/- "
                + format(self.fit.get_stderr(), ".2g"))


def richardson_extrapolants(levels: list[int], values: list[complex]) -> list[complex]:
    """ R_k = I_k + (I_k − I_{k−1})/(r² − 1) with r = N_k/N_{k−1}, the O(h²) extrapolant of each refinement. """
    extrapolants = []
    for k in range(1, len(levels)):
        ratio = levels[k] / levels[k - 1]
        extrapolants.append(values[k] + (values[k] - values[k - 1]) / (ratio ** 2 - 1.0))
    return extrapolants


def classify(levels: list[int], values: list[complex]) -> tuple[str, float, complex | None, float | None,
                                                                   LinRegressData]:
    fit = fit_log_log(levels, values)
    slope = fit.get_slope()
    if abs(slope) <= FLAT_SLOPE:
        extrapolants = richardson_extrapolants(levels, values)
        agreements = [abs(extrapolants[k] - extrapolants[k - 1]) <= RICHARDSON_AGREEMENT * abs(extrapolants[k])
                      for k in range(1, len(extrapolants))]
        if all(agreements):
            return (Classifications.CONVERGENT, slope, extrapolants[-1],
                    float(abs(extrapolants[-1] - extrapolants[-2])), fit)
        return Classifications.INCONCLUSIVE, slope, None, None, fit
    if slope >= DIVERGENT_SLOPE:
        return Classifications.DIVERGENT, slope, None, None, fit
    return Classifications.INCONCLUSIVE, slope, None, None, fit


def convergence_study(state: AnalyticState, kind: NonlinearityKind, p: PhysicalParams, mode: RegularizationMode,
                      levels: list[int], base: GridSpec, measure: str = Measures.DENSITY) -> ConvergenceReport:
    """
    Evaluates the shift integral of a state on successively refined grids and classifies its behaviour: a flat
    log-log fit with consistent Richardson extrapolants is convergent, a slope of at least 0.5 divergent, anything
    else inconclusive.

    Args:
        state: The analytic state sampled at every level.
        kind: The nonlinearity.
        p: Physical constants.
        mode: Regularisation mode.
        levels: Interval counts, strictly increasing, at least three.
        base: Grid whose box, boundary and stencil every level reuses.
        measure: Measures.DENSITY for ∫φ†fφ, Measures.BARE for ∫f.
    Returns:
        The ConvergenceReport.
    """
    levels = [int(level) for level in levels]
    if len(levels) < MIN_LEVELS:
        raise LabConfigurationError("A convergence study needs at least " + str(MIN_LEVELS) + " levels.")
    if any(finer <= coarser for coarser, finer in zip(levels[:-1], levels[1:])):
        raise LabConfigurationError("Study levels must strictly increase.")

    values = []
    flagged = []
    for level in levels:
        grid = base.with_cells(level)
        p.validate_against(grid)
        f = make_eigenstate(state, grid, p)
        time_input = TimeInput.stationary(state.energy(grid, p)) if kind.is_f2 else None
        shift, count = integrate(eval_f(kind, f, p, mode, time_input), measure)
        values.append(shift)
        flagged.append(count)
        logger.debug("Level %d: I = %r, %d flagged.", level, shift, count)

    classification, exponent, limit, error, fit = classify(levels, values)
    logger.info("%s under %s (%s measure): %s.", kind.name, mode.name, measure, classification)
    return ConvergenceReport(levels, values, flagged, classification, exponent, limit, error, fit)
