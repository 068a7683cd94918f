from dataclasses import dataclass

import numpy as np

from nslab.enum.pick_list import Boundaries
from nslab.general.exceptions import EmptyProfileError
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField
from nslab.nonlinearity.catalogue import eval_f
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode, TimeInput
from nslab.spectra.nodes import node_scan, ZERO_FRACTION

CROSSING_MARGIN: int = 4
""" Samples added beyond the farthest denominator zero crossing that a node window absorbs. """

CROSSING_REACH: float = 2.0
""" Crossings farther than this many half-Compton lengths from a centre are not attributed to it. """


@dataclass(frozen=True, eq=False)
class EnhancementProfile:
    """
    How strongly a nonlinearity's shift integrand concentrates at the nodes.

    Attributes:
        integrand (np.ndarray): g = |φ†fφ| per sample, NaN where flagged.
        ratio (float): max g inside the node windows over max g outside them.
        nodes (list[float]): Interior node positions.
        node_values (list[float]): |f| at the sample nearest each interior node.
        window (float): The nominal window half-width ħ/2mc.
        half_widths (list[float]): Actual half-width of every window, interior nodes first, then walls.
        node_enhancement (float): Largest node value over the median |f| outside the windows.
    """
    integrand: np.ndarray
    ratio: float
    nodes: list[float]
    node_values: list[float]
    window: float
    half_widths: list[float]
    node_enhancement: float


def _half_width(centre: float, window: float, crossings: list[float], spacing: float) -> float:
    nearby = [abs(crossing - centre) for crossing in crossings if abs(crossing - centre) <= CROSSING_REACH * window]
    if not nearby:
        return window
    return max(window, max(nearby) + CROSSING_MARGIN * spacing)


def _peak(values: np.ndarray, mask: np.ndarray) -> float:
    if not np.any(mask):
        return np.nan
    return float(np.nanmax(np.where(mask, values, np.nan)))


def enhancement_profile(f: SpinorField, kind: NonlinearityKind, p: PhysicalParams, mode: RegularizationMode,
                        time_input: TimeInput | None = None) -> EnhancementProfile:
    """
    Builds the node-enhancement profile of a 1D field.

    Windows of half-width ħ/2mc surround every interior node and, on dirichlet grids, every wall where the field
    vanishes. A window widens to take in the zero crossings of a regularised denominator that lie near its centre,
    plus CROSSING_MARGIN samples, so the pole at a crossing counts towards the node that caused it.

    Args:
        f: A field on a 1D grid with at least one interior node.
        kind: The nonlinearity.
        p: Physical constants; ħ/2mc sets the window.
        mode: Regularisation mode.
        time_input: ∂ₜφ information for F2.
    Returns:
        The EnhancementProfile.
    """
    nodes = node_scan(f)
    if not nodes:
        raise EmptyProfileError("The field has no interior nodes to build an enhancement profile around.")

    result = eval_f(kind, f, p, mode, time_input)
    values, _ = result.integrand()
    integrand = np.abs(values)
    x = f.grid.axis_coordinates(0)
    window = p.compton_half
    crossings = result.denominator.crossings()

    centres = list(nodes)
    if f.grid.boundary == Boundaries.DIRICHLET:
        density = f.density()
        threshold = ZERO_FRACTION ** 2 * float(np.max(density))
        for edge in (0, -1):
            if density[edge] <= threshold:
                centres.append(float(x[edge]))
    half_widths = [_half_width(centre, window, crossings, f.grid.spacing[0]) for centre in centres]
    inside = np.zeros(x.shape, dtype=bool)
    for centre, half_width in zip(centres, half_widths):
        inside |= np.abs(x - centre) <= half_width

    inside_peak = _peak(integrand, inside)
    outside_peak = _peak(integrand, ~inside)
    if outside_peak == 0.0:
        ratio = np.inf
    else:
        ratio = float(inside_peak / outside_peak)

    magnitudes = np.abs(result.values)
    node_values = [float(magnitudes[int(np.argmin(np.abs(x - node)))]) for node in nodes]
    bulk = float(np.nanmedian(np.where(inside, np.nan, magnitudes))) if np.any(~inside) else np.nan
    node_enhancement = np.inf if bulk == 0.0 else float(max(node_values) / bulk)
    return EnhancementProfile(integrand, ratio, nodes, node_values, window, half_widths, node_enhancement)
