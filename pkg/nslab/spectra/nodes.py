import numpy as np

from nslab.general.exceptions import LabConfigurationError
from nslab.model.spinor import SpinorField

ZERO_FRACTION: float = 1e-12
""" Samples with |Re φ| at or below this fraction of the component maximum count as zero. """


def dominant_component(f: SpinorField) -> int:
    """ 0 (up) or 1 (down), whichever carries more weight. """
    weights = np.sum(np.abs(f.values) ** 2, axis=tuple(range(1, f.grid.dim + 1)))
    return int(np.argmax(weights))


def phase_aligned(f: SpinorField) -> np.ndarray:
    """ The field's values times the global phase that makes its largest sample real and positive. """
    flat = f.values.reshape(2, -1)
    component, index = np.unravel_index(np.argmax(np.abs(flat)), flat.shape)
    sample = flat[component, index]
    if sample == 0:
        return f.values.copy()
    return f.values * (np.abs(sample) / sample)


def _sign_changes(x: np.ndarray, values: np.ndarray) -> list[float]:
    peak = np.max(np.abs(values))
    if peak == 0:
        return []
    nonzero = np.nonzero(np.abs(values) > ZERO_FRACTION * peak)[0]
    nodes = []
    for left, right in zip(nonzero[:-1], nonzero[1:]):
        if np.sign(values[left]) == np.sign(values[right]):
            continue
        if right == left + 1:
            nodes.append(float(x[left] + (x[right] - x[left]) * values[left] / (values[left] - values[right])))
        else:
            # The zero run left+1 .. right-1 straddles the node.
            nodes.append(float(0.5 * (x[left + 1] + x[right - 1])))
    return nodes


def node_scan(f: SpinorField, component: int | None = None) -> list[float]:
    """
    Interior nodes of a 1D field: sign changes of the real part of one spin component after global phase
    alignment, linearly interpolated between the bracketing samples. Wall zeros are not nodes.

    Args:
        f: The field to scan.
        component: 0 or 1; the dominant component when omitted.
    Returns:
        Node positions in increasing order, possibly empty.
    """
    if f.grid.dim != 1:
        raise LabConfigurationError("Node scans are only defined on 1D grids.")
    if component is None:
        component = dominant_component(f)
    aligned = phase_aligned(f)
    return _sign_changes(f.grid.axis_coordinates(0), aligned[component].real)


def node_scan_by_component(f: SpinorField) -> tuple[list[float], list[float]]:
    """ The node lists of the up and down components, each from the same global phase alignment. """
    return node_scan(f, 0), node_scan(f, 1)
