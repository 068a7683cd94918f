import numpy as np

from nslab.enum.pick_list import Boundaries
from nslab.general.exceptions import UnsupportedBoundaryError, LabConfigurationError
from nslab.model.params import PhysicalParams
from nslab.model.spinor import SpinorField


def _require_periodic(f: SpinorField, action: str):
    if f.grid.boundary != Boundaries.PERIODIC:
        raise UnsupportedBoundaryError(action + " needs a periodic grid, got " + f.grid.boundary + ".")


def _wavenumber_mesh(f: SpinorField) -> list[np.ndarray]:
    return np.meshgrid(*[2.0 * np.pi * np.fft.fftfreq(n, d=h) for n, h in zip(f.grid.points, f.grid.spacing)],
                       indexing="ij")


def galilean_boost(f: SpinorField, v, t: float, p: PhysicalParams) -> SpinorField:
    """
    φ′(x) = exp(i(m v·x − m v²t/2)/ħ)·φ(x − vt). The translation is done in Fourier space, so it is exact for
    band-limited fields; m·v_k·L_k/ħ should be a multiple of 2π for φ′ to stay periodic. The displacement |v_k·t|
    may not exceed the box length L_k.

    Args:
        f: The field at time t.
        v: Boost velocity, one component per grid axis.
        t: The time the field belongs to.
        p: Physical constants; m and ħ enter.
    Returns:
        The boosted field on the same grid.
    """
    _require_periodic(f, "The Galilean boost")
    v = np.atleast_1d(np.asarray(v, dtype=np.float64))
    if v.shape != (f.grid.dim,):
        raise LabConfigurationError("The boost velocity needs one component per grid axis.")
    travel = np.abs(v * t)
    if np.any(travel > np.asarray(f.grid.lengths)):
        raise LabConfigurationError("The boost moves the field by " + format(float(np.max(travel)), ".6g")
                                    + ", more than one box length; keep |v|*t within the grid.")

    if np.all(v * t == 0.0):
        translated = f.values
    else:
        axes = tuple(range(1, f.grid.dim + 1))
        shift = sum(k * (component * t) for k, component in zip(_wavenumber_mesh(f), v))
        translated = np.fft.ifftn(np.fft.fftn(f.values, axes=axes) * np.exp(-1j * shift)[np.newaxis], axes=axes)

    position = sum(x * component for x, component in zip(f.grid.mesh(), v))
    phase = np.exp(1j * (p.m * position - 0.5 * p.m * float(np.dot(v, v)) * t) / p.hbar)
    return f.with_values(phase[np.newaxis] * translated)


def momentum_expectation(f: SpinorField, p: PhysicalParams) -> np.ndarray:
    """ ⟨p⟩ per grid axis from the discrete Fourier spectrum, ħk weighted by |φ̂(k)|². """
    _require_periodic(f, "The momentum expectation")
    axes = tuple(range(1, f.grid.dim + 1))
    spectrum = np.sum(np.abs(np.fft.fftn(f.values, axes=axes)) ** 2, axis=0)
    total = np.sum(spectrum)
    return np.array([p.hbar * float(np.sum(k * spectrum) / total) for k in _wavenumber_mesh(f)])
