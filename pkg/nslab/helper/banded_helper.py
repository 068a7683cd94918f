import numpy as np


class BandedHelper:
    """
    A helper class caching the tridiagonal Crank–Nicolson systems of one grid axis, so repeated steps with the same
    axis, spacing and coefficient reuse them.

    Attributes:
        band_cache (dict[tuple[int, float, complex], tuple[np.ndarray, np.ndarray]]):
            Keyed by (interior points, spacing, coefficient); holds the left-hand side in `solve_banded` layout and
            the (diagonal, off-diagonal) pair of the right-hand side.
    """

    band_cache: dict[tuple[int, float, complex], tuple[np.ndarray, np.ndarray]] = dict()

    @staticmethod
    def crank_nicolson_bands(interior: int, spacing: float, coefficient: complex) -> tuple[np.ndarray, np.ndarray]:
        """
        Bands of (I − a·D₂)φ_new = (I + a·D₂)φ with D₂ the three-point second difference on the interior samples
        and a = `coefficient`.

        Args:
            interior (int): Number of unknowns on the axis.
            spacing (float): Grid spacing h.
            coefficient (complex): a, typically iK·dt/2ħ.

        Returns:
            tuple[np.ndarray, np.ndarray]: The (3, interior) band array for the left-hand side and the
            (diagonal, off-diagonal) values of the right-hand side.
        """
        key = (interior, spacing, coefficient)
        if BandedHelper.band_cache.__contains__(key):
            return BandedHelper.band_cache[key]

        r = coefficient / spacing ** 2
        bands = np.zeros((3, interior), dtype=np.complex128)
        bands[0, 1:] = -r
        bands[1, :] = 1.0 + 2.0 * r
        bands[2, :-1] = -r
        right = np.array([1.0 - 2.0 * r, r], dtype=np.complex128)

        BandedHelper.band_cache[key] = (bands, right)
        return bands, right

    @staticmethod
    def clear():
        BandedHelper.band_cache.clear()
