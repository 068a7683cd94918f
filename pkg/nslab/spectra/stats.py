import numpy as np
from scipy.stats import linregress


class LinRegressData:
    """
    A wrapper for the LinregressResult of a log-log fit. Exposes the fitted growth exponent and its quality under
    names that read well at the call sites.

    Attributes:
        - result: The LinregressResult instance to be wrapped.
    """

    def __init__(self, result):
        self._result = result

    def get_slope(self) -> float:
        """Returns the slope of the regression line, the growth exponent of a log-log fit."""
        return float(self._result.slope)

    def get_intercept(self) -> float:
        """Returns the intercept of the regression line."""
        return float(self._result.intercept)

    def get_r_squared(self) -> float:
        """Returns the coefficient of determination"""
        return float(self._result.rvalue * self._result.rvalue)

    def get_stderr(self) -> float:
        """Returns the standard error of the estimated slope."""
        return float(self._result.stderr)


def fit_log_log(x, y) -> LinRegressData:
    """
    Fits log|y| against log x. Zeros in y are replaced by the smallest positive float so the fit stays finite.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.maximum(np.abs(np.asarray(y)), np.finfo(float).tiny)
    return LinRegressData(linregress(np.log(x), np.log(y)))
