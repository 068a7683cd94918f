class LabException(Exception):
    """ Base class of every error raised by the laboratory. """


class LabConfigurationError(LabException):
    """
    The inputs describe a run that cannot be set up: bad grids, unknown keys, mismatched grids, invalid enums.
    The harness maps this to exit code 1.
    """


class DegenerateInputError(LabException):
    """ An operation received a field it cannot handle, such as the zero field. """


class MissingInputError(LabException):
    """ A nonlinearity needs an input that was not supplied, e.g. F2 without its time input. """


class UnsupportedBoundaryError(LabException):
    """ The operation is not defined for the grid's boundary condition or origin. """


class EmptyProfileError(LabException):
    """ An enhancement profile was requested for a field without nodes. """


class SingularPointError(LabException):
    """
    Flagged singular points were met where they cannot be excluded, e.g. during a time step under the
    unregularized mode.
    """

    def __init__(self, message: str, positions: list[tuple[float, ...]] | None = None):
        super().__init__(message)
        self.positions = positions if positions is not None else []
        self.log = None


class StepFailureError(LabException):
    """
    A time step did not converge. Carries the residual history and, once it has left evolve(), the partial
    observation log.
    """

    def __init__(self, message: str, residuals: list[float] | None = None):
        super().__init__(message)
        self.residuals = residuals if residuals is not None else []
        self.log = None
