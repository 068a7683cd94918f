class TrajectoryColumns:
    """ A class to store the column names of trajectory.csv. """

    TIME: str = "time"
    """ Simulation time of the sample. """

    NORM2: str = "norm2"
    """ Squared norm Σ|φ|²·h^dim. """

    ENERGY: str = "energy"
    """ Energy expectation including the real nonlinear potential. """

    MAX_IM_F: str = "max_im_f"
    """ Largest |Im f_NR| over unflagged points. """

    NODE_PREFIX: str = "node_"
    """ Prefix of the node coordinate columns, node_0 .. node_k. """

    HEADERS = [TIME, NORM2, ENERGY, MAX_IM_F]


class FinalStateColumns:
    """ A class to store the column names of final_state.csv. """

    COORDINATES = ["x", "y", "z"]
    """ One coordinate column per grid axis, in axis order. """

    RE_UP: str = "re_up"
    IM_UP: str = "im_up"
    RE_DOWN: str = "re_down"
    IM_DOWN: str = "im_down"

    VALUES = [RE_UP, IM_UP, RE_DOWN, IM_DOWN]


class ShiftColumns:
    """ A class to store the column names of shift.csv. """

    KIND: str = "kind"
    MODE: str = "mode"
    I_RE: str = "I_re"
    I_IM: str = "I_im"
    DELTA_E_RE: str = "deltaE_re"
    DELTA_E_IM: str = "deltaE_im"
    FLAGGED_POINTS: str = "flagged_points"

    HEADERS = [KIND, MODE, I_RE, I_IM, DELTA_E_RE, DELTA_E_IM, FLAGGED_POINTS]


class StudyColumns:
    """ A class to store the column names of study.csv. """

    N_POINTS: str = "n_points"
    """ The refinement level, counted in grid intervals. """

    I_RE: str = "I_re"
    I_IM: str = "I_im"
    FLAGGED_POINTS: str = "flagged_points"

    HEADERS = [N_POINTS, I_RE, I_IM, FLAGGED_POINTS]


class CheckColumns:
    """ A class to store the column names of the check table. """

    CHECK: str = "check"
    VALUE: str = "value"
    TOLERANCE: str = "tolerance"
    RESULT: str = "result"

    HEADERS = [CHECK, VALUE, TOLERANCE, RESULT]
