class Boundaries:
    """
    A class storing str constants for the grid boundary conditions.
    """
    DIRICHLET: str = "dirichlet"
    PERIODIC: str = "periodic"

    ALL = (DIRICHLET, PERIODIC)


class Stencils:
    """
    A class storing str constants for the derivative stencils a grid can carry.
    """
    FINITE_DIFFERENCE: str = "finite_difference"
    SPECTRAL: str = "spectral"

    ALL = (FINITE_DIFFERENCE, SPECTRAL)


class RegularizationModes:
    """
    A class storing str constants for the ways the nonlinear denominator is formed.
    """
    UNREGULARIZED: str = "unregularized"
    SMALL_COMPONENT: str = "small_component"
    SMALL_COMPONENT_FLOORED: str = "small_component_floored"

    ALL = (UNREGULARIZED, SMALL_COMPONENT, SMALL_COMPONENT_FLOORED)


class NonlinearityKinds:
    """
    A class storing str constants for the catalogued nonlinearities and the raw singular structures.
    """
    F1: str = "F1"
    F2: str = "F2"
    F3: str = "F3"
    F4: str = "F4"
    RATIO_X: str = "RatioX"
    RATIO_Y: str = "RatioY"
    RATIO_Z: str = "RatioZ"
    COMPOSITE_V: str = "CompositeV"
    COMPOSITE_W: str = "CompositeW"

    CATALOGUED = (F1, F2, F3, F4)
    RATIOS = (RATIO_X, RATIO_Y, RATIO_Z)
    COMPOSITES = (COMPOSITE_V, COMPOSITE_W)
    ALL = CATALOGUED + RATIOS + COMPOSITES


class F2Readings:
    """
    A class storing str constants for the two readings of the density Laplacian term of F2.
    """
    LAPLACIAN_OF_DENSITY: str = "laplacian_of_density"
    """ ∇²(φ†φ). The default. """

    CONJUGATE_LAPLACIAN: str = "conjugate_laplacian"
    """ (∇²φ†)φ. """

    ALL = (LAPLACIAN_OF_DENSITY, CONJUGATE_LAPLACIAN)


class Schemes:
    """
    A class storing str constants for the time stepping schemes.
    """
    STRANG_SPLIT: str = "strang_split"
    CRANK_NICOLSON_FULL: str = "crank_nicolson_full"

    ALL = (STRANG_SPLIT, CRANK_NICOLSON_FULL)


class Observers:
    """
    A class storing str constants for the quantities sampled during evolution.
    """
    NORM: str = "norm"
    ENERGY: str = "energy"
    MAX_IM_F: str = "max_im_f"
    NODE_POSITIONS: str = "node_positions"

    ALL = (NORM, ENERGY, MAX_IM_F, NODE_POSITIONS)


class Families:
    """
    A class storing str constants for the analytic eigenstate families.
    """
    BOX: str = "box"
    HARMONIC: str = "harmonic"

    ALL = (BOX, HARMONIC)


class Measures:
    """
    A class storing str constants for what a convergence study integrates.
    """
    DENSITY: str = "density"
    """ The shift functional I = ∫φ†fφ. """

    BARE: str = "bare"
    """ The nonlinearity alone, ∫f. """

    ALL = (DENSITY, BARE)


class Classifications:
    """
    A class storing str constants for convergence study outcomes.
    """
    CONVERGENT: str = "convergent"
    DIVERGENT: str = "divergent"
    INCONCLUSIVE: str = "inconclusive"


class Spins:
    """
    Named spin constants accepted by the state configuration.
    """
    UP: str = "up"
    DOWN: str = "down"
    X_PLUS: str = "x+"
    X_MINUS: str = "x-"
    Y_PLUS: str = "y+"
    Y_MINUS: str = "y-"

    ALL = (UP, DOWN, X_PLUS, X_MINUS, Y_PLUS, Y_MINUS)


class PassFailValues:
    """
    A class storing str constants for storing pass/fail values.
    """
    PASS: str = "Pass"
    FAIL: str = "Fail"
