import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from nslab.enum.columns import TrajectoryColumns
from nslab.enum.pick_list import Schemes, Observers
from nslab.evolution.propagators import max_eigenvalue
from nslab.general.exceptions import LabConfigurationError
from nslab.model.grid import GridSpec
from nslab.nonlinearity.kinds import NonlinearityKind, RegularizationMode

ACCURACY_BOUND: float = math.pi
""" dt·λmax/ħ above this means the fastest resolved mode turns more than half a period per step. """

FIXED_POINT_TOLERANCE: float = 1e-10
FIXED_POINT_MAX_ITERATIONS: int = 25


@dataclass(frozen=True)
class EvolutionConfig:
    """
    Settings of a time evolution.

    Attributes:
        dt (float): Time step.
        steps (int): Number of steps; zero returns the initial field.
        scheme (str): One of Schemes.ALL.
        nonlinearity (NonlinearityKind): The nonlinear term.
        mode (RegularizationMode): Regularisation of its denominator.
        observers (frozenset[str]): Subset of Observers.ALL sampled into the log.
        observer_stride (int): Sample every this many steps.
    """
    dt: float
    steps: int
    scheme: str = Schemes.STRANG_SPLIT
    nonlinearity: NonlinearityKind = field(default_factory=NonlinearityKind.f1)
    mode: RegularizationMode = field(default_factory=RegularizationMode)
    observers: frozenset[str] = frozenset((Observers.NORM, Observers.ENERGY, Observers.MAX_IM_F))
    observer_stride: int = 1

    def __post_init__(self):
        object.__setattr__(self, "observers", frozenset(self.observers))
        if not np.isfinite(self.dt) or self.dt <= 0:
            raise LabConfigurationError("The time step must be positive, got " + str(self.dt) + ".")
        if int(self.steps) != self.steps or self.steps < 0:
            raise LabConfigurationError("The step count must be a non-negative integer, got " + str(self.steps) + ".")
        if self.scheme not in Schemes.ALL:
            raise LabConfigurationError("Unknown scheme '" + str(self.scheme) + "'.")
        unknown = self.observers - set(Observers.ALL)
        if unknown:
            raise LabConfigurationError("Unknown observers: " + ", ".join(sorted(unknown)) + ".")
        if int(self.observer_stride) != self.observer_stride or self.observer_stride < 1:
            raise LabConfigurationError("The observer stride must be a positive integer.")

    def accuracy_ratio(self, grid: GridSpec, kinetic: float, hbar: float) -> float:
        """ dt·λmax/ħ for the linear part. Both schemes are stable at any value; the ratio documents accuracy. """
        return self.dt * max_eigenvalue(grid, kinetic) / hbar

    @property
    def sample_count(self) -> int:
        return self.steps // self.observer_stride + 1


class ObservationLog:
    """
    Samples taken during an evolution. Quantities that were not observed are NaN; node lists may differ in
    length between samples and are padded with NaN in the frame.
    """

    def __init__(self):
        self.times: list[float] = []
        self.norm2: list[float] = []
        self.energy: list[float] = []
        self.max_im_f: list[float] = []
        self.nodes: list[list[float]] = []

    def append(self, time: float, norm2: float = math.nan, energy: float = math.nan, max_im_f: float = math.nan,
               nodes: list[float] | None = None):
        self.times.append(time)
        self.norm2.append(norm2)
        self.energy.append(energy)
        self.max_im_f.append(max_im_f)
        self.nodes.append(list(nodes) if nodes is not None else [])

    def __len__(self) -> int:
        return len(self.times)

    def to_frame(self) -> pd.DataFrame:
        widest = max((len(nodes) for nodes in self.nodes), default=0)
        frame = pd.DataFrame({TrajectoryColumns.TIME: self.times,
                              TrajectoryColumns.NORM2: self.norm2,
                              TrajectoryColumns.ENERGY: self.energy,
                              TrajectoryColumns.MAX_IM_F: self.max_im_f})
        for index in range(widest):
            frame[TrajectoryColumns.NODE_PREFIX + str(index)] = [nodes[index] if index < len(nodes) else math.nan
                                                                 for nodes in self.nodes]
        return frame
