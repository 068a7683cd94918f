import logging

import numpy as np
import pandas as pd

from nslab.enum.columns import FinalStateColumns, TrajectoryColumns
from nslab.evolution.config import ObservationLog
from nslab.evolution.evolve import evolve
from nslab.general.exceptions import SingularPointError, StepFailureError
from nslab.harness.commands import CommandResult, LabCommand
from nslab.harness.run_config import RunConfig
from nslab.model.spinor import SpinorField
from nslab.spectra.states import make_eigenstate
from nslab.util.csv_util import CsvUtil

logger = logging.getLogger(__name__)

TRAJECTORY_FILE: str = "trajectory.csv"
FINAL_STATE_FILE: str = "final_state.csv"


def final_state_frame(f: SpinorField) -> pd.DataFrame:
    """ One row per grid point in C order: coordinates, then real and imaginary parts of both components. """
    columns = {}
    for axis, coordinates in enumerate(f.grid.mesh()):
        columns[FinalStateColumns.COORDINATES[axis]] = coordinates.ravel()
    columns[FinalStateColumns.RE_UP] = f.up.real.ravel()
    columns[FinalStateColumns.IM_UP] = f.up.imag.ravel()
    columns[FinalStateColumns.RE_DOWN] = f.down.real.ravel()
    columns[FinalStateColumns.IM_DOWN] = f.down.imag.ravel()
    return pd.DataFrame(columns)


class EvolveCommand(LabCommand):
    """
    Evolves the configured eigenstate and writes trajectory.csv and final_state.csv. A failed step still writes
    the trajectory sampled up to the failure and exits with 2.
    """
    name = "evolve"

    def write_trajectory(self, config: RunConfig, log: ObservationLog):
        frame = log.to_frame()
        node_columns = [column for column in frame.columns if column not in TrajectoryColumns.HEADERS]
        return CsvUtil.write_frame(frame, self.output_dir(config) / TRAJECTORY_FILE, config.precision,
                                   TrajectoryColumns.HEADERS + node_columns)

    def execute(self, config: RunConfig) -> CommandResult:
        initial = make_eigenstate(config.state, config.grid, config.params)
        try:
            final, log = evolve(initial, config.evolution, config.params)
        except (StepFailureError, SingularPointError) as e:
            files = []
            if e.log is not None and len(e.log):
                files.append(self.write_trajectory(config, e.log))
            message = "Evolution failed: " + str(e)
            files.append(self.write_summary(config, [message, "samples written: "
                                                     + str(len(e.log) if e.log is not None else 0)]))
            logger.error(message)
            return CommandResult(2, message, files)

        files = [self.write_trajectory(config, log),
                 CsvUtil.write_frame(final_state_frame(final), self.output_dir(config) / FINAL_STATE_FILE,
                                     config.precision)]

        headlines = ["steps: " + str(config.evolution.steps) + " of dt " + format(config.evolution.dt, ".6g")]
        norms = np.asarray(log.norm2)
        if np.all(np.isfinite(norms)) and norms[0] > 0:
            drift = float(np.max(np.abs(norms - norms[0])) / norms[0])
            headlines.append("relative norm drift: " + format(drift, ".3e"))
        if np.isfinite(log.energy[-1]):
            headlines.append("final energy: " + format(log.energy[-1], ".12g"))
        files.append(self.write_summary(config, headlines))
        return CommandResult(0, "Evolved " + str(config.evolution.steps) + " steps.", files)
