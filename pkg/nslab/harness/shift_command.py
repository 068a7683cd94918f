from nslab.enum.columns import ShiftColumns
from nslab.harness.commands import CommandResult, LabCommand
from nslab.harness.run_config import RunConfig
from nslab.nonlinearity.kinds import TimeInput
from nslab.spectra.shift import shift_functional
from nslab.spectra.states import make_eigenstate
from nslab.util.csv_util import CsvUtil

SHIFT_FILE: str = "shift.csv"


class ShiftCommand(LabCommand):
    """ Evaluates the first-order shift of the configured nonlinearity on the configured eigenstate. """
    name = "shift"

    def execute(self, config: RunConfig) -> CommandResult:
        f = make_eigenstate(config.state, config.grid, config.params)
        time_input = TimeInput.stationary(config.state.energy(config.grid, config.params)) \
            if config.kind.is_f2 else None
        report = shift_functional(f, config.kind, config.params, config.mode, time_input)

        row = {ShiftColumns.KIND: report.kind,
               ShiftColumns.MODE: report.mode,
               ShiftColumns.I_RE: report.I.real,
               ShiftColumns.I_IM: report.I.imag,
               ShiftColumns.DELTA_E_RE: report.delta_e.real,
               ShiftColumns.DELTA_E_IM: report.delta_e.imag,
               ShiftColumns.FLAGGED_POINTS: report.flagged_points}
        files = [CsvUtil.write_rows([row], ShiftColumns.HEADERS, self.output_dir(config) / SHIFT_FILE,
                                    config.precision)]
        files.append(self.write_summary(config, [
            "shift integral I: " + format(report.I.real, ".12g") + " + " + format(report.I.imag, ".6g") + "i",
            "deltaE: " + format(report.delta_e.real, ".12g"),
            "|Im I|/|I|: " + format(report.im_fraction, ".3e"),
            "flagged points: " + str(report.flagged_points)]))
        return CommandResult(0, report.kind + " shift I = " + format(report.I.real, ".10g"), files)
