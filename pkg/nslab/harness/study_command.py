from nslab.enum.columns import StudyColumns
from nslab.harness.commands import CommandResult, LabCommand
from nslab.harness.run_config import RunConfig
from nslab.spectra.convergence import convergence_study
from nslab.util.csv_util import CsvUtil

STUDY_FILE: str = "study.csv"


class StudyCommand(LabCommand):
    """ Runs a grid-refinement study over study.levels and writes one row per level. """
    name = "study"

    def execute(self, config: RunConfig) -> CommandResult:
        report = convergence_study(config.state, config.kind, config.params, config.mode, config.levels,
                                   config.grid, config.measure)
        rows = [{StudyColumns.N_POINTS: level,
                 StudyColumns.I_RE: value.real,
                 StudyColumns.I_IM: value.imag,
                 StudyColumns.FLAGGED_POINTS: flagged}
                for level, value, flagged in zip(report.levels, report.values, report.flagged_points)]
        files = [CsvUtil.write_rows(rows, StudyColumns.HEADERS, self.output_dir(config) / STUDY_FILE,
                                    config.precision)]
        classification = "classification: " + report.describe()
        files.append(self.write_summary(config, [
            "measure: " + config.measure,
            classification,
            "log-log r^2: " + format(report.fit.get_r_squared(), ".6f")]))
        return CommandResult(0, classification, files)
