from nslab.enum.columns import CheckColumns
from nslab.harness.checks import run_checks, CheckOutcome
from nslab.harness.commands import CommandResult, LabCommand
from nslab.harness.run_config import RunConfig
from nslab.util.csv_util import CsvUtil

CHECK_FILE: str = "check.csv"


def format_table(outcomes: list[CheckOutcome]) -> str:
    """ The pass/fail table printed to the console. """
    width = max(len(outcome.name) for outcome in outcomes)
    lines = [CheckColumns.CHECK.ljust(width) + "  " + CheckColumns.VALUE.rjust(10) + "  "
             + CheckColumns.TOLERANCE.rjust(9) + "  " + CheckColumns.RESULT]
    for outcome in outcomes:
        lines.append(outcome.name.ljust(width) + "  " + format(outcome.value, "10.3e") + "  "
                     + format(outcome.tolerance, "9.1e") + "  " + outcome.result)
    return "\n".join(lines)


class CheckCommand(LabCommand):
    """ Runs the invariant suite. Exits 0 only when every check passes, 2 otherwise. """
    name = "check"

    def execute(self, config: RunConfig) -> CommandResult:
        outcomes = run_checks(config.params)
        print(format_table(outcomes))

        rows = [{CheckColumns.CHECK: outcome.name,
                 CheckColumns.VALUE: outcome.value,
                 CheckColumns.TOLERANCE: outcome.tolerance,
                 CheckColumns.RESULT: outcome.result}
                for outcome in outcomes]
        files = [CsvUtil.write_rows(rows, CheckColumns.HEADERS, self.output_dir(config) / CHECK_FILE,
                                    config.precision)]
        passed = sum(1 for outcome in outcomes if outcome.passed)
        summary = str(passed) + " of " + str(len(outcomes)) + " checks passed"
        files.append(self.write_summary(config, [summary]))
        return CommandResult(0 if passed == len(outcomes) else 2, summary + ".", files)
