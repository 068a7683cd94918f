from nslab.harness.check_command import CheckCommand
from nslab.harness.commands import LabCommand
from nslab.harness.evolve_command import EvolveCommand
from nslab.harness.shift_command import ShiftCommand
from nslab.harness.study_command import StudyCommand


def register_commands(registry: dict[str, LabCommand]):
    """ Registers every subcommand under its command-line name. """
    for command in (EvolveCommand(), ShiftCommand(), StudyCommand(), CheckCommand()):
        registry[command.name] = command
