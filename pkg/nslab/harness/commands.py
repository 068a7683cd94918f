import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path

from nslab.harness.run_config import RunConfig
from nslab.info.build_info import BuildInfo

logger = logging.getLogger(__name__)

SUMMARY_FILE: str = "summary.txt"


@dataclass
class CommandResult:
    """
    The outcome of one harness command.

    Attributes:
        exit_code (int): 0 on success, 1 for configuration errors, 2 for runtime failures.
        message (str): One line for the console.
        files (list[Path]): Every file the command wrote, in write order.
    """
    exit_code: int
    message: str = ""
    files: list[Path] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.exit_code == 0


class LabCommand(ABC):
    """
    Base class of the harness subcommands. A command receives a validated RunConfig, writes its CSV files into
    the configured output directory and finishes with a summary.txt.
    """
    name: str = ""

    @abstractmethod
    def execute(self, config: RunConfig) -> CommandResult:
        pass

    def output_dir(self, config: RunConfig) -> Path:
        config.out_dir.mkdir(parents=True, exist_ok=True)
        return config.out_dir

    def write_summary(self, config: RunConfig, headlines: list[str]) -> Path:
        """ Build info, the configuration digest and the command's headline numbers, one per line. """
        lines = ["nslab build " + BuildInfo.print_info(),
                 "command: " + self.name,
                 "config sha256: " + config.digest(),
                 "grid: " + config.grid.describe()]
        lines.extend(headlines)
        path = self.output_dir(config) / SUMMARY_FILE
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write("\n".join(lines) + "\n")
        logger.info("Wrote %s.", path)
        return path
