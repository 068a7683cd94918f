#! /usr/bin/env python
import argparse
import logging
import os
import sys

from nslab.general.exceptions import LabConfigurationError, LabException
from nslab.harness.command_registry import register_commands
from nslab.harness.commands import LabCommand
from nslab.harness.run_config import RunConfig

logger = logging.getLogger("nslab.run")

# Register commands here.
commands: dict[str, LabCommand] = {}
register_commands(commands)


def configure_logging():
    level = logging.DEBUG if os.environ.get('NslabDebug') == "True" else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="run.py", description="Nonlinear spinor laboratory.")
    parser.add_argument("command", nargs="?", choices=sorted(commands),
                        help="The computation to run.")
    parser.add_argument("--config", default=None, help="YAML run configuration; omitted keys take defaults.")
    parser.add_argument("--out", default=None, help="Output directory, overriding output.dir.")
    parser.add_argument("--print-config", action="store_true",
                        help="Print the merged configuration as YAML and exit.")
    return parser


def main(argv: list[str] | None = None) -> int:
    """ Exit codes: 0 success, 1 configuration error, 2 runtime or step failure. """
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = RunConfig.load(args.config)
        if args.out is not None:
            config = config.with_out_dir(args.out)
    except LabConfigurationError as e:
        print("Configuration error: " + str(e), file=sys.stderr)
        return 1

    if args.print_config:
        print(config.dump(), end="")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("A command is required unless --print-config is given.", file=sys.stderr)
        return 1

    command = commands[args.command]
    logger.info("Running %s into %s.", command.name, config.out_dir)
    try:
        result = command.execute(config)
    except LabConfigurationError as e:
        print("Configuration error: " + str(e), file=sys.stderr)
        return 1
    except LabException as e:
        print(type(e).__name__ + ": " + str(e), file=sys.stderr)
        return 2

    for path in result.files:
        logger.info("Wrote %s.", path)
    print(result.message)
    return result.exit_code


# Run this to run a computation from the command line.
if __name__ == '__main__':
    sys.exit(main())
