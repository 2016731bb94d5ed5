"""
Main entry point for the variable-order GL toolkit.

This module builds the argument parser, registers every command with the
command manager and dispatches one run. The process exit code is the
command's: 0 success, 1 invalid input, 2 tolerance breach in check.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from command_manager import EXIT_INVALID, CommandManager
from commands.check_command import CheckCommand
from commands.compare_command import CompareCommand
from commands.definitions_command import DefinitionsCommand
from commands.derive_command import DeriveCommand
from commands.sweep_command import SweepCommand
from commands.weights_command import WeightsCommand
from run_context import RunConfig
from varorder import engines  # noqa: F401  registers the engines
from varorder.engine_registry import get_all_engine_ids
from varorder.oracles import ORACLE_REGISTRY
from varorder.schedule import Alignment

logger = logging.getLogger(__name__)

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

COMMANDS = {
    "weights": WeightsCommand(),
    "derive": DeriveCommand(),
    "compare": CompareCommand(),
    "check": CheckCommand(),
    "sweep": SweepCommand(),
    "definitions": DefinitionsCommand(),
}


def _float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.replace(";", ",").split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}") from None


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors exit with the invalid-input code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Build the parser with one subcommand per registered command."""
    common = ArgumentParser(add_help=False)
    common.add_argument('--engine', help=f'Evaluation engine, one of {get_all_engine_ids()} (default direct2)')
    common.add_argument('--h', type=float, help='Time step (default 0.01)')
    common.add_argument('--horizon', type=float, help='End time (default 4)')
    common.add_argument('--schedule', help='Named schedule (a3, ex1, ex2), inline "t,a;t,a" or @file')
    common.add_argument('--signal', help='"step" or "file:<path>" (default step)')
    common.add_argument('--oracle', help=f'Closed-form reference, one of {list(ORACLE_REGISTRY.keys())}')
    common.add_argument('--coefficients', choices=['exact', 'paper'], help='Coefficients of the ex2 oracle')
    common.add_argument('--alignment', choices=[a.value for a in Alignment],
                        help='How switch times map onto samples (default interval)')
    common.add_argument('--out', help='Output CSV path (default stdout)')
    common.add_argument('--dump-matrix', action='store_true', default=None, help='Also write the operator matrix')
    common.add_argument('--hs', type=_float_list, help='Steps for sweep, e.g. 0.05,0.01,0.005')
    common.add_argument('--tol', type=float, help='Discrepancy tolerance for check (default 1e-9)')
    common.add_argument('--order', type=float, help='Order for weights and the const oracle (default -1)')
    common.add_argument('--count', type=int, help='Number of coefficients for weights (default 10)')
    common.add_argument('--method', choices=['recurrence', 'gamma'], help='Weight method for weights')
    common.add_argument('--dense-cap', type=int, help='Largest k for dense matrices (default 5000)')
    common.add_argument('--debug', action='store_true', default=None, help='Enable debug logging')

    parser = ArgumentParser(description="Variable-order Grünwald-Letnikov derivatives and integrals.")
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, command in COMMANDS.items():
        subparsers.add_parser(name, parents=[common], help=command.help)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments and run one command."""
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.debug else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)
    package_logger = logging.getLogger("varorder")
    package_logger.setLevel(level)
    # the package logger already has its own handler
    package_logger.propagate = False

    manager = CommandManager(debug_mode=bool(args.debug))
    for name, command in COMMANDS.items():
        manager.register_command(name, command)
    try:
        config = RunConfig.from_args(args)
    except ValueError as error:
        logger.error("%s", error)
        return EXIT_INVALID
    return manager.dispatch(config)


if __name__ == "__main__":
    sys.exit(main())
