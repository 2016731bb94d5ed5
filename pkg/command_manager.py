"""
Command management for the command-line front end.

The CommandManager keeps a registry of commands by name and dispatches a
RunConfig to the one it names. Each command inherits from Command and
returns an exit code.
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, TYPE_CHECKING

if TYPE_CHECKING:
    from run_context import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_TOLERANCE = 2


class Command(ABC):
    """
    Abstract base class for all commands.

    Attributes:
        help: One-line description shown by argparse
    """
    help: str = ""

    @abstractmethod
    def run(self, config: 'RunConfig') -> int:
        """
        Execute the command.

        Args:
            config: Validated run configuration

        Returns:
            Exit code
        """
        pass


class CommandManager:
    """Registry and dispatcher of commands."""

    def __init__(self, debug_mode: bool = False):
        """
        Initialize the command manager.

        Args:
            debug_mode: Log every dispatch
        """
        self.commands: Dict[str, Command] = {}
        self.debug_mode = debug_mode

    def register_command(self, name: str, command: Command) -> None:
        """
        Register a command under a name.

        Args:
            name: Command name as typed on the command line
            command: Command instance
        """
        self.commands[name] = command

    def dispatch(self, config: 'RunConfig') -> int:
        """
        Validate the config and run the command it names.

        Validation and runtime errors are logged and turned into exit code 1.

        Args:
            config: Run configuration

        Returns:
            Exit code of the command
        """
        if self.debug_mode:
            logger.debug("Dispatching %s with %s", config.command, config)
        if config.command not in self.commands:
            logger.error("Unknown command '%s'. Available commands: %s", config.command, list(self.commands.keys()))
            return EXIT_INVALID
        try:
            config.validate()
            return self.commands[config.command].run(config)
        except (ValueError, OSError) as error:
            logger.error("%s", error)
            return EXIT_INVALID
