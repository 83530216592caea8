"""Maps exceptions raised during a command to exit codes and error messages."""

import json

import click
from pydantic import ValidationError

from app.core.logging import get_logger
from src.exceptions import HyperbolicError

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_DOMAIN = 2


class CommandErrorHandler:
    """Catch command failures and turn them into structured exit codes.

    Domain errors exit with 2 and print the violated condition; unreadable or
    malformed input exits with 1.
    """

    def exit_code_for(self, exc: BaseException) -> int:
        if isinstance(exc, HyperbolicError):
            return EXIT_DOMAIN
        return EXIT_IO

    def handle(self, exc: BaseException, command: str) -> int:
        code = self.exit_code_for(exc)
        if isinstance(exc, HyperbolicError):
            logger.warning("command_failed", command=command, condition=exc.condition, error=str(exc))
            click.echo(f"error: {exc}", err=True)
        elif isinstance(exc, (OSError, json.JSONDecodeError, ValidationError, ValueError, KeyError, IndexError)):
            logger.error("command_failed", command=command, error=str(exc), error_type=type(exc).__name__)
            click.echo(f"error: cannot read input: {exc}", err=True)
        else:
            logger.error("unhandled_exception", command=command, error=str(exc), error_type=type(exc).__name__)
            click.echo(f"error: unexpected failure: {exc}", err=True)
        return code
