"""CLI entrypoint for hyperbolic root bounds."""

import click

from app.cli.commands import COMMANDS
from app.core.config import get_settings
from app.core.logging import bind_run_id, generate_run_id, get_logger, setup_logging

logger = get_logger(__name__)


@click.group()
@click.option("--log-level", default=None, help="Override HYPROOTS_LOG_LEVEL.")
@click.version_option("0.1.0", prog_name="hyproots")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None):
    """Certify, split, bound and track roots of hyperbolic polynomial curves."""
    settings = get_settings()
    setup_logging(log_level or settings.log_level)
    bind_run_id(generate_run_id(), ctx.invoked_subcommand or "")
    logger.info("cli_starting", command=ctx.invoked_subcommand)


for command in COMMANDS:
    cli.add_command(command)


if __name__ == "__main__":
    cli()
