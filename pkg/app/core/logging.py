"""Structured logging setup with run IDs."""

import logging
import sys
import uuid

import structlog


def setup_logging(log_level: str = "INFO") -> None:
    """Configure structured logging with structlog.

    Events are rendered as JSON on stderr so that stdout and report files
    stay byte-identical between runs.
    """
    logging.basicConfig(stream=sys.stderr, level=log_level.upper(), format="%(message)s", force=True)
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger with the given name."""
    return structlog.get_logger(name)


def generate_run_id() -> str:
    """Generate a short ID that ties together the events of one CLI run."""
    return str(uuid.uuid4())[:8]


def bind_run_id(run_id: str, command: str) -> None:
    """Attach the run ID and command to every event logged in this context."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(run_id=run_id, command=command)
