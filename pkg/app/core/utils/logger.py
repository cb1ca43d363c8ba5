"""Logging configuration and utilities."""

import logging
import sys
from typing import Any, Optional

import structlog

from app.core.shared.config import settings


def configure_logging(level: Optional[str] = None, json_output: Optional[bool] = None) -> None:
    """Configure structured logging for the application.

    Log records go to stderr; stdout is reserved for command reports.
    """
    level_name = (level or settings.log_level).upper()
    use_json = settings.log_json if json_output is None else json_output

    renderer = (
        structlog.processors.JSONRenderer()
        if use_json
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level_name, logging.WARNING),
        force=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a configured logger instance."""
    return structlog.get_logger(name)


def log_command(command: str, **kwargs: Any) -> None:
    """Log a dispatched CLI command."""
    logger = get_logger("cli.command")
    logger.info("command dispatched", command=command, **kwargs)


def log_outcome(command: str, passed: bool, elapsed_ms: int, **kwargs: Any) -> None:
    """Log the outcome of a CLI command."""
    logger = get_logger("cli.outcome")
    logger.info("command finished", command=command, passed=passed, elapsed_ms=elapsed_ms, **kwargs)
