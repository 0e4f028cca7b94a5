"""Logging setup: rich console handler on the package logger."""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from signrank.core.config import settings

PACKAGE_LOGGER = "signrank"


def configure_logging(level: Optional[str] = None, console: Optional[Console] = None) -> logging.Logger:
    """Attach a RichHandler to the package logger (idempotent)."""
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel((level or settings.log_level).upper())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=console or Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
