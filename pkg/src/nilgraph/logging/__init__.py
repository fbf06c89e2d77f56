"""Structured logging setup and the census run ledger."""

from __future__ import annotations

import logging
import sys

import structlog

from nilgraph.logging.run_log import CensusRunLogger

__all__ = ["CensusRunLogger", "configure_logging"]


def configure_logging(level: str = "INFO", json: bool = False) -> None:
    """Route structlog output to stderr at ``level``, as console text or JSON lines."""
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        numeric = logging.INFO
    renderer: structlog.typing.Processor = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if json
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
