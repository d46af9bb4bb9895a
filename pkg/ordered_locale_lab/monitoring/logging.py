"""Structured logging configuration using structlog.

- JSON output in production mode (filterable, parseable)
- Coloured console output in development mode
- Run IDs bound through contextvars so every event of one CLI invocation can be grouped

Log lines go to stderr; stdout is reserved for reports so that they stay
byte-identical between runs.

Usage:
    from ordered_locale_lab.monitoring import configure_logging, get_logger

    configure_logging("production")
    log = get_logger(__name__)
    log.info("coverage_decided", outcome="covered", states=12)
"""

import logging
import sys

import structlog


def configure_logging(mode: str = "development", level: str = "INFO") -> None:
    """Configure structlog for the application.

    Args:
        mode: Either "production" (JSON output) or "development" (console output)
        level: stdlib level name applied to the root logger
    """
    shared = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]
    if mode == "production":
        renderer = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())

    structlog.configure(
        processors=[*shared, renderer],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level.upper(), logging.INFO),
    )


def get_logger(name: str | None = None) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance.

    Args:
        name: Logger name (defaults to caller's module name)

    Returns:
        Configured structlog logger
    """
    return structlog.get_logger(name)


def bind_run_id(run_id: str) -> None:
    """Bind a run ID to the current context.

    All subsequent log events in this context include the run_id field.

    Args:
        run_id: Identifier of one CLI invocation or library batch
    """
    structlog.contextvars.bind_contextvars(run_id=run_id)


def unbind_run_id() -> None:
    """Remove the run ID from context."""
    structlog.contextvars.unbind_contextvars("run_id")
