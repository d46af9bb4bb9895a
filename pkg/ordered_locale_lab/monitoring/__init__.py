"""Monitoring module for structured logging and search metrics.

- Structured JSON logging for production, console output for development
- Run IDs for grouping the events of one invocation
- Metrics dataclasses for coverage searches and exhaustive checks
"""

from ordered_locale_lab.monitoring.logging import (
    bind_run_id,
    configure_logging,
    get_logger,
    unbind_run_id,
)
from ordered_locale_lab.monitoring.metrics import CheckMetrics, SearchMetrics

__all__ = [
    "configure_logging",
    "get_logger",
    "bind_run_id",
    "unbind_run_id",
    "SearchMetrics",
    "CheckMetrics",
]
