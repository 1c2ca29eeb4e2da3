"""
JSON log lines on stderr; stdout belongs to the report.

Jobs bind ``job_id`` and ``mode`` through structlog contextvars, so every line
a service emits during a run carries them.
"""
import logging
import sys
from typing import Any, Dict, Optional

import structlog

from okounkov.config import settings


def add_run_context(logger: Any, method_name: str, event_dict: Dict) -> Dict:
    event_dict.setdefault("app", settings.APP_NAME)
    event_dict.setdefault("version", settings.APP_VERSION)
    return event_dict


def configure_logging(level: Optional[str] = None) -> None:
    """(Re)configure logging; ``level`` overrides settings.LOG_LEVEL, e.g. from --log-level."""
    level = (level or settings.LOG_LEVEL).upper()
    logging.basicConfig(format="%(message)s", stream=sys.stderr, force=True)
    logging.getLogger().setLevel(getattr(logging, level, logging.INFO))
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            add_run_context,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(sort_keys=True),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


configure_logging()


def get_logger(name: str = __name__):
    return structlog.get_logger(name)
