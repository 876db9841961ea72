import logging
import sys
from typing import Optional

import sentry_sdk
import structlog

from symtope.core.config import Settings, resolve


def configure_logging(settings: Optional[Settings] = None) -> None:
    settings = resolve(settings)
    level = getattr(logging, settings.LOG_LEVEL, logging.WARNING)
    renderer = (
        structlog.processors.JSONRenderer()
        if settings.LOG_JSON
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.add_log_level,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def configure_sentry(settings: Optional[Settings] = None, integrations=None) -> bool:
    settings = resolve(settings)
    if not settings.SENTRY_DSN:
        return False
    sentry_sdk.init(
        dsn=settings.SENTRY_DSN,
        integrations=integrations or [],
        environment=settings.SENTRY_ENVIRONMENT,
        traces_sample_rate=1.0,
    )
    return True
