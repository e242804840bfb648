"""Logging helpers for the FCM toolkit."""

import logging
import os
import sys

from lib.core.constants.app_constants import DEFAULT_LOG_LEVEL, LOG_LEVEL_ENV


def configure_logger() -> None:
    """Configure root logger to stderr so stdout stays free for reports."""
    log_level_name = os.getenv(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).upper()
    log_level = getattr(logging, log_level_name, logging.INFO)
    if not isinstance(log_level, int):
        log_level = logging.INFO
    logging.basicConfig(
        level=log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s - %(message)s",
    )
