"""
Logging Setup

Single stderr handler for the whole toolkit. Command output goes to stdout,
so logs never change what a command prints.
"""

import logging
import sys

LOG_FORMAT = "%(asctime)s level=%(levelname)s logger=%(name)s %(message)s"

_configured = False


def setup_logging(level: str = "INFO") -> None:
    """
    Configure the package logger.

    Args:
        level: Logging level name.
    """
    global _configured

    root = logging.getLogger("app")
    root.setLevel(level.upper())
    if _configured:
        return

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.propagate = False
    _configured = True
