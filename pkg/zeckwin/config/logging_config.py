"""
Console logging for the CLI.

Results go to stdout; log records go to stderr as ``[LEVEL] logger: message``.
"""
import logging
import sys
from typing import Optional

from zeckwin.config.settings import settings

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

def configure_logging(level: Optional[str] = None) -> None:
    root = logging.getLogger("zeckwin")
    root.setLevel((level or settings.LOG_LEVEL).upper())

    # Re-running run() in one process must not stack handlers
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.propagate = False
