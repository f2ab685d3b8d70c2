"""Shared logging setup for parideals.

Every module obtains its logger through :func:`get_logger`, so all output goes
through one handler with one format.  Entry points adjust verbosity with
:func:`set_root_level` (driven by ``--verbose`` / ``--quiet`` / ``--log-level``).

>>> from parideals.logging_utils import get_logger
>>> logger = get_logger(__name__)
"""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from typing import Final, Iterator, Optional

_FORMAT: Final[str] = "%(asctime)s %(name)s %(levelname)s: %(message)s"
_DATEFMT: Final[str] = "%Y-%m-%d %H:%M:%S"

_INITIALISED: bool = False


def _initialise_root_logger() -> None:
    """Attach the package handler to the root logger, once per process."""

    global _INITIALISED  # noqa: WPS420

    if _INITIALISED:
        return

    root = logging.getLogger()
    # pytest and embedding applications may have configured logging already
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT, datefmt=_DATEFMT))
        root.addHandler(handler)

    _INITIALISED = True


def get_logger(name: str, *, level: Optional[int] = None) -> logging.Logger:
    """Return the named logger, making sure the shared handler exists.

    The root level is left alone; pass *level* only to tune a single module.
    """

    _initialise_root_logger()
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(level)
    return logger


def set_root_level(level: int) -> None:
    """Attach the shared handler if needed and set the root logger level."""
    _initialise_root_logger()
    logging.getLogger().setLevel(level)


@contextmanager
def log_duration(logger: logging.Logger, label: str) -> Iterator[None]:
    """Log the wall time spent inside the ``with`` block at DEBUG level."""
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.debug("%s took %.3fs", label, time.perf_counter() - start)
