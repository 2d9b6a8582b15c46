"""Logging setup backed by rich."""
import logging
import os

from rich.logging import RichHandler

LOG_LEVEL_ENV = "TAUPREC_LOG_LEVEL"


def get_logger(name: str) -> logging.Logger:
    """Return the package logger for ``name``.

    Args:
        name (str): Usually ``__name__`` of the calling module.

    Returns:
        logging.Logger: The logger.
    """
    return logging.getLogger(name)


def configure_logging(verbose: bool = False) -> None:
    """Route the package loggers through a ``RichHandler``.

    Args:
        verbose (bool, optional): Force DEBUG level. Defaults to False, in
            which case ``TAUPREC_LOG_LEVEL`` (or WARNING) is used.
    """
    level = "DEBUG" if verbose else os.getenv(LOG_LEVEL_ENV, "WARNING").upper()

    root = logging.getLogger("tauprec")
    root.handlers.clear()
    root.addHandler(
        RichHandler(rich_tracebacks=True, show_path=False, markup=False)
    )
    root.setLevel(level)
    root.propagate = False
