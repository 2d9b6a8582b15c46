"""Tests for logger module."""
import logging
import os
from unittest.mock import patch

from rich.logging import RichHandler

from tauprec.logger import LOG_LEVEL_ENV, configure_logging, get_logger


def test_configure_logging_verbose():
    configure_logging(verbose=True)
    root = logging.getLogger("tauprec")
    assert root.level == logging.DEBUG
    assert len(root.handlers) == 1
    assert isinstance(root.handlers[0], RichHandler)


def test_configure_logging_from_environment():
    with patch.dict(os.environ, {LOG_LEVEL_ENV: "info"}):
        configure_logging()
    assert logging.getLogger("tauprec").level == logging.INFO


def test_configure_logging_is_idempotent():
    configure_logging()
    configure_logging()
    assert len(logging.getLogger("tauprec").handlers) == 1


def test_get_logger_is_a_child_of_the_package_logger():
    assert get_logger("tauprec.krylov").parent is logging.getLogger("tauprec")
