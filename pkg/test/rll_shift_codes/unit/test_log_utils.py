# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from __future__ import annotations

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from unittest.mock import patch

import pytest

from rll.shift_codes.utilities.log_utils import MAX_LOG_BYTES, configure_logging


@pytest.fixture()
def bare_root() -> logging.Logger:
    """
    Pytest Fixture to return a logger without handlers that stands in for the root logger

    Returns:
        logging.Logger: A logger with no parent and no handlers
    """
    logger = logging.Logger("bare-root")
    yield logger
    for handler in logger.handlers:
        handler.close()


class TestConfigureLogging:
    def test_stream_handler(self, bare_root: logging.Logger) -> None:
        # WHEN
        with patch("rll.shift_codes.utilities.log_utils.logging.root", bare_root):
            configure_logging("debug")

        # THEN
        assert bare_root.level == logging.DEBUG
        assert [type(h) for h in bare_root.handlers] == [logging.StreamHandler]

    def test_file_handler(self, bare_root: logging.Logger, tmp_path: Path) -> None:
        # GIVEN
        log_file = tmp_path / "logs" / "run.log"

        # WHEN
        with patch("rll.shift_codes.utilities.log_utils.logging.root", bare_root):
            configure_logging(logging.INFO, str(log_file))

        # THEN
        assert log_file.parent.is_dir()
        file_handlers = [h for h in bare_root.handlers if isinstance(h, RotatingFileHandler)]
        assert len(file_handlers) == 1
        assert file_handlers[0].maxBytes == MAX_LOG_BYTES

    def test_keeps_existing_handlers(self, bare_root: logging.Logger) -> None:
        # GIVEN
        existing = logging.NullHandler()
        bare_root.addHandler(existing)

        # WHEN
        with patch("rll.shift_codes.utilities.log_utils.logging.root", bare_root):
            configure_logging("debug")

        # THEN
        assert bare_root.handlers == [existing]
        assert bare_root.level == logging.DEBUG

    def test_repeated_calls_update_level(self, bare_root: logging.Logger, tmp_path: Path) -> None:
        # GIVEN
        log_file = str(tmp_path / "run.log")

        # WHEN
        with patch("rll.shift_codes.utilities.log_utils.logging.root", bare_root):
            configure_logging("warning", log_file)
            configure_logging("info", log_file)

        # THEN
        assert bare_root.level == logging.INFO
        assert [type(h) for h in bare_root.handlers] == [
            logging.StreamHandler,
            RotatingFileHandler,
        ]
