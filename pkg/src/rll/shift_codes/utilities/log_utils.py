# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Logging setup for the command line
"""

import logging
import os
from logging.handlers import RotatingFileHandler
from typing import Optional, Union

LOGGING_FORMAT_FILE = (
    "%(asctime)s %(levelname)8s {%(threadName)-10s}:  %(module)s %(funcName)s: %(message)s"
)
LOGGING_FORMAT_COUT = (
    "[%(name)s] %(levelname)8s:  (%(threadName)-10s)  %(module)s %(funcName)s: %(message)s"
)
DATE_FORMAT = "%y%m%dZ%H%M%S"
MAX_LOG_BYTES = 10485760
LOG_BACKUP_COUNT = 5


def _has_file_handler(logger: logging.Logger, path: str) -> bool:
    return any(
        isinstance(h, RotatingFileHandler) and h.baseFilename == os.path.abspath(path)
        for h in logger.handlers
    )


def configure_logging(
    level: Union[int, str] = logging.WARNING, log_file: Optional[str] = None
) -> None:
    """
    Configures a stderr handler and, if log_file is given, a rotating file handler on the root
    logger. Repeated calls only update the level and add a file handler for a new log file.
    """
    logger = logging.root
    logger.setLevel(level.upper() if isinstance(level, str) else level)

    if not logger.hasHandlers():
        cout = logging.StreamHandler()
        cout.setFormatter(logging.Formatter(fmt=LOGGING_FORMAT_COUT, datefmt=DATE_FORMAT))
        logger.addHandler(cout)

    if log_file:
        path = os.path.expanduser(log_file)
        if _has_file_handler(logger, path):
            return
        directory = os.path.dirname(path)
        # create the directory if it doesn't exist yet
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        fh = RotatingFileHandler(path, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUP_COUNT)
        fh.setFormatter(logging.Formatter(fmt=LOGGING_FORMAT_FILE))
        logger.addHandler(fh)
