# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import logging
import sys
from typing import Optional, Sequence

from .commands import run

__all__ = ["main"]
_logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    exit_code, text = run(argv)
    sys.stdout.write(text)
    sys.stdout.flush()
    _logger.debug(f"Exiting with code {exit_code}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
