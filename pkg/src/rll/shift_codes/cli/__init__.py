# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from .__main__ import main
from .commands import run
from .config import Config

__all__ = [
    "Config",
    "main",
    "run",
]
