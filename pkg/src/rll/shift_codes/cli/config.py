# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Command line configuration

Values are merged in order: built-in defaults, then a YAML configuration file (--config), then
command line flags. The merged mapping is validated against schemas/config.schema.json.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Optional, Union

import jsonschema
import yaml

from ..data_classes import DKParams, parse_k
from ..data_const import (
    DEFAULT_PRECISION,
    DEFAULT_TRIALS,
    FULL_PRECISION,
    INF_LITERAL,
    METRIC_SYMMETRIC,
    TABLE1_DEFAULT_PAIRS,
)
from ..exceptions import InvalidParametersError

_logger = logging.getLogger(__name__)

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "schemas")


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    """
    Loads schemas/<name>.schema.json from the package.
    """
    with open(os.path.join(SCHEMA_DIR, f"{name}.schema.json"), encoding="utf8") as fh:
        return json.load(fh)


def validate_against_schema(data: Any, name: str) -> None:
    """
    :raises InvalidParametersError: If data does not satisfy the schema
    """
    try:
        jsonschema.validate(data, load_schema(name))
    except jsonschema.ValidationError as e:
        location = ".".join(str(part) for part in e.absolute_path)
        where = f" at '{location}'" if location else ""
        raise InvalidParametersError(f"Invalid {name}{where}: {e.message}")


@dataclass
class Config:
    """
    Parameters of one command line invocation. Fields a subcommand does not use stay None.
    """

    subcommand: str
    d: Optional[int] = None
    # integer or "inf"
    k: str = INF_LITERAL
    n: Optional[int] = None
    W: Optional[int] = None
    t: Optional[int] = None
    t_right: Optional[int] = None
    t_left: Optional[int] = None
    metric: str = METRIC_SYMMETRIC
    seed: Optional[int] = None
    trials: int = DEFAULT_TRIALS
    budget: Optional[int] = None
    threads: Optional[int] = None
    precision: Union[int, str] = DEFAULT_PRECISION
    output: Optional[str] = None
    output_format: Optional[str] = None
    code: Optional[str] = None
    pairs: list[str] = field(default_factory=lambda: list(TABLE1_DEFAULT_PAIRS))
    m: Optional[int] = None
    r: Optional[int] = None
    w: Optional[float] = None
    exact: bool = False
    table: bool = False
    operational: bool = False
    tests_dir: Optional[str] = None
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @property
    def params(self) -> DKParams:
        """
        :raises InvalidParametersError: If d is missing or (d, k) is not a valid constraint
        """
        if self.d is None:
            raise InvalidParametersError(f"'{self.subcommand}' needs --d")
        return DKParams(self.d, parse_k(self.k))

    @property
    def digits(self) -> Optional[int]:
        """Decimal places for floats, or None for full precision."""
        if self.precision == FULL_PRECISION:
            return None
        return int(self.precision)

    def require(self, *names: str) -> None:
        """
        :raises InvalidParametersError: If any of the named fields is unset
        """
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise InvalidParametersError(f"'{self.subcommand}' needs {flags}")


def parse_precision(value: str) -> Union[int, str]:
    """Parses --precision, which is a number of decimals or 'full'."""
    text = str(value).strip().lower()
    if text == FULL_PRECISION:
        return FULL_PRECISION
    try:
        digits = int(text)
    except ValueError:
        raise InvalidParametersError(
            f"Precision must be a number of decimals or '{FULL_PRECISION}', got {value!r}"
        )
    if digits < 0:
        raise InvalidParametersError(f"Precision must be non-negative, got {digits}")
    return digits


def load_config_file(path: str) -> dict[str, Any]:
    """
    Reads a YAML mapping of configuration values. Keys may use '-' or '_'.

    :raises InvalidParametersError: If the file does not hold a mapping
    """
    with open(os.path.expanduser(path), encoding="utf8") as fh:
        data = yaml.safe_load(fh)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise InvalidParametersError(f"Configuration file {path} must contain a mapping")
    return {str(key).replace("-", "_"): value for key, value in data.items()}


def merge_config(
    subcommand: str, file_values: dict[str, Any], cli_values: dict[str, Any]
) -> Config:
    """
    Merges configuration file values and command line values (None meaning "not given") into a
    Config, validating the merged mapping first.

    :raises InvalidParametersError: If the merged values fail validation
    """
    merged: dict[str, Any] = {}
    for source in (file_values, cli_values):
        for key, value in source.items():
            if value is not None:
                merged[key] = value
    merged.pop("subcommand", None)
    merged.pop("config", None)
    if "k" in merged and not isinstance(merged["k"], str):
        merged["k"] = str(merged["k"])
    validate_against_schema(merged, "config")
    _logger.debug(f"Merged configuration for {subcommand}: {merged}")
    return Config(subcommand=subcommand, **merged)
