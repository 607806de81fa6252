# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Reading and writing codebooks as text

One word per line, either as ASCII 0/1 or as `n: x1,x2,...,xW`. Blank lines and lines starting
with `#` are ignored. A first line `# {json}` carries provenance.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterable, Optional, TextIO

from .data_classes import PositionVector
from .data_const import (
    CODEBOOK_COMMENT_PREFIX,
    CODEBOOK_FORMAT_BITS,
    CODEBOOK_FORMAT_POSITIONS,
)
from .exceptions import InvalidParametersError, RepresentationError
from .sequences import from_positions, to_positions

_logger = logging.getLogger(__name__)


def parse_word(line: str) -> PositionVector:
    """
    Parses one word in either text form.

    :raises RepresentationError: If the line is malformed
    """
    text = line.strip()
    if ":" in text:
        head, _, tail = text.partition(":")
        try:
            n = int(head)
            positions = tuple(int(x) for x in tail.replace(" ", "").split(",") if x)
        except ValueError:
            raise RepresentationError(f"Malformed position vector {text!r}")
        return PositionVector(positions, n)
    return to_positions(text)


def parse_codebook(lines: Iterable[str]) -> tuple[Optional[int], list[PositionVector]]:
    """
    Parses codebook lines.

    :returns: The common length (None for an empty codebook) and the words
    :raises RepresentationError: If a line is malformed or lengths differ
    """
    words = []
    n: Optional[int] = None
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith(CODEBOOK_COMMENT_PREFIX):
            continue
        try:
            word = parse_word(text)
        except RepresentationError as e:
            raise RepresentationError(f"Line {number}: {e}")
        if n is None:
            n = word.n
        elif word.n != n:
            raise RepresentationError(
                f"Line {number}: word of length {word.n} in a codebook of length {n}"
            )
        words.append(word)
    return n, words


def read_provenance(lines: Iterable[str]) -> Optional[dict]:
    for line in lines:
        text = line.strip()
        if text.startswith(CODEBOOK_COMMENT_PREFIX) and text[1:].strip().startswith("{"):
            return json.loads(text[1:].strip())
        if text:
            return None
    return None


def load_codebook(path: Path) -> tuple[Optional[int], list[PositionVector]]:
    with open(path, encoding="utf8") as fh:
        return parse_codebook(fh)


def format_word(word: PositionVector, fmt: str) -> str:
    if fmt == CODEBOOK_FORMAT_BITS:
        return from_positions(word)
    if fmt == CODEBOOK_FORMAT_POSITIONS:
        return str(word)
    raise InvalidParametersError(f"Unknown codebook format {fmt!r}")


def write_codebook(
    fh: TextIO,
    words: Iterable[PositionVector],
    fmt: str = CODEBOOK_FORMAT_BITS,
    provenance: Optional[dict] = None,
) -> None:
    if provenance is not None:
        fh.write(f"{CODEBOOK_COMMENT_PREFIX} {json.dumps(provenance, sort_keys=True)}\n")
    for word in words:
        fh.write(format_word(word, fmt) + "\n")
