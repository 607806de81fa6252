# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from __future__ import annotations

import io
from pathlib import Path

import pytest

from rll.shift_codes.codebook_io import (
    format_word,
    load_codebook,
    parse_codebook,
    parse_word,
    read_provenance,
    write_codebook,
)
from rll.shift_codes.data_classes import PositionVector
from rll.shift_codes.exceptions import InvalidParametersError, RepresentationError


class TestParseWord:
    @pytest.mark.parametrize(
        "line, expected",
        [
            ("0100101", PositionVector((2, 5, 7), 7)),
            ("7: 2,5,7", PositionVector((2, 5, 7), 7)),
            ("7:2, 5, 7", PositionVector((2, 5, 7), 7)),
            ("  1 ", PositionVector((1,), 1)),
        ],
    )
    def test_forms(self, line: str, expected: PositionVector) -> None:
        assert parse_word(line) == expected

    @pytest.mark.parametrize("line", ["7: 2,x,7", "x: 1", "0100", "7: 5,2"])
    def test_malformed(self, line: str) -> None:
        with pytest.raises(RepresentationError):
            parse_word(line)


class TestParseCodebook:
    def test_skips_comments_and_blanks(self) -> None:
        # WHEN
        n, words = parse_codebook(['# {"size": 2}', "", "0101", "# note", "4: 1,4"])

        # THEN
        assert n == 4
        assert words == [PositionVector((2, 4), 4), PositionVector((1, 4), 4)]

    def test_mixed_lengths(self) -> None:
        # WHEN
        with pytest.raises(RepresentationError) as exc_info:
            parse_codebook(["0101", "00101"])

        # THEN
        assert str(exc_info.value).startswith("Line 2:")

    def test_line_number_of_malformed_word(self) -> None:
        with pytest.raises(RepresentationError) as exc_info:
            parse_codebook(["0101", "# comment", "01x1"])
        assert str(exc_info.value).startswith("Line 3:")

    def test_empty(self) -> None:
        assert parse_codebook(["# nothing here"]) == (None, [])


class TestWriteCodebook:
    def test_bits_with_provenance(self) -> None:
        # GIVEN
        buffer = io.StringIO()
        words = [PositionVector((2, 4), 4), PositionVector((4,), 4)]

        # WHEN
        write_codebook(buffer, words, provenance={"size": 2, "n": 4})

        # THEN
        assert buffer.getvalue() == '# {"n": 4, "size": 2}\n0101\n0001\n'
        assert read_provenance(io.StringIO(buffer.getvalue())) == {"n": 4, "size": 2}

    def test_positions(self) -> None:
        assert format_word(PositionVector((2, 4), 4), "positions") == "4: 2,4"

    def test_unknown_format(self) -> None:
        with pytest.raises(InvalidParametersError):
            format_word(PositionVector((2, 4), 4), "hex")

    def test_no_provenance(self) -> None:
        assert read_provenance(["", "# just a comment", "0101"]) is None
        assert read_provenance(["0101"]) is None

    def test_load(self, tmp_path: Path) -> None:
        # GIVEN
        path = tmp_path / "code.txt"
        with open(path, "w", encoding="utf8") as fh:
            write_codebook(fh, [PositionVector((3, 6), 6)], fmt="positions")

        # THEN
        assert load_codebook(path) == (6, [PositionVector((3, 6), 6)])
