# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Golden output tests for the command line

Each test is a directory holding command.txt (the arguments, shell quoted) and
expected_output.txt (the exit code and emitted text). A test without an expected output saves
its output as the new reference and counts as not succeeded.
"""

from __future__ import annotations

import difflib
import logging
import os
import shlex
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import TextIO

from .cli.commands import run
from .exceptions import InvalidParametersError

_logger = logging.getLogger(__name__)

COMMAND_FILE = "command.txt"
EXPECTED_OUTPUT_FILE = "expected_output.txt"
TEST_OUTPUT_FILE = "test_output.txt"
RESULTS_FILE = "test-golden-output-results.txt"


def _timestamp_string() -> str:
    return datetime.now(timezone.utc).astimezone().isoformat()


def read_command(command_file: str) -> list[str]:
    """Arguments from a command file; lines starting with # are comments."""
    with open(command_file, encoding="utf8") as fh:
        lines = [line for line in fh if not line.lstrip().startswith("#")]
    return shlex.split(" ".join(lines))


def render_output(exit_code: int, text: str) -> str:
    return f"exit code: {exit_code}\n{text}"


def run_golden_output_tests(tests_dir: str) -> tuple[int, int]:
    """
    Runs every golden output test in a directory and writes a results report next to them.

    :returns: The number of failed and succeeded tests
    :raises InvalidParametersError: If a test directory has no command file
    """
    count_succeeded = 0
    count_failed = 0
    tests_dir = os.path.normpath(tests_dir)

    results_file = os.path.join(tests_dir, RESULTS_FILE)
    with open(results_file, "w", encoding="utf8") as report_fh:
        for test_name in sorted(os.listdir(tests_dir)):
            test_dir = os.path.join(tests_dir, test_name)
            if not os.path.isdir(test_dir):
                continue
            report_fh.write(f"\nTimestamp: {_timestamp_string()}\n")
            report_fh.write(f"Running golden output test: {test_dir}\n")

            command_file = os.path.join(test_dir, COMMAND_FILE)
            if not os.path.isfile(command_file):
                raise InvalidParametersError(
                    f"Directory {test_dir} does not contain the expected command file: "
                    f"{command_file}."
                )

            if _run_golden_output_test(test_dir, command_file, report_fh):
                count_succeeded += 1
            else:
                count_failed += 1

        report_fh.write("\n")
        if count_failed:
            report_fh.write(f"Failed {count_failed} tests, succeeded {count_succeeded}.\n")
            _logger.warning(f"Failed {count_failed} golden output tests, see {results_file}")
        else:
            report_fh.write(f"All tests passed, ran {count_succeeded} total.\n")
        report_fh.write(f"Timestamp: {_timestamp_string()}\n")
    return count_failed, count_succeeded


def _run_golden_output_test(test_dir: str, command_file: str, report_fh: TextIO) -> bool:
    argv = read_command(command_file)
    _logger.info(f"Golden output test {os.path.basename(test_dir)}: {argv}")
    output = render_output(*run(argv))

    # If there's an expected output to compare with, do the comparison,
    # otherwise save the one we created to be that expected output.
    expected_file = os.path.join(test_dir, EXPECTED_OUTPUT_FILE)
    if os.path.exists(expected_file):
        with open(os.path.join(test_dir, TEST_OUTPUT_FILE), "w", encoding="utf8") as fh:
            fh.write(output)
        with open(expected_file, encoding="utf8") as fh:
            expected = fh.read()

        report_fh.write("\n")
        report_fh.write(f"{os.path.basename(test_dir)}\n")
        if expected != output:
            report_fh.write("Test failed, found differences\n")
            diff = "".join(
                difflib.unified_diff(
                    expected.splitlines(keepends=True),
                    output.splitlines(keepends=True),
                    "expected/" + EXPECTED_OUTPUT_FILE,
                    "test/" + TEST_OUTPUT_FILE,
                )
            )
            report_fh.write(diff)
            return False
        report_fh.write("Test succeeded\n")
        return True

    with open(expected_file, "w", encoding="utf8") as fh:
        fh.write(output)
    report_fh.write(f"Test cannot compare. Saved new reference to {EXPECTED_OUTPUT_FILE}.\n")
    # We generated the reference, so did not succeed a test.
    return False


if __name__ == "__main__":
    default_tests_dir = Path(__file__).parent.parent.parent.parent / "golden_output_tests"
    tests_dir = sys.argv[1] if len(sys.argv) > 1 else str(default_tests_dir)
    failed, _ = run_golden_output_tests(tests_dir)
    sys.exit(1 if failed else 0)
