# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Subcommands of the rll-shift-codes command line

Each subcommand turns a Config into the text it emits (CSV, JSON or a codebook) and an exit
code. Logs go to stderr only, so identical invocations emit byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence

import yaml

from ..asymptotics import (
    sigma,
    solve_rho_w,
    table1,
    typical_adjacent_fraction,
    typical_profile,
    weight_interval,
)
from ..bounds import eval_bounds
from ..channel import NoiseSpec, run_simulation
from ..codebook_io import load_codebook, read_provenance, write_codebook
from ..data_classes import DKParams, format_extended, parse_k
from ..data_const import (
    ALLOWED_CODEBOOK_FORMATS,
    ALLOWED_METRICS,
    CODEBOOK_FORMAT_BITS,
    DEFAULT_COSET_BUDGET,
    DEFAULT_NOISE_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    EXIT_VERIFICATION_FAILED,
    METRIC_ASYMMETRIC,
)
from ..exceptions import (
    InvalidParametersError,
    RepresentationError,
    ShiftCodesError,
    VerificationError,
)
from ..lattices import extract_code
from ..metrics import (
    Codebook,
    ball_a,
    ball_s,
    corrects_asym,
    corrects_asym_operational,
    corrects_sym,
    corrects_sym_operational,
)
from ..optimum import exact_optimum, optimum_report
from ..sequences import count_n, count_nW, enumerate_positions, from_positions, weight_range
from ..utilities.log_utils import configure_logging
from .config import Config, load_config_file, merge_config, parse_precision, validate_against_schema

_logger = logging.getLogger(__name__)

PROG = "rll-shift-codes"
# Subcommands that read a codebook and take their defaults from its header
CODE_SUBCOMMANDS = ("check", "simulate")


@dataclass(frozen=True)
class CommandResult:
    text: str
    exit_code: int = EXIT_OK


def _fmt(x: float, digits: Optional[int]) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x) if digits is None else f"{x:.{digits}f}"


def _num(x: Optional[float], digits: Optional[int]) -> Any:
    """Float for JSON, rounded to the requested precision."""
    if x is None:
        return None
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x if digits is None else round(x, digits)


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _load_code(config: Config, p: DKParams) -> Codebook:
    config.require("code")
    n, words = load_codebook(config.code)  # type: ignore[arg-type]
    return Codebook(p, 0 if n is None else n, words)


def header_defaults(path: Optional[str]) -> dict[str, Any]:
    """
    Values of d, k, metric and t recorded in the provenance header that `construct` writes.

    :returns: An empty mapping for a missing file or a codebook without a header
    :raises RepresentationError: If the header is not valid provenance
    """
    if not path:
        return {}
    try:
        with open(path, encoding="utf8") as fh:
            provenance = read_provenance(fh)
    except OSError:
        return {}
    except ValueError as e:
        raise RepresentationError(f"Malformed provenance header in {path}: {e}")
    if provenance is None:
        return {}
    validate_against_schema(provenance, "provenance")
    return {
        "d": provenance["d"],
        "k": str(provenance["k"]),
        "metric": provenance["metric"],
        "t": provenance["t"],
    }


def _asymmetric_budgets(config: Config) -> tuple[int, int]:
    if config.t_right is None and config.t_left is None:
        config.require("t")
        return int(config.t), 0  # type: ignore[arg-type]
    return config.t_right or 0, config.t_left or 0


def _parse_pair(text: str) -> DKParams:
    d, _, k = text.partition(",")
    try:
        return DKParams(int(d), parse_k(k))
    except ValueError as e:
        raise InvalidParametersError(f"Invalid (d,k) pair {text!r}: {e}")


def count_command(config: Config) -> CommandResult:
    config.require("n")
    return CommandResult(f"{count_n(config.params, config.n)}\n")  # type: ignore[arg-type]


def count_w_command(config: Config) -> CommandResult:
    config.require("n")
    p = config.params
    n = int(config.n)  # type: ignore[arg-type]
    if config.W is not None:
        weights = [config.W]
    else:
        bounds = weight_range(p, n)
        weights = [] if bounds is None else list(range(bounds[0], bounds[1] + 1))
    return CommandResult(_csv(["n", "W", "count"], [[n, W, count_nW(p, n, W)] for W in weights]))


def enumerate_command(config: Config) -> CommandResult:
    config.require("n")
    fmt = config.output_format or CODEBOOK_FORMAT_BITS
    if fmt not in ALLOWED_CODEBOOK_FORMATS:
        raise InvalidParametersError(f"enumerate writes bits or positions, not {fmt}")
    lines = []
    for v in enumerate_positions(config.params, config.n, config.W):  # type: ignore[arg-type]
        lines.append(from_positions(v) if fmt == CODEBOOK_FORMAT_BITS else str(v))
    return CommandResult("".join(line + "\n" for line in lines))


def asymptotics_command(config: Config) -> CommandResult:
    p = config.params
    if config.table:
        return CommandResult(_table_csv([p], config))
    digits = config.digits
    profile = typical_profile(p)
    lower, upper = weight_interval(p)
    data: dict[str, Any] = {
        "d": p.d,
        "k": format_extended(p.k),
        "rho": _num(profile.rho, digits),
        "capacity": _num(-math.log2(profile.rho), digits),
        "w_star": _num(profile.w_star, digits),
        "lambda_star": {str(j): _num(v, digits) for j, v in profile.lambda_star.items()},
        "weight_interval": [_num(lower, digits), _num(upper, digits)],
        "adjacent_fraction": _num(typical_adjacent_fraction(p), digits),
    }
    if config.w is not None:
        data["w"] = config.w
        data["sigma"] = _num(sigma(p, config.w), digits)
        data["rho_w"] = (
            _num(solve_rho_w(p, config.w).rho_w, digits) if lower < config.w < upper else None
        )
    return CommandResult(_json(data))


def _table_csv(params: Sequence[DKParams], config: Config) -> str:
    digits = config.digits
    columns = table1(params, digits=digits, threads=config.threads)
    header = ["quantity"] + [str(c.p) for c in columns]
    rows: list[list[str]] = [
        ["rho"] + [_fmt(c.rho, digits) for c in columns],
        ["-log rho"] + [_fmt(c.capacity, digits) for c in columns],
        ["w*"] + [_fmt(c.w_star, digits) for c in columns],
    ]
    runs = sorted({j for c in columns for j in c.lambda_star})
    for j in runs:
        rows.append(
            [f"lambda_{j}*"]
            + [_fmt(c.lambda_star[j], digits) if j in c.lambda_star else "" for c in columns]
        )
    return _csv(header, rows)


def table1_command(config: Config) -> CommandResult:
    return CommandResult(_table_csv([_parse_pair(pair) for pair in config.pairs], config))


def construct_command(config: Config) -> CommandResult:
    config.require("n", "W", "t")
    code = extract_code(
        config.params,
        config.n,  # type: ignore[arg-type]
        config.W,  # type: ignore[arg-type]
        config.t,  # type: ignore[arg-type]
        config.metric,
        coset_budget=config.budget or DEFAULT_COSET_BUDGET,
    )
    provenance = code.provenance()
    validate_against_schema(provenance, "provenance")
    buffer = io.StringIO()
    write_codebook(
        buffer, code.words, config.output_format or CODEBOOK_FORMAT_BITS, provenance=provenance
    )
    return CommandResult(buffer.getvalue())


def check_command(config: Config) -> CommandResult:
    p = config.params
    code = _load_code(config, p)
    budget = config.budget or DEFAULT_NOISE_BUDGET
    report: dict[str, Any] = {"metric": config.metric, "n": code.n, "size": len(code)}
    if config.metric == METRIC_ASYMMETRIC:
        right, left = _asymmetric_budgets(config)
        report["t_right"] = right
        report["t_left"] = left
        required = right + left + 1
        corrects = corrects_asym(code, right, left)
        operational = (
            corrects_asym_operational(code, right, left, budget) if config.operational else None
        )
    else:
        config.require("t")
        t = int(config.t)  # type: ignore[arg-type]
        report["t"] = t
        required = 2 * t + 1
        corrects = corrects_sym(code, t)
        operational = corrects_sym_operational(code, t, budget) if config.operational else None
    min_d, pair = code.closest_pair(config.metric)
    report["required_distance"] = required
    report["min_distance"] = "inf" if math.isinf(min_d) else int(min_d)
    report["corrects"] = corrects
    report["operational"] = operational
    report["witness_pair"] = None if corrects or pair is None else [str(pair[0]), str(pair[1])]
    validate_against_schema(report, "check_report")
    if operational is not None and operational != corrects:
        _logger.error("Metric and operational checks disagree")
    passed = corrects and operational in (None, True)
    return CommandResult(_json(report), EXIT_OK if passed else EXIT_VERIFICATION_FAILED)


def optimum_command(config: Config) -> CommandResult:
    config.require("n", "t")
    report = optimum_report(
        config.params,
        config.n,  # type: ignore[arg-type]
        config.t,  # type: ignore[arg-type]
        config.metric,
        budget=config.budget or DEFAULT_SEARCH_BUDGET,
        threads=config.threads,
    )
    return CommandResult(_json(report.to_dict()))


def bounds_command(config: Config) -> CommandResult:
    config.require("n", "t")
    p = config.params
    n = int(config.n)  # type: ignore[arg-type]
    t = int(config.t)  # type: ignore[arg-type]
    exact: dict[str, Optional[int]] = {"a": None, "s": None}
    if config.exact:
        for metric in ALLOWED_METRICS:
            exact[metric] = exact_optimum(
                p, n, t, metric, config.budget or DEFAULT_SEARCH_BUDGET, config.threads
            )
    data = eval_bounds(p, n, t, exact_a=exact["a"], exact_s=exact["s"]).to_dict()
    digits = config.digits
    data = {key: _num(v, digits) if isinstance(v, float) else v for key, v in data.items()}
    validate_against_schema(data, "bound_report")
    if config.output_format == "csv":
        keys = sorted(data)
        return CommandResult(_csv(keys, [["" if data[key] is None else data[key] for key in keys]]))
    return CommandResult(_json(data))


def _simulation_noise(config: Config) -> NoiseSpec:
    """
    Shift model for simulate. --budget (or else --t) is the number of shifts the code is meant to
    correct; for metric a it is split between both directions unless --t-right/--t-left are set.
    """
    if config.metric == METRIC_ASYMMETRIC and (
        config.t_right is not None or config.t_left is not None
    ):
        return NoiseSpec.asymmetric(config.t_right or 0, config.t_left or 0)
    shifts = config.budget if config.budget is not None else config.t
    if shifts is None:
        raise InvalidParametersError("'simulate' needs --budget or --t")
    if config.metric == METRIC_ASYMMETRIC:
        return NoiseSpec.asymmetric(shifts - shifts // 2, shifts // 2)
    return NoiseSpec.symmetric(shifts)


def simulate_command(config: Config) -> CommandResult:
    if config.seed is None:
        raise InvalidParametersError("'simulate' needs --seed so that runs are reproducible")
    p = config.params
    code = _load_code(config, p)
    noise = _simulation_noise(config)
    report = run_simulation(code, noise, config.trials, config.seed, config.threads)
    data = report.to_dict()
    data["rate"] = _num(report.rate, config.digits)
    data["metric"] = config.metric
    if noise.metric == METRIC_ASYMMETRIC:
        data["noise"] = {"t_right": noise.t_right, "t_left": noise.t_left}
    else:
        data["noise"] = {"budget": noise.budget}
    return CommandResult(_json(data))


def balls_command(config: Config) -> CommandResult:
    config.require("m", "r")
    rows = [
        [m, r, ball_a(m, r), ball_s(m, r)]
        for m in range(int(config.m) + 1)  # type: ignore[arg-type]
        for r in range(int(config.r) + 1)  # type: ignore[arg-type]
    ]
    return CommandResult(_csv(["m", "r", "ball_a", "ball_s"], rows))


def golden_command(config: Config) -> CommandResult:
    # The runner imports this module
    from ..golden_output_test_runner import run_golden_output_tests

    config.require("tests_dir")
    failed, succeeded = run_golden_output_tests(config.tests_dir)  # type: ignore[arg-type]
    if failed:
        return CommandResult(
            f"Failed {failed} tests, succeeded {succeeded}.\n", EXIT_VERIFICATION_FAILED
        )
    return CommandResult(f"All tests passed, ran {succeeded} total.\n")


COMMANDS: dict[str, Callable[[Config], CommandResult]] = {
    "count": count_command,
    "count-w": count_w_command,
    "enumerate": enumerate_command,
    "asymptotics": asymptotics_command,
    "table1": table1_command,
    "construct": construct_command,
    "check": check_command,
    "optimum": optimum_command,
    "bounds": bounds_command,
    "simulate": simulate_command,
    "balls": balls_command,
    "golden": golden_command,
}


def _add_constraint(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d", type=int, help="Minimum zero run length")
    parser.add_argument("--k", type=str, help="Maximum zero run length, or 'inf'")


def _add_metric(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--metric", choices=ALLOWED_METRICS, help="a (asymmetric) or s")
    parser.add_argument("--t", type=int, help="Shift budget")
    parser.add_argument("--t-right", dest="t_right", type=int, help="Right shift budget (a)")
    parser.add_argument("--t-left", dest="t_left", type=int, help="Left shift budget (a)")


def _flag(parser: argparse.ArgumentParser, name: str, help: str) -> None:
    # store_const keeps "not given" distinct from False so config files can set it
    parser.add_argument(name, action="store_const", const=True, default=None, help=help)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML file of default values")
    common.add_argument(
        "--log-level",
        dest="log_level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    common.add_argument("--log-file", dest="log_file")
    common.add_argument("--threads", type=int, help="Upper bound on worker threads")
    common.add_argument(
        "--precision", type=parse_precision, help="Decimals for floats (default 3), or 'full'"
    )
    common.add_argument("--output", "--out", dest="output", help="Write to a file, not stdout")
    common.add_argument(
        "--budget", type=int, help="Search, coset or noise-space budget; shifts for simulate"
    )
    common.add_argument(
        "--seed", type=int, help="Seed for simulate; the other subcommands are deterministic"
    )

    parser = argparse.ArgumentParser(
        prog=PROG, description="Run-length-limited sequences and shift-correcting codes"
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    sub = subparsers.add_parser("count", parents=[common], help="Count S(n)")
    _add_constraint(sub)
    sub.add_argument("--n", type=int)

    sub = subparsers.add_parser("count-w", parents=[common], help="CSV of S(n, W)")
    _add_constraint(sub)
    sub.add_argument("--n", type=int)
    sub.add_argument("--W", type=int)

    sub = subparsers.add_parser("enumerate", parents=[common], help="List the strings")
    _add_constraint(sub)
    sub.add_argument("--n", type=int)
    sub.add_argument("--W", type=int)
    sub.add_argument("--format", dest="output_format", choices=ALLOWED_CODEBOOK_FORMATS)

    sub = subparsers.add_parser("asymptotics", parents=[common], help="rho, w*, lambda*, sigma")
    _add_constraint(sub)
    sub.add_argument("--w", type=float, help="Relative weight at which to evaluate sigma")
    _flag(sub, "--table", "Emit the typical quantities as a CSV table, like table1")

    sub = subparsers.add_parser("table1", parents=[common], help="CSV of typical quantities")
    sub.add_argument("--pairs", nargs="+", help="Constraints as d,k (k may be inf)")

    sub = subparsers.add_parser("construct", parents=[common], help="Lattice coset code")
    _add_constraint(sub)
    _add_metric(sub)
    sub.add_argument("--n", type=int)
    sub.add_argument("--W", type=int)
    sub.add_argument("--format", dest="output_format", choices=ALLOWED_CODEBOOK_FORMATS)

    sub = subparsers.add_parser("check", parents=[common], help="Verify a codebook")
    _add_constraint(sub)
    _add_metric(sub)
    sub.add_argument("--code", help="Codebook file")
    _flag(sub, "--operational", "Also run the exhaustive channel check")

    sub = subparsers.add_parser("optimum", parents=[common], help="Exact optimal code size")
    _add_constraint(sub)
    _add_metric(sub)
    sub.add_argument("--n", type=int)

    sub = subparsers.add_parser("bounds", parents=[common], help="Asymptotic bounds")
    _add_constraint(sub)
    sub.add_argument("--n", type=int)
    sub.add_argument("--t", type=int)
    sub.add_argument("--format", dest="output_format", choices=["json", "csv"])
    sub.add_argument(
        "--csv",
        dest="output_format",
        action="store_const",
        const="csv",
        help="Same as --format csv",
    )
    _flag(sub, "--exact", "Also compute exact optima for both metrics")

    sub = subparsers.add_parser("simulate", parents=[common], help="Monte-Carlo decoding")
    _add_constraint(sub)
    _add_metric(sub)
    sub.add_argument("--code", help="Codebook file")
    sub.add_argument("--trials", type=int)

    sub = subparsers.add_parser("balls", parents=[common], help="CSV of ball sizes")
    sub.add_argument("--m", type=int)
    sub.add_argument("--r", type=int)

    sub = subparsers.add_parser("golden", parents=[common], help="Run golden output tests")
    sub.add_argument("--tests-dir", dest="tests_dir")

    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """
    Parses arguments and runs one subcommand.

    :returns: The exit code and the text to emit on stdout (empty when --output was given)
    """
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR), ""

    given = {key: value for key, value in vars(ns).items() if key not in ("subcommand", "config")}
    try:
        file_values = load_config_file(ns.config) if ns.config else {}
        if ns.subcommand in CODE_SUBCOMMANDS:
            code_path = given.get("code") or file_values.get("code")
            file_values = {**header_defaults(code_path), **file_values}
        config = merge_config(ns.subcommand, file_values, given)
    except (ShiftCodesError, OSError, yaml.YAMLError) as e:
        configure_logging(ns.log_level or "WARNING", ns.log_file)
        _logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE_ERROR, ""

    configure_logging(config.log_level, config.log_file)
    _logger.info(f"Running {config.subcommand}")
    try:
        result = COMMANDS[config.subcommand](config)
    except VerificationError as e:
        _logger.error(f"{config.subcommand} failed verification: {e}")
        return EXIT_VERIFICATION_FAILED, ""
    except (ShiftCodesError, OSError) as e:
        _logger.error(f"{config.subcommand} failed: {e}")
        return EXIT_USAGE_ERROR, ""

    if config.output:
        with open(config.output, "w", encoding="utf8") as fh:
            fh.write(result.text)
        return result.exit_code, ""
    return result.exit_code, result.text
