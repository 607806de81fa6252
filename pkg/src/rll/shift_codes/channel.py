# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Bit-shift channel, minimum distance decoding and Monte-Carlo failure rates
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .data_classes import PositionVector, ShiftPattern
from .data_const import (
    MAX_RESAMPLES,
    METRIC_ASYMMETRIC,
    METRIC_SYMMETRIC,
    SIMULATION_CHUNK_SIZE,
)
from .exceptions import DecodeFailure, InvalidParametersError, ShiftCodesError
from .metrics import Codebook, apply_pattern, check_metric, distance

_logger = logging.getLogger(__name__)


class Verdict(Enum):
    REJECTED = "rejected"
    AMBIGUOUS = "ambiguous"


REJECTED = Verdict.REJECTED
AMBIGUOUS = Verdict.AMBIGUOUS


@dataclass(frozen=True)
class ChannelOutcome:
    input: PositionVector
    pattern: ShiftPattern
    output: Union[PositionVector, Verdict]
    t_used: int

    @property
    def accepted(self) -> bool:
        return isinstance(self.output, PositionVector)


def transmit(x: PositionVector, f: ShiftPattern) -> ChannelOutcome:
    """
    Sends x through the channel with shift pattern f.

    The output is REJECTED when shifted positions collide, cross or leave [1, n].

    :raises InvalidParametersError: If len(f) differs from the weight of x
    """
    z = apply_pattern(x, f)
    return ChannelOutcome(
        input=x, pattern=f, output=REJECTED if z is None else z, t_used=f.total
    )


def decode(
    code: Codebook,
    z: PositionVector,
    metric: str,
    t_right: Optional[int] = None,
    t_left: Optional[int] = None,
) -> Union[PositionVector, Verdict]:
    """
    Decodes a received word.

    Without budgets this returns the nearest codeword of the same weight under the metric. With
    asymmetric budgets (t_right, t_left) it returns the codeword from which z is reachable with
    at most t_right right and t_left left shifts; nearest-distance decoding is not sound when the
    two budgets differ.

    :returns: The codeword, or AMBIGUOUS when two or more candidates are equally good
    :raises DecodeFailure: If no codeword is compatible with z
    """
    check_metric(metric)
    candidates = [c for c in code.words if c.weight == z.weight and c.n == z.n]
    if not candidates:
        raise DecodeFailure(f"No codeword of length {z.n} and weight {z.weight}")
    if t_right is not None or t_left is not None:
        if metric != METRIC_ASYMMETRIC:
            raise InvalidParametersError("Directional budgets apply to the asymmetric metric only")
        right = t_right or 0
        left = t_left or 0
        matches = []
        for c in candidates:
            up = sum(max(a - b, 0) for a, b in zip(z.positions, c.positions))
            down = sum(max(b - a, 0) for a, b in zip(z.positions, c.positions))
            if up <= right and down <= left:
                matches.append(c)
        if not matches:
            raise DecodeFailure(f"No codeword within ({right}, {left}) shifts of {z}")
        return matches[0] if len(matches) == 1 else AMBIGUOUS
    scored = sorted((distance(c, z, metric), c) for c in candidates)
    if len(scored) > 1 and scored[0][0] == scored[1][0]:
        return AMBIGUOUS
    return scored[0][1]


@dataclass(frozen=True)
class NoiseSpec:
    """
    Random shift model. For metric s at most `budget` unit shifts are drawn; for metric a at most
    `t_right` right and `t_left` left unit shifts are drawn.
    """

    metric: str
    budget: int = 0
    t_right: int = 0
    t_left: int = 0

    def __post_init__(self):
        check_metric(self.metric)
        if min(self.budget, self.t_right, self.t_left) < 0:
            raise InvalidParametersError("Shift budgets must be non-negative")

    @classmethod
    def symmetric(cls, budget: int) -> "NoiseSpec":
        return cls(metric=METRIC_SYMMETRIC, budget=budget)

    @classmethod
    def asymmetric(cls, t_right: int, t_left: int) -> "NoiseSpec":
        return cls(metric=METRIC_ASYMMETRIC, t_right=t_right, t_left=t_left)


def sample_pattern(
    x: PositionVector, noise: NoiseSpec, rng: np.random.Generator
) -> tuple[ShiftPattern, PositionVector]:
    """
    Draws an admissible shift pattern for x.

    The number of unit shifts is uniform on [0, budget]; each unit shift picks a 1 uniformly at
    random and, for metric s, a direction uniformly at random. Inadmissible draws are redrawn.
    """
    W = x.weight
    for _ in range(MAX_RESAMPLES):
        f = np.zeros(W, dtype=np.int64)
        if W:
            if noise.metric == METRIC_SYMMETRIC:
                tau = int(rng.integers(0, noise.budget + 1))
                where = rng.integers(0, W, size=tau)
                signs = rng.choice(np.array([-1, 1]), size=tau)
                np.add.at(f, where, signs)
            else:
                right = int(rng.integers(0, noise.t_right + 1))
                left = int(rng.integers(0, noise.t_left + 1))
                np.add.at(f, rng.integers(0, W, size=right), 1)
                np.add.at(f, rng.integers(0, W, size=left), -1)
        pattern = ShiftPattern(tuple(int(v) for v in f))
        z = apply_pattern(x, pattern)
        if z is not None:
            return pattern, z
    raise ShiftCodesError(f"No admissible shift pattern for {x} after {MAX_RESAMPLES} draws")


@dataclass(frozen=True)
class SimulationReport:
    trials: int
    failures: int
    ambiguous: int
    miscorrected: int
    undecodable: int
    seed: int

    @property
    def rate(self) -> Optional[float]:
        return None if self.trials == 0 else self.failures / self.trials

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "ambiguous": self.ambiguous,
            "miscorrected": self.miscorrected,
            "undecodable": self.undecodable,
            "seed": self.seed,
            "rate": self.rate,
        }


def _run_chunk(
    code: Codebook, noise: NoiseSpec, trials: int, seed_seq: np.random.SeedSequence
) -> tuple[int, int, int]:
    rng = np.random.default_rng(seed_seq)
    ambiguous = miscorrected = undecodable = 0
    budgets: dict = {}
    if noise.metric == METRIC_ASYMMETRIC:
        budgets = {"t_right": noise.t_right, "t_left": noise.t_left}
    for _ in range(trials):
        x = code.words[int(rng.integers(0, len(code)))]
        _, z = sample_pattern(x, noise, rng)
        try:
            decoded = decode(code, z, noise.metric, **budgets)
        except DecodeFailure:
            undecodable += 1
            continue
        if decoded is AMBIGUOUS:
            ambiguous += 1
        elif decoded != x:
            miscorrected += 1
    return ambiguous, miscorrected, undecodable


def run_simulation(
    code: Codebook, noise: NoiseSpec, trials: int, seed: int, threads: Optional[int] = None
) -> SimulationReport:
    """
    Monte-Carlo decoding failures of a code under random shifts.

    Trials are split into fixed-size chunks, each with its own generator spawned from the master
    seed, and merged in chunk order, so the result does not depend on the number of threads.

    :raises InvalidParametersError: If the code is empty or trials is negative
    """
    if len(code) == 0:
        raise InvalidParametersError("Cannot simulate an empty code")
    if trials < 0:
        raise InvalidParametersError(f"Number of trials must be non-negative, got {trials}")
    chunks = math.ceil(trials / SIMULATION_CHUNK_SIZE)
    sizes = [min(SIMULATION_CHUNK_SIZE, trials - i * SIMULATION_CHUNK_SIZE) for i in range(chunks)]
    seeds = np.random.SeedSequence(seed).spawn(chunks)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(
            pool.map(lambda args: _run_chunk(code, noise, *args), zip(sizes, seeds))
        )
    ambiguous = sum(r[0] for r in results)
    miscorrected = sum(r[1] for r in results)
    undecodable = sum(r[2] for r in results)
    report = SimulationReport(
        trials=trials,
        failures=ambiguous + miscorrected + undecodable,
        ambiguous=ambiguous,
        miscorrected=miscorrected,
        undecodable=undecodable,
        seed=seed,
    )
    _logger.info(f"Simulated {trials} trials, {report.failures} failures")
    return report


def montecarlo_failure(
    code: Codebook, noise: NoiseSpec, trials: int, seed: int, threads: Optional[int] = None
) -> Optional[float]:
    """Failure rate of run_simulation, or None when trials is 0."""
    return run_simulation(code, noise, trials, seed, threads).rate
