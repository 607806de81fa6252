# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Asymmetric and symmetric shift metrics, balls, and correctability checks
"""

from __future__ import annotations

import itertools
import logging
import math
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .data_classes import BigCount, DKParams, ExtendedInt, PositionVector, ShiftPattern
from .data_const import (
    DEFAULT_NOISE_BUDGET,
    INF,
    METRIC_ASYMMETRIC,
    METRIC_SYMMETRIC,
)
from .exceptions import BudgetExceededError, InvalidParametersError, RepresentationError
from .sequences import enumerate_positions

_logger = logging.getLogger(__name__)


def check_metric(metric: str) -> str:
    if metric not in (METRIC_ASYMMETRIC, METRIC_SYMMETRIC):
        raise InvalidParametersError(f"Metric must be 'a' or 's', got {metric!r}")
    return metric


def _displacements(x: PositionVector, y: PositionVector) -> Optional[tuple[int, int]]:
    if x.n != y.n:
        raise InvalidParametersError(
            f"Distances are defined between vectors of the same length, got {x.n} and {y.n}"
        )
    if x.weight != y.weight:
        return None
    up = 0
    down = 0
    for a, b in zip(x.positions, y.positions):
        if a > b:
            up += a - b
        else:
            down += b - a
    return up, down


def dist_a(x: PositionVector, y: PositionVector) -> ExtendedInt:
    """
    Asymmetric distance max(sum (x - y)^+, sum (x - y)^-); inf across different weights.

    :raises InvalidParametersError: If the lengths differ
    """
    parts = _displacements(x, y)
    if parts is None:
        return INF
    return max(parts)


def dist_s(x: PositionVector, y: PositionVector) -> ExtendedInt:
    """
    Manhattan distance sum |x - y|; inf across different weights.

    :raises InvalidParametersError: If the lengths differ
    """
    parts = _displacements(x, y)
    if parts is None:
        return INF
    return parts[0] + parts[1]


def distance(x: PositionVector, y: PositionVector, metric: str) -> ExtendedInt:
    return dist_a(x, y) if check_metric(metric) == METRIC_ASYMMETRIC else dist_s(x, y)


def vector_dist_a(u: Iterable[int]) -> int:
    """d_a(u, 0) for an integer vector."""
    up = 0
    down = 0
    for v in u:
        if v > 0:
            up += v
        else:
            down -= v
    return max(up, down)


def vector_dist_s(u: Iterable[int]) -> int:
    """d_s(u, 0) for an integer vector."""
    return sum(abs(v) for v in u)


class Codebook:
    """
    A set of (d, k)-constrained inputs of a common length n, possibly of mixed weights.

    Minimum distances are computed once and cached.
    """

    def __init__(self, p: DKParams, n: int, words: Iterable[PositionVector]):
        self.p = p
        self.n = n
        unique = sorted(set(words))
        for word in unique:
            if word.n != n:
                raise RepresentationError(f"Codeword {word} has length {word.n}, expected {n}")
            if not word.in_space(p):
                raise RepresentationError(f"Codeword {word} is not a {p} constrained input")
        self.words: tuple[PositionVector, ...] = tuple(unique)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[PositionVector]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def by_weight(self) -> dict[int, list[PositionVector]]:
        groups: dict[int, list[PositionVector]] = {}
        for word in self.words:
            groups.setdefault(word.weight, []).append(word)
        return groups

    def closest_pair(
        self, metric: str
    ) -> tuple[ExtendedInt, Optional[tuple[PositionVector, PositionVector]]]:
        """Minimum pairwise distance and a pair attaining it (None if no finite pair exists)."""
        check_metric(metric)
        best: ExtendedInt = INF
        witness = None
        # Cross-weight pairs are at infinite distance
        for group in self.by_weight().values():
            for x, y in itertools.combinations(group, 2):
                value = distance(x, y, metric)
                if value < best:
                    best = value
                    witness = (x, y)
        return best, witness

    @cached_property
    def min_da(self) -> ExtendedInt:
        return self.closest_pair(METRIC_ASYMMETRIC)[0]

    @cached_property
    def min_ds(self) -> ExtendedInt:
        return self.closest_pair(METRIC_SYMMETRIC)[0]


def min_distance(code: Codebook, metric: str) -> ExtendedInt:
    """
    Minimum pairwise distance of a code; inf for codes with fewer than two words.
    """
    return code.min_da if check_metric(metric) == METRIC_ASYMMETRIC else code.min_ds


def ball_a(m: int, r: int) -> BigCount:
    """
    Number of points of Z^m within asymmetric distance r of the origin.

    :raises InvalidParametersError: If m or r is negative
    """
    if m < 0 or r < 0:
        raise InvalidParametersError(f"Ball parameters must be non-negative, got m={m}, r={r}")
    return sum(
        math.comb(m, i) * math.comb(r, i) * math.comb(r + m - i, m - i)
        for i in range(0, min(m, r) + 1)
    )


def ball_s(m: int, r: int) -> BigCount:
    """
    Number of points of Z^m within Manhattan distance r of the origin.

    :raises InvalidParametersError: If m or r is negative
    """
    if m < 0 or r < 0:
        raise InvalidParametersError(f"Ball parameters must be non-negative, got m={m}, r={r}")
    return sum(2**i * math.comb(m, i) * math.comb(r, i) for i in range(0, min(m, r) + 1))


def count_patterns(W: int, right: int, left: int) -> BigCount:
    """Number of integer vectors of length W with sum f^+ <= right and sum f^- <= left."""
    total = 0
    for i in range(0, min(W, right) + 1):
        for j in range(0, min(W - i, left) + 1):
            total += (
                math.comb(W, i) * math.comb(W - i, j) * math.comb(right, i) * math.comb(left, j)
            )
    return total


def generate_patterns(
    W: int, right: int, left: int, total: Optional[int] = None
) -> Iterator[ShiftPattern]:
    """
    Every shift pattern of length W with at most `right` total right shift, at most `left`
    total left shift and, if given, at most `total` shifts overall.
    """
    if right < 0 or left < 0 or (total is not None and total < 0):
        raise InvalidParametersError("Shift budgets must be non-negative")

    def walk(i: int, r: int, lt: int, tot: int, prefix: list[int]) -> Iterator[ShiftPattern]:
        if i == W:
            yield ShiftPattern(tuple(prefix))
            return
        for v in range(-min(lt, tot), min(r, tot) + 1):
            prefix.append(v)
            if v >= 0:
                yield from walk(i + 1, r - v, lt, tot - v, prefix)
            else:
                yield from walk(i + 1, r, lt + v, tot + v, prefix)
            prefix.pop()

    cap = right + left if total is None else total
    yield from walk(0, right, left, cap, [])


def apply_pattern(x: PositionVector, f: ShiftPattern) -> Optional[PositionVector]:
    """
    Shifts each 1 of x by the matching entry of f.

    :returns: The output, or None if positions collide, cross or leave [1, n]
    :raises InvalidParametersError: If the pattern length differs from the weight of x
    """
    if len(f) != x.weight:
        raise InvalidParametersError(
            f"Shift pattern has length {len(f)} but the input has weight {x.weight}"
        )
    previous = 0
    out = []
    for position, shift in zip(x.positions, f.f):
        z = position + shift
        if z <= previous or z > x.n:
            return None
        out.append(z)
        previous = z
    return PositionVector(tuple(out), x.n)


def _check_noise_space(code: Codebook, right: int, left: int, budget: int) -> None:
    size = sum(count_patterns(w.weight, right, left) for w in code.words)
    _logger.debug(f"Operational check over {size} (codeword, pattern) pairs")
    if size > budget:
        raise BudgetExceededError("The noise-pattern space", size, budget)


def find_output_collision(
    code: Codebook,
    right: int,
    left: int,
    total: Optional[int] = None,
    budget: int = DEFAULT_NOISE_BUDGET,
) -> Optional[tuple[PositionVector, PositionVector, PositionVector]]:
    """
    Searches for two codewords that the channel can map to the same output.

    Only admissible outputs are considered: strictly increasing positions within [1, n].

    :returns: (x, y, z) with x != y both reaching z, or None when no collision exists
    :raises BudgetExceededError: If the number of (codeword, pattern) pairs exceeds budget
    """
    cap_right = right if total is None else min(right, total)
    cap_left = left if total is None else min(left, total)
    _check_noise_space(code, cap_right, cap_left, budget)
    reached: dict[PositionVector, PositionVector] = {}
    for x in code.words:
        for f in generate_patterns(x.weight, right, left, total):
            z = apply_pattern(x, f)
            if z is None:
                continue
            owner = reached.setdefault(z, x)
            if owner != x:
                return owner, x, z
    return None


def corrects_asym(code: Codebook, t_right: int, t_left: int) -> bool:
    """Metric check: t_right right and t_left left shifts are correctable iff d_a > their sum."""
    if t_right < 0 or t_left < 0:
        raise InvalidParametersError("Shift budgets must be non-negative")
    return code.min_da > t_right + t_left


def corrects_asym_operational(
    code: Codebook, t_right: int, t_left: int, budget: int = DEFAULT_NOISE_BUDGET
) -> bool:
    """Operational check: no two codewords reach a common output within the budgets."""
    return find_output_collision(code, t_right, t_left, budget=budget) is None


def corrects_sym(code: Codebook, t: int) -> bool:
    """Metric check: the code corrects t shifts in total iff d_s > 2t."""
    if t < 0:
        raise InvalidParametersError("Shift budgets must be non-negative")
    return code.min_ds > 2 * t


def corrects_sym_operational(code: Codebook, t: int, budget: int = DEFAULT_NOISE_BUDGET) -> bool:
    """Operational check: no two codewords reach a common output with at most t shifts."""
    return find_output_collision(code, t, t, total=t, budget=budget) is None


def ball_points(
    center: PositionVector, p: DKParams, r: int, metric: str
) -> list[PositionVector]:
    """Points of the same-weight constrained space within distance r of center."""
    return [
        y
        for y in enumerate_positions(p, center.n, center.weight)
        if distance(center, y, metric) <= r
    ]
