# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - (d,k)-constrained strings, their position vectors, enumeration and exact counting

A string of length n in the space is a concatenation of blocks 0^j 1 with d <= j <= k, i.e. a
composition of n whose parts lie in {d+1, ..., k+1}. All counts are exact Python integers.
"""

from __future__ import annotations

import logging
import math
import re
from functools import lru_cache
from typing import Iterator, Optional

from .data_classes import (
    AdjacencyProfile,
    BigCount,
    DKParams,
    PositionVector,
    RunProfile,
)
from .exceptions import InvalidParametersError, RepresentationError

_logger = logging.getLogger(__name__)

_BINARY_RE = re.compile(r"[01]*")


@lru_cache(maxsize=None)
def _block_pattern(p: DKParams) -> re.Pattern:
    upper = "" if not p.bounded else str(int(p.k))
    return re.compile(f"(?:0{{{p.d},{upper}}}1)*")


def _check_binary(s: str) -> None:
    if not isinstance(s, str) or _BINARY_RE.fullmatch(s) is None:
        raise RepresentationError(f"Expected a string of 0's and 1's, got {s!r}")


def _check_length(n: int) -> None:
    if n < 0:
        raise InvalidParametersError(f"Length n must be non-negative, got {n}")


def binomial(top: int, bottom: int) -> int:
    """Binomial coefficient that is 0 whenever either argument is out of range."""
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


def validate(s: str, p: DKParams) -> bool:
    """
    Checks membership of a binary string in the space of (d, k)-constrained inputs.

    The empty string is the empty concatenation and is valid.

    :param s: The string, as ASCII 0/1 characters
    :type s: str
    :param p: The constraint
    :type p: DKParams
    :returns: True if s is a concatenation of blocks 0^j 1 with d <= j <= k
    :return type: bool
    """
    if not isinstance(s, str):
        return False
    return _block_pattern(p).fullmatch(s) is not None


def to_positions(s: str) -> PositionVector:
    """
    Converts a binary string ending in 1 (or the empty string) to its position vector.

    :raises RepresentationError: If s is not binary or does not end in 1
    """
    _check_binary(s)
    if s and not s.endswith("1"):
        raise RepresentationError(
            f"String {s!r} does not end in 1; inputs are concatenations of blocks 0^j 1"
        )
    return PositionVector(tuple(i + 1 for i, bit in enumerate(s) if bit == "1"), len(s))


def from_positions(v: PositionVector) -> str:
    """Renders a position vector as a binary string of length v.n."""
    bits = ["0"] * v.n
    for x in v.positions:
        bits[x - 1] = "1"
    return "".join(bits)


def run_profile(s: str) -> RunProfile:
    """
    Counts, for each j, the 1's preceded by exactly j zeros.

    :raises RepresentationError: If s is not binary or does not end in 1
    """
    v = to_positions(s)
    counts: dict[int, int] = {}
    for gap in v.gaps:
        counts[gap - 1] = counts.get(gap - 1, 0) + 1
    return RunProfile(counts=dict(sorted(counts.items())), weight=v.weight, n=v.n)


def adjacency_profile(s: str, p: DKParams) -> AdjacencyProfile:
    """
    Lists the zero runs before and after each 1 and counts the 1's that admit a unit shift.

    :raises RepresentationError: If s is not a valid (d, k) string
    """
    if not validate(s, p):
        raise RepresentationError(f"String {s!r} is not in the {p} constrained space")
    preceding = tuple(g - 1 for g in to_positions(s).gaps)
    following = preceding[1:] + (None,)
    right = 0
    left = 0
    for before, after in zip(preceding, following):
        if before != p.k and (after is None or after != p.d):
            right += 1
        if before != p.d and (after is None or after != p.k):
            left += 1
    return AdjacencyProfile(
        preceding=preceding, following=following, right_shiftable=right, left_shiftable=left
    )


@lru_cache(maxsize=64)
def _count_prefix(p: DKParams, n_max: int) -> tuple[int, ...]:
    # S(m) = P(m - d - 1) - P(m - k - 2), P the running sum of S
    counts = [0] * (n_max + 1)
    prefix = [0] * (n_max + 1)
    for m in range(n_max + 1):
        if m == 0:
            counts[m] = 1
        else:
            hi = m - p.d - 1
            value = prefix[hi] if hi >= 0 else 0
            if p.bounded:
                lo = m - int(p.k) - 2
                if lo >= 0:
                    value -= prefix[lo]
            counts[m] = value
        prefix[m] = counts[m] + (prefix[m - 1] if m else 0)
    return tuple(counts)


def count_n(p: DKParams, n: int) -> BigCount:
    """
    Number of (d, k)-constrained strings of length n.

    :param p: The constraint
    :type p: DKParams
    :param n: The length, n >= 0
    :type n: int
    :returns: The exact count, 1 for n = 0
    :return type: int
    :raises InvalidParametersError: If n is negative
    """
    _check_length(n)
    return _count_prefix(p, n)[n]


def count_sequence(p: DKParams, n_max: int) -> list[BigCount]:
    """Counts for every length 0..n_max."""
    _check_length(n_max)
    return list(_count_prefix(p, n_max))


def weight_range(p: DKParams, n: int) -> Optional[tuple[int, int]]:
    """Smallest and largest feasible weight for length n, or None if no string exists."""
    _check_length(n)
    if n == 0:
        return (0, 0)
    w_max = n // p.min_part
    w_min = 1 if not p.bounded else -(-n // int(p.max_part))
    if w_min > w_max:
        return None
    return (w_min, w_max)


def count_nW(p: DKParams, n: int, W: int) -> BigCount:
    """
    Number of (d, k)-constrained strings of length n and weight W.

    Counts compositions of n into W parts from {d+1, ..., k+1} by inclusion-exclusion over the
    parts that exceed k+1. For k = inf this is the binomial C(n - 1 - W d, W - 1).
    """
    _check_length(n)
    if W < 0:
        raise InvalidParametersError(f"Weight W must be non-negative, got {W}")
    if W == 0:
        return 1 if n == 0 else 0
    excess = n - W * p.min_part
    if excess < 0:
        return 0
    if not p.bounded:
        return binomial(excess + W - 1, W - 1)
    width = int(p.k) - p.d + 1
    total = 0
    for i in range(0, min(W, excess // width) + 1):
        term = math.comb(W, i) * binomial(excess - i * width + W - 1, W - 1)
        total += -term if i % 2 else term
    return total


@lru_cache(maxsize=32)
def _count_rows(
    p: DKParams, n_max: int, exclude_part: Optional[int]
) -> tuple[tuple[int, ...], ...]:
    w_max = n_max // p.min_part
    _logger.debug(f"Building count table for {p}, n <= {n_max}, W <= {w_max}")
    rows = [tuple([1] + [0] * n_max)]
    for _ in range(1, w_max + 1):
        previous = rows[-1]
        prefix = [0] * (n_max + 1)
        running = 0
        for m in range(n_max + 1):
            running += previous[m]
            prefix[m] = running
        row = [0] * (n_max + 1)
        for m in range(n_max + 1):
            hi = m - p.min_part
            if hi < 0:
                continue
            value = prefix[hi]
            if p.bounded:
                lo = m - int(p.max_part) - 1
                if lo >= 0:
                    value -= prefix[lo]
            if exclude_part is not None and p.allows_gap(exclude_part) and m >= exclude_part:
                value -= previous[m - exclude_part]
            row[m] = value
        rows.append(tuple(row))
    return tuple(rows)


def count_table(
    p: DKParams, n_max: int, exclude_part: Optional[int] = None
) -> list[list[BigCount]]:
    """
    Table of S(n, W) for every n <= n_max, indexed as table[W][n].

    :param exclude_part: Optional block length that is not allowed as a part
    :type exclude_part: int | None
    """
    _check_length(n_max)
    return [list(row) for row in _count_rows(p, n_max, exclude_part)]


def count_nWl(p: DKParams, n: int, W: int, j: int, ell: int) -> BigCount:
    """
    Number of strings of length n and weight W in which exactly ell 1's are preceded by j zeros.

    Choose which ell of the W blocks are 0^j 1, then fill the remaining W - ell blocks with
    lengths other than j + 1.

    :raises InvalidParametersError: If j lies outside [d, k]
    """
    _check_length(n)
    if not (p.d <= j <= p.k):
        raise InvalidParametersError(f"Run length j = {j} is outside [d, k] for {p}")
    if W < 0 or ell < 0 or ell > W:
        return 0
    rest = n - ell * (j + 1)
    if rest < 0:
        return 0
    rest_weight = W - ell
    if rest_weight > rest // p.min_part:
        return 0
    # one table per (n, j), shared by every ell
    rows = _count_rows(p, n, j + 1)
    return math.comb(W, ell) * rows[rest_weight][rest]


def enumerate_positions(
    p: DKParams, n: int, W: Optional[int] = None
) -> Iterator[PositionVector]:
    """
    Yields every position vector of length n (and weight W, if given) in lexicographic order.

    Branches that cannot be completed to a valid string are pruned before they are explored.
    """
    _check_length(n)
    if W is not None and W < 0:
        return
    if n == 0:
        if W in (None, 0):
            yield PositionVector((), 0)
        return

    reachable = [c > 0 for c in _count_prefix(p, n)]
    hi_gap = n if not p.bounded else min(n, int(p.max_part))

    def completable(remaining: int, parts_left: Optional[int]) -> bool:
        if parts_left is None:
            return reachable[remaining]
        if parts_left == 0:
            return remaining == 0
        return parts_left * p.min_part <= remaining <= parts_left * p.max_part

    def walk(last: int, prefix: list[int]) -> Iterator[PositionVector]:
        parts_left = None if W is None else W - len(prefix)
        if last == n:
            if parts_left in (None, 0):
                yield PositionVector(tuple(prefix), n)
            return
        if parts_left == 0:
            return
        for gap in range(p.min_part, hi_gap + 1):
            x = last + gap
            if x > n:
                break
            nxt = None if parts_left is None else parts_left - 1
            if not completable(n - x, nxt):
                continue
            prefix.append(x)
            yield from walk(x, prefix)
            prefix.pop()

    yield from walk(0, [])


def enumerate_strings(p: DKParams, n: int, W: Optional[int] = None) -> Iterator[str]:
    for v in enumerate_positions(p, n, W):
        yield from_positions(v)
