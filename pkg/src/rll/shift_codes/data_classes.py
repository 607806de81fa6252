# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Data classes for constraints, channel inputs and noise patterns
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .data_const import INF, INF_LITERAL
from .exceptions import InvalidParametersError, RepresentationError

# Exact, arbitrary precision count
BigCount = int
# Non-negative integer or +inf
ExtendedInt = Union[int, float]


def parse_k(value: Union[str, int, float]) -> ExtendedInt:
    """
    Parses the upper run-length bound, accepting the literal "inf".

    :param value: An integer, math.inf or a string such as "7" or "inf"
    :type value: str | int | float
    :returns: The bound as an int, or math.inf when unbounded
    :return type: int | float
    :raises InvalidParametersError: If the value is not an integer or "inf"
    """
    if isinstance(value, str):
        text = value.strip().lower()
        if text in (INF_LITERAL, "infinity", "∞"):
            return INF
        try:
            return int(text)
        except ValueError:
            raise InvalidParametersError(f"k must be an integer or '{INF_LITERAL}', got {value!r}")
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INF
        if value.is_integer():
            return int(value)
        raise InvalidParametersError(f"k must be an integer or '{INF_LITERAL}', got {value!r}")
    return int(value)


def format_extended(value: ExtendedInt) -> str:
    """Formats an extended integer, writing infinity as the literal "inf"."""
    return INF_LITERAL if math.isinf(value) else str(int(value))


@dataclass(frozen=True)
class DKParams:
    """
    The (d, k) run-length constraint: every run of zeros preceding a 1 has length in [d, k]
    """

    d: int
    k: ExtendedInt = field(default=INF)

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise InvalidParametersError(f"d must be an integer, got {self.d!r}")
        k = parse_k(self.k)
        object.__setattr__(self, "k", k)
        if self.d < 0 or self.d >= k:
            raise InvalidParametersError(
                f"Invalid constraint (d, k) = ({self.d}, {format_extended(k)}): "
                "the constraint must satisfy 0 <= d < k <= inf"
            )

    @property
    def bounded(self) -> bool:
        return not math.isinf(self.k)

    @property
    def min_part(self) -> int:
        """Smallest block length d + 1"""
        return self.d + 1

    @property
    def max_part(self) -> ExtendedInt:
        """Largest block length k + 1, or inf"""
        return self.k + 1

    def allows_gap(self, gap: int) -> bool:
        """True if a block 0^(gap - 1) 1 is allowed"""
        return self.d + 1 <= gap <= self.k + 1

    def __str__(self) -> str:
        return f"({self.d},{format_extended(self.k)})"


@dataclass(frozen=True, order=True)
class PositionVector:
    """
    Positions (1-based) of the 1's in a binary string of length n.

    The positions are strictly increasing within [1, n]. Channel inputs additionally end with a
    1, i.e. the last position equals n; channel outputs need not.
    """

    positions: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(int(x) for x in self.positions))
        if self.n < 0:
            raise RepresentationError(f"Length must be non-negative, got {self.n}")
        previous = 0
        for x in self.positions:
            if x <= previous:
                raise RepresentationError(
                    f"Positions must be strictly increasing and at least 1, got {self.positions}"
                )
            previous = x
        if previous > self.n:
            raise RepresentationError(
                f"Position {previous} lies beyond the string length {self.n}"
            )

    @property
    def weight(self) -> int:
        return len(self.positions)

    @property
    def gaps(self) -> tuple[int, ...]:
        """Differences x_i - x_(i-1) with x_0 = 0"""
        previous = 0
        out = []
        for x in self.positions:
            out.append(x - previous)
            previous = x
        return tuple(out)

    def ends_with_one(self) -> bool:
        if not self.positions:
            return self.n == 0
        return self.positions[-1] == self.n

    def in_space(self, p: DKParams) -> bool:
        """True if this vector lies in the space of (d, k)-constrained inputs of length n"""
        return self.ends_with_one() and all(p.allows_gap(g) for g in self.gaps)

    def __str__(self) -> str:
        return f"{self.n}: " + ",".join(str(x) for x in self.positions)


@dataclass(frozen=True)
class RunProfile:
    """
    Number of 1's preceded by a zero run of each length
    """

    counts: dict[int, int]
    weight: int
    n: int

    def lam(self, j: int) -> int:
        return self.counts.get(j, 0)


@dataclass(frozen=True)
class AdjacencyProfile:
    """
    Zero runs around each 1 of a constrained string and the number of 1's that can be moved.

    right_shiftable counts the 1's preceded by a run other than k and followed by a run other
    than d; left_shiftable counts the 1's preceded by a run other than d and followed by a run
    other than k. The last 1 is followed by no run and counts in both.
    """

    preceding: tuple[int, ...]
    following: tuple[Optional[int], ...]
    right_shiftable: int
    left_shiftable: int


@dataclass(frozen=True)
class ShiftPattern:
    """
    Displacement of each 1 of a channel input; positive entries are right shifts
    """

    f: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(v) for v in self.f))

    @property
    def right_total(self) -> int:
        return sum(v for v in self.f if v > 0)

    @property
    def left_total(self) -> int:
        return sum(-v for v in self.f if v < 0)

    @property
    def total(self) -> int:
        return self.right_total + self.left_total

    def __len__(self) -> int:
        return len(self.f)
