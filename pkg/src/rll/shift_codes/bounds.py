# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Asymptotic bounds on optimal code sizes and shift-neighbourhood counts

The bounds hold as n grows with t fixed; reports always carry asymptotic = True and are not
expected to bracket exact optima at small n.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Optional

from .asymptotics import log2_count, solve_rho, weighted_power_sum
from .data_classes import DKParams, PositionVector, ShiftPattern
from .data_const import METRIC_ASYMMETRIC
from .exceptions import DomainError, InvalidParametersError
from .metrics import apply_pattern, check_metric
from .sequences import adjacency_profile, binomial, count_n, from_positions

_logger = logging.getLogger(__name__)

# Largest log2 value still reported as a linear float
_MAX_LINEAR_LOG2 = 1000.0


def packing_constant(t: int) -> float:
    """Density factor of the Manhattan-distance lattices: 1/(2t) for t <= 2, else 1/(2t + 1)."""
    if t < 1:
        raise InvalidParametersError(f"t must be at least 1, got {t}")
    return 1.0 / (2 * t) if t <= 2 else 1.0 / (2 * t + 1)


@dataclass(frozen=True)
class BoundReport:
    p: DKParams
    n: int
    t: int
    rho: float
    log2_lower_a: float
    log2_upper_a: float
    log2_lower_s: float
    log2_upper_s: float
    log2_leading_term: float
    exact_a: Optional[int] = None
    exact_s: Optional[int] = None
    asymptotic: bool = True

    @staticmethod
    def _linear(value: float) -> Optional[float]:
        return 2.0**value if value <= _MAX_LINEAR_LOG2 else None

    @property
    def lower_a(self) -> Optional[float]:
        return self._linear(self.log2_lower_a)

    @property
    def upper_a(self) -> Optional[float]:
        return self._linear(self.log2_upper_a)

    @property
    def lower_s(self) -> Optional[float]:
        return self._linear(self.log2_lower_s)

    @property
    def upper_s(self) -> Optional[float]:
        return self._linear(self.log2_upper_s)

    def to_dict(self) -> dict:
        return {
            "d": self.p.d,
            "k": "inf" if not self.p.bounded else int(self.p.k),
            "n": self.n,
            "t": self.t,
            "rho": self.rho,
            "lower_a": self.lower_a,
            "upper_a": self.upper_a,
            "lower_s": self.lower_s,
            "upper_s": self.upper_s,
            "log2_lower_a": self.log2_lower_a,
            "log2_upper_a": self.log2_upper_a,
            "log2_lower_s": self.log2_lower_s,
            "log2_upper_s": self.log2_upper_s,
            "log2_leading_term": self.log2_leading_term,
            "exact_a": self.exact_a,
            "exact_s": self.exact_s,
            "asymptotic": self.asymptotic,
        }


def eval_bounds(
    p: DKParams,
    n: int,
    t: int,
    exact_a: Optional[int] = None,
    exact_s: Optional[int] = None,
) -> BoundReport:
    """
    Evaluates the lower and upper bounds on optimal code sizes for both metrics.

    With S = S(n) and A = sum_i i rho^i, the base term is S n^-t A^t. The asymmetric lower bound
    is the base term and the upper bound multiplies it by ceil(t/2)! floor(t/2)! / D^t, where
    D = (1 - rho^(d+1)) (1 - rho^(k+1)). The symmetric bounds multiply the base term by the
    lattice packing constant and by t! 2^-t / D^t. The leading term is -n log rho - t log n.

    :raises InvalidParametersError: If n < 1 or t < 1
    :raises DomainError: If the constrained space of length n is empty
    """
    if n < 1 or t < 1:
        raise InvalidParametersError(f"Bounds need n >= 1 and t >= 1, got n={n}, t={t}")
    total = count_n(p, n)
    if total == 0:
        raise DomainError(f"There are no {p} strings of length {n}")
    rho = solve_rho(p).rho
    log_s = log2_count(total)
    base = log_s - t * math.log2(n) + t * math.log2(weighted_power_sum(p, rho))
    tail = 0.0 if not p.bounded else rho ** int(p.max_part)
    log_d = math.log2((1.0 - rho**p.min_part) * (1.0 - tail))
    log_half_factorials = math.log2(math.factorial((t + 1) // 2) * math.factorial(t // 2))
    report = BoundReport(
        p=p,
        n=n,
        t=t,
        rho=rho,
        log2_lower_a=base,
        log2_upper_a=base + log_half_factorials - t * log_d,
        log2_lower_s=base + math.log2(packing_constant(t)),
        log2_upper_s=base + math.log2(math.factorial(t)) - t - t * log_d,
        log2_leading_term=-n * math.log2(rho) - t * math.log2(n),
        exact_a=exact_a,
        exact_s=exact_s,
    )
    _logger.debug(f"Bounds for {p}, n={n}, t={t}: {report}")
    return report


def shift_neighborhood(
    x: PositionVector, p: DKParams, right: int, left: int
) -> set[PositionVector]:
    """
    Constrained words obtained from x by shifting `right` distinct 1's one place right and
    `left` other distinct 1's one place left.
    """
    if right < 0 or left < 0:
        raise InvalidParametersError("Shift counts must be non-negative")
    out = set()
    indices = range(x.weight)
    for movers_right in itertools.combinations(indices, right):
        rest = [i for i in indices if i not in movers_right]
        for movers_left in itertools.combinations(rest, left):
            f = [0] * x.weight
            for i in movers_right:
                f[i] = 1
            for i in movers_left:
                f[i] = -1
            z = apply_pattern(x, ShiftPattern(tuple(f)))
            if z is not None and z.in_space(p):
                out.add(z)
    return out


def neighborhood_lower_bound(x: PositionVector, p: DKParams, t: int, metric: str) -> int:
    """
    Lower bound on the number of constrained words reachable from x with t unit shifts of
    distinct 1's.

    With A the right-shiftable and B the left-shiftable counts (the last 1 included in both):
    metric a, floor(t/2) right and ceil(t/2) left shifts: C(A - 1, floor(t/2)) C(B - 2t, ceil(t/2));
    metric s, any split: sum_r C(A - 1, r) C(B - 3r - 1, t - r). Negative tops count as 0.
    """
    check_metric(metric)
    if t < 0:
        raise InvalidParametersError(f"t must be non-negative, got {t}")
    profile = adjacency_profile(from_positions(x), p)
    a = profile.right_shiftable
    b = profile.left_shiftable
    if metric == METRIC_ASYMMETRIC:
        return binomial(a - 1, t // 2) * binomial(b - 2 * t, (t + 1) // 2)
    return sum(binomial(a - 1, r) * binomial(b - 3 * r - 1, t - r) for r in range(t + 1))


def symmetric_neighborhood(x: PositionVector, p: DKParams, t: int) -> set[PositionVector]:
    out: set[PositionVector] = set()
    for r in range(t + 1):
        out |= shift_neighborhood(x, p, r, t - r)
    return out
