# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Characteristic roots, growth exponents and typical run profiles

All logarithms are base 2. Quantities for k = inf are evaluated through closed-form geometric
and arithmetico-geometric series, never by truncation.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import optimize

from .data_classes import BigCount, DKParams
from .data_const import (
    INF,
    LAMBDA_DISPLAY_CUTOFF,
    MAX_BRACKET_DOUBLINGS,
    RESIDUAL_TOL,
    ROOT_BRACKET_EPS,
    ROOT_XTOL,
)
from .exceptions import DomainError, InvalidParametersError
from .sequences import count_n, count_nW, count_nWl, count_sequence, weight_range

_logger = logging.getLogger(__name__)

_RTOL = 4 * np.finfo(float).eps


@dataclass(frozen=True)
class CharacteristicRoot:
    """The positive root of sum_{i=d+1}^{k+1} x^i = 1"""

    rho: float
    residual: float
    p: DKParams


@dataclass(frozen=True)
class WeightedRoot:
    """The positive root of sum_{i=d+1}^{k+1} (w i - 1) x^i = 0"""

    rho_w: float
    w: float
    residual: float


@dataclass(frozen=True)
class TypicalProfile:
    """Typical relative weight w* and typical relative run counts lambda_j*"""

    p: DKParams
    rho: float
    w_star: float
    lambda_star: dict[int, float]


@dataclass(frozen=True)
class GrowthConstant:
    estimate: float
    diagnostic: float
    n_max: int


def _parts(p: DKParams) -> np.ndarray:
    return np.arange(p.min_part, int(p.max_part) + 1, dtype=float)


def power_sum(p: DKParams, x: float) -> float:
    """sum_{i=d+1}^{k+1} x^i, in closed form when k = inf (requires x < 1)."""
    if not p.bounded:
        return x ** p.min_part / (1.0 - x)
    return float(np.sum(x ** _parts(p)))


def weighted_power_sum(p: DKParams, x: float) -> float:
    """sum_{i=d+1}^{k+1} i x^i, in closed form when k = inf (requires x < 1)."""
    if not p.bounded:
        d = p.d
        return x ** (d + 1) * (d + 1 - d * x) / (1.0 - x) ** 2
    parts = _parts(p)
    return float(np.sum(parts * x**parts))


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def log2_count(c: BigCount) -> float:
    """
    Base-2 logarithm of an exact count without converting it to float.

    :returns: -inf for a zero count
    """
    if c < 0:
        raise DomainError(f"Counts are non-negative, got {c}")
    if c == 0:
        return -INF
    shift = max(0, c.bit_length() - 53)
    return math.log2(c >> shift) + shift


def _brentq(func: Callable[[float], float], lo: float, hi: float) -> float:
    root = optimize.brentq(func, lo, hi, xtol=ROOT_XTOL, rtol=_RTOL, maxiter=500)
    return float(root)


def solve_rho(p: DKParams) -> CharacteristicRoot:
    """
    Solves the characteristic equation sum_{i=d+1}^{k+1} x^i = 1 on (0, 1).

    The left-hand side is increasing on (0, 1), so the root is unique and a bracketing solver
    cannot miss it. For k = inf the equation is rewritten as x^(d+1) + x - 1 = 0.

    :param p: The constraint
    :type p: DKParams
    :returns: The root and its residual in the original equation
    :return type: CharacteristicRoot
    """
    lo, hi = ROOT_BRACKET_EPS, 1.0 - ROOT_BRACKET_EPS
    if p.bounded:
        rho = _brentq(lambda x: power_sum(p, x) - 1.0, lo, hi)
    else:
        rho = _brentq(lambda x: x**p.min_part + x - 1.0, lo, hi)
    residual = abs(power_sum(p, rho) - 1.0)
    _logger.debug(f"rho{p} = {rho!r}, residual {residual:.3e}")
    if residual > RESIDUAL_TOL:
        _logger.warning(f"Characteristic root of {p} has residual {residual:.3e}")
    return CharacteristicRoot(rho=rho, residual=residual, p=p)


def weight_interval(p: DKParams) -> tuple[float, float]:
    """The closed interval [1/(k+1), 1/(d+1)] of achievable relative weights."""
    lower = 0.0 if not p.bounded else 1.0 / (int(p.k) + 1)
    return (lower, 1.0 / (p.d + 1))


def solve_rho_w(p: DKParams, w: float) -> WeightedRoot:
    """
    Solves sum_{i=d+1}^{k+1} (w i - 1) x^i = 0 for its unique positive root.

    :raises DomainError: If w is not strictly inside (1/(k+1), 1/(d+1))
    """
    lower, upper = weight_interval(p)
    if not (lower < w < upper):
        raise DomainError(
            f"Relative weight {w} must lie strictly inside ({lower}, {upper}) for {p}"
        )
    if not p.bounded:
        rho_w = (1.0 - w * (p.d + 1)) / (1.0 - w * p.d)
    else:
        coeffs = w * _parts(p) - 1.0

        # Divided by x^(d+1): negative at 0, positive for large x, one sign change
        def reduced(x: float) -> float:
            return float(np.polynomial.polynomial.polyval(x, coeffs))

        hi = 1.0
        doublings = 0
        while reduced(hi) <= 0.0:
            hi *= 2.0
            doublings += 1
            if doublings > MAX_BRACKET_DOUBLINGS:
                raise DomainError(f"Could not bracket the weighted root for {p}, w = {w}")
        rho_w = _brentq(reduced, 0.0, hi)
    # sum (w i - 1) x^i = w sum i x^i - sum x^i
    residual = abs(w * weighted_power_sum(p, rho_w) - power_sum(p, rho_w))
    return WeightedRoot(rho_w=rho_w, w=w, residual=residual)


def sigma(p: DKParams, w: float) -> float:
    """
    Growth exponent of the number of strings with relative weight w.

    sigma(w) = w log sum_i rho_w^i - log rho_w, and 0 at both ends of the weight interval.

    :raises DomainError: If w lies outside [1/(k+1), 1/(d+1)]
    """
    lower, upper = weight_interval(p)
    if w < lower or w > upper:
        raise DomainError(f"Relative weight {w} must lie in [{lower}, {upper}] for {p}")
    if w == lower or w == upper:
        return 0.0
    rho_w = solve_rho_w(p, w).rho_w
    return w * math.log2(power_sum(p, rho_w)) - math.log2(rho_w)


def sigma_unbounded(d: int, w: float) -> float:
    """Closed form (1 - w d) H(w / (1 - w d)) of the exponent for k = inf."""
    if w < 0 or w > 1.0 / (d + 1):
        raise DomainError(f"Relative weight {w} must lie in [0, {1.0 / (d + 1)}]")
    scale = 1.0 - w * d
    return scale * binary_entropy(w / scale)


def typical_weight_unbounded(d: int) -> float:
    """w* = (1 - rho) / (1 + (1 - rho) d) for k = inf."""
    rho = solve_rho(DKParams(d)).rho
    return (1.0 - rho) / (1.0 + (1.0 - rho) * d)


def typical_profile(p: DKParams) -> TypicalProfile:
    """
    Typical weight w* = (sum i rho^i)^-1 and run densities lambda_j* = rho^(j+1) w*.

    For k = inf the lambda row is cut where lambda_j* drops below the display cutoff, always
    keeping j = d.
    """
    rho = solve_rho(p).rho
    w_star = 1.0 / weighted_power_sum(p, rho)
    lambda_star: dict[int, float] = {}
    j = p.d
    while j <= p.k:
        value = rho ** (j + 1) * w_star
        if not p.bounded and j > p.d and value < LAMBDA_DISPLAY_CUTOFF:
            break
        lambda_star[j] = value
        j += 1
    return TypicalProfile(p=p, rho=rho, w_star=w_star, lambda_star=lambda_star)


@dataclass(frozen=True)
class Table1Column:
    p: DKParams
    rho: float
    capacity: float
    w_star: float
    lambda_star: dict[int, float]


def _table1_column(p: DKParams, digits: Optional[int]) -> Table1Column:
    profile = typical_profile(p)

    def rnd(x: float) -> float:
        return x if digits is None else round(x, digits)

    return Table1Column(
        p=p,
        rho=rnd(profile.rho),
        capacity=rnd(-math.log2(profile.rho)),
        w_star=rnd(profile.w_star),
        lambda_star={j: rnd(v) for j, v in profile.lambda_star.items()},
    )


def table1(
    params: list[DKParams], digits: Optional[int] = 3, threads: Optional[int] = None
) -> list[Table1Column]:
    """
    rho, -log rho, w* and lambda_j* for each constraint, rounded to `digits` decimals.

    :param digits: Decimal places, or None for full precision
    :param threads: Upper bound on worker threads
    """
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: _table1_column(p, digits), params))


def round_weight(w: float, n: int) -> int:
    """Nearest integer weight to w n, halves rounded up."""
    return math.floor(w * n + 0.5)


def empirical_exponent(p: DKParams, w: float, n: int) -> float:
    """
    (1/n) log S(n, round(w n)) from exact counts.

    :returns: -inf when the rounded weight is infeasible
    :raises InvalidParametersError: If n < 1
    """
    if n < 1:
        raise InvalidParametersError(f"n must be at least 1, got {n}")
    count = count_nW(p, n, round_weight(w, n))
    return log2_count(count) / n


def estimate_growth_constant(p: DKParams, n_max: int) -> GrowthConstant:
    """
    Estimates c in S(n) ~ c rho^-n as S(n_max) rho^n_max.

    The diagnostic is the distance to the same estimate at n_max // 2.
    """
    if n_max < 2:
        raise InvalidParametersError(f"n_max must be at least 2, got {n_max}")
    log_rho = math.log2(solve_rho(p).rho)
    counts = count_sequence(p, n_max)

    def estimate(n: int) -> float:
        return 2.0 ** (log2_count(counts[n]) + n * log_rho)

    value = estimate(n_max)
    return GrowthConstant(
        estimate=value, diagnostic=abs(value - estimate(n_max // 2)), n_max=n_max
    )


def weight_concentration(p: DKParams, n: int, eps: float) -> float:
    """
    Fraction of strings of length n whose weight deviates from w* n by more than eps n.
    """
    total = count_n(p, n)
    if total == 0:
        raise InvalidParametersError(f"No {p} strings of length {n}")
    w_star = typical_profile(p).w_star
    bounds = weight_range(p, n)
    assert bounds is not None
    outside = sum(
        count_nW(p, n, W)
        for W in range(bounds[0], bounds[1] + 1)
        if abs(W - w_star * n) > eps * n
    )
    return outside / total


def run_exponent(p: DKParams, n: int, j: int) -> float:
    """(1/n) log S^(j)(n, round(w* n), round(lambda_j* n)) from exact counts."""
    profile = typical_profile(p)
    if j not in profile.lambda_star:
        raise InvalidParametersError(f"Run length j = {j} is outside [d, k] for {p}")
    W = round_weight(profile.w_star, n)
    ell = round_weight(profile.lambda_star[j], n)
    return log2_count(count_nWl(p, n, W, j, ell)) / n


def typical_adjacent_fraction(p: DKParams) -> float:
    """
    Typical density w* (1 - rho^(d+1)) (1 - rho^(k+1)) of 1's that can be shifted in either
    direction.
    """
    profile = typical_profile(p)
    tail = 0.0 if not p.bounded else profile.rho ** int(p.max_part)
    return profile.w_star * (1.0 - profile.rho**p.min_part) * (1.0 - tail)
