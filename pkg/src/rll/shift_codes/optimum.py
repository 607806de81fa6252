# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Exact optimal code sizes by maximum independent set search

Words of different weights are at infinite distance, so the search runs independently on each
weight class. Within a class, an optimal code is a maximum clique of the compatibility graph
(words at distance > t for metric a, > 2t for metric s). Vertex sets are Python int bitsets.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .data_classes import BigCount, DKParams, PositionVector
from .data_const import DEFAULT_SEARCH_BUDGET, EXHAUSTIVE_CLASS_LIMIT, METRIC_ASYMMETRIC
from .exceptions import BudgetExceededError, InvalidParametersError
from .metrics import check_metric, distance
from .sequences import enumerate_positions, weight_range

_logger = logging.getLogger(__name__)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def conflict_graph(words: list[PositionVector], t: int, metric: str) -> list[int]:
    """Adjacency bitsets; two distinct words conflict when they are too close to share a code."""
    check_metric(metric)
    threshold = t if metric == METRIC_ASYMMETRIC else 2 * t
    adjacency = [0] * len(words)
    for i, x in enumerate(words):
        for j in range(i + 1, len(words)):
            if distance(x, words[j], metric) <= threshold:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return adjacency


def greedy_independent_set(conflicts: list[int]) -> list[int]:
    """Repeatedly takes the remaining vertex with the fewest remaining conflicts."""
    remaining = (1 << len(conflicts)) - 1
    chosen = []
    while remaining:
        v = min(_bits(remaining), key=lambda u: (bin(conflicts[u] & remaining).count("1"), u))
        chosen.append(v)
        remaining &= ~(conflicts[v] | (1 << v))
    return chosen


class _CliqueSearch:
    """
    Branch and bound for a maximum clique, bounding each branch by a greedy colouring of the
    candidate set (a clique cover of the complement).
    """

    def __init__(self, compatible: list[int], initial: list[int], budget: int):
        self.compatible = compatible
        self.best = list(initial)
        self.budget = budget
        self.nodes = 0

    def _colour_order(self, candidates: int) -> list[tuple[int, int]]:
        order = []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                v = low.bit_length() - 1
                order.append((v, colour))
                uncoloured &= ~low
                available &= ~(low | self.compatible[v])
        return order

    def expand(self, candidates: int, current: list[int]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError("The branch and bound search", self.nodes, self.budget)
        for v, colour in reversed(self._colour_order(candidates)):
            if len(current) + colour <= len(self.best):
                return
            current.append(v)
            narrowed = candidates & self.compatible[v]
            if narrowed:
                self.expand(narrowed, current)
            elif len(current) > len(self.best):
                self.best = list(current)
            current.pop()
            candidates &= ~(1 << v)


def max_independent_set(conflicts: list[int], budget: int = DEFAULT_SEARCH_BUDGET) -> list[int]:
    """
    Maximum independent set of a graph given by adjacency bitsets.

    :raises BudgetExceededError: If more than budget search nodes are expanded
    """
    size = len(conflicts)
    if size == 0:
        return []
    everyone = (1 << size) - 1
    compatible = [everyone & ~(conflicts[v] | (1 << v)) for v in range(size)]
    search = _CliqueSearch(compatible, greedy_independent_set(conflicts), budget)
    search.expand(everyone, [])
    _logger.debug(f"Clique search on {size} vertices expanded {search.nodes} nodes")
    return sorted(search.best)


def exhaustive_independence_number(conflicts: list[int]) -> int:
    """
    Independence number by plain include/exclude recursion over vertex subsets, memoised on the
    remaining set. Only meant for small graphs.
    """

    @lru_cache(maxsize=None)
    def best(remaining: int) -> int:
        if not remaining:
            return 0
        low = remaining & -remaining
        v = low.bit_length() - 1
        without = best(remaining & ~low)
        with_v = 1 + best(remaining & ~(low | conflicts[v]))
        return max(without, with_v)

    return best((1 << len(conflicts)) - 1)


@dataclass(frozen=True)
class ClassOptimum:
    W: int
    class_size: int
    optimum: int
    words: tuple[PositionVector, ...]
    exhaustive: Optional[int]


@dataclass(frozen=True)
class OptimumReport:
    p: DKParams
    n: int
    t: int
    metric: str
    classes: tuple[ClassOptimum, ...]

    @property
    def total(self) -> BigCount:
        return sum(c.optimum for c in self.classes)

    def to_dict(self) -> dict:
        return {
            "d": self.p.d,
            "k": "inf" if not self.p.bounded else int(self.p.k),
            "n": self.n,
            "t": self.t,
            "metric": self.metric,
            "optimum": self.total,
            "by_weight": {
                str(c.W): {"class_size": c.class_size, "optimum": c.optimum} for c in self.classes
            },
        }


def _solve_class(
    p: DKParams, n: int, W: int, t: int, metric: str, budget: int, cross_check: bool
) -> ClassOptimum:
    words = list(enumerate_positions(p, n, W))
    conflicts = conflict_graph(words, t, metric)
    chosen = max_independent_set(conflicts, budget)
    exhaustive = None
    if cross_check and len(words) <= EXHAUSTIVE_CLASS_LIMIT:
        exhaustive = exhaustive_independence_number(conflicts)
    return ClassOptimum(
        W=W,
        class_size=len(words),
        optimum=len(chosen),
        words=tuple(words[i] for i in chosen),
        exhaustive=exhaustive,
    )


def optimum_report(
    p: DKParams,
    n: int,
    t: int,
    metric: str,
    budget: int = DEFAULT_SEARCH_BUDGET,
    threads: Optional[int] = None,
    cross_check: bool = False,
) -> OptimumReport:
    """
    Optimal code sizes per weight class of the length-n constrained space.

    :param cross_check: Also run the exhaustive search on classes of at most 25 words
    :raises InvalidParametersError: If n or t is negative
    """
    check_metric(metric)
    if n < 0 or t < 0:
        raise InvalidParametersError(f"n and t must be non-negative, got n={n}, t={t}")
    bounds = weight_range(p, n)
    weights = [] if bounds is None else list(range(bounds[0], bounds[1] + 1))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        classes = list(
            pool.map(lambda W: _solve_class(p, n, W, t, metric, budget, cross_check), weights)
        )
    return OptimumReport(
        p=p, n=n, t=t, metric=metric, classes=tuple(c for c in classes if c.class_size)
    )


def exact_optimum(
    p: DKParams,
    n: int,
    t: int,
    metric: str,
    budget: int = DEFAULT_SEARCH_BUDGET,
    threads: Optional[int] = None,
) -> BigCount:
    """
    Largest size of a length-n code correcting t shifts (metric a: distance > t; metric s:
    distance > 2t).
    """
    return optimum_report(p, n, t, metric, budget, threads).total


def optimal_code(
    p: DKParams,
    n: int,
    t: int,
    metric: str,
    budget: int = DEFAULT_SEARCH_BUDGET,
    threads: Optional[int] = None,
) -> list[PositionVector]:
    """The words of one optimal code."""
    report = optimum_report(p, n, t, metric, budget, threads)
    return sorted(w for c in report.classes for w in c.words)
