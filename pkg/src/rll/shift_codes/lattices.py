# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Congruence lattices with large minimum shift distance, Sidon sets, and code
extraction from lattice cosets
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

import numpy as np
from sympy import nextprime

from .data_classes import DKParams, ExtendedInt, PositionVector
from .data_const import (
    DEFAULT_COSET_BUDGET,
    DEFAULT_FIELD_ORDER_BUDGET,
    DEFAULT_LATTICE_INDEX_BUDGET,
    INF,
    METRIC_ASYMMETRIC,
    METRIC_SYMMETRIC,
)
from .exceptions import (
    BudgetExceededError,
    DomainError,
    InvalidParametersError,
    VerificationError,
)
from .finite_field import check_prime, find_primitive_polynomial, translate_logs
from .metrics import Codebook, check_metric, vector_dist_a, vector_dist_s
from .sequences import count_nW, enumerate_positions

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CongruenceLattice:
    """
    The sublattice {u in Z^m : sum_i weights[r][i] u_i = 0 mod moduli[r] for every r}
    """

    m: int
    moduli: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise InvalidParametersError(f"Lattice dimension must be at least 1, got {self.m}")
        if len(self.moduli) != len(self.weights):
            raise InvalidParametersError("Each congruence needs one modulus and one weight row")
        for modulus, row in zip(self.moduli, self.weights):
            if modulus < 1:
                raise InvalidParametersError(f"Moduli must be positive, got {modulus}")
            if len(row) != self.m:
                raise InvalidParametersError(
                    f"Weight row {row} does not have the lattice dimension {self.m}"
                )
        # Reduce weights so that equal lattices compare equal
        reduced = tuple(
            tuple(w % modulus for w in row) for modulus, row in zip(self.moduli, self.weights)
        )
        object.__setattr__(self, "weights", reduced)

    def syndrome(self, u: Sequence[int]) -> tuple[int, ...]:
        if len(u) != self.m:
            raise InvalidParametersError(f"Expected a vector of length {self.m}, got {len(u)}")
        return tuple(
            sum(w * v for w, v in zip(row, u)) % modulus
            for modulus, row in zip(self.moduli, self.weights)
        )

    def contains(self, u: Sequence[int]) -> bool:
        return not any(self.syndrome(u))

    @cached_property
    def index(self) -> int:
        """
        |Z^m / L|: the size of the subgroup of prod Z_N generated by the images of the unit
        vectors. Exact also for dependent congruences.
        """
        bound = math.prod(self.moduli)
        if bound > DEFAULT_LATTICE_INDEX_BUDGET:
            raise BudgetExceededError(
                "The lattice syndrome group", bound, DEFAULT_LATTICE_INDEX_BUDGET
            )
        generators = {tuple(row[i] for row in self.weights) for i in range(self.m)}
        zero = tuple(0 for _ in self.moduli)
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for element in frontier:
                for g in generators:
                    s = tuple((a + b) % n for a, b, n in zip(element, g, self.moduli))
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return len(seen)

    @property
    def density(self) -> Fraction:
        return Fraction(1, self.index)

    def describe(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.m,
            "moduli": list(self.moduli),
            "weights": [list(row) for row in self.weights],
            "index": self.index,
        }


@dataclass(frozen=True)
class SidonSet:
    """
    Elements of Z_N whose t-fold sums (as multisets) are pairwise distinct
    """

    order: int
    modulus: int
    elements: tuple[int, ...]

    def t_sums_distinct(self) -> bool:
        seen = set()
        for combo in itertools.combinations_with_replacement(self.elements, self.order):
            s = sum(combo) % self.modulus
            if s in seen:
                return False
            seen.add(s)
        return True

    def __len__(self) -> int:
        return len(self.elements)


def trivial_sidon_set(m: int) -> SidonSet:
    """{0, ..., m} in Z_(m+1), a Sidon set of order 1."""
    if m < 0:
        raise InvalidParametersError(f"m must be non-negative, got {m}")
    return SidonSet(order=1, modulus=m + 1, elements=tuple(range(m + 1)))


def bose_chowla_from_polynomial(
    q: int, f: Sequence[int], budget: int = DEFAULT_FIELD_ORDER_BUDGET
) -> SidonSet:
    """
    Bose-Chowla set for a given primitive polynomial f of degree t over GF(q): the discrete logs
    of theta + c, c in GF(q), theta a root of f, in Z_(q^t - 1).
    """
    check_prime(q)
    t = len(f) - 1
    elements = tuple(sorted(translate_logs(f, q, budget)))
    if len(elements) != q:
        raise DomainError(f"Polynomial {list(f)} is not primitive of degree {t} over GF({q})")
    return SidonSet(order=t, modulus=q**t - 1, elements=elements)


def bose_chowla(
    q: int, t: int, seed: Optional[int] = None, budget: int = DEFAULT_FIELD_ORDER_BUDGET
) -> SidonSet:
    """
    Sidon set of order t and size q in Z_(q^t - 1), for prime q.

    The field GF(q^t) is realised by a primitive polynomial found by seeded random search. For
    t = 1 the set {0, ..., q-1} in Z_q is returned.

    :raises DomainError: If q is not prime or t < 1
    """
    check_prime(q)
    if t < 1:
        raise DomainError(f"The Sidon order must be at least 1, got {t}")
    if t == 1:
        return trivial_sidon_set(q - 1)
    if q**t - 1 > budget:
        raise BudgetExceededError(f"The field GF({q}^{t})", q**t, budget)
    f = find_primitive_polynomial(q, t, seed)
    return bose_chowla_from_polynomial(q, f, budget)


def sidon_set_for_dimension(m: int, t: int) -> SidonSet:
    """Smallest available Sidon set of order t with at least m + 1 elements."""
    if t == 1:
        return trivial_sidon_set(m)
    return bose_chowla(int(nextprime(m)), t)


def lattice_from_sidon(B: SidonSet, m: int) -> CongruenceLattice:
    """
    L = {u in Z^m : sum_i u_i (b_i - b_0) = 0 mod N}, for B = {b_0, ..., b_m, ...}.

    :raises InvalidParametersError: If B has fewer than m + 1 elements
    """
    if len(B) < m + 1:
        raise InvalidParametersError(
            f"A Sidon set of size {len(B)} cannot define a lattice of dimension {m}"
        )
    b0 = B.elements[0]
    row = tuple((b - b0) % B.modulus for b in B.elements[1 : m + 1])
    return CongruenceLattice(
        m=m,
        moduli=(B.modulus,),
        weights=(row,),
        name=f"sidon(order={B.order}, N={B.modulus})",
    )


def sidon_lattice(m: int, t: int) -> CongruenceLattice:
    """Lattice of dimension m with asymmetric minimum distance greater than t."""
    return lattice_from_sidon(sidon_set_for_dimension(m, t), m)


def golomb_welch(m: int) -> CongruenceLattice:
    """{u : sum_i i u_i = 0 mod 2m + 1}; its radius-1 Manhattan balls tile Z^m."""
    if m < 1:
        raise InvalidParametersError(f"Lattice dimension must be at least 1, got {m}")
    return CongruenceLattice(
        m=m,
        moduli=(2 * m + 1,),
        weights=(tuple(range(1, m + 1)),),
        name=f"golomb-welch(m={m})",
    )


def berlekamp_lattice(m: int) -> CongruenceLattice:
    """
    {u : sum i u_i = 0 and sum i^3 u_i = 0 mod p}, p the smallest prime >= max(5, 2m + 1).

    Every nonzero vector has Manhattan norm at least 5.
    """
    if m < 1:
        raise InvalidParametersError(f"Lattice dimension must be at least 1, got {m}")
    p = int(nextprime(max(5, 2 * m + 1) - 1))
    return CongruenceLattice(
        m=m,
        moduli=(p, p),
        weights=(tuple(range(1, m + 1)), tuple(i**3 for i in range(1, m + 1))),
        name=f"berlekamp(m={m}, p={p})",
    )


def zero_sum_isometry(u: Sequence[int]) -> tuple[int, ...]:
    """
    Maps a zero-sum vector of Z^m to Z^(m-1) by dropping its last coordinate.

    Manhattan distances between zero-sum vectors become twice the asymmetric distances of the
    images.

    :raises DomainError: If u does not sum to zero or is empty
    """
    if len(u) < 1:
        raise DomainError("Expected a non-empty vector")
    if sum(u) != 0:
        raise DomainError(f"Vector {tuple(u)} does not sum to zero")
    return tuple(int(v) for v in u[:-1])


def zero_sum_lift(v: Sequence[int]) -> tuple[int, ...]:
    """Inverse of zero_sum_isometry."""
    return tuple(int(x) for x in v) + (-sum(v),)


def stacked_symmetric_lattice(m: int, t: int) -> CongruenceLattice:
    """
    Union over j of (L_0 + j (2t + 1) e_1), L_0 the zero-sum vectors whose projection to
    Z^(m-1) lies in an order-t Sidon lattice.

    u lies in the union iff sum u = 0 mod 2t + 1 and (u_1 - sum u, u_2, ..., u_(m-1)) lies in
    the Sidon lattice, i.e. sum_(2 <= j < m) (c_j - c_1) u_j - c_1 u_m = 0 mod N.
    """
    if m < 2 or t < 1:
        raise InvalidParametersError(f"Need m >= 2 and t >= 1, got m={m}, t={t}")
    base = sidon_lattice(m - 1, t)
    modulus = base.moduli[0]
    c = base.weights[0]
    row = (0,) + tuple(c[j] - c[0] for j in range(1, m - 1)) + (-c[0],)
    return CongruenceLattice(
        m=m,
        moduli=(2 * t + 1, modulus),
        weights=(tuple(1 for _ in range(m)), row),
        name=f"stacked(m={m}, t={t}, N={modulus})",
    )


def _box(m: int, radius: int) -> np.ndarray:
    axis = np.arange(-radius, radius + 1)
    grids = np.meshgrid(*([axis] * m), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def lattice_min_distance_in_box(
    L: CongruenceLattice, metric: str, radius: int
) -> ExtendedInt:
    """
    Smallest norm of a nonzero lattice vector in [-radius, radius]^m, or inf if there is none.

    Vectors of asymmetric norm at most r lie in [-r, r]^m, vectors of Manhattan norm at most r
    as well, so a box of radius r decides whether the minimum distance exceeds r.
    """
    check_metric(metric)
    points = _box(L.m, radius)
    syndromes = np.stack(
        [(points @ np.array(row)) % modulus for modulus, row in zip(L.moduli, L.weights)],
        axis=1,
    )
    members = points[~syndromes.any(axis=1) & points.any(axis=1)]
    if len(members) == 0:
        return INF
    if metric == METRIC_ASYMMETRIC:
        up = np.clip(members, 0, None).sum(axis=1)
        down = np.clip(-members, 0, None).sum(axis=1)
        norms = np.maximum(up, down)
    else:
        norms = np.abs(members).sum(axis=1)
    return int(norms.min())


def tiles_with_balls(L: CongruenceLattice, r: int, metric: str = METRIC_SYMMETRIC) -> bool:
    """
    True if the radius-r balls centred on L tile Z^m: the ball meets every coset exactly once.
    """
    check_metric(metric)
    norm = vector_dist_s if metric == METRIC_SYMMETRIC else vector_dist_a
    ball = [u for u in itertools.product(range(-r, r + 1), repeat=L.m) if norm(u) <= r]
    syndromes = {L.syndrome(u) for u in ball}
    return len(syndromes) == len(ball) == L.index


def lattice_for_code(W: int, t: int, metric: str) -> CongruenceLattice:
    """
    Lattice of dimension W - 1 whose minimum distance exceeds t (metric a) or 2t (metric s).
    """
    check_metric(metric)
    m = W - 1
    if m < 1:
        raise InvalidParametersError(f"Code extraction needs weight W >= 2, got W = {W}")
    if t < 1:
        raise InvalidParametersError(f"Shift budget t must be at least 1, got {t}")
    if metric == METRIC_ASYMMETRIC:
        return sidon_lattice(m, t)
    if t == 1:
        return golomb_welch(m)
    if m == 1:
        # Z itself: the integers divisible by 2t + 1
        return CongruenceLattice(m=1, moduli=(2 * t + 1,), weights=((1,),), name=f"{2 * t + 1}Z")
    stacked = stacked_symmetric_lattice(m, t)
    if t == 2:
        alternative = berlekamp_lattice(m)
        if alternative.index < stacked.index:
            return alternative
    return stacked


@dataclass(frozen=True)
class ConstructedCode:
    p: DKParams
    n: int
    W: int
    t: int
    metric: str
    lattice: CongruenceLattice
    translate: tuple[int, ...]
    words: tuple[PositionVector, ...]
    space_size: int
    min_distance: ExtendedInt

    @property
    def averaging_bound(self) -> int:
        """ceil(space size / index)"""
        return -(-self.space_size // self.lattice.index)

    def codebook(self) -> Codebook:
        return Codebook(self.p, self.n, self.words)

    def provenance(self) -> dict:
        return {
            "d": self.p.d,
            "k": "inf" if not self.p.bounded else int(self.p.k),
            "n": self.n,
            "W": self.W,
            "t": self.t,
            "metric": self.metric,
            "lattice": self.lattice.describe(),
            "density": str(self.lattice.density),
            "translate": list(self.translate),
            "size": len(self.words),
            "space_size": self.space_size,
            "averaging_bound": self.averaging_bound,
            "min_distance": "inf" if math.isinf(self.min_distance) else int(self.min_distance),
        }


def extract_code(
    p: DKParams,
    n: int,
    W: int,
    t: int,
    metric: str,
    coset_budget: int = DEFAULT_COSET_BUDGET,
) -> ConstructedCode:
    """
    Largest intersection of a lattice coset (u + L) x {n} with the constrained space of weight W.

    The words are grouped by the syndrome of their first W - 1 coordinates; each group is one
    coset. Ties are broken by the lexicographically smallest word. The returned code has at least
    ceil(|space| / index) words and its minimum distance is re-verified.

    :raises BudgetExceededError: If the number of cosets exceeds coset_budget
    :raises VerificationError: If the re-verified minimum distance is too small
    """
    lattice = lattice_for_code(W, t, metric)
    if lattice.index > coset_budget:
        raise BudgetExceededError(
            f"The coset space of {lattice.name}", lattice.index, coset_budget
        )
    groups: dict[tuple[int, ...], list[PositionVector]] = {}
    for word in enumerate_positions(p, n, W):
        groups.setdefault(lattice.syndrome(word.positions[:-1]), []).append(word)
    space_size = count_nW(p, n, W)
    if not groups:
        raise InvalidParametersError(f"No {p} strings of length {n} and weight {W}")
    best = min(groups.values(), key=lambda words: (-len(words), words[0]))
    code = Codebook(p, n, best)
    verified = code.min_da if metric == METRIC_ASYMMETRIC else code.min_ds
    target = t if metric == METRIC_ASYMMETRIC else 2 * t
    if verified <= target:
        raise VerificationError(
            f"Coset code from {lattice.name} has minimum distance {verified}, expected > {target}"
        )
    _logger.info(
        f"Extracted {len(best)} of {space_size} words from {lattice.index} cosets of {lattice.name}"
    )
    return ConstructedCode(
        p=p,
        n=n,
        W=W,
        t=t,
        metric=metric,
        lattice=lattice,
        translate=best[0].positions[:-1],
        words=tuple(best),
        space_size=space_size,
        min_distance=verified,
    )
