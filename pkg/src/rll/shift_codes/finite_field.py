# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""
RLL Shift Codes - Arithmetic in GF(q^t) = GF(q)[x] / f(x) for prime q

Polynomials are coefficient lists, highest degree first, as in sympy.polys.galoistools.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np
from sympy import isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem, gf_sub

from .data_const import DEFAULT_FIELD_ORDER_BUDGET, FIELD_SEARCH_SEED
from .exceptions import BudgetExceededError, DomainError

_logger = logging.getLogger(__name__)

_X = [ZZ(1), ZZ(0)]
_ONE = [ZZ(1)]


def check_prime(q: int) -> None:
    """
    :raises DomainError: If q is not a prime
    """
    if not isprime(q):
        raise DomainError(f"The base field order must be a prime, got {q}")


def _to_zz(f: Sequence[int], q: int) -> list:
    return [ZZ(int(c) % q) for c in f]


def is_irreducible(f: Sequence[int], q: int) -> bool:
    return bool(gf_irreducible_p(_to_zz(f, q), q, ZZ))


def x_is_primitive(f: Sequence[int], q: int) -> bool:
    """True if x generates the multiplicative group of GF(q)[x] / f."""
    t = len(f) - 1
    order = q**t - 1
    g = _to_zz(f, q)
    for r in primefactors(order):
        if gf_pow_mod(_X, order // r, g, q, ZZ) == _ONE:
            return False
    return True


def find_primitive_polynomial(q: int, t: int, seed: Optional[int] = None) -> list[int]:
    """
    Random search for a monic irreducible polynomial of degree t over GF(q) whose root x is a
    primitive element.

    :param seed: Seed of the search; the default keeps constructions reproducible
    :returns: Coefficients, highest degree first
    :raises DomainError: If q is not prime or t < 1
    """
    check_prime(q)
    if t < 1:
        raise DomainError(f"The extension degree must be at least 1, got {t}")
    rng = np.random.default_rng(FIELD_SEARCH_SEED if seed is None else seed)
    attempts = 0
    while True:
        attempts += 1
        tail = [int(c) for c in rng.integers(0, q, size=t)]
        f = [1] + tail
        if tail[-1] == 0:
            continue
        if is_irreducible(f, q) and x_is_primitive(f, q):
            _logger.debug(f"Primitive polynomial {f} over GF({q}) after {attempts} attempts")
            return f


def power_table(
    f: Sequence[int], q: int, budget: int = DEFAULT_FIELD_ORDER_BUDGET
) -> list[tuple[int, ...]]:
    """
    x^a mod f for a = 0 .. q^t - 2, each as a coefficient tuple (highest degree first, stripped).

    :raises BudgetExceededError: If q^t - 1 exceeds budget
    """
    t = len(f) - 1
    order = q**t - 1
    if order > budget:
        raise BudgetExceededError(f"The multiplicative group of GF({q}^{t})", order, budget)
    g = _to_zz(f, q)
    current = _ONE
    table = []
    for _ in range(order):
        table.append(tuple(int(c) for c in current))
        current = gf_rem(gf_mul(current, _X, q, ZZ), g, q, ZZ)
    return table


def translate_logs(f: Sequence[int], q: int, budget: int = DEFAULT_FIELD_ORDER_BUDGET) -> list[int]:
    """
    Exponents a with x^a - x in the base field, i.e. the discrete logs of x + c for c in GF(q).
    """
    logs = []
    for a, power in enumerate(power_table(f, q, budget)):
        difference = gf_sub([ZZ(c) for c in power], _X, q, ZZ)
        if len(difference) <= 1:
            logs.append(a)
    return logs
