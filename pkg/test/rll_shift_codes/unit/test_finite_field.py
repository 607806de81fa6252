# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from __future__ import annotations

import pytest

from rll.shift_codes.exceptions import BudgetExceededError, DomainError
from rll.shift_codes.finite_field import (
    check_prime,
    find_primitive_polynomial,
    is_irreducible,
    power_table,
    translate_logs,
    x_is_primitive,
)


class TestPolynomials:
    @pytest.mark.parametrize(
        "f, irreducible, primitive",
        [
            ([1, 1, 2], True, True),
            ([1, 0, 1], True, False),
            ([1, 0, 2], False, False),
        ],
    )
    def test_over_gf3(self, f: list, irreducible: bool, primitive: bool) -> None:
        assert is_irreducible(f, 3) is irreducible
        if irreducible:
            assert x_is_primitive(f, 3) is primitive

    def test_check_prime(self) -> None:
        check_prime(7)
        with pytest.raises(DomainError):
            check_prime(9)


class TestFindPrimitivePolynomial:
    @pytest.mark.parametrize("q, t", [(2, 3), (3, 2), (5, 2), (7, 3)])
    def test_finds_primitive(self, q: int, t: int) -> None:
        # WHEN
        f = find_primitive_polynomial(q, t)

        # THEN
        assert len(f) == t + 1
        assert f[0] == 1
        assert is_irreducible(f, q)
        assert x_is_primitive(f, q)

    def test_reproducible(self) -> None:
        assert find_primitive_polynomial(5, 3, seed=11) == find_primitive_polynomial(5, 3, seed=11)

    @pytest.mark.parametrize("q, t", [(4, 2), (3, 0)])
    def test_rejects(self, q: int, t: int) -> None:
        with pytest.raises(DomainError):
            find_primitive_polynomial(q, t)


class TestPowerTable:
    def test_gf9(self) -> None:
        # WHEN
        table = power_table([1, 1, 2], 3)

        # THEN
        assert len(table) == 8
        assert len(set(table)) == 8
        assert table[0] == (1,)
        assert table[1] == (1, 0)
        assert table[4] == (2,)

    def test_translate_logs(self) -> None:
        # x, x + 2 and x + 1 are x^1, x^6 and x^7 modulo x^2 + x + 2
        assert translate_logs([1, 1, 2], 3) == [1, 6, 7]

    def test_budget(self) -> None:
        with pytest.raises(BudgetExceededError):
            power_table([1, 1, 2], 3, budget=4)
