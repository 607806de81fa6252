# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rll.shift_codes.data_classes import DKParams, PositionVector
from rll.shift_codes.exceptions import InvalidParametersError, RepresentationError
from rll.shift_codes.sequences import (
    adjacency_profile,
    count_n,
    count_nW,
    count_nWl,
    count_sequence,
    count_table,
    enumerate_positions,
    enumerate_strings,
    from_positions,
    run_profile,
    to_positions,
    validate,
    weight_range,
)

PAIRS = [
    (0, 1),
    (0, 2),
    (1, 3),
    (2, 4),
    (1, 7),
    (2, 7),
    (0, math.inf),
    (1, math.inf),
    (2, math.inf),
]
BRUTE_FORCE_MAX_N = 18


@pytest.fixture(scope="module")
def brute_force_counts() -> dict[tuple, list[int]]:
    """
    Pytest Fixture to return, for each pair in PAIRS, the number of strings of every length up to
    BRUTE_FORCE_MAX_N that validate accepts, found by checking all binary strings

    Returns:
        dict: (d, k) -> list of counts indexed by n
    """
    params = {pair: DKParams(*pair) for pair in PAIRS}
    counts = {pair: [0] * (BRUTE_FORCE_MAX_N + 1) for pair in PAIRS}
    for n in range(BRUTE_FORCE_MAX_N + 1):
        for combo in itertools.product("01", repeat=n):
            bits = "".join(combo)
            for pair, p in params.items():
                if validate(bits, p):
                    counts[pair][n] += 1
    return counts


class TestDKParams:
    @pytest.mark.parametrize("d, k", [(3, 1), (2, 2), (-1, 3)])
    def test_rejects_invalid(self, d: int, k: int) -> None:
        # WHEN
        with pytest.raises(InvalidParametersError) as exc_info:
            DKParams(d, k)

        # THEN
        assert "0 <= d < k <= inf" in str(exc_info.value)

    def test_parses_inf(self) -> None:
        assert DKParams(1, "inf") == DKParams(1)
        assert math.isinf(DKParams(2, "INF").k)
        assert str(DKParams(2)) == "(2,inf)"
        assert str(DKParams(1, "7")) == "(1,7)"


class TestValidate:
    @pytest.mark.parametrize(
        "s, d, k, expected",
        [
            ("0100101", 1, 3, True),
            ("001000010010001", 2, 4, True),
            ("0100101", 2, 3, False),
            ("", 1, 3, True),
            ("11", 0, 2, True),
            ("11", 1, 3, False),
            ("00001", 1, 3, False),
            ("0110", 0, math.inf, False),
            ("0201", 0, math.inf, False),
        ],
    )
    def test_membership(self, s: str, d: int, k: float, expected: bool) -> None:
        assert validate(s, DKParams(d, k)) is expected


class TestPositions:
    def test_example_string(self) -> None:
        # WHEN
        v = to_positions("001000010010001")

        # THEN
        assert v == PositionVector((3, 8, 11, 15), 15)
        assert v.gaps == (3, 5, 3, 4)
        assert v.weight == 4
        assert from_positions(v) == "001000010010001"

    def test_empty(self) -> None:
        assert to_positions("") == PositionVector((), 0)
        assert from_positions(PositionVector((), 0)) == ""

    @pytest.mark.parametrize("s", ["010", "0120", "01a1"])
    def test_rejects_malformed(self, s: str) -> None:
        with pytest.raises(RepresentationError):
            to_positions(s)

    def test_rejects_unordered_vector(self) -> None:
        with pytest.raises(RepresentationError):
            PositionVector((3, 2), 5)
        with pytest.raises(RepresentationError):
            PositionVector((2, 6), 5)

    @given(
        st.sampled_from(PAIRS).flatmap(
            lambda pair: st.lists(
                st.integers(min_value=pair[0], max_value=min(pair[1], pair[0] + 6)), max_size=12
            ).map(lambda runs: (pair, runs))
        )
    )
    def test_round_trip(self, case: tuple) -> None:
        # GIVEN
        (d, k), runs = case
        s = "".join("0" * j + "1" for j in runs)

        # WHEN
        v = to_positions(s)

        # THEN
        assert validate(s, DKParams(d, k))
        assert v.in_space(DKParams(d, k))
        assert from_positions(v) == s
        assert [g - 1 for g in v.gaps] == runs


class TestProfiles:
    def test_run_profile(self) -> None:
        # WHEN
        profile = run_profile("001000010010001")

        # THEN
        assert profile.counts == {2: 2, 3: 1, 4: 1}
        assert profile.lam(2) == 2
        assert profile.lam(7) == 0
        assert profile.weight == 4
        assert profile.n == 15

    def test_adjacency_profile(self) -> None:
        # WHEN
        profile = adjacency_profile("0100101", DKParams(1, 3))

        # THEN
        assert profile.preceding == (1, 2, 1)
        assert profile.following == (2, 1, None)
        assert profile.right_shiftable == 2
        assert profile.left_shiftable == 1

    def test_adjacency_profile_rejects_invalid(self) -> None:
        with pytest.raises(RepresentationError):
            adjacency_profile("0001", DKParams(0, 2))


class TestCountN:
    @pytest.mark.parametrize(
        "d, k, n, expected",
        [
            (0, math.inf, 10, 512),
            (0, math.inf, 0, 1),
            (1, 3, 7, 5),
            (1, 3, 1, 0),
            (0, 1, 5, 8),
            (1, math.inf, 10, 34),
        ],
    )
    def test_values(self, d: int, k: float, n: int, expected: int) -> None:
        assert count_n(DKParams(d, k), n) == expected

    @pytest.mark.parametrize("pair", PAIRS)
    def test_matches_brute_force(self, pair: tuple, brute_force_counts: dict) -> None:
        # WHEN
        counts = count_sequence(DKParams(*pair), BRUTE_FORCE_MAX_N)

        # THEN
        assert counts == brute_force_counts[pair]

    def test_negative_length(self) -> None:
        with pytest.raises(InvalidParametersError):
            count_n(DKParams(1, 3), -1)

    def test_exact_for_large_n(self) -> None:
        # GIVEN
        p = DKParams(0, math.inf)

        # THEN
        assert count_n(p, 1001) == 2**1000


class TestCountNW:
    @pytest.mark.parametrize(
        "d, k, n, W, expected",
        [
            (0, math.inf, 10, 3, 36),
            (1, 7, 11, 3, 21),
            (1, 3, 7, 3, 3),
            (1, 3, 7, 2, 2),
            (1, 3, 7, 4, 0),
            (1, 3, 0, 0, 1),
            (1, 3, 5, 0, 0),
        ],
    )
    def test_values(self, d: int, k: float, n: int, W: int, expected: int) -> None:
        assert count_nW(DKParams(d, k), n, W) == expected

    @pytest.mark.parametrize("d", [0, 1, 2, 3])
    def test_unbounded_closed_form(self, d: int) -> None:
        # GIVEN
        p = DKParams(d)

        # THEN
        for n in range(1, 201, 7):
            for W in range(1, n + 1):
                top = n - 1 - W * d
                expected = math.comb(top, W - 1) if top >= W - 1 >= 0 else 0
                assert count_nW(p, n, W) == expected

    @pytest.mark.parametrize("pair", PAIRS)
    def test_sums_to_count_n(self, pair: tuple) -> None:
        # GIVEN
        p = DKParams(*pair)

        # THEN
        for n in range(0, 201, 13):
            assert sum(count_nW(p, n, W) for W in range(n + 1)) == count_n(p, n)

    @pytest.mark.parametrize("pair", [(1, 3), (2, 7), (0, math.inf)])
    def test_table_agrees(self, pair: tuple) -> None:
        # GIVEN
        p = DKParams(*pair)

        # WHEN
        table = count_table(p, 40)

        # THEN
        for W, row in enumerate(table):
            for n, value in enumerate(row):
                assert value == count_nW(p, n, W)

    def test_weight_range(self) -> None:
        assert weight_range(DKParams(1, 3), 7) == (2, 3)
        assert weight_range(DKParams(2, 7), 1) is None
        assert weight_range(DKParams(0), 4) == (1, 4)
        assert weight_range(DKParams(1, 3), 0) == (0, 0)


class TestCountNWl:
    def test_value(self) -> None:
        # Strings of (1,3) length 7 weight 3 with two runs of length 1: 0101001, 0100101, 0010101
        assert count_nWl(DKParams(1, 3), 7, 3, 1, 2) == 3

    def test_more_runs_than_ones(self) -> None:
        assert count_nWl(DKParams(1, 3), 7, 3, 1, 4) == 0

    def test_run_length_outside_constraint(self) -> None:
        with pytest.raises(InvalidParametersError):
            count_nWl(DKParams(1, 3), 7, 3, 4, 1)

    @pytest.mark.parametrize("pair", [(0, 2), (1, 3), (1, 7), (2, 7)])
    def test_marginalizes(self, pair: tuple) -> None:
        # GIVEN
        p = DKParams(*pair)

        # THEN
        for n in range(0, 41, 3):
            for W in range(n // p.min_part + 1):
                for j in range(p.d, int(p.k) + 1):
                    total = sum(count_nWl(p, n, W, j, ell) for ell in range(W + 1))
                    assert total == count_nW(p, n, W)

    def test_matches_enumeration(self) -> None:
        # GIVEN
        p = DKParams(1, 3)
        n = 16

        # THEN
        for W in range(5, 9):
            strings = list(enumerate_strings(p, n, W))
            for j in (1, 2, 3):
                for ell in range(W + 1):
                    expected = sum(1 for s in strings if run_profile(s).lam(j) == ell)
                    assert count_nWl(p, n, W, j, ell) == expected


class TestEnumerate:
    def test_weight_slice(self) -> None:
        # WHEN
        vectors = list(enumerate_positions(DKParams(1, 3), 7, 3))

        # THEN
        assert [v.positions for v in vectors] == [(2, 4, 7), (2, 5, 7), (3, 5, 7)]

    def test_unbounded(self) -> None:
        assert list(enumerate_strings(DKParams(0), 3)) == ["111", "101", "011", "001"]

    def test_empty_length(self) -> None:
        assert list(enumerate_positions(DKParams(1, 3), 0)) == [PositionVector((), 0)]
        assert list(enumerate_positions(DKParams(1, 3), 0, 1)) == []

    @pytest.mark.parametrize("pair", PAIRS)
    def test_counts_and_order(self, pair: tuple) -> None:
        # GIVEN
        p = DKParams(*pair)

        for n in range(0, 15):
            # WHEN
            vectors = list(enumerate_positions(p, n))

            # THEN
            assert len(vectors) == count_n(p, n)
            assert vectors == sorted(vectors)
            assert all(v.in_space(p) for v in vectors)

    def test_weight_slice_count(self) -> None:
        assert sum(1 for _ in enumerate_positions(DKParams(1, 7), 11, 3)) == 21

    def test_profile_identities(self) -> None:
        # GIVEN
        p = DKParams(2, 7)

        # THEN
        for s in enumerate_strings(p, 20):
            profile = run_profile(s)
            assert sum(profile.counts.values()) == profile.weight
            assert sum((j + 1) * c for j, c in profile.counts.items()) == profile.n
