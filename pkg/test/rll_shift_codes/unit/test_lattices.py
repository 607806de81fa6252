# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest

from rll.shift_codes.cli.config import validate_against_schema
from rll.shift_codes.data_classes import DKParams
from rll.shift_codes.exceptions import (
    BudgetExceededError,
    DomainError,
    InvalidParametersError,
)
from rll.shift_codes.lattices import (
    CongruenceLattice,
    SidonSet,
    berlekamp_lattice,
    bose_chowla,
    bose_chowla_from_polynomial,
    extract_code,
    golomb_welch,
    lattice_for_code,
    lattice_from_sidon,
    lattice_min_distance_in_box,
    sidon_lattice,
    sidon_set_for_dimension,
    stacked_symmetric_lattice,
    tiles_with_balls,
    trivial_sidon_set,
    zero_sum_isometry,
    zero_sum_lift,
)
from rll.shift_codes.metrics import (
    corrects_asym,
    corrects_asym_operational,
    corrects_sym,
    corrects_sym_operational,
    vector_dist_a,
    vector_dist_s,
)
from rll.shift_codes.sequences import count_nW, weight_range


class TestCongruenceLattice:
    def test_syndrome_and_contains(self) -> None:
        # GIVEN
        L = golomb_welch(2)

        # THEN
        assert L.syndrome((1, 2)) == (0,)
        assert L.contains((1, 2))
        assert not L.contains((1, 0))
        assert L.index == 5
        assert L.density == Fraction(1, 5)

    def test_dependent_congruences(self) -> None:
        L = CongruenceLattice(m=1, moduli=(2, 2), weights=((1,), (3,)))
        assert L.index == 2
        assert L.weights == ((1,), (1,))

    def test_rejects_bad_shape(self) -> None:
        with pytest.raises(InvalidParametersError):
            CongruenceLattice(m=2, moduli=(5,), weights=((1,),))
        with pytest.raises(InvalidParametersError):
            golomb_welch(2).syndrome((1, 2, 3))

    def test_describe(self) -> None:
        assert golomb_welch(2).describe() == {
            "name": "golomb-welch(m=2)",
            "dimension": 2,
            "moduli": [5],
            "weights": [[1, 2]],
            "index": 5,
        }


class TestSidonSets:
    def test_bose_chowla_gf9(self) -> None:
        # WHEN
        B = bose_chowla_from_polynomial(3, [1, 1, 2])

        # THEN
        assert B.elements == (1, 6, 7)
        assert B.modulus == 8
        assert B.order == 2
        assert B.t_sums_distinct()

    def test_not_primitive(self) -> None:
        with pytest.raises(DomainError):
            bose_chowla_from_polynomial(3, [1, 0, 1])

    @pytest.mark.parametrize("q, t", [(3, 2), (5, 2), (3, 3), (7, 2)])
    def test_bose_chowla(self, q: int, t: int) -> None:
        # WHEN
        B = bose_chowla(q, t)

        # THEN
        assert len(B) == q
        assert B.modulus == q**t - 1
        assert B.t_sums_distinct()

    def test_order_one(self) -> None:
        assert bose_chowla(5, 1) == trivial_sidon_set(4)
        assert trivial_sidon_set(4).t_sums_distinct()

    def test_collision_detected(self) -> None:
        B = trivial_sidon_set(3)
        assert not SidonSet(order=2, modulus=B.modulus, elements=B.elements).t_sums_distinct()

    def test_for_dimension(self) -> None:
        B = sidon_set_for_dimension(3, 2)
        assert len(B) >= 4
        assert B.modulus == 24


class TestLatticeFromSidon:
    def test_differences_from_first_element(self) -> None:
        # GIVEN
        B = bose_chowla_from_polynomial(3, [1, 1, 2])

        # WHEN
        L = lattice_from_sidon(B, 2)

        # THEN
        assert L.moduli == (8,)
        assert L.weights == ((5, 6),)
        assert L.syndrome([1, 0]) == (5,)
        assert L.index == 8
        assert L.density == Fraction(1, 8)

    def test_set_too_small(self) -> None:
        with pytest.raises(InvalidParametersError):
            lattice_from_sidon(trivial_sidon_set(2), 3)


class TestMinimumDistances:
    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
    def test_golomb_welch_tiles(self, m: int) -> None:
        assert tiles_with_balls(golomb_welch(m), 1)
        assert lattice_min_distance_in_box(golomb_welch(m), "s", 3) == 3

    @pytest.mark.parametrize("m, expected", [(2, 5), (3, 6)])
    def test_berlekamp(self, m: int, expected: int) -> None:
        assert lattice_min_distance_in_box(berlekamp_lattice(m), "s", expected) == expected

    def test_berlekamp_prime(self) -> None:
        assert berlekamp_lattice(3).moduli == (7, 7)
        assert berlekamp_lattice(1).moduli == (5, 5)

    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("t", [1, 2])
    def test_sidon_lattice_asymmetric_distance(self, m: int, t: int) -> None:
        assert lattice_min_distance_in_box(sidon_lattice(m, t), "a", t) > t

    @pytest.mark.parametrize("m, t", [(2, 1), (3, 1), (3, 2), (4, 2)])
    def test_stacked_symmetric_distance(self, m: int, t: int) -> None:
        # WHEN
        L = stacked_symmetric_lattice(m, t)

        # THEN
        assert lattice_min_distance_in_box(L, "s", 2 * t) > 2 * t

    def test_empty_box(self) -> None:
        assert lattice_min_distance_in_box(golomb_welch(3), "a", 0) == math.inf


class TestZeroSumIsometry:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_halves_manhattan_norm(self, m: int) -> None:
        for v in itertools.product(range(-3, 4), repeat=m):
            # WHEN
            u = zero_sum_lift(v)

            # THEN
            assert sum(u) == 0
            assert zero_sum_isometry(u) == v
            assert vector_dist_s(u) == 2 * vector_dist_a(v)

    @pytest.mark.parametrize("m", [1, 2])
    def test_halves_manhattan_distance(self, m: int) -> None:
        # GIVEN
        box = list(itertools.product(range(-3, 4), repeat=m))

        for v, w in itertools.product(box, repeat=2):
            # WHEN
            difference = [a - b for a, b in zip(zero_sum_lift(v), zero_sum_lift(w))]

            # THEN
            assert vector_dist_s(difference) == 2 * vector_dist_a([a - b for a, b in zip(v, w)])

    def test_round_trip(self) -> None:
        assert zero_sum_lift(zero_sum_isometry((2, -3, 1))) == (2, -3, 1)

    def test_rejects_nonzero_sum(self) -> None:
        with pytest.raises(DomainError):
            zero_sum_isometry((1, 1))


class TestLatticeForCode:
    def test_choices(self) -> None:
        assert lattice_for_code(4, 1, "s") == golomb_welch(3)
        assert lattice_for_code(2, 3, "s").name == "7Z"
        assert lattice_for_code(4, 2, "a") == sidon_lattice(3, 2)

    @pytest.mark.parametrize("W, t", [(1, 1), (3, 0)])
    def test_rejects(self, W: int, t: int) -> None:
        with pytest.raises(InvalidParametersError):
            lattice_for_code(W, t, "s")


class TestExtractCode:
    def test_symmetric(self) -> None:
        # WHEN
        code = extract_code(DKParams(0), 10, 3, 1, "s")

        # THEN
        assert code.space_size == count_nW(DKParams(0), 10, 3) == 36
        assert code.averaging_bound == 8
        assert len(code.words) >= code.averaging_bound
        assert code.min_distance > 2
        assert corrects_sym(code.codebook(), 1)
        assert corrects_sym_operational(code.codebook(), 1)
        validate_against_schema(code.provenance(), "provenance")

    def test_asymmetric(self) -> None:
        # WHEN
        code = extract_code(DKParams(1, 7), 20, 4, 2, "a")

        # THEN
        assert len(code.words) >= code.averaging_bound
        assert corrects_asym(code.codebook(), 2, 0)
        assert corrects_asym_operational(code.codebook(), 1, 1)
        assert all(w.weight == 4 and w.n == 20 for w in code.words)
        validate_against_schema(code.provenance(), "provenance")

    def test_two_shifts_symmetric(self) -> None:
        # WHEN
        code = extract_code(DKParams(1, 7), 18, 4, 2, "s")

        # THEN
        assert code.min_distance > 4
        assert len(code.words) >= code.averaging_bound

    def test_deterministic(self) -> None:
        assert extract_code(DKParams(0), 10, 3, 1, "s") == extract_code(DKParams(0), 10, 3, 1, "s")

    def test_budget(self) -> None:
        with pytest.raises(BudgetExceededError):
            extract_code(DKParams(0), 10, 3, 1, "s", coset_budget=2)

    def test_empty_space(self) -> None:
        with pytest.raises(InvalidParametersError):
            extract_code(DKParams(1, 3), 7, 4, 1, "s")


@pytest.mark.slow
class TestExtractCodeGrid:
    @pytest.mark.parametrize("pair", [(1, 3), (1, 7)])
    @pytest.mark.parametrize("metric", ["a", "s"])
    @pytest.mark.parametrize("t", [1, 2])
    def test_distance_and_size(self, pair: tuple, metric: str, t: int) -> None:
        # GIVEN
        p = DKParams(*pair)

        for n in range(2, 15):
            weights = weight_range(p, n)
            if weights is None:
                continue
            for W in range(max(weights[0], 2), weights[1] + 1):
                # WHEN
                code = extract_code(p, n, W, t, metric)

                # THEN
                space_size = count_nW(p, n, W)
                assert code.space_size == space_size
                assert code.averaging_bound == -(-space_size // code.lattice.index)
                assert len(code.words) >= code.averaging_bound
                assert all(w.weight == W and w.in_space(p) for w in code.words)
                if metric == "a":
                    assert code.min_distance > t
                    assert corrects_asym(code.codebook(), t, 0)
                else:
                    assert code.min_distance > 2 * t
                    assert corrects_sym(code.codebook(), t)
