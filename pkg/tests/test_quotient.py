"""Quotient multiplicities, the character oracle, and the level -1 demos."""

from fractions import Fraction

import pytest

from toroidal_sl2 import (HighestWeight, ModuleVector, demo_infinite_dim,
                          demo_nonintegrability, e, f, h, lchar_oracle,
                          module_for, quotient_singular_dim, submodule_dim_at,
                          w_multiplicity)


class TestSubmoduleDim:
    def test_generator_weight_has_dimension_one(self):
        for n1, k1 in [(1, 1), (2, 3)]:
            assert submodule_dim_at(HighestWeight(n1, k1), (0, n1 + 1)) == 1

    def test_below_both_generators(self):
        assert submodule_dim_at(HighestWeight(1, 1), (0, 1)) == 0
        assert submodule_dim_at(HighestWeight(2, 4), (1, 1)) == 0

    def test_one_step_below_generator(self):
        for n1, k1 in [(1, 2), (0, 3)]:
            assert submodule_dim_at(HighestWeight(n1, k1), (0, n1 + 2)) == 1

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            submodule_dim_at(HighestWeight(Fraction(1, 2), 1), (1, 1))
        with pytest.raises(ValueError):
            submodule_dim_at(HighestWeight(3, 1), (1, 1))


class TestWMultiplicity:
    def test_top_weight(self):
        q = w_multiplicity(HighestWeight(1, 1), (0, 0))
        assert (q.ambient_dim, q.submodule_dim, q.quotient_dim) == (1, 0, 1)

    def test_generator_weight_drops_rank_one(self):
        for n1, k1 in [(0, 1), (1, 1), (2, 2)]:
            q = w_multiplicity(HighestWeight(n1, k1), (0, n1 + 1))
            assert q.quotient_dim == q.ambient_dim - 1

    def test_delta_weight_level_one(self):
        hw = HighestWeight(1, 1)
        q = w_multiplicity(hw, (1, 1))
        assert (q.ambient_dim, q.submodule_dim, q.quotient_dim) == (2, 1, 1)
        assert lchar_oracle(hw, (1, 1)) == 1


class TestLCharOracle:
    def test_top(self):
        assert lchar_oracle(HighestWeight(2, 2), (0, 0)) == 1

    def test_finite_sl2_pattern_at_level_zero_depth(self):
        hw = HighestWeight(1, 1)
        assert lchar_oracle(hw, (0, 1)) == 1
        assert lchar_oracle(hw, (0, 2)) == 0

    def test_basic_level_one(self):
        hw = HighestWeight(0, 1)
        assert lchar_oracle(hw, (0, 1)) == 0
        assert lchar_oracle(hw, (1, 1)) == 1

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            lchar_oracle(HighestWeight(1, 0), (1, 1))


def test_character_match_depth_four():
    hw = HighestWeight(1, 1)
    for total in range(5):
        for a0 in range(total + 1):
            eta = (a0, total - a0)
            assert w_multiplicity(hw, eta).quotient_dim == lchar_oracle(hw, eta)


def test_character_match_depth_eight():
    hw = HighestWeight(1, 1)
    for total in range(9):
        for a0 in range(total + 1):
            eta = (a0, total - a0)
            assert w_multiplicity(hw, eta).quotient_dim == lchar_oracle(hw, eta)


def test_level_zero_quotient_is_trivial_module():
    # k1 = 0 forces n1 = n0 = 0; the quotient collapses to the top line
    hw = HighestWeight(0, 0)
    for total in range(6):
        for a0 in range(total + 1):
            eta = (a0, total - a0)
            expected = 1 if eta == (0, 0) else 0
            assert w_multiplicity(hw, eta).quotient_dim == expected
            assert lchar_oracle(hw, eta) == expected


def test_quotient_has_no_singular_vectors_below_top():
    hw = HighestWeight(1, 1)
    for total in range(1, 5):
        for a0 in range(total + 1):
            assert quotient_singular_dim(hw, (a0, total - a0)) == 0


def test_quotient_singular_dim_counts_the_top():
    assert quotient_singular_dim(HighestWeight(1, 1), (0, 0)) == 1


class TestNonintegrability:
    def test_transcript_holds_and_reverifies(self):
        transcript = demo_nonintegrability(HighestWeight(0, 1), 5)
        assert transcript.all_hold()
        eng = module_for(HighestWeight(0, 1))
        lhs = eng.act(h(-1, 1), ModuleVector.monomial(((h(1, -1), 1),)))
        assert lhs == -2 * ModuleVector.highest_weight_vector()

    def test_contradiction_line_scales_with_k1(self):
        transcript = demo_nonintegrability(HighestWeight(0, Fraction(1, 2)), 3)
        assert transcript.all_hold()
        final = transcript.checks[-1]
        assert "-2*k1" in final.description
        assert final.holds

    def test_positive_n1_case(self):
        transcript = demo_nonintegrability(HighestWeight(2, 1), 4)
        assert transcript.all_hold()
        # without n1 = 0 the ladder already rules out nilpotency
        assert all("h(-1,1)" not in c.description for c in transcript.checks)

    def test_rejects_zero_level(self):
        with pytest.raises(ValueError):
            demo_nonintegrability(HighestWeight(0, 0), 3)


class TestInfiniteDim:
    def test_diagonal_and_rank(self):
        report = demo_infinite_dim(HighestWeight(0, 1), 3)
        assert report.rank == 3
        assert report.diagonal == ("2", "4", "6")
        assert report.image_form == "h(m,-1)*v"

    def test_fractional_level(self):
        report = demo_infinite_dim(HighestWeight(1, Fraction(3, 7)), 2)
        assert report.rank == 2
        assert report.diagonal == ("6/7", "12/7")

    def test_rejects_zero_level(self):
        with pytest.raises(ValueError):
            demo_infinite_dim(HighestWeight(1, 0), 2)
        with pytest.raises(ValueError):
            demo_infinite_dim(HighestWeight(1, 1), 0)
