# tests/test_bfun.py

from fractions import Fraction

import pytest

from singularities.bfun import (
    COMPLETE,
    DIVISOR_ONLY,
    FACT_INJECTIVE_SPLIT,
    FACT_TOP_ROOT,
    TOP_ROOT_ONLY,
    BFactorization,
    parse_bfactorization,
    qh_bfunction,
    swh_divisor,
    twisted_facts,
)


class TestBFactorization:
    def test_factors_merge_and_sort(self):
        b = BFactorization(((-1, 1), (Fraction(-7, 6), 1), (-1, 1)), COMPLETE)
        assert b.factors == ((Fraction(-1), 2), (Fraction(-7, 6), 1))
        assert b.multiplicity(-1) == 2
        assert b.multiplicity(Fraction(-5, 6)) == 0

    def test_format(self):
        b = BFactorization(((-1, 2), (Fraction(-4, 3), 1)), COMPLETE)
        assert b.format() == "(s+1)^2(s+4/3)"

    def test_reduced_drops_one_factor(self):
        b = BFactorization(((-1, 2), (Fraction(-4, 3), 1)), COMPLETE)
        assert b.reduced().factors == ((Fraction(-1), 1), (Fraction(-4, 3), 1))
        assert BFactorization(((-1, 1),), COMPLETE).reduced().format() == "1"

    @pytest.mark.parametrize("factors", [((0, 1),), ((1, 1),), ((-1, 0),)])
    def test_invalid_factors(self, factors):
        with pytest.raises(ValueError):
            BFactorization(factors, COMPLETE)

    def test_unknown_completeness(self):
        with pytest.raises(ValueError):
            BFactorization(((-1, 1),), "partial")

    def test_top_root_must_be_a_factor(self):
        with pytest.raises(ValueError):
            BFactorization(((-1, 1),), DIVISOR_ONLY, top_root=Fraction(-4, 3))
        with pytest.raises(ValueError):
            BFactorization(((-1, 1),), TOP_ROOT_ONLY)

    def test_reduced_forgets_a_vanished_top_root(self):
        b = BFactorization(((-1, 1),), DIVISOR_ONLY, top_root=-1)
        assert b.reduced().top_root is None

    def test_parse_from_fixture_data(self):
        b = parse_bfactorization([["-1", 1], ["-11/6", 1], ["-13/6", 1]], COMPLETE, ("PUBLISHED",))
        assert b.roots() == [Fraction(-1), Fraction(-11, 6), Fraction(-13, 6)]
        assert b.provenance == ("PUBLISHED",)


class TestKnownBFunctions:
    def test_cusp(self, cusp):
        b = qh_bfunction(cusp)
        assert b.completeness == COMPLETE
        assert b.format() == "(s+5/6)(s+1)(s+7/6)"

    def test_cubic_cone_has_double_root_at_minus_one(self, cubic):
        b = qh_bfunction(cubic)
        assert b.multiplicity(-1) == 2
        assert b.roots() == [Fraction(-1), Fraction(-4, 3), Fraction(-5, 3), Fraction(-2)]

    def test_qh_needs_weighted_homogeneous_input(self, f2):
        with pytest.raises(ValueError):
            qh_bfunction(f2)

    def test_swh_divisor(self, f2):
        b = swh_divisor(f2)
        assert b.completeness == DIVISOR_ONLY
        assert b.factors == ((Fraction(-10, 21), 1), (Fraction(-1), 1))

    def test_swh_divisor_when_weights_sum_to_degree(self, cubic):
        b = swh_divisor(cubic)
        assert b.factors == ((Fraction(-1), 2),)
        assert FACT_INJECTIVE_SPLIT in b.provenance


class TestTwistedFacts:
    def test_top_root_is_minus_the_level(self, f2):
        b = twisted_facts(f2, (6, 0))
        assert b.top_root == Fraction(-29, 21)
        assert b.multiplicity(Fraction(-29, 21)) == 1
        assert FACT_TOP_ROOT in b.provenance

    def test_top_root_entry_has_its_own_tag(self, f2):
        b = twisted_facts(f2, (6, 0))
        assert b.completeness == DIVISOR_ONLY
        assert b.completeness_of(Fraction(-29, 21)) == TOP_ROOT_ONLY
        assert b.completeness_of(-1) == DIVISOR_ONLY
        with pytest.raises(ValueError):
            b.completeness_of(Fraction(-1, 2))

    def test_without_a_level_nothing_is_tagged_top_root(self, cusp):
        b = twisted_facts(cusp, (0, 1))
        assert b.completeness_of(-1) == DIVISOR_ONLY

    def test_untwisted_top_root(self, f2):
        assert twisted_facts(f2, (0, 0)).top_root == Fraction(-10, 21)

    def test_vanishing_twist_keeps_only_s_plus_one(self, cusp):
        b = twisted_facts(cusp, (0, 1))
        assert b.factors == ((Fraction(-1), 1),)
        assert b.top_root is None
        assert b.diagnostics

    def test_level_one_merges_with_s_plus_one(self, cubic):
        b = twisted_facts(cubic, (0, 0, 0))
        assert b.factors == ((Fraction(-1), 2),)
