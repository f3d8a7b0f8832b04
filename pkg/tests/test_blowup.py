# tests/test_blowup.py

from fractions import Fraction

import pytest

from singularities.blowup import (
    CANDIDATE,
    EXACT,
    PoleSet,
    candidate_poles,
    stratum_factors,
    weighted_blowup,
)
from singularities.poly import parse_polynomial
from singularities.swh import analyze


class TestWeightedBlowup:
    def test_cusp_numerical_data(self, cusp):
        summary = weighted_blowup(cusp)
        assert (summary.N_E, summary.nu_E) == (6, 5)
        assert summary.valid and summary.eqmon_ok
        assert summary.level == Fraction(5, 6)

    def test_one_chart_per_variable(self, f2):
        summary = weighted_blowup(f2)
        assert [chart.index for chart in summary.charts] == [0, 1]
        assert [chart.quotient_group_order for chart in summary.charts] == [3, 7]
        assert summary.charts[0].quotient_weights == (-1, 7)
        assert all(chart.pulled_back_degree == 21 for chart in summary.charts)
        assert all(chart.smooth_certificate.is_unit_ideal() for chart in summary.charts)

    def test_twist_adds_weighted_exponents(self, cusp):
        summary = weighted_blowup(cusp, (0, 1))
        assert summary.nu_E == 8
        assert summary.level == Fraction(4, 3)

    def test_failed_monomial_condition_marks_summary_invalid(self):
        a = analyze(parse_polynomial("x^2+y^3+y*z^2", ["x", "y", "z"]), (3, 2, 2))
        summary = weighted_blowup(a, (0, 1, 0))
        assert not summary.valid
        assert summary.offender == ((0, 1, 2), 1)
        with pytest.raises(ValueError):
            candidate_poles(summary)

    def test_quadric_cone_twisted_by_x_is_invalid(self, quadric):
        summary = weighted_blowup(quadric, (1, 0, 0))
        assert not summary.valid
        assert summary.offender == ((1, 1, 0), 2)
        with pytest.raises(ValueError):
            candidate_poles(summary)

    @pytest.mark.parametrize("beta", [(1,), (0, -1)])
    def test_unsupported_twists(self, cusp, beta):
        with pytest.raises(ValueError):
            weighted_blowup(cusp, beta)


class TestCandidatePoles:
    def test_cusp(self, cusp):
        poles = candidate_poles(weighted_blowup(cusp))
        assert poles.kind == CANDIDATE
        assert poles.entries == ((Fraction(-5, 6), 1), (Fraction(-1), 1))

    def test_cubic_cone_has_a_double_candidate(self, cubic):
        poles = candidate_poles(weighted_blowup(cubic))
        assert poles.entries == ((Fraction(-1), 2),)

    def test_corpus_candidates_are_minus_one_and_minus_lct(self, corpus_analyses):
        for a in corpus_analyses:
            poles = candidate_poles(weighted_blowup(a))
            assert poles.locations() == [-a.lct, Fraction(-1)]

    def test_stratum_factors(self, cusp):
        factors = stratum_factors(weighted_blowup(cusp))
        assert factors["outside"] == ()
        assert factors["exceptional"] == ((6, 5),)
        assert factors["strict_transform"] == ((1, 1),)
        assert factors["intersection"] == ((1, 1), (6, 5))


class TestPoleSet:
    def test_entries_sorted_from_largest(self):
        poles = PoleSet(((-1, 1), (Fraction(-4, 3), 1), (Fraction(-5, 6), 2)), EXACT)
        assert poles.locations() == [Fraction(-5, 6), Fraction(-1), Fraction(-4, 3)]
        assert poles.order(Fraction(-5, 6)) == 2
        assert poles.order(-2) == 0

    def test_within_compares_orders(self):
        exact = PoleSet.from_dict({-1: 1}, EXACT)
        candidates = PoleSet.from_dict({-1: 2, Fraction(-4, 3): 1}, CANDIDATE)
        assert exact.within(candidates)
        assert not candidates.within(exact)

    def test_format(self):
        assert PoleSet.from_dict({-1: 1, Fraction(-5, 6): 1}, EXACT).format() == "{-5/6: 1, -1: 1}"

    @pytest.mark.parametrize("entries", [((0, 1),), ((1, 1),), ((-1, 0),)])
    def test_invalid_entries(self, entries):
        with pytest.raises(ValueError):
            PoleSet(entries, EXACT)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            PoleSet(((-1, 1),), "probable")
