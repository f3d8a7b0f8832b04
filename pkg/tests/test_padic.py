# tests/test_padic.py

import random
from fractions import Fraction

import pytest

from singularities.padic import count_brute, count_hensel, count_mod, count_report, good_prime, root_count_fp
from singularities.poly import Polynomial, parse_polynomial


def xy(text):
    return parse_polynomial(text, ["x", "y"])


def random_integer_polynomial(rng, nvars):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        monomial = tuple(rng.randint(0, 4) for _ in range(nvars))
        terms[monomial] = rng.randint(-3, 3) or 1
    return Polynomial(terms, nvars)


# ---------- counting ----------

class TestCounting:
    def test_cusp_mod_seven(self):
        f = xy("y^2-x^3")
        assert count_mod(f, 7, 1) == 7
        assert count_mod(f, 7, 2) == 91

    def test_linear_germ(self):
        assert count_mod(xy("x"), 5, 3) == 125

    def test_hensel_agrees_with_brute_force(self):
        rng = random.Random(31)
        for _ in range(40):
            nvars = rng.randint(1, 2)
            f = random_integer_polynomial(rng, nvars)
            p = rng.choice((2, 3, 5))
            m = rng.randint(1, 3)
            assert count_hensel(f, p, m) == count_brute(f, p, m)

    def test_rational_coefficients_use_inverses(self):
        f = xy("1/2*y^2 - x^3")
        assert count_mod(f, 7, 2) == count_mod(xy("y^2 - 2*x^3"), 7, 2)

    def test_denominator_divisible_by_p(self):
        with pytest.raises(ValueError):
            count_mod(xy("1/5*x + y"), 5, 1)

    @pytest.mark.parametrize("method, m", [("montecarlo", 1), ("hensel", 0)])
    def test_unsupported_arguments(self, method, m):
        with pytest.raises(ValueError):
            count_mod(xy("x*y"), 3, m, method)

    def test_brute_force_limit(self):
        with pytest.raises(ValueError):
            count_brute(parse_polynomial("x*y*z", ["x", "y", "z"]), 13, 3)

    def test_report_records_every_level(self):
        report = count_report(xy("y^2-x^3"), 5, 3)
        assert [m for m, _ in report.counts] == [1, 2, 3]
        assert report.counts[0] == (1, 5)
        assert len(report.elapsed) == 3


# ---------- roots over F_p ----------

class TestRootCount:
    @pytest.mark.parametrize("coefficients, p, expected", [
        ((-1, 0, 1), 7, 2),
        ((-1, 0, 1), 2, 1),
        ((-1, 0, 0, 1), 7, 3),
        ((-1, 0, 0, 1), 5, 1),
        ((1, 0, 1), 3, 0),
        ((5,), 7, 0),
    ])
    def test_known_polynomials(self, coefficients, p, expected):
        assert root_count_fp(coefficients, p) == expected

    def test_agrees_with_evaluation(self):
        rng = random.Random(5)
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        for p in primes:
            for _ in range(4):
                coefficients = [rng.randint(-20, 20) for _ in range(rng.randint(1, 5))] + [1]
                roots = sum(
                    1 for a in range(p)
                    if sum(c * a**k for k, c in enumerate(coefficients)) % p == 0
                )
                assert root_count_fp(coefficients, p) == roots

    def test_accepts_a_univariate_polynomial(self):
        assert root_count_fp(parse_polynomial("x^2 - 1", ["x"]), 7) == 2

    def test_rational_coefficients(self):
        assert root_count_fp((Fraction(-1, 3), 0, 1), 7) == 0
        assert root_count_fp((Fraction(-1, 4), 0, 1), 7) == 2

    def test_polynomial_vanishing_mod_p(self):
        with pytest.raises(ValueError):
            root_count_fp((7, 14), 7)


# ---------- good primes ----------

class TestGoodPrime:
    @pytest.mark.parametrize("p, good", [(2, False), (3, False), (5, True), (7, True)])
    def test_cusp(self, p, good):
        assert bool(good_prime(xy("y^2-x^3"), None, p, (2, 3))) is good

    def test_reasons_are_listed(self):
        report = good_prime(xy("y^2-x^3"), None, 3, (2, 3))
        assert not report.ok
        assert any("weighted degree" in reason for reason in report.reasons)

    def test_not_a_prime(self):
        assert not good_prime(xy("y^2-x^3"), None, 9)

    def test_edge_discriminant(self):
        # edge polynomial 1 + 3 z + z^2 has discriminant 5
        assert not good_prime(xy("y^2 + 3*x*y + x^2"), None, 5)
        assert good_prime(xy("y^2 + 3*x*y + x^2"), None, 7)

    def test_singular_zero_away_from_the_origin(self):
        # y^2 = x^3 (x - 1)^2 has a node at (1, 0)
        report = good_prime(xy("y^2 - x^3*(x - 1)^2"), None, 7)
        assert not report
