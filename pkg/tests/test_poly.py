# tests/test_poly.py

import random
from fractions import Fraction

import pytest

from singularities.errors import PolynomialSyntaxError, UnknownVariableError
from singularities.poly import (
    Polynomial,
    WeightVector,
    canonical_variables,
    chart_substitute,
    collect_variables,
    eval_mod,
    parse_polynomial,
    partial_derivative,
    weighted_degree,
    weighted_parts,
)


# ------------------------------
# Helpers
# ------------------------------

def xy(text):
    return parse_polynomial(text, ["x", "y"])


def random_weighted_homogeneous(rng):
    """Random polynomial all of whose terms have the same weighted degree."""
    nvars = rng.randint(1, 3)
    w = tuple(rng.randint(1, 4) for _ in range(nvars))
    d = rng.randint(2, 12)
    candidates = []
    for monomial in _exponents(nvars, d):
        if weighted_degree(monomial, w) == d:
            candidates.append(monomial)
    terms = {m: rng.choice((-3, -1, 1, 2, Fraction(1, 2))) for m in candidates if rng.random() < 0.7}
    return Polynomial(terms, nvars), w, d


def _exponents(nvars, bound):
    if nvars == 0:
        return [()]
    return [(e,) + rest for e in range(bound + 1) for rest in _exponents(nvars - 1, bound)]


def random_polynomial(rng, nvars=3, max_degree=4, max_terms=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        monomial = tuple(rng.randint(0, max_degree) for _ in range(nvars))
        terms[monomial] = rng.choice((-3, -1, 1, 2, Fraction(1, 2), Fraction(-5, 7)))
    return Polynomial(terms, nvars)


# ---------- Parsing ----------

class TestParsing:
    def test_parse_mixed_syntax(self):
        f = parse_polynomial("y^3 - x^7 + 5/7*x^5 y", ["x", "y"])
        assert f.terms == {(0, 3): 1, (7, 0): -1, (5, 1): Fraction(5, 7)}

    def test_parentheses_and_powers_expand(self):
        assert xy("(x+y)^2") == xy("x^2 + 2*x*y + y^2")

    def test_unary_minus_binds_to_power(self):
        assert xy("-x^2").coefficient((2, 0)) == -1

    def test_canonical_text_reads_back(self):
        f = xy("y^3-x^7+x^5*y")
        assert f.format(["x", "y"]) == "-x^7 + x^5*y + y^3"
        assert xy(f.format(["x", "y"])) == f

    def test_random_polynomials_read_back(self):
        rng = random.Random(31337)
        for _ in range(120):
            f = random_polynomial(rng)
            assert parse_polynomial(f.format(["x", "y", "z"]), ["x", "y", "z"]) == f

    def test_cancelling_terms_disappear(self):
        assert xy("x*y - y*x").is_zero()

    @pytest.mark.parametrize("text", ["x^", "x +", "(x + y", "x ^ y", "x^1/2", "1/0 + x", ""])
    def test_malformed_text_is_rejected(self, text):
        with pytest.raises(PolynomialSyntaxError):
            xy(text)

    def test_unknown_variable_reports_position(self):
        with pytest.raises(UnknownVariableError) as info:
            xy("x + w")
        assert info.value.position == 4

    def test_variables_in_first_appearance_order(self):
        assert collect_variables("y^3-x^7+x^5*y") == ["y", "x"]

    def test_canonical_variables_put_x_y_z_first(self):
        assert canonical_variables("y^3-x^7+x^5*y") == ["x", "y"]
        assert canonical_variables("z^2 + t*x") == ["x", "z", "t"]

    def test_inferred_variables_when_none_given(self):
        f = parse_polynomial("y^2-x^3")
        assert f.terms == {(2, 0): 1, (0, 3): -1}


# ---------- Arithmetic ----------

class TestArithmetic:
    def test_partial_derivatives(self):
        f = xy("y^3-x^7+x^5*y")
        assert partial_derivative(f, 0) == xy("-7*x^6 + 5*x^4*y")
        assert partial_derivative(f, 1) == xy("3*y^2 + x^5")

    def test_substitute_keeps_variable_count(self):
        f = xy("y^2-x^3").substitute(0, 1)
        assert f.nvars == 2
        assert f == xy("y^2 - 1")

    def test_evaluate_exactly(self):
        assert xy("1/2*x*y + y").evaluate((Fraction(2, 3), 3)) == 4

    def test_cleared_coefficients(self):
        ints, den = xy("1/2*x + 1/3*y").cleared()
        assert den == 6
        assert ints == {(1, 0): 3, (0, 1): 2}

    def test_eval_mod_uses_inverse_of_denominator(self):
        f = xy("1/2*x + y")
        assert eval_mod(f, (2, 0), 7) == 1
        with pytest.raises(ValueError):
            eval_mod(f, (1, 1), 4)

    def test_mismatched_variable_counts_raise(self):
        with pytest.raises(ValueError):
            xy("x") + Polynomial.variable(0, 3)


# ---------- Weights ----------

class TestWeights:
    def test_weights_are_normalized(self):
        assert tuple(WeightVector((4, 6))) == (2, 3)
        assert WeightVector((3, 7)).total == 10

    @pytest.mark.parametrize("w", [(), (0, 1), (-1, 2), (1.5, 2)])
    def test_invalid_weights(self, w):
        with pytest.raises(ValueError):
            WeightVector(w)

    def test_weighted_parts_ascending(self):
        parts = weighted_parts(xy("y^3-x^7+x^5*y"), (3, 7))
        assert list(parts) == [21, 22]
        assert parts[21] == xy("y^3-x^7")
        assert parts[22] == xy("x^5*y")

    def test_chart_substitution_of_the_cusp(self):
        d, residual = chart_substitute(xy("y^2-x^3"), (2, 3), 0)
        assert d == 6
        assert residual == xy("y^2 - 1")

    def test_chart_substitution_records_extra_power(self):
        d, residual = chart_substitute(xy("y^3-x^7+x^5*y"), (3, 7), 1)
        assert d == 21
        # x^5 y has weighted degree 22: one power of the chart variable is left over
        assert residual == xy("1 - x^7 + x^5*y")

    def test_chart_needs_a_vanishing_polynomial(self):
        with pytest.raises(ValueError):
            chart_substitute(xy("1 + x"), (1, 1), 0)

    def test_euler_relation_on_random_weighted_homogeneous_polynomials(self):
        rng = random.Random(20240501)
        checked = 0
        while checked < 120:
            f, w, d = random_weighted_homogeneous(rng)
            if f.is_zero():
                continue
            euler = sum(
                (w[i] * Polynomial.variable(i, f.nvars) * partial_derivative(f, i) for i in range(f.nvars)),
                Polynomial.zero(f.nvars),
            )
            assert euler == d * f
            checked += 1


# ---------- Ring laws ----------

class TestRingLaws:
    @pytest.fixture(scope="class")
    def triples(self):
        rng = random.Random(4242)
        return [tuple(random_polynomial(rng) for _ in range(3)) for _ in range(120)]

    def test_commutativity(self, triples):
        for f, g, _ in triples:
            assert f + g == g + f
            assert f * g == g * f

    def test_associativity(self, triples):
        for f, g, h in triples:
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)

    def test_distributivity(self, triples):
        for f, g, h in triples:
            assert (f + g) * h == f * h + g * h

    def test_neutral_elements(self, triples):
        for f, _, _ in triples:
            assert f + 0 == f
            assert f * 1 == f
            assert (f - f).is_zero()
