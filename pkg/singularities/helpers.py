import math
import random

from singularities.errors import InfiniteQuotientError
from singularities.gbase import groebner, standard_monomials
from singularities.poly import Polynomial, WeightVector, partial_derivative, weighted_parts


def is_semi_weighted_homogeneous(f, w):
    """Check that the lowest weighted part of f has an isolated critical point at 0."""
    if f.is_zero() or f.constant_term():
        return False
    parts = weighted_parts(f, WeightVector(tuple(w)))
    f_d = parts[next(iter(parts))]
    jacobian = [partial_derivative(f_d, i) for i in range(f.nvars)]
    if any(g.constant_term() for g in jacobian):
        return False
    jacobian = [g for g in jacobian if g]
    if not jacobian:
        return False
    try:
        standard_monomials(groebner(jacobian))
    except InfiniteQuotientError:
        return False
    return True


def generate_random_swh(rng=None, max_extra_terms=2):
    """
    Random nondegenerate plane curve y^a - c x^b + (terms above the edge)
    with gcd(a, b) = 1, together with its weights (a, b).
    """
    rng = rng or random.Random()
    while True:
        a = rng.choice((2, 3))
        b = rng.randint(a + 1, 7)
        if math.gcd(a, b) == 1:
            break
    terms = {(0, a): 1, (b, 0): -rng.choice((1, 2))}
    # everything strictly above the line a*i + b*j = a*b keeps the Newton edge unchanged
    above = [(i, j) for i in range(b + 1) for j in range(a + 1)
             if a * i + b * j > a * b and (i, j) not in terms]
    for monomial in rng.sample(above, rng.randint(0, min(max_extra_terms, len(above)))):
        terms[monomial] = rng.choice((-2, -1, 1, 2))
    return Polynomial(terms, 2), (a, b)


def generate_random_weighted_homogeneous(rng=None):
    """
    Random Brieskorn-Pham germ sum c_i x_i^{a_i} in two or three variables,
    with its weights. Two-variable exponents are coprime so f stays irreducible.
    """
    rng = rng or random.Random()
    if rng.random() < 0.5:
        while True:
            exponents = (rng.randint(2, 7), rng.randint(2, 7))
            if math.gcd(*exponents) == 1:
                break
    else:
        exponents = tuple(rng.randint(2, 4) for _ in range(3))
    nvars = len(exponents)
    d = math.lcm(*exponents)
    terms = {}
    for i, a in enumerate(exponents):
        monomial = tuple(a if j == i else 0 for j in range(nvars))
        terms[monomial] = rng.choice((-2, -1, 1, 3))
    return Polynomial(terms, nvars), tuple(d // a for a in exponents), exponents
