# tests/conftest.py

import random

import pytest

from singularities.helpers import generate_random_swh, generate_random_weighted_homogeneous
from singularities.poly import parse_polynomial
from singularities.swh import analyze

CORPUS_SIZE = 20
WEIGHTED_HOMOGENEOUS_SIZE = 120


@pytest.fixture(scope="session")
def cusp():
    return analyze(parse_polynomial("y^2-x^3", ["x", "y"]), (2, 3))


@pytest.fixture(scope="session")
def f2():
    return analyze(parse_polynomial("y^3-x^7+x^5*y", ["x", "y"]), (3, 7))


@pytest.fixture(scope="session")
def cubic():
    return analyze(parse_polynomial("x^3+y^3+z^3", ["x", "y", "z"]), (1, 1, 1))


@pytest.fixture(scope="session")
def quadric():
    return analyze(parse_polynomial("(x+y)^2+x*z+z^2", ["x", "y", "z"]), (1, 1, 1))


@pytest.fixture(scope="session")
def swh_corpus():
    """Seeded nondegenerate plane curves (f, w)."""
    rng = random.Random(1729)
    return [generate_random_swh(rng) for _ in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def corpus_analyses(swh_corpus):
    return [analyze(f, w) for f, w in swh_corpus]


@pytest.fixture(scope="session")
def weighted_homogeneous_analyses():
    """Seeded Brieskorn-Pham germs as (analysis, exponents)."""
    rng = random.Random(6174)
    out = []
    for _ in range(WEIGHTED_HOMOGENEOUS_SIZE):
        f, w, exponents = generate_random_weighted_homogeneous(rng)
        out.append((analyze(f, w), exponents))
    return out
