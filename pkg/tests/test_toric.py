# tests/test_toric.py

import math
import random

import pytest

from singularities.errors import HypothesisError
from singularities.poly import parse_polynomial
from singularities.toric import (
    CROSSING,
    EXCEPTIONAL,
    STRICT_MEET,
    det,
    newton_polygon,
    regular_subdivision,
    snc_resolution,
)


def xy(text):
    return parse_polynomial(text, ["x", "y"])


def random_fan(rng):
    """(1,0), a few primitive rays in increasing slope, (0,1)."""
    slopes = set()
    size = rng.randint(1, 4)
    while len(slopes) < size:
        a, b = rng.randint(1, 12), rng.randint(1, 12)
        g = math.gcd(a, b)
        slopes.add((a // g, b // g))
    inner = sorted(slopes, key=lambda r: r[1] / r[0])
    return [(1, 0)] + inner + [(0, 1)]


# ---------- Newton polygon ----------

class TestNewtonPolygon:
    def test_cusp_has_one_edge(self):
        polygon = newton_polygon(xy("y^2-x^3"))
        assert polygon.vertices == ((0, 2), (3, 0))
        (edge,) = polygon.edges
        assert edge.normal == (2, 3)
        assert edge.lattice_length == 1
        assert edge.univariate() == (1, -1)

    def test_points_above_the_edge_are_ignored(self):
        polygon = newton_polygon(xy("y^3-x^7+x^5*y"))
        assert [e.normal for e in polygon.edges] == [(3, 7)]

    def test_two_edges(self):
        polygon = newton_polygon(xy("y^4 + x^2*y + x^5"))
        assert polygon.vertices == ((0, 4), (2, 1), (5, 0))
        assert [e.normal for e in polygon.edges] == [(3, 2), (1, 3)]

    def test_repeated_edge_root(self):
        (edge,) = newton_polygon(xy("(y^2-x^3)^2-x^5*y")).edges
        assert edge.lattice_length == 2
        assert edge.univariate() == (1, -2, 1)

    def test_needs_two_variables(self):
        with pytest.raises(ValueError):
            newton_polygon(parse_polynomial("x^2", ["x"]))


# ---------- Regular subdivision ----------

class TestRegularSubdivision:
    def test_cusp_fan(self):
        assert regular_subdivision([(1, 0), (2, 3), (0, 1)]) == [(1, 0), (1, 1), (2, 3), (1, 2), (0, 1)]

    def test_random_fans_become_regular(self):
        rng = random.Random(7)
        for _ in range(150):
            fan = random_fan(rng)
            rays = regular_subdivision(fan)
            assert all(det(u, v) == 1 for u, v in zip(rays, rays[1:]))
            assert all(math.gcd(*r) == 1 for r in rays)
            positions = [rays.index(r) for r in fan]
            assert positions == sorted(positions)

    def test_clockwise_rays_are_rejected(self):
        with pytest.raises(ValueError):
            regular_subdivision([(0, 1), (1, 0)])


# ---------- Resolution data ----------

class TestSncResolution:
    def test_cusp_divisors(self):
        res = snc_resolution(xy("y^2-x^3"))
        assert res.rays == ((1, 0), (1, 1), (2, 3), (1, 2), (0, 1))
        data = [(d.N, d.nu) for d in res.divisors]
        assert data == [(0, 1), (2, 2), (6, 5), (3, 3), (0, 1), (1, 1)]
        assert [d.is_exceptional for d in res.divisors[:5]] == [False, True, True, True, False]

    def test_cusp_strata(self):
        res = snc_resolution(xy("y^2-x^3"))
        kinds = [s.kind for s in res.strata]
        assert kinds.count(EXCEPTIONAL) == 3
        assert kinds.count(CROSSING) == 4
        assert kinds.count(STRICT_MEET) == 1
        (meet,) = [s for s in res.strata if s.kind == STRICT_MEET]
        assert meet.incident == (2, 5)

    def test_twist_changes_nu_only(self):
        res = snc_resolution(xy("y^2-x^3"), (0, 1))
        assert [d.nu for d in res.divisors[:5]] == [1, 3, 8, 5, 2]
        assert [d.N for d in res.divisors[:5]] == [0, 2, 6, 3, 0]

    def test_one_variable(self):
        res = snc_resolution(parse_polynomial("x^3", ["x"]), (2,))
        (divisor,) = res.divisors
        assert (divisor.N, divisor.nu) == (3, 3)

    def test_degenerate_edge(self):
        with pytest.raises(HypothesisError) as info:
            snc_resolution(xy("(y^2-x^3)^2-x^5*y"))
        assert info.value.hypothesis == "newton-nondegenerate"

    def test_three_variables_are_rejected(self):
        with pytest.raises(ValueError):
            snc_resolution(parse_polynomial("x^2+y^2+z^2", ["x", "y", "z"]))
