# singularities/toric.py
"""
Toric embedded resolution of a Newton-nondegenerate plane curve germ:
Newton polygon, regular subdivision of the dual fan and the resulting
divisors and strata over the origin.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import Poly, QQ, Rational, Symbol, sqf_part
from sympy.core.intfunc import igcdex

from singularities.errors import HypothesisError

log = logging.getLogger(__name__)

Z = Symbol("z")

EXCEPTIONAL = "exceptional"
CROSSING = "crossing"
STRICT_MEET = "strict_meet"


def det(u, v):
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class NewtonEdge:
    start: tuple
    end: tuple
    normal: tuple
    lattice_length: int
    polynomial: object  # Polynomial: terms of f on the edge

    def univariate(self):
        """
        Coefficients (low to high) of P(z) with edge polynomial
        = x^start * P(x^{step_x} / y^{-step_y}) where step is the primitive edge vector.
        """
        step = ((self.end[0] - self.start[0]) // self.lattice_length,
                (self.end[1] - self.start[1]) // self.lattice_length)
        coeffs = [Fraction(0)] * (self.lattice_length + 1)
        for monomial, coeff in self.polynomial.terms.items():
            k = (monomial[0] - self.start[0]) // step[0]
            coeffs[k] = coeff
        return tuple(coeffs)


@dataclass(frozen=True)
class NewtonPolygon:
    support: tuple
    vertices: tuple
    edges: tuple


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f):
    """Compact part of the Newton polygon of a two-variable f with f(0) = 0."""
    if f.nvars != 2:
        raise ValueError(f"newton_polygon needs 2 variables, got {f.nvars}")
    if f.is_zero() or f.constant_term():
        raise ValueError("f must be nonzero with f(0) = 0")
    points = sorted(f.terms)
    hull = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    vertices = [hull[0]]
    for p in hull[1:]:
        if p[1] >= vertices[-1][1]:
            break
        vertices.append(p)
    edges = []
    for p, q in zip(vertices, vertices[1:]):
        dx, dy = q[0] - p[0], q[1] - p[1]
        g = math.gcd(dx, -dy)
        normal = (-dy // g, dx // g)
        height = normal[0] * p[0] + normal[1] * p[1]
        on_edge = {m: c for m, c in f.terms.items()
                   if normal[0] * m[0] + normal[1] * m[1] == height}
        edges.append(NewtonEdge(p, q, normal, g, type(f)(on_edge, 2)))
    return NewtonPolygon(tuple(points), tuple(vertices), tuple(edges))


def regular_subdivision(rays):
    """
    Insert primitive rays until consecutive rays have determinant 1.

    Between u and v with det(u, v) = D > 1 the inserted ray is the unique w
    with det(u, w) = 1 and 0 < det(w, v) < D, which keeps the refinement minimal.
    """
    rays = [tuple(r) for r in rays]
    out = [rays[0]]
    for v in rays[1:]:
        u = out[-1]
        while det(u, v) > 1:
            a, b, _ = igcdex(u[0], u[1])
            w0 = (-int(b), int(a))
            t = -(det(w0, v) // det(u, v))
            w = (w0[0] + t * u[0], w0[1] + t * u[1])
            out.append(w)
            u = w
        if det(u, v) != 1:
            raise ValueError(f"rays {u} and {v} are not in counterclockwise order")
        out.append(v)
    return out


@dataclass(frozen=True)
class ToricDivisor:
    ray: tuple | None
    N: int
    nu: int
    is_exceptional: bool
    strict_transform_points: int = 0
    edge: tuple | None = None  # univariate edge polynomial when the ray is an edge normal


@dataclass(frozen=True)
class Stratum:
    """A locally closed piece over the origin: class in L (low-to-high coefficients)."""

    kind: str
    class_coefficients: tuple
    incident: tuple
    ray_index: int | None = None


@dataclass(frozen=True)
class SncResolution:
    f: object
    beta: tuple
    rays: tuple
    divisors: tuple
    strata: tuple

    @property
    def nvars(self):
        return self.f.nvars


def _distinct_roots(coefficients):
    poly = Poly([Rational(c.numerator, c.denominator) for c in reversed(coefficients)], Z, domain=QQ)
    return poly.degree(), sqf_part(poly).degree()


def _one_variable(f, beta):
    order = min(m[0] for m in f.terms)
    divisors = (ToricDivisor(ray=(1,), N=order, nu=beta[0] + 1, is_exceptional=False),)
    strata = (Stratum(CROSSING, (1,), (0,)),)
    return SncResolution(f, beta, ((1,),), divisors, strata)


def snc_resolution(f, beta=None):
    """
    Resolution data of f over the origin from the regular dual fan.

    Parameters:
    f (Polynomial): one or two variables, Newton nondegenerate, f(0) = 0.
    beta (tuple): twist exponent, zeros when None.

    Returns:
    SncResolution: rays, divisors (rays first, then the strict transform H)
        and strata over the origin.

    Raises:
    HypothesisError: "newton-nondegenerate" when an edge polynomial has a repeated root.
    """
    if f.is_zero() or f.constant_term():
        raise ValueError("f must be nonzero with f(0) = 0")
    beta = tuple(beta) if beta is not None else (0,) * f.nvars
    if len(beta) != f.nvars or any(b < 0 for b in beta):
        raise ValueError(f"Unsupported twist: {beta}")
    if f.nvars == 1:
        return _one_variable(f, beta)
    if f.nvars != 2:
        raise ValueError(f"toric resolution needs 1 or 2 variables, got {f.nvars}")

    polygon = newton_polygon(f)
    edge_by_normal = {}
    for edge in polygon.edges:
        coefficients = edge.univariate()
        degree, distinct = _distinct_roots(coefficients)
        if distinct != degree:
            raise HypothesisError(
                "newton-nondegenerate",
                f"edge polynomial {edge.polynomial} has a repeated root",
            )
        edge_by_normal[edge.normal] = (coefficients, distinct)

    normals = sorted(edge_by_normal, key=lambda a: Fraction(a[1], a[0]))
    rays = regular_subdivision([(1, 0)] + normals + [(0, 1)])
    log.debug("toric fan for %s: %s", f, rays)

    divisors = []
    for ray in rays:
        n_value = min(ray[0] * m[0] + ray[1] * m[1] for m in f.terms)
        nu = ray[0] * (beta[0] + 1) + ray[1] * (beta[1] + 1)
        coefficients, points = edge_by_normal.get(ray, (None, 0))
        divisors.append(ToricDivisor(
            ray=ray, N=n_value, nu=nu,
            is_exceptional=ray not in ((1, 0), (0, 1)),
            strict_transform_points=points, edge=coefficients,
        ))
    h_index = len(divisors)
    divisors.append(ToricDivisor(ray=None, N=1, nu=1, is_exceptional=False))

    strata = []
    for i, divisor in enumerate(divisors[:h_index]):
        if divisor.is_exceptional:
            # P^1 minus its two torus-fixed points and the strict-transform points
            strata.append(Stratum(EXCEPTIONAL, (-1 - divisor.strict_transform_points, 1), (i,), i))
    for i in range(h_index - 1):
        strata.append(Stratum(CROSSING, (1,), (i, i + 1)))
    for i, divisor in enumerate(divisors[:h_index]):
        if divisor.strict_transform_points:
            strata.append(Stratum(STRICT_MEET, (divisor.strict_transform_points,), (i, h_index), i))
    return SncResolution(f, beta, tuple(rays), tuple(divisors), tuple(strata))
