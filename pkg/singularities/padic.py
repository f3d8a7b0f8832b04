# singularities/padic.py
"""
Arithmetic oracles: solution counts of f mod p^m, roots of univariate
polynomials over F_p and the good-prime gate.
"""
import itertools
import logging
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import Poly, QQ, Rational, Symbol, discriminant, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_degree, gf_gcd, gf_pow_mod, gf_strip, gf_sub

from singularities import config
from singularities.poly import eval_mod, partial_derivative
from singularities.toric import newton_polygon

log = logging.getLogger(__name__)

_U = Symbol("u")


@dataclass(frozen=True)
class CountReport:
    p: int
    counts: tuple  # (m, N_m)
    method: str
    elapsed: tuple  # seconds per m


def _check_denominators(f, p):
    for coeff in f.terms.values():
        if coeff.denominator % p == 0:
            raise ValueError(f"coefficient {coeff} has a denominator divisible by {p}")


def count_brute(f, p, m):
    """#{x mod p^m : f(x) = 0 mod p^m} by vectorized enumeration of the grid."""
    _check_denominators(f, p)
    modulus = p**m
    if modulus**f.nvars > config.BRUTE_FORCE_LIMIT:
        raise ValueError(f"grid of size {modulus}^{f.nvars} exceeds the brute-force limit")
    axes = np.meshgrid(*([np.arange(modulus, dtype=np.int64)] * f.nvars), indexing="ij")
    values = np.zeros(axes[0].shape, dtype=np.int64)
    for monomial, coeff in f.terms.items():
        c = coeff.numerator * pow(coeff.denominator, -1, modulus) % modulus
        term = np.full(axes[0].shape, c, dtype=np.int64)
        for axis, e in zip(axes, monomial):
            for _ in range(e):
                term = term * axis % modulus
        values = (values + term) % modulus
    return int(np.count_nonzero(values == 0))


def _is_singular_mod_p(gradient, point, p):
    return all(eval_mod(g, point, p) == 0 for g in gradient)


def count_hensel(f, p, m):
    """
    Count by lifting residue classes.

    A zero mod p with nonzero gradient mod p lifts to exactly p^(n-1) zeros at
    every further level. For a zero a mod p^k with zero gradient mod p, f(a + p^k b)
    = f(a) mod p^(k+1) for all b, so either all p^n lifts are zeros or none;
    those classes are enumerated explicitly.
    """
    _check_denominators(f, p)
    n = f.nvars
    gradient = [partial_derivative(f, i) for i in range(n)]
    smooth, singular = 0, []
    for a in itertools.product(range(p), repeat=n):
        if eval_mod(f, a, p) == 0:
            if _is_singular_mod_p(gradient, a, p):
                singular.append(a)
            else:
                smooth += 1
    total = smooth + len(singular)
    for k in range(1, m):
        smooth *= p ** (n - 1)
        modulus = p ** (k + 1)
        step = p**k
        survivors = [a for a in singular if eval_mod(f, a, modulus) == 0]
        lifted = len(survivors) * p**n
        if k + 1 < m:
            if lifted > config.HENSEL_BRANCH_LIMIT:
                log.warning("hensel: %d singular classes mod %d^%d, falling back to brute force",
                            lifted, p, k + 1)
                return count_brute(f, p, m)
            singular = [
                tuple(x + step * y for x, y in zip(a, b))
                for a in survivors
                for b in itertools.product(range(p), repeat=n)
            ]
        total = smooth + lifted
    return total


def count_mod(f, p, m, method="hensel"):
    """
    Exact number of solutions of f = 0 in (Z/p^m)^n.

    Parameters:
    f (Polynomial): rational coefficients with denominators prime to p.
    p (int): prime.
    m (int): exponent, m >= 1.
    method (str): "hensel" or "brute".

    Returns:
    int: the count.

    Raises:
    ValueError: on an unsupported method, m < 1 or a denominator divisible by p.
    """
    if m < 1:
        raise ValueError(f"Unsupported exponent: {m}")
    if method == "hensel":
        return count_hensel(f, p, m)
    elif method == "brute":
        return count_brute(f, p, m)
    else:
        raise ValueError(f"Unsupported counting method: {method}")


def count_report(f, p, m_max, method="hensel"):
    counts, elapsed = [], []
    for m in range(1, m_max + 1):
        start = time.perf_counter()
        counts.append((m, count_mod(f, p, m, method)))
        elapsed.append(time.perf_counter() - start)
    return CountReport(p=p, counts=tuple(counts), method=method, elapsed=tuple(elapsed))


def _reduce_coefficients(coefficients, p):
    """Low-to-high rationals -> high-to-low residues mod p, stripped."""
    residues = []
    for c in reversed(coefficients):
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ValueError(f"coefficient {c} has a denominator divisible by {p}")
        residues.append(ZZ(c.numerator * pow(c.denominator, -1, p) % p))
    return gf_strip(residues)


def root_count_fp(coefficients, p):
    """
    Number of distinct roots in F_p of the univariate polynomial with the
    given low-to-high coefficients: deg gcd(u, X^p - X).

    Raises:
    ValueError: if u vanishes identically mod p.
    """
    if hasattr(coefficients, "terms"):
        if coefficients.nvars != 1:
            raise ValueError("root_count_fp needs a univariate polynomial")
        top = max(m[0] for m in coefficients.terms) if coefficients.terms else 0
        coefficients = [coefficients.coefficient((k,)) for k in range(top + 1)]
    u = _reduce_coefficients(coefficients, p)
    if not u:
        raise ValueError(f"polynomial vanishes identically mod {p}")
    if gf_degree(u) == 0:
        return 0
    x_to_p = gf_pow_mod([ZZ(1), ZZ(0)], p, u, p, ZZ)
    h = gf_sub(x_to_p, [ZZ(1), ZZ(0)], p, ZZ)
    return gf_degree(gf_gcd(u, h, p, ZZ))


@dataclass(frozen=True)
class GoodPrimeReport:
    p: int
    reasons: tuple

    @property
    def ok(self):
        return not self.reasons

    def __bool__(self):
        return self.ok


def _divides(p, value):
    return value != 0 and value % p == 0


def _singular_zeros_off_origin(f, p):
    gradient = [partial_derivative(f, i) for i in range(f.nvars)]
    found = []
    for a in itertools.product(range(p), repeat=f.nvars):
        if any(a) and eval_mod(f, a, p) == 0 and _is_singular_mod_p(gradient, a, p):
            found.append(a)
    return found


def good_prime(f, beta, p, weights=None):
    """
    Conservative test that f has good reduction at p for the toric and
    Igusa comparison: a True answer is safe, a False may be overcautious.

    Parameters:
    f (Polynomial): the germ.
    beta (tuple): twist, or None; it does not enter the test.
    p (int): candidate prime.
    weights (WeightVector): when given, p must not divide d or any weight.

    Returns:
    GoodPrimeReport: truthy when p is good; ``reasons`` lists every failure.
    """
    reasons = []
    if p < 2 or not isprime(p):
        return GoodPrimeReport(p, (f"{p} is not prime",))
    for coeff in f.terms.values():
        if coeff.denominator % p == 0:
            reasons.append(f"{p} divides the denominator of coefficient {coeff}")
    if weights is not None:
        d = min(sum(wi * e for wi, e in zip(weights, m)) for m in f.terms)
        if _divides(p, d):
            reasons.append(f"{p} divides the weighted degree d = {d}")
        for wi in weights:
            if _divides(p, wi):
                reasons.append(f"{p} divides the weight {wi}")

    if f.nvars == 2:
        for edge in newton_polygon(f).edges:
            for value in edge.normal:
                if _divides(p, value):
                    reasons.append(f"{p} divides the edge normal entry {value} of {edge.normal}")
            height = edge.normal[0] * edge.start[0] + edge.normal[1] * edge.start[1]
            if _divides(p, height):
                reasons.append(f"{p} divides the multiplicity {height} along {edge.normal}")
            for coeff in edge.polynomial.terms.values():
                if _divides(p, coeff.numerator):
                    reasons.append(f"{p} divides the edge coefficient {coeff}")
            coefficients = edge.univariate()
            if len(coefficients) > 2:
                u = Poly([Rational(c.numerator, c.denominator) for c in reversed(coefficients)],
                         _U, domain=QQ)
                disc = Rational(discriminant(u))
                if _divides(p, int(disc.p)) or _divides(p, int(disc.q)):
                    reasons.append(f"{p} divides the discriminant {disc} of edge polynomial {u.as_expr()}")
    elif f.nvars == 1:
        order = min(m[0] for m in f.terms)
        if _divides(p, order):
            reasons.append(f"{p} divides the order {order} of f")
        coeff = f.coefficient((order,))
        if _divides(p, coeff.numerator):
            reasons.append(f"{p} divides the leading coefficient {coeff}")

    if not reasons and p**f.nvars <= config.BRUTE_FORCE_LIMIT:
        singular = _singular_zeros_off_origin(f, p)
        if singular:
            reasons.append(f"f has singular zeros mod {p} away from the origin, e.g. {singular[0]}")
    return GoodPrimeReport(p, tuple(reasons))
