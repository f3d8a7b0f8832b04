# singularities/gbase.py
"""
Groebner bases over QQ (sympy's Buchberger) and the local Milnor algebra
at the origin, computed by truncating with a power of the maximal ideal.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property

from sympy.polys.domains import QQ
from sympy.polys.groebnertools import groebner as buchberger
from sympy.polys.orderings import MonomialOrder, grevlex
from sympy.polys.rings import PolyRing

from singularities import config
from singularities.errors import HypothesisError, InfiniteQuotientError
from singularities.poly import Polynomial, as_scalar, grlex_key, partial_derivative

log = logging.getLogger(__name__)


class WeightedGradedLexOrder(MonomialOrder):
    """Compare by weighted degree, break ties lexicographically."""

    alias = "wglex"
    is_global = True

    def __init__(self, weights):
        self.weights = tuple(weights)

    def __call__(self, monomial):
        return (sum(w * e for w, e in zip(self.weights, monomial)), monomial)

    def __eq__(self, other):
        return isinstance(other, WeightedGradedLexOrder) and self.weights == other.weights

    def __hash__(self):
        return hash((self.alias, self.weights))

    def __repr__(self):
        return f"WeightedGradedLexOrder({self.weights})"


@dataclass(frozen=True)
class TermOrder:
    kind: str = "grevlex"
    weights: tuple | None = None

    def __post_init__(self):
        if self.kind == "grevlex":
            if self.weights is not None:
                raise ValueError("grevlex takes no weights")
        elif self.kind == "wglex":
            if not self.weights or any(w < 1 for w in self.weights):
                raise ValueError(f"Unsupported weights for wglex: {self.weights}")
            object.__setattr__(self, "weights", tuple(self.weights))
        else:
            raise ValueError(f"Unsupported term order: {self.kind}")

    def sympy_order(self):
        if self.kind == "grevlex":
            return grevlex
        return WeightedGradedLexOrder(self.weights)


GREVLEX = TermOrder()


def _ring(nvars, order):
    return PolyRing(tuple(f"x{i}" for i in range(nvars)), QQ, order.sympy_order())


def to_ring(ring, f):
    return ring.from_dict({m: QQ(c.numerator, c.denominator) for m, c in f.terms.items()})


def from_ring(element, nvars):
    return Polynomial({m: as_scalar(c) for m, c in element.items()}, nvars)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis together with the ideal it came from."""

    generators: tuple
    order: TermOrder
    ideal: tuple = field(repr=False)
    nvars: int = 0

    @cached_property
    def ring(self):
        return _ring(self.nvars, self.order)

    @cached_property
    def ring_generators(self):
        return [to_ring(self.ring, g) for g in self.generators]

    @cached_property
    def leading_monomials(self):
        return tuple(g.LM for g in self.ring_generators)

    def is_unit_ideal(self):
        return any(not any(m) for m in self.leading_monomials)


def groebner(gens, order=GREVLEX):
    """
    Reduced Groebner basis of the ideal generated by ``gens``.

    Raises:
    ValueError: if gens is empty or all zero, or the variable counts differ.
    """
    gens = list(gens)
    if not gens or all(g.is_zero() for g in gens):
        raise ValueError("groebner needs at least one nonzero generator")
    nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ValueError("generators live in different variable counts")
    ring = _ring(nvars, order)
    basis = buchberger([to_ring(ring, g) for g in gens if g], ring, method="buchberger")
    log.debug("groebner: %d generators -> %d basis elements", len(gens), len(basis))
    return GroebnerBasis(
        generators=tuple(from_ring(b, nvars) for b in basis),
        order=order,
        ideal=tuple(gens),
        nvars=nvars,
    )


def normal_form(g, gb):
    if g.nvars != gb.nvars:
        raise ValueError(f"variable count mismatch: {g.nvars} vs {gb.nvars}")
    if g.is_zero():
        return g
    return from_ring(to_ring(gb.ring, g).rem(gb.ring_generators), gb.nvars)


def standard_monomials(gb):
    """
    Monomials divisible by no leading monomial, in graded-lex order.

    Raises:
    InfiniteQuotientError: when some variable has no pure-power leading monomial.
    """
    if gb.is_unit_ideal():
        return []
    caps = []
    for i in range(gb.nvars):
        powers = [m[i] for m in gb.leading_monomials
                  if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        if not powers:
            raise InfiniteQuotientError(i)
        caps.append(min(powers))
    staircase = [
        m for m in itertools.product(*(range(c) for c in caps))
        if not any(all(a >= b for a, b in zip(m, lm)) for lm in gb.leading_monomials)
    ]
    return sorted(staircase, key=grlex_key)


def monomials_of_degree(nvars, degree):
    """All exponent tuples of total degree ``degree``."""
    if nvars == 1:
        return [(degree,)]
    return [
        (first,) + rest
        for first in range(degree, -1, -1)
        for rest in monomials_of_degree(nvars - 1, degree - first)
    ]


@dataclass(frozen=True)
class MilnorData:
    basis: tuple
    mu: int
    truncation_exponent: int
    groebner: GroebnerBasis


def _power_of_maximal_ideal(nvars, degree):
    return [Polynomial.monomial(m) for m in monomials_of_degree(nvars, degree)]


def local_milnor_algebra(f, bound=None):
    """
    Milnor algebra of f at the origin.

    Searches the least N with every degree-N monomial in (df) + m^(N+1).
    By Nakayama this certifies m^N inside the local Jacobian ideal, so the
    quotient by (df) + m^N is the local Milnor algebra.

    Parameters:
    f (Polynomial): vanishing at 0.
    bound (int): largest N tried; config.FALLBACK_TRUNCATION_BOUND when None.

    Returns:
    MilnorData: basis, mu, N and the Groebner basis of (df) + m^N.

    Raises:
    HypothesisError: "vanishes-at-origin" when f is zero or f(0) != 0,
        "singular-at-origin" when f is smooth at 0,
        "isolated-singularity" when no N up to the bound certifies.
    """
    if f.is_zero() or f.constant_term():
        raise HypothesisError("vanishes-at-origin", "f must be nonzero with f(0) = 0")
    nvars = f.nvars
    jacobian = [partial_derivative(f, i) for i in range(nvars)]
    if any(g.constant_term() for g in jacobian):
        raise HypothesisError("singular-at-origin", f"{f} is smooth at the origin (mu = 0)")
    jacobian = [g for g in jacobian if g]
    bound = bound or config.FALLBACK_TRUNCATION_BOUND

    for n in range(1, bound + 1):
        gb = groebner(jacobian + _power_of_maximal_ideal(nvars, n + 1))
        if all(normal_form(m, gb).is_zero() for m in _power_of_maximal_ideal(nvars, n)):
            truncated = groebner(jacobian + _power_of_maximal_ideal(nvars, n))
            basis = tuple(standard_monomials(truncated))
            log.debug("local Milnor algebra of %s: N=%d, mu=%d", f, n, len(basis))
            return MilnorData(basis=basis, mu=len(basis), truncation_exponent=n,
                              groebner=truncated)
    raise HypothesisError(
        "isolated-singularity",
        f"no truncation exponent up to {bound} certifies m^N in (df); "
        f"{f} possibly has a non-isolated singularity at 0",
    )
