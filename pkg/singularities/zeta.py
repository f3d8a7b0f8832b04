# singularities/zeta.py
"""
Motivic zeta function of a resolved germ as an exact rational function in
L and T = L^(-s), its poles, and the topological and p-adic specializations.

A ZetaExpression stands for

    numerator(L, T) / (L^lpower * prod over factors of (L^nu - T^N)
                                * prod over cofactors of C_{N,nu})

which is the same as L^-(lpower + sum nu) * numerator / prod (1 - L^-nu T^N)
when there are no cofactors. C_{N,nu} = (L^nu - T^N) / (L^nu0 - T^N0) with
(N0, nu0) = (N, nu) / gcd(N, nu) is what is left of a factor whose primitive
component was cancelled against the numerator.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import Poly, QQ, Rational, cancel, factor, fraction, roots, symbols, together

from singularities import config
from singularities.blowup import EXACT, PoleSet
from singularities.errors import BadPrimeError, CertificationError
from singularities.padic import good_prime, root_count_fp
from singularities.poly import eval_mod, partial_derivative
from singularities.toric import CROSSING, EXCEPTIONAL, STRICT_MEET

log = logging.getLogger(__name__)

L, T, S, t = symbols("L T s t")


def _poly(expr):
    return Poly(expr, L, T, domain=QQ)


def _primitive(n_value, nu):
    g = math.gcd(n_value, nu)
    return n_value // g, nu // g


def _factor_poly(n_value, nu):
    return _poly(L**nu - T**n_value)


def _cofactor_poly(n_value, nu):
    quotient, remainder = _factor_poly(n_value, nu).div(_factor_poly(*_primitive(n_value, nu)))
    if not remainder.is_zero:
        raise RuntimeError(f"primitive component does not divide L^{nu} - T^{n_value}")
    return quotient


@dataclass(frozen=True, eq=False)
class ZetaExpression:
    numerator: Poly
    lpower: int
    factors: tuple
    nvars: int
    cofactors: tuple = ()

    def to_expr(self):
        den = L**self.lpower
        for n_value, nu in self.factors:
            den *= L**nu - T**n_value
        for n_value, nu in self.cofactors:
            den *= _cofactor_poly(n_value, nu).as_expr()
        return self.numerator.as_expr() / den

    def to_json(self):
        exponent = self.lpower + sum(nu for _, nu in self.factors)
        by_power = {}
        for (i, j), c in self.numerator.terms():
            by_power.setdefault(j, {})[(i,)] = c
        rows = [
            [str(Poly.from_dict(by_power[j], L, domain=QQ).as_expr()), f"L^{exponent}", j]
            for j in sorted(by_power)
        ]
        out = {
            "numerator": rows,
            "denominator": [[n_value, nu] for n_value, nu in self.factors],
            "prefactor": "1",
        }
        if self.cofactors:
            out["cofactors"] = [[n_value, nu] for n_value, nu in self.cofactors]
        return out


def _divide_out(numerator, divisor):
    quotient, remainder = numerator.div(divisor)
    return quotient if remainder.is_zero else None


def _cancel_once(numerator, factors, cofactors):
    """One cancellation step, or None when the expression is reduced."""
    for k, (n_value, nu) in enumerate(factors):
        quotient = _divide_out(numerator, _factor_poly(n_value, nu))
        if quotient is not None:
            return quotient, factors[:k] + factors[k + 1:], cofactors
    for k, (n_value, nu) in enumerate(factors):
        if math.gcd(n_value, nu) == 1:
            continue
        quotient = _divide_out(numerator, _factor_poly(*_primitive(n_value, nu)))
        if quotient is not None:
            return quotient, factors[:k] + factors[k + 1:], cofactors + [(n_value, nu)]
    for k, (n_value, nu) in enumerate(cofactors):
        quotient = _divide_out(numerator, _cofactor_poly(n_value, nu))
        if quotient is not None:
            return quotient, factors, cofactors[:k] + cofactors[k + 1:]
    return None


def reduce_expression(numerator, lpower, factors, nvars, cofactors=()):
    """
    Cancel denominator components against the numerator until none divides it.

    A whole factor L^nu - T^N is cancelled first. Otherwise, for gcd(N, nu) > 1,
    its primitive component L^nu0 - T^N0 (irreducible over Q(L)) is cancelled
    and the factor moves to the cofactors.
    """
    factors, cofactors = list(factors), list(cofactors)
    while (step := _cancel_once(numerator, factors, cofactors)) is not None:
        numerator, factors, cofactors = step
    while lpower > 0 and all(i >= 1 for i, _ in numerator.monoms()):
        numerator = _divide_out(numerator, _poly(L))
        lpower -= 1
    return ZetaExpression(numerator, lpower, tuple(sorted(factors)), nvars, tuple(sorted(cofactors)))


def _class_poly(coefficients):
    return _poly(sum(Rational(c) * L**k for k, c in enumerate(coefficients)))


def assemble_motivic(res):
    """
    Sum over strata over the origin of class * prod over incident divisors of
    (L-1) L^-nu T^N / (1 - L^-nu T^N), times L^-n, in reduced form.
    """
    used = sorted({i for stratum in res.strata for i in stratum.incident})
    numerator = _poly(0)
    for stratum in res.strata:
        term = _class_poly(stratum.class_coefficients)
        for i in used:
            divisor = res.divisors[i]
            if i in stratum.incident:
                term = term * _poly((L - 1) * T**divisor.N)
            else:
                term = term * _factor_poly(divisor.N, divisor.nu)
        numerator = numerator + term
    factors = [(res.divisors[i].N, res.divisors[i].nu) for i in used]
    return reduce_expression(numerator, res.nvars, factors, res.nvars)


def _root_multiplicity(poly, value):
    if poly.is_zero:
        return None
    count = 0
    while poly.eval(value) == 0:
        poly = poly.diff(T)
        count += 1
    return count


def _certify(z, n0, nu0, order):
    """
    Pole order at T^n0 = L^nu0 after specializing L = c^n0 for integers c.

    At least config.MIN_CERTIFICATIONS bases must give a conclusive order,
    and every conclusive order must match the symbolic one.
    """
    conclusive = []
    for base in config.CERTIFICATION_BASES:
        l_value, t_value = base**n0, base**nu0
        numerator = Poly(z.numerator.as_expr().subs(L, l_value), T, domain=QQ)
        num_mult = _root_multiplicity(numerator, t_value)
        if num_mult is None:
            log.debug("certification at L=%d inconclusive: numerator vanishes", l_value)
            continue
        den_mult = sum(
            _root_multiplicity(Poly(l_value**nu - T**n_value, T, domain=QQ), t_value)
            for n_value, nu in z.factors if n_value
        )
        for n_value, nu in z.cofactors:
            p_value, p_nu = _primitive(n_value, nu)
            den_mult += _root_multiplicity(Poly(l_value**nu - T**n_value, T, domain=QQ), t_value)
            den_mult -= _root_multiplicity(Poly(l_value**p_nu - T**p_value, T, domain=QQ), t_value)
        if max(den_mult - num_mult, 0) != max(order, 0):
            raise CertificationError(
                f"pole -{Fraction(nu0, n0)}: symbolic order {order}, "
                f"order {den_mult - num_mult} at L={l_value}"
            )
        conclusive.append(l_value)
        if len(conclusive) == config.MIN_CERTIFICATIONS:
            return
    raise CertificationError(
        f"pole -{Fraction(nu0, n0)}: {len(conclusive)} conclusive specializations, "
        f"{config.MIN_CERTIFICATIONS} required"
    )


def poles(z):
    """
    Exact poles: for each ratio nu/N of a denominator factor, the count of
    factors with that ratio minus the multiplicity of T^N0 - L^nu0 in the numerator.
    """
    groups = {}
    for n_value, nu in z.factors:
        if n_value:
            ratio = Fraction(nu, n_value)
            groups[ratio] = groups.get(ratio, 0) + 1
    entries = {}
    for ratio, count in sorted(groups.items()):
        n0, nu0 = ratio.denominator, ratio.numerator
        primitive = _factor_poly(n0, nu0)
        numerator, in_numerator = z.numerator, 0
        while (numerator := _divide_out(numerator, primitive)) is not None:
            in_numerator += 1
        order = count - in_numerator
        _certify(z, n0, nu0, order)
        if order > 0:
            entries[-ratio] = order
    return PoleSet(tuple(entries.items()), EXACT)


@dataclass(frozen=True, eq=False)
class TopologicalZeta:
    numerator: Poly
    denominator: Poly

    def as_expr(self):
        return self.numerator.as_expr() / self.denominator.as_expr()

    def __eq__(self, other):
        if not isinstance(other, TopologicalZeta):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __call__(self, value):
        value = Rational(str(Fraction(value)))
        den = self.denominator.eval(value)
        if den == 0:
            raise ValueError(f"{value} is a pole")
        return Fraction(str(self.numerator.eval(value) / den))

    def poles(self):
        found = roots(self.denominator)
        return {Fraction(str(r)): m for r, m in found.items()}

    def format(self):
        return f"({factor(self.numerator.as_expr())})/({factor(self.denominator.as_expr())})"

    def __str__(self):
        return self.format()


def _as_topological(expr):
    num, den = fraction(cancel(together(expr)))
    numerator, denominator = Poly(num, S, domain=QQ), Poly(den, S, domain=QQ)
    if denominator.LC() < 0:
        numerator, denominator = -numerator, -denominator
    return TopologicalZeta(numerator, denominator)


def topological(res):
    """Sum over strata of chi(stratum) * prod over incident divisors of 1/(N s + nu)."""
    total = Rational(0)
    for stratum in res.strata:
        term = Rational(sum(stratum.class_coefficients))
        for i in stratum.incident:
            divisor = res.divisors[i]
            term = term / (divisor.N * S + divisor.nu)
        total += term
    return _as_topological(total)


def topological_limit(z, s0):
    """
    Motivic expression at T = L^-s0 in the limit L -> 1.

    With s0 = a/b the substitution L = u^b, T = u^-a keeps everything
    rational in u; after cancelling, u = 1 is evaluated directly.

    Raises:
    ValueError: when s0 is one of the candidate poles -nu/N of the denominator.
    """
    s0 = Fraction(s0)
    for n_value, nu in z.factors:
        if n_value and Fraction(-nu, n_value) == s0:
            raise ValueError(f"{s0} is a candidate pole of the zeta function")
    u = symbols("u")
    expr = z.to_expr().subs({L: u**s0.denominator, T: u ** (-s0.numerator)}, simultaneous=True)
    num, den = fraction(cancel(together(expr)))
    den_at_one = den.subs(u, 1)
    if den_at_one == 0:
        raise ValueError(f"{s0} is a pole of the topological zeta function")
    return Fraction(str(num.subs(u, 1) / den_at_one))


@dataclass(frozen=True)
class IgusaZeta:
    p: int
    nvars: int
    origin: object  # sympy expression in t, the germ at 0
    total: object | None  # over all of Z_p^n, untwisted only


def _stratum_count(stratum, res, p):
    if stratum.kind == CROSSING:
        return 1
    divisor = res.divisors[stratum.ray_index]
    rational_points = root_count_fp(divisor.edge, p) if divisor.edge else 0
    if stratum.kind == EXCEPTIONAL:
        return p - 1 - rational_points
    if stratum.kind == STRICT_MEET:
        return rational_points
    raise ValueError(f"Unsupported stratum kind: {stratum.kind}")


def igusa_specialize(res, p):
    """
    Igusa zeta function at p, as a rational function of t = p^-s.

    The germ part replaces L by p and stratum classes by F_p point counts.
    For untwisted f the residue classes away from the origin are added:
    a class where f is a unit contributes p^-n, a smooth zero
    p^-n (p-1) p^-1 t / (1 - p^-1 t).

    Raises:
    BadPrimeError: when good_prime rejects p.
    """
    report = good_prime(res.f, res.beta, p)
    if not report:
        raise BadPrimeError(p, report.reasons)
    n = res.nvars
    origin = Rational(0)
    for stratum in res.strata:
        term = Rational(_stratum_count(stratum, res, p))
        for i in stratum.incident:
            divisor = res.divisors[i]
            term = term * (p - 1) * t**divisor.N / (p**divisor.nu - t**divisor.N)
        origin += term
    origin = cancel(origin / p**n)

    total = None
    if not any(res.beta):
        gradient = [partial_derivative(res.f, i) for i in range(n)]
        units, smooth = 0, 0
        for a in itertools.product(range(p), repeat=n):
            if not any(a):
                continue
            if eval_mod(res.f, a, p):
                units += 1
            elif any(eval_mod(g, a, p) for g in gradient):
                smooth += 1
            else:
                raise BadPrimeError(p, (f"singular zero {a} away from the origin",))
        total = cancel(
            origin
            + Rational(units, p**n)
            + Rational(smooth, p**n) * Rational(p - 1, p) * t / (1 - t / p)
        )
    return IgusaZeta(p=p, nvars=n, origin=origin, total=total)


def _series(numerator, denominator, count):
    a = [Fraction(str(c)) for c in reversed(numerator.all_coeffs())]
    b = [Fraction(str(c)) for c in reversed(denominator.all_coeffs())]
    if b[0] == 0:
        raise CertificationError("Poincare series has a pole at t = 0")
    out = []
    for k in range(count):
        value = a[k] if k < len(a) else Fraction(0)
        value -= sum(b[j] * out[k - j] for j in range(1, min(k, len(b) - 1) + 1))
        out.append(value / b[0])
    return out


def predict_counts(igusa, p, n_vars, m_max):
    """
    N_1..N_m_max from the Poincare series (1 - t Z(t)) / (1 - t) = sum N_m (p^-n t)^m.

    Raises:
    ValueError: when the zeta function has no global part (twisted input).
    CertificationError: when a predicted count is not an integer.
    """
    if igusa.total is None:
        raise ValueError("point counts need the untwisted zeta function over Z_p^n")
    series = cancel((1 - t * igusa.total) / (1 - t))
    num, den = fraction(series)
    coefficients = _series(Poly(num, t, domain=QQ), Poly(den, t, domain=QQ), m_max + 1)
    counts = []
    for m in range(1, m_max + 1):
        value = coefficients[m] * p ** (m * n_vars)
        if value.denominator != 1:
            raise CertificationError(f"predicted N_{m} = {value} mod {p}^{m} is not an integer")
        counts.append(int(value))
    return counts
