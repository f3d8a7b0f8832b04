# singularities/swh.py
"""
Semi-weighted-homogeneous analysis of a germ f = f_d + f_{>d}: hypothesis
checks, spectrum, the level of g in the weight filtration of the Milnor
algebra, the two twist conditions and Newton nondegeneracy.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from sympy import Matrix, Rational

from singularities.errors import HypothesisError, InfiniteQuotientError
from singularities.gbase import (
    groebner,
    local_milnor_algebra,
    monomials_of_degree,
    normal_form,
    standard_monomials,
)
from singularities.poly import (
    Polynomial,
    WeightVector,
    default_variables,
    grlex_key,
    partial_derivative,
    weighted_degree,
    weighted_parts,
)

log = logging.getLogger(__name__)


def spectral_level(beta, w, d):
    """l(beta) = sum w_i (beta_i + 1) / d."""
    return Fraction(weighted_degree(tuple(b + 1 for b in beta), w), d)


def default_truncation_bound(w, d):
    """ceil(prod (d - w_i) / w_i) * max(w) + d, the Milnor-Orlik estimate scaled up."""
    estimate = reduce(lambda acc, wi: acc * Fraction(d - wi, wi), w, Fraction(1))
    return max(1, math.ceil(estimate)) * max(w) + d


@dataclass(frozen=True)
class LevelValue:
    value: Fraction | None
    witness: tuple | None = None

    @property
    def is_bottom(self):
        return self.value is None

    def __str__(self):
        return "bottom" if self.value is None else str(self.value)


@dataclass(frozen=True)
class Flags:
    initial_isolated: bool
    initial_irreducible: bool
    is_weighted_homogeneous: bool


@dataclass(frozen=True, eq=False)
class LevelTable:
    """
    Basis of the truncated Milnor algebra adapted to the weight filtration.

    ``monomials[j]`` has level ``levels[j]``; scanning monomials by decreasing
    level and keeping the independent ones makes every filtration step a
    span of a tail of this basis. ``inverse`` maps standard-monomial
    coordinates to coordinates in the adapted basis.
    """

    monomials: tuple
    levels: tuple
    inverse: Matrix
    coordinates_of: dict


@dataclass(frozen=True)
class SwhAnalysis:
    f: Polynomial
    w: WeightVector
    d: int
    f_d: Polynomial
    higher: Polynomial
    milnor: object
    milnor_initial: object
    spectrum: tuple
    n: int
    flags: Flags
    filtration: LevelTable
    variables: tuple

    @property
    def nvars(self):
        return self.n + 1

    @property
    def minimal_exponent(self):
        return Fraction(self.w.total, self.d)

    @property
    def lct(self):
        return min(Fraction(1), self.minimal_exponent)

    def spectral_level(self, beta):
        if len(beta) != self.nvars:
            raise ValueError(f"twist {tuple(beta)} does not have {self.nvars} entries")
        return spectral_level(beta, self.w, self.d)

    def describe(self, monomial):
        return Polynomial.monomial(monomial).format(self.variables)


def _coordinates(g, milnor, index):
    nf = normal_form(g, milnor.groebner)
    vector = [Rational(0)] * milnor.mu
    for monomial, coeff in nf.terms.items():
        vector[index[monomial]] = Rational(coeff.numerator, coeff.denominator)
    return vector


def _level_table(milnor, w, d, nvars):
    index = {m: i for i, m in enumerate(milnor.basis)}
    candidates = [
        m for k in range(milnor.truncation_exponent)
        for m in monomials_of_degree(nvars, k)
    ]
    candidates.sort(key=lambda m: (-spectral_level(m, w, d), grlex_key(m)))
    columns = [_coordinates(Polynomial.monomial(m), milnor, index) for m in candidates]
    matrix = Matrix(milnor.mu, len(candidates), lambda i, j: columns[j][i])
    _, pivots = matrix.rref()
    if len(pivots) != milnor.mu:
        raise RuntimeError("monomials below the truncation exponent do not span the Milnor algebra")
    chosen = [candidates[j] for j in pivots]
    inverse = matrix.extract(list(range(milnor.mu)), list(pivots)).inv()
    return LevelTable(
        monomials=tuple(chosen),
        levels=tuple(spectral_level(m, w, d) for m in chosen),
        inverse=inverse,
        coordinates_of=index,
    )


def _initial_irreducible(f_d, w):
    # f_d(1, u) must be c * (u^{w_0} - a), a != 0, and f_d not divisible by x or y
    if f_d.nvars != 2:
        return True
    support = list(f_d.terms)
    if all(m[0] > 0 for m in support) or all(m[1] > 0 for m in support):
        return False
    dehomogenized = f_d.substitute(0, 1)
    return sorted(m[1] for m in dehomogenized.terms) == [0, w[0]]


def _check_initial_isolated(f_d, w):
    jacobian = [partial_derivative(f_d, i) for i in range(f_d.nvars)]
    if any(g.constant_term() for g in jacobian):
        raise HypothesisError("singular-at-origin", f"{f_d} is smooth at the origin")
    try:
        standard_monomials(groebner(jacobian))
    except InfiniteQuotientError as exc:
        raise HypothesisError(
            "isolated-initial-part",
            f"initial part {f_d} (weights {tuple(w)}) has a non-isolated singularity: "
            f"the Jacobian quotient is infinite along variable {exc.variable}",
        ) from exc


def analyze(f, w, bound=None, variables=None):
    """
    Validate f as semi-weighted homogeneous for the weights w and compute
    its Milnor data and spectrum.

    Parameters:
    f (Polynomial): the germ, f(0) = 0.
    w (WeightVector or sequence of int): weights, one per variable.
    bound (int): truncation search bound; derived from w and d when None.
    variables (sequence of str): names used in diagnostics.

    Returns:
    SwhAnalysis

    Raises:
    HypothesisError: when f vanishes identically or not at 0, f is smooth at 0,
        the initial part is not isolated, or (two variables) it is reducible.
    """
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(w) != f.nvars:
        raise ValueError(f"{len(w)} weights given for {f.nvars} variables")
    if f.is_zero() or f.constant_term():
        raise HypothesisError("vanishes-at-origin", "f must be nonzero with f(0) = 0")
    variables = tuple(variables or default_variables(f.nvars))

    parts = weighted_parts(f, w)
    d = next(iter(parts))
    f_d = parts[d]
    higher = f - f_d
    bound = bound or default_truncation_bound(w, d)

    _check_initial_isolated(f_d, w)
    if not _initial_irreducible(f_d, w):
        raise HypothesisError(
            "irreducible-initial-part",
            f"initial part {f_d.format(variables)} is reducible; reducible weighted-homogeneous "
            "plane curves need a classification up to holomorphic coordinate change, "
            "which is not supported",
        )
    milnor_initial = local_milnor_algebra(f_d, bound)
    milnor = local_milnor_algebra(f, bound)
    if milnor.mu != milnor_initial.mu:
        log.warning("mu(f) = %d differs from mu(f_d) = %d", milnor.mu, milnor_initial.mu)

    spectrum = tuple(sorted(spectral_level(m, w, d) for m in milnor_initial.basis))
    return SwhAnalysis(
        f=f,
        w=w,
        d=d,
        f_d=f_d,
        higher=higher,
        milnor=milnor,
        milnor_initial=milnor_initial,
        spectrum=spectrum,
        n=f.nvars - 1,
        flags=Flags(
            initial_isolated=True,
            initial_irreducible=True,
            is_weighted_homogeneous=higher.is_zero(),
        ),
        filtration=_level_table(milnor, w, d, f.nvars),
        variables=variables,
    )


def level(analysis, g):
    """
    Level of g in the weight filtration of the local Milnor algebra of f.

    The value is the least alpha such that the class of g is not in the span
    of the classes of x^gamma with l(gamma) > alpha; "bottom" when the class
    vanishes. The witness is the first adapted-basis monomial of that level
    with a nonzero coefficient.
    """
    if g.nvars != analysis.nvars:
        raise ValueError(f"variable count mismatch: {g.nvars} vs {analysis.nvars}")
    if g.is_zero():
        raise ValueError("level of the zero polynomial")
    table = analysis.filtration
    vector = _coordinates(g, analysis.milnor, table.coordinates_of)
    if not any(vector):
        return LevelValue(None)
    coefficients = table.inverse * Matrix(vector)
    support = [j for j in range(len(table.monomials)) if coefficients[j] != 0]
    value = min(table.levels[j] for j in support)
    witness = next(table.monomials[j] for j in support if table.levels[j] == value)
    return LevelValue(value, witness)


@dataclass(frozen=True)
class EqmonResult:
    ok: bool
    offender: tuple | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class EqpaResult:
    ok: bool
    level: LevelValue
    expected: Fraction

    def __bool__(self):
        return self.ok


def check_eqmon(analysis, beta):
    """
    True iff for every i with beta_i != 0, f_d has no term x_i * x_j^k (j != i, k > 0).

    On failure the offender is (exponent, coefficient) of the first such term
    in canonical order.
    """
    beta = tuple(beta)
    if len(beta) != analysis.nvars:
        raise ValueError(f"twist {beta} does not have {analysis.nvars} entries")
    for monomial in analysis.f_d.support():
        nonzero = [j for j, e in enumerate(monomial) if e]
        if len(nonzero) != 2:
            continue
        for i in nonzero:
            if beta[i] and monomial[i] == 1:
                return EqmonResult(False, (monomial, analysis.f_d.coefficient(monomial)))
    return EqmonResult(True)


def check_eqpa(analysis, beta):
    """True iff the level of x^beta equals l(beta)."""
    beta = tuple(beta)
    expected = analysis.spectral_level(beta)
    actual = level(analysis, Polynomial.monomial(beta))
    return EqpaResult(actual.value == expected, actual, expected)


# --- Newton polyhedron ---

def _supporting_facets(points, nvars):
    """Facets of conv(points) + R_{>=0}^n as {primitive normal: points on it}."""
    generators = [("point", p) for p in points]
    generators += [("ray", tuple(1 if j == i else 0 for j in range(nvars))) for i in range(nvars)]
    facets = {}
    for combo in itertools.combinations(generators, nvars):
        anchors = [g for kind, g in combo if kind == "point"]
        if not anchors:
            continue
        rays = [g for kind, g in combo if kind == "ray"]
        rows = [[a - b for a, b in zip(p, anchors[0])] for p in anchors[1:]] + [list(r) for r in rays]
        null = Matrix(rows).nullspace()
        if len(null) != 1:
            continue
        scale = reduce(math.lcm, (Rational(x).q for x in null[0]), 1)
        normal = [int(x * scale) for x in null[0]]
        g = reduce(math.gcd, (abs(x) for x in normal))
        normal = [x // g for x in normal]
        if all(x <= 0 for x in normal):
            normal = [-x for x in normal]
        if any(x < 0 for x in normal):
            continue
        height = sum(a * b for a, b in zip(normal, anchors[0]))
        values = {p: sum(a * b for a, b in zip(normal, p)) for p in points}
        if min(values.values()) < height:
            continue
        facets[tuple(normal)] = frozenset(p for p, v in values.items() if v == height)
    return facets


def compact_faces(f):
    """Point sets of the compact faces with at least two support points."""
    points = list(f.terms)
    facets = _supporting_facets(points, f.nvars)
    faces = set(facets.values())
    frontier = list(faces)
    while frontier:
        found = []
        for face in frontier:
            for other in facets.values():
                meet = face & other
                if meet and meet not in faces:
                    faces.add(meet)
                    found.append(meet)
        frontier = found
    compact = []
    for face in faces:
        if len(face) < 2:
            continue
        normals = [normal for normal, pts in facets.items() if face <= pts]
        if all(sum(column) > 0 for column in zip(*normals)):
            compact.append(face)
    return sorted(compact, key=lambda face: sorted(face))


def _torus_critical_free(face_poly):
    nvars = face_poly.nvars

    def extend(p):
        return Polynomial({m + (0,): c for m, c in p.terms.items()}, nvars + 1)

    gens = [extend(partial_derivative(face_poly, i)) for i in range(nvars)]
    gens.append(Polynomial({(1,) * (nvars + 1): 1, (0,) * (nvars + 1): -1}, nvars + 1))
    return groebner([g for g in gens if g]).is_unit_ideal()


def newton_nondegenerate(f):
    """
    True iff no compact-face polynomial of f has a critical point in the torus.

    The face test asks whether 1 lies in (d f_tau / d x_i, t * x_0 ... x_n - 1).
    """
    if f.is_zero() or f.constant_term():
        raise ValueError("f must be nonzero with f(0) = 0")
    if f.nvars == 1:
        return True
    for face in compact_faces(f):
        face_poly = Polynomial({m: f.terms[m] for m in face}, f.nvars)
        if not _torus_critical_free(face_poly):
            log.debug("degenerate face %s", face_poly)
            return False
    return True
