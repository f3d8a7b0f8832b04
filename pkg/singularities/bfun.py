# singularities/bfun.py
"""
b-function facts available without a Bernstein-Sato algorithm: the full
b-function of an isolated weighted-homogeneous f, proven divisors in the
semi-weighted-homogeneous case and the top root of a twisted b-function.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from singularities.poly import Polynomial
from singularities.swh import level

COMPLETE = "complete"
DIVISOR_ONLY = "divisor_only"
TOP_ROOT_ONLY = "top_root_only"
COMPLETENESS = (COMPLETE, DIVISOR_ONLY, TOP_ROOT_ONLY)

# Facts a factorization may cite
FACT_QH = "weighted-homogeneous b-function: (s+1) times the distinct spectral numbers"
FACT_SWH_DIVISOR = "(s+1)(s+|w|/d) divides the local b-function of a semi-weighted-homogeneous f"
FACT_INJECTIVE_SPLIT = "b = (s+1) * reduced b when f acts injectively (O is a domain)"
FACT_S_PLUS_ONE = "(s+1) divides b_{f,g} whenever g/f is not holomorphic"
FACT_TOP_ROOT = "minus the weight-filtration level of g is the largest root of the reduced b_{f,g}"


@dataclass(frozen=True)
class BFactorization:
    """Product of (s - root)^multiplicity, with how much of b it is known to be."""

    factors: tuple
    completeness: str
    provenance: tuple = ()
    top_root: Fraction | None = None
    diagnostics: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.completeness not in COMPLETENESS:
            raise ValueError(f"Unsupported completeness: {self.completeness}")
        merged = {}
        for root, mult in self.factors:
            root = Fraction(root)
            if root >= 0 or mult < 1:
                raise ValueError(f"invalid factor ({root}, {mult})")
            merged[root] = merged.get(root, 0) + mult
        object.__setattr__(self, "factors", tuple(sorted(merged.items(), reverse=True)))
        if self.top_root is not None and Fraction(self.top_root) not in merged:
            raise ValueError(f"top root {self.top_root} is not among the factors")
        if self.completeness == TOP_ROOT_ONLY and self.top_root is None:
            raise ValueError("top_root_only needs a top root")

    def multiplicity(self, root):
        return dict(self.factors).get(Fraction(root), 0)

    def roots(self):
        return [root for root, _ in self.factors]

    def completeness_of(self, root):
        """Tag of a single entry: the recorded top root is known only as the largest root."""
        root = Fraction(root)
        if not self.multiplicity(root):
            raise ValueError(f"{root} is not a root of {self.format()}")
        if self.top_root is not None and root == self.top_root:
            return TOP_ROOT_ONLY
        return self.completeness

    def reduced(self):
        """Drop one factor (s+1)."""
        kept = tuple((r, m - 1 if r == -1 else m) for r, m in self.factors if r != -1 or m > 1)
        top_root = self.top_root if any(r == self.top_root for r, _ in kept) else None
        return BFactorization(kept, self.completeness, self.provenance, top_root)

    def format(self):
        pieces = []
        for root, mult in self.factors:
            value = -root
            base = f"(s+{value})"
            pieces.append(base if mult == 1 else f"{base}^{mult}")
        return "".join(pieces) or "1"

    def __str__(self):
        return self.format()


def qh_bfunction(analysis):
    """
    b_f(s) = (s+1) * prod over distinct spectral numbers alpha of (s+alpha).

    Raises:
    ValueError: if f has terms above the initial degree.
    """
    if not analysis.flags.is_weighted_homogeneous:
        raise ValueError("qh_bfunction needs f = f_d; use swh_divisor for semi-weighted-homogeneous f")
    factors = [(Fraction(-1), 1)] + [(-alpha, 1) for alpha in sorted(set(analysis.spectrum))]
    return BFactorization(tuple(factors), COMPLETE, (FACT_QH,))


def swh_divisor(analysis):
    ratio = analysis.minimal_exponent
    if ratio == 1:
        return BFactorization(((Fraction(-1), 2),), DIVISOR_ONLY,
                              (FACT_SWH_DIVISOR, FACT_INJECTIVE_SPLIT))
    return BFactorization(((Fraction(-1), 1), (-ratio, 1)), DIVISOR_ONLY, (FACT_SWH_DIVISOR,))


def twisted_facts(analysis, beta):
    """
    Known factors of b_{f,g} for g = x^beta.

    Always (s+1); when the level of g is finite also (s+level), which is the
    largest root of the reduced b-function and is recorded as ``top_root``.

    Raises:
    ValueError: if f divides x^beta.
    """
    beta = tuple(beta)
    f = analysis.f
    if f.is_monomial():
        (exponent,) = f.terms
        if all(b >= e for b, e in zip(beta, exponent)):
            raise ValueError("f divides x^beta; g/f is holomorphic")
    value = level(analysis, Polynomial.monomial(beta))
    if value.is_bottom:
        return BFactorization(
            ((Fraction(-1), 1),), DIVISOR_ONLY, (FACT_S_PLUS_ONE,),
            diagnostics=(
                f"{analysis.describe(beta)} vanishes in the Milnor algebra; "
                "only (s+1) is guaranteed",
            ),
        )
    provenance = (FACT_S_PLUS_ONE, FACT_TOP_ROOT)
    if value.value == 1:
        provenance += (FACT_INJECTIVE_SPLIT,)
    return BFactorization(
        ((Fraction(-1), 1), (-value.value, 1)),
        DIVISOR_ONLY,
        provenance,
        top_root=-value.value,
    )


def parse_bfactorization(text_factors, completeness=COMPLETE, provenance=()):
    """Build a factorization from [["-11/6", 1], ...] as stored in fixtures."""
    return BFactorization(
        tuple((Fraction(root), int(mult)) for root, mult in text_factors),
        completeness,
        tuple(provenance),
    )
