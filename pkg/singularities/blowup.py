# singularities/blowup.py
"""
The w-weighted blowup of the origin as an embedded Q-resolution of f,
its numerical data and the candidate poles it yields.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from singularities.errors import CertificationError, HypothesisError
from singularities.gbase import groebner
from singularities.poly import chart_substitute, partial_derivative
from singularities.swh import check_eqmon

log = logging.getLogger(__name__)

CANDIDATE = "candidate"
EXACT = "exact"


@dataclass(frozen=True)
class QChart:
    index: int
    quotient_group_order: int
    quotient_weights: tuple
    pulled_back_degree: int
    residual: object
    smooth_certificate: object


@dataclass(frozen=True)
class QResolutionSummary:
    N_E: int
    nu_E: int
    twist: tuple
    valid: bool
    eqmon_ok: bool
    charts: tuple
    offender: tuple | None = None
    N_H: int = 1
    nu_H: int = 1

    @property
    def level(self):
        return Fraction(self.nu_E, self.N_E)


@dataclass(frozen=True)
class PoleSet:
    """Pole locations (negative rationals) with order bounds or exact orders."""

    entries: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in (CANDIDATE, EXACT):
            raise ValueError(f"Unsupported pole set kind: {self.kind}")
        entries = tuple(sorted(((Fraction(loc), int(order)) for loc, order in dict(self.entries).items()),
                               reverse=True))
        for loc, order in entries:
            if loc >= 0 or order < 1:
                raise ValueError(f"invalid pole entry ({loc}, {order})")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_dict(cls, mapping, kind):
        return cls(tuple(mapping.items()), kind)

    def order(self, location):
        return dict(self.entries).get(Fraction(location), 0)

    def locations(self):
        return [loc for loc, _ in self.entries]

    def within(self, other):
        """Every pole of self is a pole of other with at least the same order."""
        return all(other.order(loc) >= order for loc, order in self.entries)

    def format(self):
        return "{" + ", ".join(f"{loc}: {order}" for loc, order in self.entries) + "}"


def _chart(analysis, i):
    f, w = analysis.f, analysis.w
    d, residual = chart_substitute(f, w, i)
    if d != analysis.d:
        raise CertificationError(f"chart {i} pulls back with degree {d}, expected {analysis.d}")
    restricted = residual.substitute(i, 0)
    if restricted != analysis.f_d.substitute(i, 1):
        raise CertificationError(f"chart {i}: residual at x_{i}=0 is not the dehomogenized f_d")
    gens = [restricted] + [partial_derivative(restricted, j) for j in range(f.nvars) if j != i]
    certificate = groebner([g for g in gens if g] or [restricted])
    if not certificate.is_unit_ideal():
        raise HypothesisError(
            "isolated-initial-part",
            f"exceptional divisor meets the strict transform non-transversally in chart {i}",
        )
    weights = tuple(-1 if j == i else w[j] for j in range(f.nvars))
    return QChart(
        index=i,
        quotient_group_order=w[i],
        quotient_weights=weights,
        pulled_back_degree=d,
        residual=residual,
        smooth_certificate=certificate,
    )


def weighted_blowup(analysis, beta=None):
    """
    Build every chart of the weighted blowup and record (N, nu) of E and H.

    nu_E follows the additive convention ord_E(K) + ord_E(g) + 1 = sum w_i (beta_i + 1).
    A nonzero twist also needs the monomial condition on f_d; when it fails
    the summary is marked invalid and carries the offending term.
    """
    beta = tuple(beta) if beta is not None else (0,) * analysis.nvars
    if len(beta) != analysis.nvars or any(b < 0 for b in beta):
        raise ValueError(f"Unsupported twist: {beta}")
    charts = tuple(_chart(analysis, i) for i in range(analysis.nvars))
    eqmon = check_eqmon(analysis, beta)
    nu_e = sum(wi * (b + 1) for wi, b in zip(analysis.w, beta))
    log.debug("weighted blowup: N_E=%d nu_E=%d eqmon=%s", analysis.d, nu_e, eqmon.ok)
    return QResolutionSummary(
        N_E=analysis.d,
        nu_E=nu_e,
        twist=beta,
        valid=eqmon.ok,
        eqmon_ok=eqmon.ok,
        charts=charts,
        offender=eqmon.offender,
    )


def candidate_poles(summary):
    if not summary.valid:
        raise ValueError("candidate poles of an invalid Q-resolution summary")
    if summary.level == 1:
        return PoleSet(((Fraction(-1), 2),), CANDIDATE)
    return PoleSet(((Fraction(-1), 1), (-summary.level, 1)), CANDIDATE)


def stratum_factors(summary):
    """
    Linear factors (N, nu) that can produce poles on each stratum of the
    Q-resolution: outside E and H, on E only, on H only, and on E meet H.
    """
    exceptional = (summary.N_E, summary.nu_E)
    strict = (summary.N_H, summary.nu_H)
    return {
        "outside": (),
        "exceptional": (exceptional,),
        "strict_transform": (strict,),
        "intersection": (strict, exceptional),
    }
