# singularities/verdict.py
"""
Verdicts on the strong monodromy conjecture for semi-weighted-homogeneous
germs, plain and twisted by a monomial, and the explorer for monomials
that achieve a spectral number.
"""
import logging
from dataclasses import dataclass, field

from singularities import config
from singularities.bfun import COMPLETE, qh_bfunction, swh_divisor, twisted_facts
from singularities.blowup import candidate_poles, weighted_blowup
from singularities.gbase import monomials_of_degree
from singularities.poly import Polynomial, grlex_key
from singularities.swh import check_eqmon, check_eqpa, level, newton_nondegenerate
from singularities.toric import snc_resolution
from singularities.zeta import assemble_motivic, poles

log = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT_APPLICABLE"
UNKNOWN = "UNKNOWN"
STATUSES = (PASS, FAIL, NOT_APPLICABLE, UNKNOWN)

EVIDENCE_LABEL = "evidence only: achieving a spectral number is checked up to the search bound"


@dataclass(frozen=True)
class Verdict:
    status: str
    pole_set: object = None
    b_factors: object = None
    inference_chain: tuple = ()
    diagnostics: tuple = ()

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"Unsupported verdict status: {self.status}")


def _coverage(pole_set, b):
    """Chain entries for covered poles and the list of uncovered ones."""
    chain, missing = [], []
    for loc, order in pole_set.entries:
        have = b.multiplicity(loc)
        if have >= order:
            chain.append(f"pole {loc} of order at most {order} is a root of b of multiplicity {have}")
        else:
            missing.append((loc, order, have))
    return chain, missing


def _decide(pole_set, b, chain, diagnostics):
    if not b.provenance:
        return Verdict(UNKNOWN, pole_set, b, tuple(chain),
                       tuple(diagnostics) + ("b-function factors carry no proven fact",))
    covered, missing = _coverage(pole_set, b)
    chain = list(chain) + [f"b-fact: {fact}" for fact in b.provenance] + covered
    if missing:
        diagnostics = list(diagnostics) + [
            f"pole {loc} of order at most {order}: known multiplicity {have}" for loc, order, have in missing
        ]
        return Verdict(UNKNOWN, pole_set, b, tuple(chain), tuple(diagnostics))
    return Verdict(PASS, pole_set, b, tuple(chain), tuple(diagnostics))


def smc_check(analysis):
    summary = weighted_blowup(analysis)
    pole_set = candidate_poles(summary)
    if analysis.flags.is_weighted_homogeneous:
        b = qh_bfunction(analysis)
    else:
        b = swh_divisor(analysis)
    chain = [
        f"the weighted blowup is an embedded Q-resolution with N_E = {summary.N_E}, nu_E = {summary.nu_E}",
        f"candidate poles {pole_set.format()}",
    ]
    if summary.level == 1:
        chain.append("|w| = d: -1 may have order two, matched by b = (s+1) * reduced b")
    verdict = _decide(pole_set, b, chain, ())
    log.debug("smc_check %s: %s", analysis.f, verdict.status)
    return verdict


def _missing_reference_roots(reference, roots):
    return [root for root in roots if reference.multiplicity(root) == 0]


def twisted_check(analysis, beta, reference=None):
    """
    Verdict for g = x^beta.

    NOT_APPLICABLE when the monomial condition or the level condition fails;
    the offending term or level is reported. With both conditions the poles
    {-1, -l(beta)} are matched by the known factors of b_{f,g}. A complete
    reference b-function that lacks one of those roots gives FAIL.
    """
    beta = tuple(beta)
    expected = analysis.spectral_level(beta)
    eqmon = check_eqmon(analysis, beta)
    if not eqmon:
        monomial, coeff = eqmon.offender
        return Verdict(
            NOT_APPLICABLE,
            diagnostics=(
                f"monomial condition fails: f_d has the term {coeff}*{analysis.describe(monomial)} "
                f"linear in a twisted variable",
            ),
        )
    summary = weighted_blowup(analysis, beta)
    pole_set = candidate_poles(summary)
    eqpa = check_eqpa(analysis, beta)
    if not eqpa:
        actual = eqpa.level
        if actual.is_bottom:
            found = "bottom (g vanishes in the Milnor algebra)"
        else:
            found = f"{actual.value}, witness {analysis.describe(actual.witness)}"
        diagnostics = [f"level condition fails: level of {analysis.describe(beta)} is {found}, l(beta) = {expected}"]
        if reference is not None and _missing_reference_roots(reference, [-expected]):
            diagnostics.append(
                f"reference b_(f,g) = {reference.format()} ({', '.join(reference.provenance)}) "
                f"has no root {-expected}, although {-expected} is a candidate pole"
            )
        return Verdict(NOT_APPLICABLE, pole_set, twisted_facts(analysis, beta), (), tuple(diagnostics))

    b = twisted_facts(analysis, beta)
    chain = [
        f"the twisted weighted blowup is Q-normal crossing: N_E = {summary.N_E}, nu_E = {summary.nu_E}",
        f"candidate poles {pole_set.format()}",
        f"level of {analysis.describe(beta)} equals l(beta) = {expected}, so -{expected} is a root of the reduced b",
        "(s+1) divides b_(f,g)",
    ]
    if expected == 1:
        chain.append("l(beta) = 1: order two at -1 is matched by b = (s+1) * reduced b")
    if reference is not None and reference.completeness == COMPLETE:
        absent = _missing_reference_roots(reference, [-1, -expected])
        if absent:
            return Verdict(
                FAIL, pole_set, b, tuple(chain),
                (f"complete reference b_(f,g) = {reference.format()} lacks the proven roots "
                 + ", ".join(str(r) for r in absent),),
            )
    return _decide(pole_set, b, chain, ())


@dataclass(frozen=True)
class ExploreEntry:
    alpha: object
    achieved: bool
    witness: tuple | None
    candidates: object
    tested: tuple  # (beta, eqmon ok, level)
    toric_confirmed: bool | None = None
    notes: tuple = field(default=())


def _monomials_up_to(nvars, bound):
    out = []
    for k in range(bound + 1):
        out.extend(sorted(monomials_of_degree(nvars, k), key=grlex_key))
    return out


def _toric_poles(analysis, beta):
    return poles(assemble_motivic(snc_resolution(analysis.f, beta)))


def question_explore(analysis, bound=config.EXPLORE_BOUND, toric=True):
    """
    For each distinct spectral number alpha, search monomials x^beta with
    |beta| <= bound and l(beta) = alpha that pass the monomial condition and
    have level alpha. In two variables a nondegenerate f additionally gets
    the exact poles of the twisted zeta function from the toric resolution.
    """
    monomials = _monomials_up_to(analysis.nvars, bound)
    levels = {m: level(analysis, Polynomial.monomial(m)) for m in monomials}
    use_toric = toric and analysis.nvars == 2 and newton_nondegenerate(analysis.f)
    entries = []
    for alpha in sorted(set(analysis.spectrum)):
        tested, witness = [], None
        for beta in monomials:
            if analysis.spectral_level(beta) != alpha:
                continue
            eqmon = check_eqmon(analysis, beta)
            value = levels[beta]
            tested.append((beta, eqmon.ok, value))
            if witness is None and eqmon.ok and value.value == alpha:
                witness = beta
        notes = tuple(
            f"{analysis.describe(m)} has level {alpha} but l = {analysis.spectral_level(m)}"
            for m in monomials
            if levels[m].value == alpha and analysis.spectral_level(m) != alpha
        )
        candidates, confirmed = None, None
        if witness is not None:
            candidates = candidate_poles(weighted_blowup(analysis, witness))
            if use_toric:
                confirmed = _toric_poles(analysis, witness).order(-alpha) > 0
        entries.append(ExploreEntry(
            alpha=alpha,
            achieved=witness is not None,
            witness=witness,
            candidates=candidates,
            tested=tuple(tested),
            toric_confirmed=confirmed,
            notes=notes,
        ))
    return entries
