# singularities/fixtures.py
"""
Fixture corpus: stored polynomials with expected values, each tagged with
where the value comes from, and the runner that recomputes and diffs them.
"""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from sympy import Poly, QQ, sympify

from singularities import config
from singularities.bfun import COMPLETE, parse_bfactorization, qh_bfunction, swh_divisor, twisted_facts
from singularities.blowup import candidate_poles, weighted_blowup
from singularities.errors import HypothesisError
from singularities.padic import count_mod, good_prime
from singularities.poly import Polynomial, canonical_variables, parse_polynomial
from singularities.swh import analyze, level, newton_nondegenerate
from singularities.toric import snc_resolution
from singularities.verdict import smc_check, twisted_check
from singularities.zeta import S, TopologicalZeta, assemble_motivic, igusa_specialize, poles, predict_counts, topological

log = logging.getLogger(__name__)

PUBLISHED = "PUBLISHED"
DERIVED = "DERIVED"
PROVENANCE_TAGS = (PUBLISHED, DERIVED)

DEFAULT_CORPUS = Path(__file__).resolve().parent.parent / "fixtures" / "corpus.json"


@dataclass(frozen=True)
class Expected:
    value: object
    provenance: str


@dataclass(frozen=True)
class Fixture:
    name: str
    f: str
    weights: tuple
    twist: tuple | None = None
    variables: tuple | None = None
    expected: dict = field(default_factory=dict)
    reference_b: object = None  # BFactorization of b_{f,g} stored as data

    def polynomial(self):
        return parse_polynomial(self.f, self.variables or canonical_variables(self.f))


def _expected(name, key, raw):
    if not isinstance(raw, dict) or "value" not in raw or "provenance" not in raw:
        raise ValueError(f"fixture {name}: expected field {key!r} needs a value and a provenance tag")
    if raw["provenance"] not in PROVENANCE_TAGS:
        raise ValueError(f"fixture {name}: Unsupported provenance tag {raw['provenance']!r}")
    return Expected(raw["value"], raw["provenance"])


def _fixture(raw):
    name = raw["name"]
    reference = None
    if "reference_b" in raw:
        ref = raw["reference_b"]
        if ref.get("provenance") not in PROVENANCE_TAGS:
            raise ValueError(f"fixture {name}: reference b-function needs a provenance tag")
        reference = parse_bfactorization(ref["factors"], ref.get("completeness", COMPLETE), (ref["provenance"],))
    return Fixture(
        name=name,
        f=raw["f"],
        weights=tuple(raw["weights"]),
        twist=tuple(raw["twist"]) if raw.get("twist") is not None else None,
        variables=tuple(raw["variables"]) if raw.get("variables") else None,
        expected={key: _expected(name, key, value) for key, value in raw.get("expected", {}).items()},
        reference_b=reference,
    )


def load_fixtures(path):
    """
    Read a JSON array of fixtures; an empty file is an empty corpus.

    Raises:
    ValueError: on malformed JSON or a field without a provenance tag.
    """
    text = Path(path).read_text()
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"fixture file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ValueError(f"fixture file {path} must hold a JSON array")
    return [_fixture(raw) for raw in data]


def find_reference(f, weights, twist, path=DEFAULT_CORPUS):
    """Stored b_{f,g} for this (f, w, beta), or None."""
    path = Path(path)
    if not path.exists():
        return None
    twist = tuple(twist) if twist is not None and any(twist) else None
    for fixture in load_fixtures(path):
        if fixture.reference_b is None or tuple(fixture.weights) != tuple(weights):
            continue
        fixture_twist = fixture.twist if fixture.twist and any(fixture.twist) else None
        if fixture_twist == twist and fixture.polynomial() == f:
            return fixture.reference_b
    return None


def _poles_value(pole_set):
    return [[str(loc), order] for loc, order in pole_set.entries]


def _poles_value_of_b(b):
    return [[str(root), mult] for root, mult in b.factors]


def _normalize_poles(raw):
    return sorted(([str(Fraction(loc)), int(order)] for loc, order in raw),
                  key=lambda entry: Fraction(entry[0]), reverse=True)


class _Run:
    """Lazily computed values of one fixture."""

    def __init__(self, fixture, run_config):
        self.fixture = fixture
        self.config = run_config
        self.f = fixture.polynomial()
        self.beta = fixture.twist or (0,) * self.f.nvars

    @cached_property
    def analysis(self):
        variables = self.fixture.variables or canonical_variables(self.fixture.f)
        return analyze(self.f, self.fixture.weights, self.config.truncation_bound, variables)

    @cached_property
    def resolution(self):
        return snc_resolution(self.f, self.beta)

    def b_function(self):
        if self.fixture.twist:
            return twisted_facts(self.analysis, self.beta)
        if self.analysis.flags.is_weighted_homogeneous:
            return qh_bfunction(self.analysis)
        return swh_divisor(self.analysis)

    def verdict(self):
        if self.fixture.twist:
            return twisted_check(self.analysis, self.beta, self.fixture.reference_b)
        return smc_check(self.analysis)

    def counts(self, expected):
        return {p: [count_mod(self.f, int(p), m) for m in range(1, len(values) + 1)]
                for p, values in expected.items()}

    def oracle(self, settings):
        """True when Poincare-series predictions match counting at every good prime."""
        for p in settings["primes"]:
            if not good_prime(self.f, self.beta, p):
                continue
            predicted = predict_counts(igusa_specialize(self.resolution, p), p, self.f.nvars, settings["m_max"])
            actual = [count_mod(self.f, p, m) for m in range(1, settings["m_max"] + 1)]
            if predicted != actual:
                log.warning("%s at p=%d: predicted %s, counted %s", self.fixture.name, p, predicted, actual)
                return False
        return True


def _topological_from_text(text):
    num, den = sympify(text, locals={"s": S}).as_numer_denom()
    return TopologicalZeta(Poly(num, S, domain=QQ), Poly(den, S, domain=QQ))


def _compare(run, key, expected):
    """(expected, actual) normalized for an exact comparison."""
    a = run.analysis if key not in ("newton_nondegenerate", "counts", "exact_poles",
                                    "exact_poles_contain", "topological", "oracle") else None
    if key == "d":
        return expected, a.d
    if key == "mu":
        return expected, a.milnor.mu
    if key == "spectrum":
        return [str(x) for x in sorted(Fraction(x) for x in expected)], [str(x) for x in a.spectrum]
    if key == "lct":
        return str(Fraction(expected)), str(a.lct)
    if key == "candidate_poles":
        return _normalize_poles(expected), _poles_value(candidate_poles(weighted_blowup(a, run.beta)))
    if key == "exact_poles":
        return _normalize_poles(expected), _poles_value(poles(assemble_motivic(run.resolution)))
    if key == "exact_poles_contain":
        exact = poles(assemble_motivic(run.resolution))
        listed = _normalize_poles(expected)
        return listed, [[loc, exact.order(Fraction(loc))] for loc, _ in listed]
    if key == "b_function":
        return _normalize_poles(expected), _poles_value_of_b(run.b_function())
    if key == "top_root":
        return str(Fraction(expected)), str(run.b_function().top_root)
    if key == "level":
        value = level(a, Polynomial.monomial(run.beta))
        actual = {"value": "bottom" if value.is_bottom else str(value.value),
                  "witness": list(value.witness) if value.witness else None}
        normalized = {"value": expected["value"] if expected["value"] == "bottom" else str(Fraction(expected["value"])),
                      "witness": expected.get("witness")}
        return normalized, actual
    if key == "topological":
        actual = topological(run.resolution)
        return expected, expected if actual == _topological_from_text(expected) else actual.format()
    if key == "counts":
        return {str(p): list(v) for p, v in expected.items()}, {str(p): v for p, v in run.counts(expected).items()}
    if key == "oracle":
        return True, run.oracle(expected)
    if key == "newton_nondegenerate":
        return expected, newton_nondegenerate(run.f)
    if key == "verdict":
        return expected, run.verdict().status
    raise ValueError(f"Unsupported expected field: {key}")


@dataclass(frozen=True)
class FieldDiff:
    field: str
    expected: object
    actual: object
    provenance: str


@dataclass(frozen=True)
class FixtureResult:
    name: str
    diffs: tuple

    @property
    def ok(self):
        return not self.diffs


@dataclass(frozen=True)
class FixtureSummary:
    results: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def failed(self):
        return [r for r in self.results if not r.ok]


def run_fixture(fixture, run_config=None):
    run = _Run(fixture, run_config or config.RunConfig())
    diffs = []
    error = fixture.expected.get("error")
    if error is not None:
        try:
            run.analysis
        except HypothesisError as exc:
            if exc.hypothesis != error.value:
                diffs.append(FieldDiff("error", error.value, exc.hypothesis, error.provenance))
        else:
            diffs.append(FieldDiff("error", error.value, None, error.provenance))
    for key, expected in fixture.expected.items():
        if key == "error":
            continue
        try:
            want, got = _compare(run, key, expected.value)
        except (ValueError, RuntimeError) as exc:
            want, got = expected.value, f"error: {exc}"
        if want != got:
            diffs.append(FieldDiff(key, want, got, expected.provenance))
    log.debug("fixture %s: %d diffs", fixture.name, len(diffs))
    return FixtureResult(fixture.name, tuple(diffs))


def fixtures_run(path, run_config=None):
    """Recompute every fixture in the file and collect field-level diffs."""
    return FixtureSummary(tuple(run_fixture(fixture, run_config) for fixture in load_fixtures(path)))
