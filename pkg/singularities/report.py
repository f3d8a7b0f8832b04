# singularities/report.py
"""
JSON renderings of analyses, pole sets, b-functions, zeta functions and
verdicts. Rationals are "num/den" strings in lowest terms; poles and roots
are negative.
"""
import json

from singularities import config


def rational(value):
    return None if value is None else str(value)


def exponent(monomial):
    return list(monomial) if monomial is not None else None


def pole_set(poles):
    if poles is None:
        return None
    return {"kind": poles.kind, "poles": [[rational(loc), order] for loc, order in poles.entries]}


def bfactorization(b):
    if b is None:
        return None
    return {
        "factors": [[rational(root), mult] for root, mult in b.factors],
        "text": b.format(),
        "completeness": b.completeness,
        "entries": [[rational(root), mult, b.completeness_of(root)] for root, mult in b.factors],
        "provenance": list(b.provenance),
        "top_root": rational(b.top_root),
        "diagnostics": list(b.diagnostics),
    }


def analysis(a):
    return {
        "f": a.f.format(a.variables),
        "variables": list(a.variables),
        "weights": list(a.w),
        "d": a.d,
        "f_d": a.f_d.format(a.variables),
        "mu": a.milnor.mu,
        "truncation_exponent": a.milnor.truncation_exponent,
        "spectrum": [rational(alpha) for alpha in a.spectrum],
        "minimal_exponent": rational(a.minimal_exponent),
        "lct": rational(a.lct),
        "weighted_homogeneous": a.flags.is_weighted_homogeneous,
    }


def level_value(value):
    return {"level": rational(value.value) if not value.is_bottom else "bottom",
            "witness": exponent(value.witness)}


def topological(z):
    if z is None:
        return None
    return {
        "text": z.format(),
        "poles": {rational(loc): mult for loc, mult in sorted(z.poles().items())},
    }


def verdict(v):
    return {
        "status": v.status,
        "poles": pole_set(v.pole_set),
        "b_function": bfactorization(v.b_factors),
        "inference_chain": list(v.inference_chain),
        "diagnostics": list(v.diagnostics),
    }


def explore_entry(entry):
    return {
        "alpha": rational(entry.alpha),
        "achieved": entry.achieved,
        "witness": exponent(entry.witness),
        "candidates": pole_set(entry.candidates),
        "tested": [
            {"beta": list(beta), "monomial_condition": ok, **level_value(value)}
            for beta, ok, value in entry.tested
        ],
        "toric_confirmed": entry.toric_confirmed,
        "notes": list(entry.notes),
    }


def dumps(report):
    """Canonical JSON: sorted keys, two-space indent, schema version stamped."""
    return json.dumps({"schema": config.REPORT_SCHEMA, **report}, sort_keys=True, indent=2)
