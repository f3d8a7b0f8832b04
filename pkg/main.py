import argparse
import logging
import sys

from singularities import config, report
from singularities.bfun import qh_bfunction, swh_divisor, twisted_facts
from singularities.blowup import candidate_poles, stratum_factors, weighted_blowup
from singularities.errors import BadPrimeError, HypothesisError
from singularities.fixtures import DEFAULT_CORPUS, find_reference, fixtures_run
from singularities.padic import count_report, good_prime
from singularities.poly import canonical_variables, parse_polynomial
from singularities.swh import analyze, newton_nondegenerate
from singularities.toric import snc_resolution
from singularities.verdict import EVIDENCE_LABEL, FAIL, PASS, question_explore, smc_check, twisted_check
from singularities.zeta import assemble_motivic, igusa_specialize, poles, predict_counts, topological

log = logging.getLogger("singularities")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2
EXIT_MISMATCH = 3


def exit_code_for(status):
    if status == PASS:
        return EXIT_OK
    if status == FAIL:
        return EXIT_MISMATCH
    return EXIT_INCONCLUSIVE


# ---------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------
def int_list(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def load_polynomial(args):
    variables = args.vars.split(",") if args.vars else canonical_variables(args.f)
    return parse_polynomial(args.f, variables), tuple(variables)


def build_config(args):
    return config.RunConfig(
        truncation_bound=args.truncation_bound,
        primes=tuple(getattr(args, "primes", None) or config.DEFAULT_PRIMES),
        m_max=getattr(args, "mmax", None) or config.DEFAULT_M_MAX,
        toric_oracle=not args.no_toric,
        output_format=args.format,
    )


def load_analysis(args, run_config):
    f, variables = load_polynomial(args)
    return analyze(f, args.w, run_config.truncation_bound, variables)


def twist_of(args, analysis):
    return args.twist if args.twist is not None else (0,) * analysis.nvars


def emit(run_config, payload, lines):
    if run_config.output_format == "json":
        print(report.dumps(payload))
    else:
        print("\n".join(lines))


def toric_available(f):
    return f.nvars <= 2 and newton_nondegenerate(f)


# ---------------------------------------------------------
# Subcommands
# ---------------------------------------------------------
def cmd_analyze(args, run_config):
    a = load_analysis(args, run_config)
    summary = weighted_blowup(a)
    candidates = candidate_poles(summary)
    b = qh_bfunction(a) if a.flags.is_weighted_homogeneous else swh_divisor(a)
    verdict = smc_check(a)
    nondegenerate = newton_nondegenerate(a.f)
    payload = {
        "analysis": report.analysis(a),
        "newton_nondegenerate": nondegenerate,
        "candidate_poles": report.pole_set(candidates),
        "stratum_factors": {k: [list(x) for x in v] for k, v in stratum_factors(summary).items()},
        "b_function": report.bfactorization(b),
        "verdict": report.verdict(verdict),
    }
    lines = [
        f"f = {a.f.format(a.variables)}   weights {tuple(a.w)}",
        f"d = {a.d}, mu = {a.milnor.mu}, lct = {a.lct}",
        f"spectrum: {', '.join(str(x) for x in a.spectrum)}",
        f"candidate poles: {candidates.format()}",
        f"b-function ({b.completeness}): {b.format()}",
        f"Newton nondegenerate: {nondegenerate}",
    ]
    if run_config.toric_oracle and a.nvars <= 2 and nondegenerate:
        res = snc_resolution(a.f)
        exact = poles(assemble_motivic(res))
        z_top = topological(res)
        payload["exact_poles"] = report.pole_set(exact)
        payload["topological"] = report.topological(z_top)
        lines += [f"exact poles: {exact.format()}", f"topological zeta: {z_top.format()}"]
    lines.append(f"verdict: {verdict.status}")
    emit(run_config, payload, lines)
    return exit_code_for(verdict.status)


def cmd_zeta(args, run_config):
    a = load_analysis(args, run_config)
    beta = twist_of(args, a)
    summary = weighted_blowup(a, beta)
    payload = {"twist": list(beta), "level": str(summary.level), "monomial_condition": summary.eqmon_ok}
    lines = [f"twist {beta}: N_E = {summary.N_E}, nu_E = {summary.nu_E}"]
    if summary.valid:
        candidates = candidate_poles(summary)
        payload["candidate_poles"] = report.pole_set(candidates)
        lines.append(f"candidate poles: {candidates.format()}")
    else:
        monomial, coeff = summary.offender
        lines.append(f"not Q-normal crossing: f_d has the term {coeff}*{a.describe(monomial)}")
    if args.exact:
        if not toric_available(a.f):
            raise HypothesisError("newton-nondegenerate", "the exact zeta function needs a "
                                  "Newton-nondegenerate germ in at most two variables")
        res = snc_resolution(a.f, beta)
        z = assemble_motivic(res)
        exact = poles(z)
        z_top = topological(res)
        payload.update(
            motivic=z.to_json(),
            exact_poles=report.pole_set(exact),
            topological=report.topological(z_top),
        )
        lines += [f"exact poles: {exact.format()}", f"topological zeta: {z_top.format()}"]
    emit(run_config, payload, lines)
    return EXIT_OK


def cmd_bfun(args, run_config):
    a = load_analysis(args, run_config)
    if args.twist is not None:
        b = twisted_facts(a, args.twist)
    elif a.flags.is_weighted_homogeneous:
        b = qh_bfunction(a)
    else:
        b = swh_divisor(a)
    lines = [f"b-function ({b.completeness}): {b.format()}"]
    if b.top_root is not None:
        lines.append(f"  root {b.top_root}: {b.completeness_of(b.top_root)}")
    lines += [f"  fact: {fact}" for fact in b.provenance]
    lines += [f"  note: {note}" for note in b.diagnostics]
    emit(run_config, {"b_function": report.bfactorization(b)}, lines)
    return EXIT_OK


def cmd_check(args, run_config):
    a = load_analysis(args, run_config)
    if args.twist is None:
        verdict = smc_check(a)
    else:
        reference = find_reference(a.f, tuple(a.w), args.twist)
        verdict = twisted_check(a, args.twist, reference)
    marker = {"PASS": "✅", "FAIL": "❌"}.get(verdict.status, "⚠️")
    lines = [f"{marker} {verdict.status}"]
    if verdict.pole_set is not None:
        lines.append(f"poles: {verdict.pole_set.format()}")
    if verdict.b_factors is not None:
        lines.append(f"b-function ({verdict.b_factors.completeness}): {verdict.b_factors.format()}")
    lines += [f"  - {step}" for step in verdict.inference_chain]
    lines += [f"  ! {note}" for note in verdict.diagnostics]
    emit(run_config, {"verdict": report.verdict(verdict)}, lines)
    return exit_code_for(verdict.status)


def cmd_explore(args, run_config):
    a = load_analysis(args, run_config)
    entries = question_explore(a, args.bound, toric=run_config.toric_oracle)
    lines = [EVIDENCE_LABEL]
    for entry in entries:
        if entry.achieved:
            line = (f"alpha = {entry.alpha}: achieved by {a.describe(entry.witness)}, "
                    f"candidates {entry.candidates.format()}")
            if entry.toric_confirmed is not None:
                line += f", toric pole confirmed: {entry.toric_confirmed}"
        else:
            line = f"alpha = {entry.alpha}: not achieved up to |beta| <= {args.bound}"
        lines.append(line)
        lines += [f"    {note}" for note in entry.notes]
    payload = {"label": EVIDENCE_LABEL, "bound": args.bound,
               "entries": [report.explore_entry(e) for e in entries]}
    emit(run_config, payload, lines)
    return EXIT_OK


def cmd_oracle(args, run_config):
    f, _ = load_polynomial(args)
    predict = run_config.toric_oracle and toric_available(f)
    payload, lines = {"primes": {}}, []
    for p in run_config.primes:
        counts = count_report(f, p, run_config.m_max)
        entry = {"counts": [n for _, n in counts.counts],
                 "seconds": [round(s, 6) for s in counts.elapsed]}
        lines.append(f"p = {p}: N_m = {entry['counts']}")
        gate = good_prime(f, None, p, args.w)
        entry["good_prime"] = gate.ok
        if predict and gate:
            try:
                predicted = predict_counts(igusa_specialize(snc_resolution(f), p), p, f.nvars, run_config.m_max)
            except BadPrimeError as exc:
                log.info("no prediction at %d: %s", p, exc)
            else:
                entry["predicted"] = predicted
                entry["agree"] = predicted == entry["counts"]
                lines.append(f"        predicted {predicted} {'✅' if entry['agree'] else '❌'}")
        elif not gate:
            lines.append(f"        bad prime: {'; '.join(gate.reasons)}")
        payload["primes"][str(p)] = entry
    emit(run_config, payload, lines)
    agree = all(e.get("agree", True) for e in payload["primes"].values())
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_fixtures(args, run_config):
    summary = fixtures_run(args.path, run_config)
    lines = []
    for result in summary.results:
        lines.append(f"{'✅' if result.ok else '❌'} {result.name}")
        for diff in result.diffs:
            lines.append(f"    {diff.field} [{diff.provenance}]: expected {diff.expected!r}, got {diff.actual!r}")
    lines.append(f"{len(summary.results) - len(summary.failed)}/{len(summary.results)} fixtures agree")
    payload = {
        "fixtures": [
            {"name": r.name, "ok": r.ok,
             "diffs": [{"field": d.field, "expected": d.expected, "actual": d.actual,
                        "provenance": d.provenance} for d in r.diffs]}
            for r in summary.results
        ],
    }
    emit(run_config, payload, lines)
    return EXIT_OK if summary.ok else EXIT_MISMATCH


# ---------------------------------------------------------
# Parser
# ---------------------------------------------------------
def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=config.OUTPUT_FORMATS, default="text")
    common.add_argument("--vars", help="comma-separated variable names in slot order")
    common.add_argument("--truncation-bound", type=int, default=config.TRUNCATION_BOUND,
                        help="largest truncation exponent tried for the Milnor algebra")
    common.add_argument("--no-toric", action="store_true", help="skip the toric resolution oracle")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        description="Exact checks for semi-weighted-homogeneous singularities: "
                    "zeta function poles, b-function roots and p-adic counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def germ_command(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("f", help='polynomial, e.g. "y^2-x^3"')
        p.add_argument("w", type=int_list, help="comma-separated weights, e.g. 2,3")
        p.set_defaults(handler=handler)
        return p

    germ_command("analyze", cmd_analyze, "Milnor data, spectrum, poles and verdict")
    p = germ_command("zeta", cmd_zeta, "candidate and exact poles of the zeta function")
    p.add_argument("--twist", type=int_list)
    p.add_argument("--exact", action="store_true", help="assemble the exact zeta function (toric)")
    p = germ_command("bfun", cmd_bfun, "known factors of the b-function")
    p.add_argument("--twist", type=int_list)
    p = germ_command("check", cmd_check, "strong monodromy verdict")
    p.add_argument("--twist", type=int_list)
    p = germ_command("explore", cmd_explore, "monomials achieving each spectral number")
    p.add_argument("--bound", type=int, default=config.EXPLORE_BOUND)

    p = sub.add_parser("oracle", parents=[common], help="solution counts mod p^m")
    p.add_argument("f")
    p.add_argument("--weights", dest="w", type=int_list)
    p.add_argument("--primes", type=int_list, default=config.DEFAULT_PRIMES)
    p.add_argument("--mmax", type=int, default=config.DEFAULT_M_MAX)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("fixtures", help="fixture corpus")
    fixture_sub = p.add_subparsers(dest="fixture_command", required=True)
    run = fixture_sub.add_parser("run", parents=[common], help="recompute and diff a fixture file")
    run.add_argument("path", nargs="?", default=str(DEFAULT_CORPUS))
    run.set_defaults(handler=cmd_fixtures)
    return parser


def cli_dispatch(argv=None):
    """Run one subcommand; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        run_config = build_config(args)
        return args.handler(args, run_config)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


# ---------------------------------------------------------
# Entry point
# ---------------------------------------------------------
if __name__ == "__main__":
    sys.exit(cli_dispatch())
