"""Command-line front end.

Subcommands: generate, test, experiment, density, confidence, lab.
Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
2 usage error, 3 refusal (a resource bound was exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import pseudolab
from .confidence import bayes_confidence, rounds_for_confidence
from .density import Mode, base_prime_prob, digit_prime_count, digit_prime_count_bounds, filtered_prime_prob
from .errors import RefusalError
from .experiment import ExperimentConfig, generate_prime, render_report, run_experiment
from .primality import ExactOutcome, euler_test, fermat_test, miller_rabin, trial_division
from .sampling import FilterPolicy, make_stream, pool_size

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUSED = 3

POLICIES = {
    "none": FilterPolicy.none(),
    "last-digit": FilterPolicy.last_digit_only(),
    "both": FilterPolicy.both(),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primegen", description="Probable primes from filtered random candidates.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a probable prime to a target confidence")
    gen.add_argument("--digits", type=int, default=75)
    gen.add_argument("--target-confidence", type=float, default=0.999)
    gen.add_argument("--seed", type=int, default=None)
    _policy_mode_args(gen)

    test = sub.add_parser("test", help="run all three tests (and the exact oracle when in range) on one number")
    test.add_argument("n", type=int)
    test.add_argument("--rounds", type=int, default=10)
    test.add_argument("--seed", type=int, default=None)

    exp = sub.add_parser("experiment", help="test a batch of random filtered candidates")
    exp.add_argument("--digits", type=int, default=75)
    exp.add_argument("--count", type=int, default=100)
    exp.add_argument("--rounds", type=int, default=10)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    exp.add_argument("--out", default=None, help="write the report to a file instead of stdout")
    _policy_mode_args(exp)

    dens = sub.add_parser("density", help="prime-density table for a digit range")
    dens.add_argument("--digits", default="75", help="digit count K or range A-B")
    dens.add_argument("--format", choices=("table", "csv", "json"), default="table")
    _policy_mode_args(dens)

    conf = sub.add_parser("confidence", help="posterior confidence calculator")
    conf.add_argument("--rounds", type=int, default=10)
    conf.add_argument("--digits", type=int, default=75)
    conf.add_argument("--prior", type=float, default=None, help="override the prior derived from digits/policy/mode")
    conf.add_argument("--target-confidence", type=float, default=None, help="also report the rounds needed for this bound")
    conf.add_argument("--format", choices=("table", "csv", "json"), default="table")
    _policy_mode_args(conf)

    lab = sub.add_parser("lab", help="pseudoprime enumeration sweeps")
    labsub = lab.add_subparsers(dest="lab_command", required=True)

    census = labsub.add_parser("census", help="liar census over a range of odd composites")
    census.add_argument("--start", type=int, default=9)
    census.add_argument("--end", type=int, required=True)
    census.add_argument("--format", choices=("csv", "json"), default="csv")

    carm = labsub.add_parser("carmichael", help="Carmichael numbers up to a limit")
    carm.add_argument("--limit", type=int, required=True)

    pseudo = labsub.add_parser("pseudoprimes", help="Fermat pseudoprimes to a base up to a limit")
    pseudo.add_argument("--base", type=int, default=2)
    pseudo.add_argument("--limit", type=int, required=True)

    sqrt1 = labsub.add_parser("sqrt-of-unity", help="square roots of 1 modulo n")
    sqrt1.add_argument("n", type=int)

    abseuler = labsub.add_parser("absolute-euler", help="absolute Euler pseudoprime check")
    abseuler.add_argument("n", type=int)

    return parser


def _policy_mode_args(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--policy", choices=sorted(POLICIES), default="both")
    cmd.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.CORRECTED.value)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "generate": _cmd_generate,
        "test": _cmd_test,
        "experiment": _cmd_experiment,
        "density": _cmd_density,
        "confidence": _cmd_confidence,
        "lab": _cmd_lab,
    }[args.command]
    try:
        handler(args)
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> None:
    result = generate_prime(
        digits=args.digits,
        target_confidence=args.target_confidence,
        seed=args.seed,
        mode=Mode(args.mode),
        policy=POLICIES[args.policy],
    )
    report = result.confidence
    print(result.value)
    print(f"digits: {args.digits}")
    print(f"attempts: {result.attempts}")
    print(f"rounds: {result.rounds}")
    print(f"prior: {report.prior_p:.9f}")
    print(f"confidence_lower_bound: {_bound_text(report.lower_bound)}")


def _cmd_test(args: argparse.Namespace) -> None:
    n = args.n
    try:
        exact = trial_division(n)
    except RefusalError:
        exact = None
        print("exact oracle: skipped (above bound)", file=sys.stderr)
    if exact is not None:
        detail = "" if exact.smallest_factor is None else f" (smallest factor {exact.smallest_factor})"
        print(f"trial_division: {exact.outcome.value.upper()}{detail}")
    if n < 5 or n % 2 == 0:
        print("probabilistic tests need odd n >= 5; skipped", file=sys.stderr)
        return
    names = (("fermat", fermat_test), ("euler", euler_test), ("miller_rabin", miller_rabin))
    for label, test in names:
        verdict = test(n, args.rounds, make_stream(args.seed))
        line = f"{label}[m={args.rounds}]: {verdict.outcome.value.upper().replace(' ', '_')}"
        if verdict.is_composite:
            evidence = []
            if verdict.witness is not None:
                evidence.append(f"witness {verdict.witness}")
            if verdict.factor is not None:
                evidence.append(f"factor {verdict.factor}")
            line += f" ({', '.join(evidence)})"
        elif exact is not None and exact.outcome is ExactOutcome.COMPOSITE:
            line += "  ** false positive: exact oracle says composite **"
        print(line)


def _cmd_experiment(args: argparse.Namespace) -> None:
    config = ExperimentConfig(
        digits=args.digits,
        count=args.count,
        rounds=args.rounds,
        seed=args.seed,
        policy=POLICIES[args.policy],
        mode=Mode(args.mode),
        output_format=args.format,
    )
    records, summary = run_experiment(config)
    if args.format == "csv":
        text = render_report(records, "csv")
        for line in _summary_diag(summary):
            print(line, file=sys.stderr)
    else:
        text = render_report(records, args.format, summary)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(text)


def _summary_diag(summary) -> list[str]:
    return [f"probable_primes: {summary.prime_count}",
            f"expected_primes: {summary.expected_primes:.9f}",
            f"confidence_lower_bound: {summary.confidence_lower_bound:.9f}"]


def _parse_digit_range(text: str) -> range:
    if "-" in text:
        lo_text, hi_text = text.split("-", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 2 or hi < lo:
        raise ValueError(f"bad digit range {text!r}")
    return range(lo, hi + 1)


def _cmd_density(args: argparse.Namespace) -> None:
    policy = POLICIES[args.policy]
    mode = Mode(args.mode)
    rows = []
    for k in _parse_digit_range(args.digits):
        exp = k - 1
        count = digit_prime_count(k)
        bounds = digit_prime_count_bounds(k) if k >= 6 else None
        rows.append({
            "digits": k,
            "pool_size": str_at(pool_size(k, policy), exp),
            "prime_count_estimate": str_at(count, exp),
            "dusart_lower": str_at(bounds[0], exp) if bounds else "",
            "dusart_upper": str_at(bounds[1], exp) if bounds else "",
            "base_prob": f"{base_prime_prob(k):.9f}",
            "filtered_prob": f"{filtered_prime_prob(k, policy, mode):.9f}",
        })
    header = list(rows[0])
    if args.format == "json":
        print(json.dumps({"policy": args.policy, "mode": args.mode, "rows": rows}, indent=2))
    elif args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[h]) for h in header))
    else:
        widths = {h: max(len(h), max(len(str(r[h])) for r in rows)) for h in header}
        print("  ".join(h.ljust(widths[h]) for h in header))
        for row in rows:
            print("  ".join(str(row[h]).ljust(widths[h]) for h in header))


def str_at(value, exp10: int) -> str:
    """Render a SciReal at a fixed decade, e.g. 0.052037087e+74."""
    return f"{value.mantissa_at(exp10):.9f}e{exp10:+d}"


def _cmd_confidence(args: argparse.Namespace) -> None:
    prior = args.prior if args.prior is not None else filtered_prime_prob(args.digits, POLICIES[args.policy], Mode(args.mode))
    report = bayes_confidence(prior, args.rounds)
    needed = rounds_for_confidence(prior, args.target_confidence) if args.target_confidence is not None else None
    fields = {
        "prior_p": f"{report.prior_p:.9f}",
        "prior_c": f"{report.prior_c:.9f}",
        "rounds": report.rounds,
        "ratio": f"{report.ratio:.9f}",
        "slack": f"{report.slack:.9f}",
        "lower_bound": f"{report.lower_bound:.9f}",
        "exact_posterior": f"{report.exact_posterior:.9f}",
    }
    if needed is not None:
        fields["rounds_for_target"] = needed
    if args.format == "json":
        print(json.dumps(fields, indent=2))
    elif args.format == "csv":
        print(",".join(fields))
        print(",".join(str(v) for v in fields.values()))
    else:
        fields["lower_bound"] = _bound_text(report.lower_bound)
        for key, value in fields.items():
            print(f"{key}: {value}")


def _bound_text(bound: float) -> str:
    return "< 0 (uninformative)" if bound < 0 else f"{bound:.9f}"


def _cmd_lab(args: argparse.Namespace) -> None:
    if args.lab_command == "census":
        rows = []
        for n in range(args.start | 1, args.end + 1, 2):
            if trial_division(n).outcome is not ExactOutcome.COMPOSITE:
                continue
            rows.append(pseudolab.liar_census(n))
        if args.format == "json":
            print(json.dumps([row.__dict__ for row in rows], indent=2))
        else:
            print("n,total_bases,fermat_liars,euler_liars,strong_liars")
            for row in rows:
                print(f"{row.n},{row.total_bases},{row.fermat_liars},{row.euler_liars},{row.strong_liars}")
    elif args.lab_command == "carmichael":
        for n in pseudolab.carmichael_numbers(args.limit):
            print(n)
    elif args.lab_command == "pseudoprimes":
        for n in pseudolab.fermat_pseudoprimes(args.base, args.limit):
            print(n)
    elif args.lab_command == "sqrt-of-unity":
        print(" ".join(str(x) for x in pseudolab.sqrt_of_unity(args.n)))
    elif args.lab_command == "absolute-euler":
        print("true" if pseudolab.is_absolute_euler_pseudoprime(args.n) else "false")


if __name__ == "__main__":
    sys.exit(main())
