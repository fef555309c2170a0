"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 factorization budget
exhausted, 64 usage error. Numbers are accepted as decimal strings of
unbounded length; VPAL_BUDGET overrides the default per-factorization budget
in seconds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .digits import decimal_string, parse_decimal, reverse_digits
from .factor import Budget, BudgetExhausted, factorize, v_of_factorization
from .oracle import (
    DEFAULT_DIGIT_CAP,
    DEFAULT_KMAX,
    DEFAULT_NMAX,
    DEFAULT_OMEGA_CAP,
    VerificationReport,
    enumerate_vpals,
    run_disjointness_sweep,
    run_invariance_sweep,
    run_oracle_sweep,
    run_periodicity_sweep,
    run_shift_sweep,
    verify_lemmas,
)
from .procedure import InvalidInput, NotAVPalindrome, ProcedureResult, run_procedure

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64

_GOLDEN_ENUMERATION = "data/vpalindromes_1e4.txt"
_GOLDEN_LIMIT = 10_000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _decimal(s: str) -> int:
    try:
        n = parse_decimal(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {s!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return n


def _build_parser() -> _Parser:
    parser = _Parser(prog="vpal", description="v-palindrome arithmetic and verification")
    parser.add_argument(
        "--budget",
        type=float,
        default=float(os.environ.get("VPAL_BUDGET", "10")),
        metavar="SECONDS",
        help="wall-clock budget per factorization (env: VPAL_BUDGET, default 10)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("v", help="print v(n)")
    p.add_argument("n", type=_decimal)

    p = sub.add_parser("check", help="is n a v-palindrome? prints the witness v values")
    p.add_argument("n", type=_decimal)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("procedure", help="print the classification tables for n")
    p.add_argument("n", type=_decimal)
    p.add_argument("--copies", type=int, default=1, metavar="K",
                   help="analyze the K-fold concatenation of n (without factoring it)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("type", help="print the type of the k-fold concatenation of n")
    p.add_argument("n", type=_decimal)
    p.add_argument("k", type=_decimal)

    p = sub.add_parser("verify", help="run a verification harness")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    what = p.add_subparsers(dest="what", required=True, parser_class=_Parser)

    q = what.add_parser("oracle", help="procedure verdicts vs the factorization oracle")
    q.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    q.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    q.add_argument("--digit-cap", type=int, default=DEFAULT_DIGIT_CAP)

    q = what.add_parser("invariance", help="type agreement across concatenation bases")
    q.add_argument("--nmax", type=int, default=500)
    q.add_argument("--kmax", type=int, default=6)
    q.add_argument("--jmax", type=int, default=6)
    q.add_argument("--shift-tables", action="store_true",
                   help="also compare shift-parametrized tables against from-scratch runs")

    q = what.add_parser("periodicity", help="oracle membership is omega-periodic")
    q.add_argument("--nmax", type=int, default=1000)
    q.add_argument("--periods", type=int, default=2)
    q.add_argument("--omega-cap", type=int, default=DEFAULT_OMEGA_CAP)

    q = what.add_parser("lemmas", help="entry-order divisibility and rescaling identities")
    q.add_argument("--pmax", type=int, default=100)
    q.add_argument("--alphamax", type=int, default=3)
    q.add_argument("--kmax", type=int, default=60)
    q.add_argument("--lmax", type=int, default=6)
    q.add_argument("--check", choices=["divisibility", "rescale", "both"], default="both")

    q = what.add_parser("disjointness", help="no k accepted by two solution columns")
    q.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    q.add_argument("--window", type=int, default=500)

    q = what.add_parser("enumerate", help="list v-palindromes and compare to the golden file")
    q.add_argument("--limit", type=int, default=1000)
    q.add_argument("--print", dest="print_values", action="store_true",
                   help="print the enumerated values")

    return parser


def _load_golden() -> list[int]:
    text = resources.files("vpal").joinpath(_GOLDEN_ENUMERATION).read_text()
    return [int(line) for line in text.split() if line.strip()]


def _emit_report(report: VerificationReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


def _render_procedure_text(result: ProcedureResult) -> str:
    d = result.to_dict()
    lines = [f"n = {d['n']}, copies = {d['copies']}, digit length = {d['digit_length']}"]
    lines.append("crucial primes:")
    for cp in d["crucial_primes"]:
        lines.append(f"  p={cp['p']}: a={cp['a']} b={cp['b']} delta={cp['delta']} mu={cp['mu']}")
    if not d["solutions"]:
        lines.append("solutions: none (no concatenation is ever a v-palindrome)")
    else:
        lines.append("solutions: " + "  ".join(str(tuple(s)) for s in d["solutions"]))
        lines.append("case table (rows: primes / columns: solutions):")
        for cp, row in zip(d["crucial_primes"], d["case_table"]):
            lines.append(f"  p={cp['p']}: " + "  ".join(f"[{v}]" for v in row))
        lines.append("constraint table:")
        for cp, row in zip(d["crucial_primes"], d["constraint_table"]):
            cells = "  ".join(f"(A={e['A']}, B={e['B']})" for e in row)
            lines.append(f"  p={cp['p']}: {cells}")
        lines.append("columns (accepted k: divisible by all of A, by none of B):")
        for col in d["columns"]:
            lines.append(
                f"  {tuple(col['solution'])}: A={col['A']} B={col['B']}"
                f" first accepted k = {col['first_member']}"
            )
    omega0 = d["omega0"] if d["omega0"] is not None else "not computed (period too large)"
    c = d["c"] if d["c"] is not None else "infinity"
    lines.append(f"omega = {d['omega']}, omega0 = {omega0}, c = {c}")
    lines.append(
        "nondegenerate solutions: "
        + ("  ".join(str(tuple(s)) for s in d["nondegenerate"]) if d["nondegenerate"] else "none")
    )
    return "\n".join(lines)


def _cmd_v(args, budget: Budget) -> int:
    print(v_of_factorization(factorize(args.n, budget)))
    return EXIT_OK


def _cmd_check(args, budget: Budget) -> int:
    n = args.n
    verdict: dict = {"n": decimal_string(n)}
    if n % 10 == 0:
        verdict.update(vpalindrome=False, reason="divisible by 10")
    else:
        r = reverse_digits(n)
        if n == r:
            verdict.update(vpalindrome=False, reason="equals its own reversal")
        else:
            vn = v_of_factorization(factorize(n, budget))
            vr = v_of_factorization(factorize(r, budget))
            verdict.update(
                vpalindrome=vn == vr,
                v=vn,
                reversal=decimal_string(r),
                v_of_reversal=vr,
            )
    if args.json:
        print(json.dumps(verdict))
    elif verdict["vpalindrome"]:
        print(f"yes: v({verdict['n']}) = {verdict['v']} = v({verdict['reversal']})")
    elif "reason" in verdict:
        print(f"no: {verdict['reason']}")
    else:
        print(
            f"no: v({verdict['n']}) = {verdict['v']} != "
            f"v({verdict['reversal']}) = {verdict['v_of_reversal']}"
        )
    return EXIT_OK


def _cmd_procedure(args, budget: Budget) -> int:
    result = run_procedure(args.n, copies=args.copies, budget=budget)
    if args.json:
        print(result.to_json(indent=2))
    else:
        print(_render_procedure_text(result))
    return EXIT_OK


def _cmd_type(args, budget: Budget) -> int:
    result = run_procedure(args.n, budget=budget)
    try:
        print(str(result.type_of(args.k)))
    except NotAVPalindrome:
        print("not a v-palindrome")
    return EXIT_OK


def _cmd_verify(args, budget: Budget) -> int:
    if args.what == "oracle":
        report = run_oracle_sweep(args.nmax, args.kmax, budget, args.digit_cap, jobs=args.jobs)
    elif args.what == "invariance":
        report = run_invariance_sweep(args.nmax, args.kmax, args.jmax, budget, jobs=args.jobs)
        if args.shift_tables:
            report.merge(run_shift_sweep(args.nmax, args.kmax, budget, jobs=args.jobs))
    elif args.what == "periodicity":
        report = run_periodicity_sweep(args.nmax, args.periods, budget, args.omega_cap, jobs=args.jobs)
    elif args.what == "lemmas":
        checks = ("divisibility", "rescale") if args.check == "both" else (args.check,)
        report = verify_lemmas(args.pmax, args.alphamax, args.kmax, args.lmax, checks)
    elif args.what == "disjointness":
        report = run_disjointness_sweep(args.nmax, budget, args.window, jobs=args.jobs)
    else:  # enumerate
        report = VerificationReport(corpus=f"enumeration vs golden file: limit {args.limit}")
        values = enumerate_vpals(args.limit, budget, report)
        golden = _load_golden()
        comparable = min(args.limit, _GOLDEN_LIMIT)
        expected = [g for g in golden if g <= comparable]
        got = [x for x in values if x <= comparable]
        report.record(got == expected, limit=args.limit, expected_count=len(expected), got_count=len(got))
        if args.print_values:
            for x in values:
                print(x)
        if args.limit > _GOLDEN_LIMIT and not args.json:
            print(f"note: golden file covers up to {_GOLDEN_LIMIT}; larger values not compared")
    return _emit_report(report, args.json)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.budget <= 0:
        print("vpal: error: --budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    budget = Budget(seconds=args.budget)
    handlers = {
        "v": _cmd_v,
        "check": _cmd_check,
        "procedure": _cmd_procedure,
        "type": _cmd_type,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, budget)
    except BudgetExhausted as exc:
        print(f"vpal: factorization budget exhausted (composite cofactor {exc.cofactor})",
              file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInput, ValueError) as exc:
        print(f"vpal: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
