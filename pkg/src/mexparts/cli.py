"""Command-line front end.

Three subcommands:

  compute       print n, value rows for one function (exact decimal values)
  verify        run a verification suite (or an ad-hoc progression claim)
                and print one report per line; exit 1 on any counterexample
  oracle-check  diff an enumeration oracle against the series route

Formats are JSON (one object per line) and CSV.  Exit codes: 0 all passed,
1 at least one counterexample, 2 usage or resource errors.  Output contains
no timestamps and no floats, so runs with identical flags diff clean.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .congruences import ProgressionSpec, check_progression
from .errors import MexpartsError, TruncationTooSmall
from .mex import MexParams, genfun_p_2tt, genfun_p_tt, mex_count_oracle
from .partitions import enumerate_partitions, partition_count
from .reports import VerificationReport
from .singular import SingularParams, genfun_singular, singular_overpartition_oracle
from .suites import SUITE_NAMES, run_all, run_suite

DEFAULT_TRUNC = 2000


def _require_trunc(needed: int, trunc: int) -> None:
    if needed > trunc:
        raise TruncationTooSmall(
            f"this command needs series order {needed}; raise --trunc (currently {trunc})"
        )


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_rows(args) -> tuple[str, dict, list[tuple[int, int]]]:
    n_max = args.n_max
    if n_max < 0:
        raise MexpartsError("--n-max must be non-negative")
    if args.function == "p":
        return "p", {}, [(n, partition_count(n)) for n in range(n_max + 1)]
    if args.function == "p_tt":
        _require_trunc(n_max, args.trunc)
        series = genfun_p_tt(args.t, n_max)
        return "p_tt", {"t": args.t}, [(n, series.coefficient(n)) for n in range(n_max + 1)]
    if args.function == "p_2tt":
        _require_trunc(n_max, args.trunc)
        series = genfun_p_2tt(args.t, n_max)
        return "p_2tt", {"t": args.t}, [(n, series.coefficient(n)) for n in range(n_max + 1)]
    if args.function == "singular":
        _require_trunc(n_max, args.trunc)
        params = SingularParams(args.k, args.i)
        series = genfun_singular(params, n_max)
        return (
            "singular",
            {"k": args.k, "i": args.i},
            [(n, series.coefficient(n)) for n in range(n_max + 1)],
        )
    if args.function == "p_Aa_oracle":
        params = MexParams(args.A, args.a)
        return (
            "p_Aa_oracle",
            {"A": args.A, "a": args.a},
            [(n, mex_count_oracle(n, params)) for n in range(n_max + 1)],
        )
    if args.function == "C_ki_oracle":
        params = SingularParams(args.k, args.i)
        return (
            "C_ki_oracle",
            {"k": args.k, "i": args.i},
            [(n, singular_overpartition_oracle(n, params)) for n in range(n_max + 1)],
        )
    raise MexpartsError(f"unknown function {args.function!r}")


def _params_csv(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def cmd_compute(args) -> int:
    name, params, rows = _compute_rows(args)
    if args.format == "json":
        for n, value in rows:
            print(json.dumps({"function": name, "params": params, "n": n, "value": str(value)}))
    else:
        print("function,params,n,value")
        for n, value in rows:
            print(f"{name},{_params_csv(params)},{n},{value}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _suite_overrides(args) -> dict:
    overrides = {}
    suite = args.suite
    if suite == "thm1":
        if args.t_max is not None:
            overrides["t_max"] = args.t_max
        if args.n_max is not None:
            overrides["n_max"] = args.n_max
    elif suite == "ramanujan":
        if args.k_max is not None:
            overrides["k_max"] = args.k_max
        if args.t_max is not None:
            overrides["t_max"] = args.t_max
        if args.n_max is not None:
            overrides["n_max"] = args.n_max
    elif suite == "thm3":
        if args.t_max is not None:
            overrides["t_values"] = tuple(t for t in (1, 2, 3, 5, 7) if t <= args.t_max)
        if args.n_max is not None:
            overrides["n_max"] = args.n_max
    elif suite == "thm6":
        if args.n_max is not None:
            overrides["n_max_conditional"] = args.n_max
    elif suite == "section1":
        if args.n_max is not None:
            overrides["n_max"] = args.n_max
    elif suite in ("thm2", "parity", "thm5", "thm11", "cor1", "thm12", "thm13", "thm14", "final"):
        if args.n_max is not None:
            overrides["n_max"] = args.n_max
    return overrides


def _emit_reports(pairs: Iterable[tuple[str, VerificationReport]], fmt: str) -> int:
    all_passed = True
    pairs = list(pairs)
    if fmt == "csv":
        print("suite,label,checked,skipped,failure_count,passed")
    for suite, report in pairs:
        all_passed = all_passed and report.passed
        if fmt == "json":
            print(json.dumps({"suite": suite, **report.to_json()}))
        else:
            print(
                f"{suite},{report.label},{report.checked},{report.skipped},"
                f"{report.failure_count},{report.passed}"
            )
    return 0 if all_passed else 1


def cmd_verify(args) -> int:
    if args.suite == "progression":
        spec = ProgressionSpec(
            function=args.function,
            step=args.step,
            offset=args.offset,
            modulus=args.modulus,
            t=args.t,
            k=args.k,
            i=args.i,
            exclude_prime=args.exclude_prime,
        )
        n_max = args.n_max if args.n_max is not None else 100
        report = check_progression(spec, n_max, trunc=args.trunc)
        return _emit_reports([("progression", report)], args.format)
    if args.suite == "all":
        _require_trunc(1000, args.trunc)  # largest series order the default run builds
        results = run_all()
        pairs = [(suite, report) for suite, reports in results.items() for report in reports]
        return _emit_reports(pairs, args.format)
    # series-backed sweeps respect the truncation cap up front
    if args.suite == "parity":
        _require_trunc(args.n_max if args.n_max is not None else 1000, args.trunc)
    elif args.suite == "thm3":
        _require_trunc(args.n_max if args.n_max is not None else 500, args.trunc)
    elif args.suite == "thm6":
        _require_trunc(500, args.trunc)  # the mod-8 sweeps read series coefficients to 500
    reports = run_suite(args.suite, **_suite_overrides(args))
    return _emit_reports([(args.suite, r) for r in reports], args.format)


# ---------------------------------------------------------------------------
# oracle-check
# ---------------------------------------------------------------------------

def cmd_oracle_check(args) -> int:
    n_max = args.n_max
    if n_max < 0:
        raise MexpartsError("--n-max must be non-negative")
    _require_trunc(n_max, args.trunc)
    if args.function == "p":
        name = "p"
        rows = [
            (n, sum(1 for _ in enumerate_partitions(n)), partition_count(n))
            for n in range(n_max + 1)
        ]
    elif args.function in ("p_tt", "p_2tt"):
        t = args.t
        if args.function == "p_tt":
            series = genfun_p_tt(t, n_max)
            params = MexParams(t, t)
        else:
            series = genfun_p_2tt(t, n_max)
            params = MexParams(2 * t, t)
        name = args.function
        rows = [
            (n, mex_count_oracle(n, params), series.coefficient(n)) for n in range(n_max + 1)
        ]
    elif args.function == "singular":
        params = SingularParams(args.k, args.i)
        series = genfun_singular(params, n_max)
        name = "singular"
        rows = [
            (n, singular_overpartition_oracle(n, params), series.coefficient(n))
            for n in range(n_max + 1)
        ]
    else:
        raise MexpartsError(f"unknown function {args.function!r}")
    mismatches = 0
    if args.format == "csv":
        print("function,n,oracle,series,equal")
    for n, oracle_value, series_value in rows:
        equal = oracle_value == series_value
        if not equal:
            mismatches += 1
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "function": name,
                        "n": n,
                        "oracle": str(oracle_value),
                        "series": str(series_value),
                        "equal": equal,
                    }
                )
            )
        else:
            print(f"{name},{n},{oracle_value},{series_value},{equal}")
    return 0 if mismatches == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mexparts",
        description="Exact mex-related partition functions, singular overpartitions, "
        "and machine verification of their congruence families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument(
        "--trunc",
        type=int,
        default=DEFAULT_TRUNC,
        help="cap on series truncation order (default %(default)s)",
    )

    p_compute = sub.add_parser("compute", parents=[common], help="print n, value rows")
    p_compute.add_argument(
        "function",
        choices=("p", "p_tt", "p_2tt", "singular", "p_Aa_oracle", "C_ki_oracle"),
    )
    p_compute.add_argument("--n-max", type=int, required=True)
    p_compute.add_argument("--t", type=int, default=1, help="t for p_tt / p_2tt")
    p_compute.add_argument("--k", type=int, default=3, help="k for singular / C_ki_oracle")
    p_compute.add_argument("--i", type=int, default=1, help="i for singular / C_ki_oracle")
    p_compute.add_argument("--A", type=int, default=1, help="A for p_Aa_oracle")
    p_compute.add_argument("--a", type=int, default=1, help="a for p_Aa_oracle")
    p_compute.set_defaults(run=cmd_compute)

    p_verify = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p_verify.add_argument("suite", choices=("all", *SUITE_NAMES, "progression"))
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--t-max", type=int, default=None)
    p_verify.add_argument("--k-max", type=int, default=None)
    p_verify.add_argument("--function", choices=("p", "p_tt", "p_2tt", "singular"), default="p")
    p_verify.add_argument("--t", type=int, default=None)
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--i", type=int, default=None)
    p_verify.add_argument("--step", type=int, default=1, help="progression step a")
    p_verify.add_argument("--offset", type=int, default=0, help="progression offset b")
    p_verify.add_argument("--modulus", type=int, default=2, help="progression modulus m")
    p_verify.add_argument("--exclude-prime", type=int, default=None)
    p_verify.set_defaults(run=cmd_verify)

    p_oracle = sub.add_parser(
        "oracle-check", parents=[common], help="diff oracle counts against series coefficients"
    )
    p_oracle.add_argument("--function", choices=("p", "p_tt", "p_2tt", "singular"), required=True)
    p_oracle.add_argument("--n-max", type=int, required=True)
    p_oracle.add_argument("--t", type=int, default=1)
    p_oracle.add_argument("--k", type=int, default=3)
    p_oracle.add_argument("--i", type=int, default=1)
    p_oracle.set_defaults(run=cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except MexpartsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
