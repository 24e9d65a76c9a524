"""Command-line front end.

Subcommands wrap the verification, catalogue and growth machinery and emit
machine-readable reports.  Exit codes are a stable contract: 0 success,
1 mathematical mismatch or validation failure, 2 usage error.

Long-running table sweeps append JSON lines to a results log (default
./results.jsonl, overridable with --results or the OSCGK_RESULTS environment
variable) and skip entries already logged unless --force is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from .catalog import HwModuleSpec, catalog, validate_hwv
from .growth import (
    GrowthReport,
    SweepBudget,
    default_depth,
    filtration_sweep,
    gk_formula,
    oracle_a_k,
    oracle_d_k,
    oracle_dprime_k,
    pointed_check,
)
from .poly import RepConfig
from .rep import verify_brackets, verify_module_invariance
from .samples import invariance_samples

USAGE_ERROR = 2
MATH_ERROR = 1


def _cfg(args: argparse.Namespace) -> RepConfig:
    return RepConfig(args.n, args.n1, args.n2)


def _budget(args: argparse.Namespace) -> SweepBudget:
    return SweepBudget(max_seconds=args.budget_seconds, max_rows=args.budget_rows)


def _add_cfg_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-seconds", type=float, default=300.0,
                   help="wall-clock budget per sweep (default 300)")
    p.add_argument("--budget-rows", type=int, default=500_000,
                   help="basis row budget per sweep (default 500000)")


def _results_path(args: argparse.Namespace) -> str:
    if args.results is not None:
        return args.results
    return os.environ.get("OSCGK_RESULTS", "./results.jsonl")


def _find_spec(cfg: RepConfig, l1: int, l2: int, param_bound: int) -> Optional[HwModuleSpec]:
    for spec in catalog(cfg, param_bound):
        if spec.grading.l1 == l1 and spec.grading.l2 == l2:
            return spec
    return None


def cmd_verify_rep(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    bracket = verify_brackets(cfg)
    invariance = verify_module_invariance(cfg, invariance_samples(cfg, seed=args.seed))
    print(bracket.to_json())
    print(invariance.to_json())
    return 0 if bracket.ok and invariance.ok else MATH_ERROR


def cmd_verify_hwv(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    matches = [
        s
        for s in catalog(cfg, max(args.m1, args.m2))
        if s.case_id == args.case and s.m1 == args.m1 and s.m2 == args.m2
    ]
    if not matches:
        print(f"no catalogued family matches case={args.case} m1={args.m1} m2={args.m2}",
              file=sys.stderr)
        return USAGE_ERROR
    ok = True
    for spec in matches:
        report = validate_hwv(spec)
        ok = ok and report.passed
        print(json.dumps({"spec": spec.to_json_dict(),
                          "report": json.loads(report.to_json())}))
    return 0 if ok else MATH_ERROR


def cmd_gk_formula(args: argparse.Namespace) -> int:
    print(gk_formula(_cfg(args)))
    return 0


def cmd_gk_estimate(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    spec = _find_spec(cfg, args.l1, args.l2, args.param_bound)
    if spec is None:
        print(f"no catalogued module has grading ({args.l1}, {args.l2})", file=sys.stderr)
        return USAGE_ERROR
    max_k = args.max_k if args.max_k is not None else default_depth(spec)
    report = filtration_sweep(spec, max_k, window=args.window, budget=_budget(args))
    print(report.to_csv_row() if args.format == "csv" else report.to_json_line())
    return 0 if report.verdict != "Mismatch" else MATH_ERROR


def _sweep_one(payload: Tuple[HwModuleSpec, int, int, float, int]) -> GrowthReport:
    spec, max_k, window, seconds, rows = payload
    return filtration_sweep(
        spec, max_k, window=window, budget=SweepBudget(max_seconds=seconds, max_rows=rows)
    )


def cmd_gk_table(args: argparse.Namespace) -> int:
    path = _results_path(args)
    logged = set()
    if os.path.exists(path) and not args.force:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                d = json.loads(line)
                logged.add((d["case"], d["n"], d["n1"], d["n2"], d["m1"], d["m2"], d["l1"], d["l2"]))
    todo: List[HwModuleSpec] = []
    skipped = 0
    for n in range(2, args.n_max + 1):
        for n1 in range(1, n + 1):
            for n2 in range(n1, n + 1):
                for spec in catalog(RepConfig(n, n1, n2), args.param_bound):
                    if spec.key() in logged:
                        skipped += 1
                    else:
                        todo.append(spec)
    payloads = [
        (spec, default_depth(spec), args.window, args.budget_seconds, args.budget_rows)
        for spec in todo
    ]
    counts = {"Match": 0, "Mismatch": 0, "Inconclusive": 0}
    reports: List[GrowthReport] = []
    if args.jobs > 1 and payloads:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_sweep_one, payloads))
    else:
        reports = [_sweep_one(p) for p in payloads]
    with open(path, "a") as fh:
        for report in reports:
            counts[report.verdict] += 1
            fh.write(report.to_json_line() + "\n")
            if args.format == "csv":
                print(report.to_csv_row())
    print(json.dumps({"swept": len(reports), "skipped": skipped, **counts}))
    return 0 if counts["Mismatch"] == 0 else MATH_ERROR


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = RepConfig(args.n, args.n1, args.n2 if args.n2 is not None else args.n)
    if args.which == "ak":
        report = oracle_a_k(cfg, args.k)
    elif args.which == "dk":
        report = oracle_d_k(cfg, args.k)
    else:
        report = oracle_dprime_k(cfg, args.k)
    print(report.to_json())
    if report.closed_value is not None and not report.agree:
        return MATH_ERROR
    return 0


def cmd_pointed(args: argparse.Namespace) -> int:
    cfg = _cfg(args)
    spec = _find_spec(cfg, args.l1, args.l2, args.param_bound)
    if spec is None:
        print(f"no catalogued module has grading ({args.l1}, {args.l2})", file=sys.stderr)
        return USAGE_ERROR
    report = pointed_check(spec, args.depth, budget=_budget(args))
    print(report.to_json())
    return 0 if report.agree else MATH_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscgk",
        description="exact verification and growth measurements for the "
        "double-graded oscillator modules",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-rep", help="check all bracket identities and module invariance")
    _add_cfg_flags(p)
    p.add_argument("--seed", type=int, default=0, help="seed for the invariance samples")
    p.set_defaults(fn=cmd_verify_rep)

    p = sub.add_parser("verify-hwv", help="validate catalogued highest-weight vectors")
    _add_cfg_flags(p)
    p.add_argument("--case", required=True,
                   choices=["C1", "C2", "C3", "C4", "C5", "C6", "C7", "HOWE"])
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.set_defaults(fn=cmd_verify_hwv)

    gk = sub.add_parser("gk", help="growth-degree formula, estimates and tables")
    gksub = gk.add_subparsers(dest="gk_command", required=True)

    p = gksub.add_parser("formula", help="print the closed-form growth degree")
    _add_cfg_flags(p)
    p.set_defaults(fn=cmd_gk_formula)

    p = gksub.add_parser("estimate", help="sweep one catalogued module and fit its degree")
    _add_cfg_flags(p)
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--max-k", type=int, default=None,
                   help="sweep depth (default: formula value + 4)")
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--param-bound", type=int, default=8,
                   help="parameter bound when locating the module by grading")
    p.add_argument("--format", choices=["json", "csv"], default="json",
                   help="csv columns: " + ",".join(GrowthReport.CSV_COLUMNS))
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_gk_estimate)

    p = gksub.add_parser("table", help="sweep every catalogued module up to --n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--param-bound", type=int, default=1)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--results", default=None,
                   help="JSON-lines results log (default ./results.jsonl or $OSCGK_RESULTS)")
    p.add_argument("--force", action="store_true", help="re-sweep logged entries")
    p.add_argument("--format", choices=["json", "csv"], default="json",
                   help="csv columns: " + ",".join(GrowthReport.CSV_COLUMNS))
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_gk_table)

    p = sub.add_parser("oracle", help="brute-force counting oracles for the product families")
    p.add_argument("which", choices=["ak", "dk", "dpk"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, default=None)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("pointed", help="weight-multiplicity check along a sweep")
    _add_cfg_flags(p)
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--param-bound", type=int, default=8)
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_pointed)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
