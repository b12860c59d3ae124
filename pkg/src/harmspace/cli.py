"""Command-line front end: run verification suites, compute norms of
coefficient files, and run the ball distance diagnostic.

    harmspace verify <suite> [--config FILE] [--seed N] [--out PATH]
                              [--format json|csv] [--tier desk|heavy]
    harmspace list
    harmspace norm --coeffs FILE --space JSON
    harmspace distance --coeffs FILE --p P --alpha A --eps-grid E1,E2,...

Reports are byte-identical for identical config and seed; timing is printed
to stderr only and never enters the report.  Exit code 0 means every case
passed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .harmonic import CoefficientField, HarmonicFunction
from .norms import SpaceSpec, space_norm
from .reports import export_report
from .suites import SUITES, ConfigError, make_config, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmspace",
        description="verification suites and norm computations for harmonic "
                    "function spaces on the unit ball and half-space")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run one verification suite")
    p_verify.add_argument("suite", help="suite name (see 'harmspace list')")
    p_verify.add_argument("--config", help="JSON config file", default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--out", default=None,
                          help="write the report here (default: stdout)")
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--tier", choices=("desk", "heavy"), default="desk")

    sub.add_parser("list", help="print the suite catalog")

    p_norm = sub.add_parser("norm", help="norm of a coefficient file")
    p_norm.add_argument("--coeffs", required=True,
                        help="JSON coefficient file {n, K, rows}")
    p_norm.add_argument("--space", required=True,
                        help='space descriptor, e.g. '
                             '\'{"family":"B","p":1,"q":1,"alpha":0.5}\'')

    p_dist = sub.add_parser("distance",
                            help="ball distance diagnostic for a coefficient "
                                 "file")
    p_dist.add_argument("--coeffs", required=True)
    p_dist.add_argument("--p", type=float, required=True)
    p_dist.add_argument("--alpha", type=float, required=True)
    p_dist.add_argument("--eps-grid", required=True,
                        help="comma-separated thresholds")
    p_dist.add_argument("--out", default=None)
    p_dist.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def _load_harmonic(path: str) -> HarmonicFunction:
    with open(path, encoding="utf-8") as fh:
        return HarmonicFunction(CoefficientField.from_json(fh.read()))


def _cmd_verify(args) -> int:
    overrides = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            overrides = json.load(fh)
    cfg = make_config(
        args.suite,
        n=overrides.get("n"),
        seed=args.seed if args.seed is not None else overrides.get("seed"),
        tier=args.tier,
        params=overrides.get("params"),
        tolerances=overrides.get("tolerances"),
    )
    start = time.perf_counter()
    report = run_suite(cfg)
    elapsed = time.perf_counter() - start
    for case in report.cases:
        mark = "pass" if case.passed else "FAIL"
        print(f"[{mark}] {report.suite}/{case.case_id}", file=sys.stderr)
    print(f"{report.suite}: {report.counts['pass']} passed, "
          f"{report.counts['fail']} failed in {elapsed:.2f}s",
          file=sys.stderr)
    if args.out:
        export_report(report, args.out, args.format)
    else:
        text = report.to_json() if args.format == "json" else report.to_csv()
        sys.stdout.write(text)
    return 0 if report.passed else 1


def _cmd_list() -> int:
    width = max(len(name) for name in SUITES)
    for name, suite in SUITES.items():
        print(f"{name:<{width}}  {suite.statement}")
    return 0


def _cmd_norm(args) -> int:
    f = _load_harmonic(args.coeffs)
    spec = SpaceSpec.from_json(json.loads(args.space))
    result = space_norm(f, spec)
    doc = {"value": result.value if math.isfinite(result.value) else "inf",
           "space": spec.to_json(), "metadata": result.metadata}
    json.dump(doc, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_distance(args) -> int:
    from .distance import distance_bound_check
    from .reports import CaseResult, VerificationReport

    f = _load_harmonic(args.coeffs)
    eps_grid = [float(tok) for tok in args.eps_grid.split(",") if tok]
    if not eps_grid:
        raise SystemExit("--eps-grid must contain at least one threshold")
    est = distance_bound_check(f, args.p, args.alpha, eps_grid)
    cases = [
        CaseResult(
            f"eps={row['eps']:.6g}",
            row["integral"] if row["integral"] is not None else math.inf,
            None, None, True,
            {k: v for k, v in row.items() if k != "eps"})
        for row in est.rows()
    ]
    report = VerificationReport(
        "distance-diagnostic",
        {"p": args.p, "alpha": args.alpha, "eps_grid": eps_grid,
         "coeffs": args.coeffs, **est.metadata},
        cases)
    summary = {"t2_bracket": list(est.t2_bracket),
               "t2_estimate": est.t2_estimate}
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if args.out:
        export_report(report, args.out, args.format)
    else:
        text = report.to_json() if args.format == "json" else report.to_csv()
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "list":
            return _cmd_list()
        if args.command == "norm":
            return _cmd_norm(args)
        if args.command == "distance":
            return _cmd_distance(args)
    except ConfigError as exc:
        parser.exit(2, f"config error: {exc}\n")
    except FileNotFoundError as exc:
        parser.exit(2, f"{exc}\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
