"""Command-line interface.

    liecensus census count  --family gl|gu --n N --q Q [--k K]
    liecensus census labels --family gl|gu --n N --q Q
    liecensus census ratios --family gl|gu --n N --q Q
    liecensus series coeffs --epsilon +1|-1 --k K --max-degree N
    liecensus oracle report --family gl|sl|gu|su --n N --q Q
    liecensus verify all [--max-order M]

Reports go to stdout (``--format json|csv|pretty``), diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from liecensus.census import (
    c_n_k,
    enumerate_class_labels,
    theorem_ratios,
)
from liecensus.config import FORMATS, RunConfig, max_order_from_env
from liecensus.gf import FieldError
from liecensus.intpoly import IntPoly
from liecensus.matgroup import GroupSpec, oracle_report
from liecensus.partitions import type_of
from liecensus.polyspace import CapExceeded, InadmissibleError, signed_q
from liecensus.series import product_series

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 3
EXIT_CAP = 4
EXIT_INVALID = 5

log = logging.getLogger("liecensus")


def poly_json(p: IntPoly) -> dict:
    return {"coeffs": list(p.coeffs), "str": str(p)}


def _eps_of(family: str) -> int:
    return 1 if family in ("gl", "sl") else -1


def cmd_census_count(args, cfg) -> tuple[dict, int]:
    eps = _eps_of(args.family)
    sq = signed_q(args.q, eps)
    poly = c_n_k(args.n, args.k, eps)
    report = {
        "family": args.family.upper(),
        "n": args.n,
        "q": args.q,
        "k": args.k,
        "epsilon": eps,
        "polynomial": poly_json(poly),
        "admissible": sq.center_order % args.k == 0,
        "value": None,
    }
    if not report["admissible"]:
        print(f"k={args.k} does not divide q - eps = {sq.center_order}; value withheld",
              file=sys.stderr)
        return report, EXIT_INADMISSIBLE
    report["value"] = poly(args.q)
    return report, EXIT_OK


def cmd_census_labels(args, cfg) -> tuple[dict, int]:
    sq = signed_q(args.q, _eps_of(args.family))
    labels = enumerate_class_labels(args.n, sq, cap=cfg.max_labels)
    rows = [
        {
            "label": str(lab),
            "type": repr(type_of(lab)),
            "semisimple": lab.is_semisimple,
            "regular_semisimple": lab.is_regular_semisimple,
        }
        for lab in labels
    ]
    return {"family": args.family.upper(), "n": args.n, "q": args.q,
            "count": len(labels), "labels": rows}, EXIT_OK


def cmd_census_ratios(args, cfg) -> tuple[dict, int]:
    sq = signed_q(args.q, _eps_of(args.family))
    return theorem_ratios(args.n, sq).as_dict(), EXIT_OK


def cmd_series_coeffs(args, cfg) -> tuple[dict, int]:
    eps = int(args.epsilon)
    series = product_series(args.k, eps, args.max_degree)
    rows = [{"n": n, **poly_json(series[n])} for n in range(args.max_degree + 1)]
    return {"epsilon": eps, "k": args.k, "max_degree": args.max_degree, "coefficients": rows}, EXIT_OK


def cmd_oracle_report(args, cfg) -> tuple[dict, int]:
    spec = GroupSpec(args.family.upper(), args.n, args.q)
    return oracle_report(spec, cfg.max_order), EXIT_OK


def cmd_verify_all(args, cfg) -> tuple[dict, int]:
    from liecensus.verify import run_all

    results = run_all(cfg.max_order, echo=lambda line: print(line, file=sys.stderr))
    report = {
        "passed": all(r.passed for r in results),
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed,
             "failed_checks": [d for d, ok, _ in r.checks if not ok]}
            for r in results
        ],
    }
    return report, EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and not all(isinstance(x, dict) for x in obj):
        yield prefix, " ".join(str(x) for x in obj)
    else:
        yield prefix, obj


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    table = next((v for v in report.values() if isinstance(v, list) and v and isinstance(v[0], dict)), None)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if table is not None:
            rows = [dict(_flatten(r)) for r in table]
            writer.writerow(list(rows[0]))
            for r in rows:
                writer.writerow(list(r.values()))
        else:
            writer.writerow(["key", "value"])
            for k, v in _flatten(report):
                writer.writerow([k, v])
        return buf.getvalue()
    lines = []
    for k, v in _flatten({k: v for k, v in report.items() if v is not table}):
        lines.append(f"{k:<24} {v}")
    if table is not None:
        for r in table:
            lines.append("  " + "  ".join(f"{k}={v}" for k, v in _flatten(r)))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liecensus", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--verbose", "-v", action="store_true")
    top = parser.add_subparsers(dest="group", required=True)
    # --format is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    census = top.add_parser("census").add_subparsers(dest="cmd", required=True)
    for name, fn in (("count", cmd_census_count), ("labels", cmd_census_labels), ("ratios", cmd_census_ratios)):
        p = census.add_parser(name, parents=[common])
        p.add_argument("--family", choices=("gl", "gu"), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        if name == "count":
            p.add_argument("--k", type=int, default=1)
        p.set_defaults(func=fn)

    series = top.add_parser("series").add_subparsers(dest="cmd", required=True)
    p = series.add_parser("coeffs", parents=[common])
    p.add_argument("--epsilon", choices=("+1", "-1", "1"), required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_series_coeffs)

    oracle = top.add_parser("oracle").add_subparsers(dest="cmd", required=True)
    p = oracle.add_parser("report", parents=[common])
    p.add_argument("--family", choices=("gl", "sl", "gu", "su"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_oracle_report)

    verify = top.add_parser("verify").add_subparsers(dest="cmd", required=True)
    p = verify.add_parser("all", parents=[common])
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        max_order = getattr(args, "max_order", None) or max_order_from_env()
        series_n = getattr(args, "max_degree", None)
        cfg = RunConfig(max_order=max_order, fmt=args.format,
                        **({"series_n": series_n} if series_n is not None else {}))
        if getattr(args, "max_degree", 0) is None:
            args.max_degree = cfg.series_n
        report, code = args.func(args, cfg)
    except InadmissibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
