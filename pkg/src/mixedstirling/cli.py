"""Command-line front end.

Subcommands: value, table, series, verify, oracle-check, serve. Formats:
plain (human tables), csv (header row, LF endings), json (stable key order).
Exit codes: 0 success, 1 identity/oracle failure, 2 usage error, 3 oracle
resource limit exceeded.

The CLI is a thin client over the library: every command maps onto one
query-layer call, the same calls the HTTP service exposes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import egfseries, identities, mixedcore, restricted, rstirling
from .bellpoly import parse_weights
from .identities import IdentityReport
from .oracle import OracleLimitError
from .restricted import parse_size_set

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

TABLE_NMAX_LIMIT = 500


def _table_plain(entries: list[tuple[int, int, int]], t: int, n_max: int) -> str:
    if not entries:
        return ""
    k_max = max(k for _, k, _ in entries)
    values = {(n, k): v for n, k, v in entries}
    header = ["n/k"] + [str(k) for k in range(1, k_max + 1)]
    lines = [header]
    for n in range(t, n_max + 1):
        row = [str(n)]
        for k in range(1, k_max + 1):
            v = values.get((n, k))
            row.append("" if not v else str(v))  # blank structural zeros
        lines.append(row)
    widths = [max(len(line[i]) for line in lines) for i in range(k_max + 1)]
    out = []
    for line in lines:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_value(args: argparse.Namespace) -> int:
    size_set = parse_size_set(args.S) if args.S else None
    if size_set is not None and args.r:
        raise ValueError("--S and --r cannot be combined (no such family)")
    if size_set is not None:
        value = restricted.mixed_S(args.n, args.k, args.t, size_set)
    elif args.r:
        value = rstirling.mixed_r_closed(args.n, args.k, args.t, args.r)
    else:
        value = mixedcore.mixed_closed(args.n, args.k, args.t)
    sys.stdout.write(f"{value}\n")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if args.nmax > TABLE_NMAX_LIMIT:
        raise ValueError(f"--nmax {args.nmax} exceeds table limit {TABLE_NMAX_LIMIT}")
    entries = mixedcore.mixed_table(args.t, args.nmax)
    if args.format == "plain":
        sys.stdout.write(_table_plain(entries, args.t, args.nmax))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(["n", "k", "value"], [list(e) for e in entries]))
    else:
        payload = [{"n": n, "k": k, "value": v} for n, k, v in entries]
        sys.stdout.write(_json_text(payload))
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    if args.S and args.weights:
        raise ValueError("--S and --weights cannot be combined")
    if args.weights:
        series = egfseries.bellstar_series(args.k, args.t, args.order, parse_weights(args.weights))
    else:
        size_set = parse_size_set(args.S) if args.S else None
        series = egfseries.mixed_series(args.k, args.t, args.order, size_set)
    rows = egfseries.series_rows(series)
    if args.format == "plain":
        for row in rows:
            sys.stdout.write(
                f"{row['n']}\t{row['numerator']}/{row['denominator']}\t{row['egf_value']}\n"
            )
    elif args.format == "csv":
        sys.stdout.write(
            _csv_text(
                ["n", "numerator", "denominator", "egf_value"],
                [[r["n"], r["numerator"], r["denominator"], r["egf_value"]] for r in rows],
            )
        )
    else:
        sys.stdout.write(_json_text(rows))
    return EXIT_OK


def _emit_reports(reports: list[IdentityReport], fmt: str, header: dict) -> int:
    all_passed = all(r.passed for r in reports)
    if fmt == "json":
        payload = dict(header)
        payload["identities"] = [r.as_dict() for r in reports]
        payload["passed"] = all_passed
        sys.stdout.write(_json_text(payload))
    elif fmt == "csv":
        sys.stdout.write(
            _csv_text(
                ["name", "checks", "failures", "passed"],
                [[r.name, r.checks, r.failures, str(r.passed).lower()] for r in reports],
            )
        )
    else:
        for r in reports:
            if r.passed:
                sys.stdout.write(f"{r.name}: pass ({r.checks} checks)\n")
            else:
                ce = r.counterexample or {}
                sys.stdout.write(
                    f"{r.name}: FAIL ({r.checks} checks, {r.failures} failures; "
                    f"first at {tuple(ce.get('point', ()))}: "
                    f"expected {ce.get('expected')}, got {ce.get('got')})\n"
                )
        passed = sum(1 for r in reports if r.passed)
        sys.stdout.write(f"{passed}/{len(reports)} identities passed\n")
    return EXIT_OK if all_passed else EXIT_FAILURE


def cmd_verify(args: argparse.Namespace) -> int:
    reports = identities.run_identities(
        args.nmax,
        include=tuple(args.include or ()),
        names=tuple(args.only) if args.only else None,
    )
    return _emit_reports(reports, args.format, {"command": "verify", "nmax": args.nmax})


def cmd_oracle_check(args: argparse.Namespace) -> int:
    reports = identities.run_oracle_checks(args.nmax, family=args.family)
    return _emit_reports(reports, args.format, {"command": "oracle-check", "nmax": args.nmax})


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedstirling",
        description="Exact mixed coloured permutation counts, cross-validated.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="single count for (n, k, t), optionally restricted or pinned")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, default=0, help="pin elements 1..r to distinct cycles")
    p.add_argument("--S", type=str, default=None, help="cycle length set, e.g. evens, <=3, {1,3}")
    p.set_defaults(fn=cmd_value)

    p = sub.add_parser("table", help="triangle of counts for fixed t")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    _add_format(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("series", help="generating function coefficients")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--S", type=str, default=None)
    p.add_argument("--weights", type=str, default=None,
                   help="ones | factshift | fact | charS:<sizeset> | a1,a2,...")
    _add_format(p)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("verify", help="run the identity sweeps")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--include", action="append", default=None,
                   help="add a paper-literal check (repeatable)")
    p.add_argument("--only", action="append", default=None,
                   help="restrict to the named identities (repeatable)")
    _add_format(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle-check", help="compare formulas against brute force")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--family", type=str, default=None,
                   choices=identities.oracle_family_names())
    _add_format(p)
    p.set_defaults(fn=cmd_oracle_check)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", type=str, default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except OracleLimitError as exc:
        sys.stderr.write(f"error: oracle-limit: {exc}\n")
        return EXIT_LIMIT
    except ArithmeticError as exc:
        sys.stderr.write(f"error: identity-violation: {exc}\n")
        return EXIT_FAILURE
    except ValueError as exc:
        sys.stderr.write(f"error: invalid-query: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
