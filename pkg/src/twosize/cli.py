"""Command-line front end.

    twosize enumerate --n 14 --count-only
    twosize classify --n 14
    twosize map rho "4^6 3^2"
    twosize verify all --to 500
    twosize conjecture --family 16,14 --stat rk2 --n-max 20
    twosize series --k 2 --N 30

Data goes to stdout; progress and summaries go to stderr.  Errors print a
single ``error[<kind>]: ...`` line.  Exit codes: 0 success, 1 failed check
(or a conjecture counterexample under ``--strict``), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import identities as ids
from .classes import ALL_MARKED, class_census
from .maps import MapDomainError, apply_map
from .partitions import (
    PartitionError,
    count_k_sizes,
    format_partition,
    iter_k_sizes,
    nu_k_series,
    parse_partition,
    two_size_table,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("usage", message)


def _emit(out, fmt, columns, rows, header=True):
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(dict(zip(columns, row)), sort_keys=False) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
    else:
        rows = [[str(x) for x in row] for row in rows]
        if header and len(columns) > 1:
            rows = [list(columns)] + rows
        if not rows:
            return
        widths = [max(len(r[i]) for r in rows) for i in range(len(columns))]
        for r in rows:
            out.write("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() + "\n")


def _note(args, message):
    if not args.quiet:
        print(message, file=sys.stderr)


# -- subcommands -----------------------------------------------------------------

def cmd_enumerate(args, out):
    if args.n < 1 or args.k < 1:
        raise UsageError("usage", "--n and --k must be positive")
    if args.count_only:
        _emit(out, args.format, ["count"], [[count_k_sizes(args.n, args.k)]], header=False)
        return EXIT_OK
    if args.k == 2:
        lines = (f"{a}^{b} {c}^{d}" for a, b, c, d in two_size_table(args.n).tolist())
    else:
        lines = (format_partition(p) for p in iter_k_sizes(args.n, args.k))
    _emit(out, args.format, ["partition"], ([s] for s in lines), header=False)
    return EXIT_OK


def cmd_classify(args, out):
    if args.n < 1 or args.n % 4 != 2:
        raise UsageError("domain", f"classify needs n = 2 mod 4 (admissible weights), got {args.n}")
    census = class_census(args.n)
    rows = [[str(k), v] for k, v in sorted(census.items(), key=lambda kv: str(kv[0]))
            if v or args.all]
    rows.append(["total", sum(census.values())])
    _emit(out, args.format, ["class", "count"], rows)
    return EXIT_OK


def cmd_map(args, out):
    try:
        p = parse_partition(args.partition)
    except PartitionError as exc:
        raise UsageError("parse", str(exc)) from exc
    try:
        image = apply_map(args.name, p)
    except MapDomainError as exc:
        raise UsageError("domain", str(exc)) from exc
    _emit(out, args.format, ["partition"], [[format_partition(image)]], header=False)
    return EXIT_OK


def _weights(args):
    if args.n is not None:
        return [args.n]
    if args.to is None:
        raise UsageError("usage", "verify needs --n or --to")
    return list(range(max(1, args.start), args.to + 1))


def _report_row(r):
    values = " ".join(f"{k}={v}" for k, v in r.values.items())
    return [r.identity_id, r.n, "PASS" if r.holds else "FAIL", values, " | ".join(r.witnesses)]


REPORT_COLUMNS = ["identity_id", "n", "holds", "values", "witnesses"]


def _write_reports(args, out, reports):
    if args.format == "jsonl":
        for r in reports:
            out.write(json.dumps(r.to_record()) + "\n")
    else:
        _emit(out, args.format, REPORT_COLUMNS, [_report_row(r) for r in reports])


def cmd_verify(args, out):
    if args.identity == "all":
        names = list(ids.ALL_CHECKS)
    elif args.identity in ids.ALL_CHECKS:
        names = [args.identity]
    else:
        raise UsageError("usage", f"unknown identity {args.identity!r}; known: all, "
                         + ", ".join(ids.ALL_CHECKS))
    weights = _weights(args)
    reports = []
    for i, n in enumerate(weights):
        for name in names:
            if ids.admits(name, n):
                reports.append(ids.verify_identity(name, n))
        if len(weights) > 500 and (i + 1) % 500 == 0:
            _note(args, f"verify: scanned through n={n}")
    _write_reports(args, out, reports)
    failed = sum(not r.holds for r in reports)
    _note(args, f"verify: {len(reports)} checks, {len(reports) - failed} hold, {failed} fail")
    return EXIT_FAILED if failed else EXIT_OK


def _families(text):
    if text == "all":
        return list(ids.KNOWN_FAMILIES)
    try:
        nums = [int(x) for x in text.split(",")]
        return [ids.CongruenceFamily(*nums)]
    except (TypeError, ValueError) as exc:
        raise UsageError("usage", f"--family expects A,B[,modulus] or 'all', got {text!r}") from exc


CONJECTURE_COLUMNS = ["family", "n", "stat", "even", "odd", "res0", "res1", "res2", "res3",
                      "claim", "zero_residue"]


def cmd_conjecture(args, out):
    if args.stat not in ids.STATS:
        raise UsageError("usage", f"unknown statistic {args.stat!r}; choose from "
                         + ", ".join(ids.STATS))
    rows, counterexamples = [], 0
    for family in _families(args.family):
        n_max = args.n_max if args.n_max is not None else family.index_bound(args.bound)
        reports = ids.check_conjecture(family, args.stat, n_max)
        for claim, aux in zip(reports[::2], reports[1::2]):
            v = claim.values
            counterexamples += not claim.holds
            rows.append([str(family), claim.n, args.stat, v["even"], v["odd"], v["res0"],
                         v["res1"], v["res2"], v["res3"],
                         "PASS" if claim.holds else "FAIL", "PASS" if aux.holds else "FAIL"])
    _emit(out, args.format, CONJECTURE_COLUMNS, rows)
    _note(args, f"conjecture: {len(rows)} weights, {counterexamples} counterexamples")
    return EXIT_FAILED if counterexamples and args.strict else EXIT_OK


def cmd_series(args, out):
    try:
        coeffs = nu_k_series(args.k, args.N)
    except ValueError as exc:
        raise UsageError("usage", str(exc)) from exc
    _emit(out, args.format, ["n", "coefficient"], list(enumerate(coeffs)))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "jsonl"], default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="twosize", description="Partitions into two part sizes.")
    parser.add_argument("--format", choices=["table", "csv", "jsonl"], default="table")
    parser.add_argument("--quiet", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions with k sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="parity-class census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include classes with count 0")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("name", choices=["conj", "rho", "phibar", "tau", "crc"])
    p.add_argument("partition")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[common], help="check identities over a range of n")
    p.add_argument("identity")
    p.add_argument("--n", type=int, help="a single weight")
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", type=int, help="largest weight (inclusive)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[common], help="rank-statistic census along families")
    p.add_argument("--family", default="all", help="A,B[,modulus] or 'all'")
    p.add_argument("--stat", default="rk2")
    p.add_argument("--n-max", type=int, help="largest progression index j")
    p.add_argument("--bound", type=int, default=5000,
                   help="largest weight when --n-max is not given")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("series", parents=[common], help="generating-function coefficients")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error[{exc.kind}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
