"""Run every check over a weight range and summarise per identity.

    python scripts/scan_identities.py --to 5000 --out scan.csv
"""

import argparse
import csv
import sys
import time

from twosize.identities import ALL_CHECKS, admits, verify_identity


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--to", type=int, default=2000)
    parser.add_argument("--only", nargs="*", default=None, help="identity ids to run")
    parser.add_argument("--out", default="-")
    args = parser.parse_args()

    names = args.only or list(ALL_CHECKS)
    rows = []
    for name in names:
        start = time.perf_counter()
        checked = failed = 0
        first_failure = ""
        for n in range(1, args.to + 1):
            if not admits(name, n):
                continue
            checked += 1
            r = verify_identity(name, n)
            if not r.holds:
                failed += 1
                first_failure = first_failure or f"n={n}: {r.witnesses[0]}"
        seconds = time.perf_counter() - start
        rows.append([name, args.to, checked, failed, f"{seconds:.2f}", first_failure])
        print(f"{name}: {checked} checks, {failed} failures, {seconds:.1f}s", file=sys.stderr)

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["identity_id", "max_n", "checked", "failed", "seconds", "first_failure"])
    writer.writerows(rows)
    if out is not sys.stdout:
        out.close()
    return 1 if any(r[3] for r in rows) else 0


if __name__ == "__main__":
    sys.exit(main())
