"""Tabulate the rank-statistic conjecture over the five known families.

For each (family, statistic) pair, counts family members up to --bound where
the even/odd split is not divisible by 4, and where the 0 mod 4 class is not.

    python scripts/conjecture_survey.py --bound 5000
"""

import argparse
import csv
import sys

from twosize.identities import KNOWN_FAMILIES, STATS, check_conjecture


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=5000)
    parser.add_argument("--stats", nargs="*", default=list(STATS))
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "stat", "members", "claim_failures", "first_failure",
                     "zero_residue_failures"])
    for family in KNOWN_FAMILIES:
        for stat in args.stats:
            reports = check_conjecture(family, stat, family.index_bound(args.bound))
            claims = [r for r in reports if not r.exploratory]
            aux = [r for r in reports if r.exploratory]
            failures = [r for r in claims if not r.holds]
            writer.writerow([str(family), stat, len(claims), len(failures),
                             failures[0].n if failures else "",
                             sum(not r.holds for r in aux)])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
