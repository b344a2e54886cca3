"""Table of threshold(m, n) and the critical separation for small orders.

    python scripts/critical_table.py --max-order 8 [--csv out.csv]
"""
import argparse
import csv
import sys

from chyp.certify import critical_delta, threshold


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--csv", help="also write rows to this file")
    args = ap.parse_args()

    rows = [(m, n, threshold(m, n), critical_delta(m, n))
            for m in range(3, args.max_order + 1) for n in range(3, m + 1)]
    print(f"{'m':>3} {'n':>3} {'threshold':>16} {'critical_delta':>16}")
    for m, n, t, d in rows:
        print(f"{m:>3} {n:>3} {t:>16.12f} {d:>16.12f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["m", "n", "threshold", "critical_delta"])
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
