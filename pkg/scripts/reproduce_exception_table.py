"""Print the table of (d, mdr) pairs not settled by the coverage ladder.

    python3 scripts/reproduce_exception_table.py 90
    python3 scripts/reproduce_exception_table.py 501 --csv table.csv
"""

import argparse
import csv
import time

from cuspfree.coverage import check_against_paper, exception_table, profile


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("d_max", type=int, nargs="?", default=90)
    ap.add_argument("--csv", help="also write d, p1^k1, e1, r0, d', gap to this file")
    args = ap.parse_args()

    t0 = time.perf_counter()
    table = exception_table(args.d_max)
    elapsed = time.perf_counter() - t0
    for d, gap in table.rows:
        p = profile(d)
        print(f"d={d:5d}  p1^k1={p.p1k1:5d}  e1={p.e1:4d}  r0={p.r0:5d}  d'={p.d_prime:5d}  open mdr: {list(gap)}")
    print(f"{len(table.rows)} degrees with open cases; clear up to d={table.clear_up_to}; "
          f"smallest open mdr: {table.threshold}  ({elapsed:.3f}s)")
    diffs = check_against_paper(table)
    print("published list (d <= 90): " + ("match" if not diffs else "; ".join(diffs)))

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["d", "p1k1", "e1", "r0", "d_prime", "gap_lo", "gap_hi"])
            for d, gap in table.rows:
                p = profile(d)
                w.writerow([d, p.p1k1, p.e1, p.r0, p.d_prime, gap[0], gap[-1]])


if __name__ == "__main__":
    main()
