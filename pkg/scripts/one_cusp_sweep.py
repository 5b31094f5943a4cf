"""Sweep the one-cusp family x^d + y^(d-1) z and report invariants, the
Walther check and coverage status for each degree.

    python3 scripts/one_cusp_sweep.py --dmin 3 --dmax 12
"""

import argparse
import time

from cuspfree.monodromy import walther_check
from cuspfree.poly import make_context, parse_poly
from cuspfree.report import analyze


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmin", type=int, default=3)
    ap.add_argument("--dmax", type=int, default=10)
    args = ap.parse_args()

    print(f"{'d':>3} {'mdr':>4} {'tau':>5} {'nu':>3}  {'verdict':10s} {'walther':8s} {'coverage':18s} time")
    for d in range(args.dmin, args.dmax + 1):
        t0 = time.perf_counter()
        ctx = make_context(parse_poly(f"x^{d} + y^{d - 1}*z"), True)
        rep = analyze(ctx)
        w = walther_check(ctx, raise_on_failure=False)
        print(f"{d:3d} {rep.mdr:4d} {rep.tau:5d} {rep.nu:3d}  {rep.verdict:10s} "
              f"{'pass' if w.passed else 'FAIL':8s} {rep.coverage['status']:18s} "
              f"{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
