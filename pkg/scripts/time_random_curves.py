"""Time the full analysis on random dense curves of a given degree.

    python3 scripts/time_random_curves.py --degree 10 --samples 3
"""

import argparse
import random
import statistics

from cuspfree.linalg import CERTIFIED, MULTIMODULAR, LinalgConfig
from cuspfree.poly import HomPoly, make_context, monomials
from cuspfree.report import analyze


def random_curve(d: int, rng: random.Random, bound: int) -> HomPoly:
    return HomPoly(d, {m: rng.randint(-bound, bound) for m in monomials(d)})


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=10)
    ap.add_argument("--samples", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bound", type=int, default=9, help="coefficient range [-bound, bound]")
    ap.add_argument("--certified", action="store_true")
    args = ap.parse_args()

    cfg = LinalgConfig(mode=CERTIFIED if args.certified else MULTIMODULAR)
    rng = random.Random(args.seed)
    totals = []
    for i in range(args.samples):
        f = random_curve(args.degree, rng, args.bound)
        rep = analyze(make_context(f, linalg=cfg))
        t = rep.timings
        totals.append(t["total"])
        stages = "  ".join(f"{k}={v:.2f}" for k, v in t.items() if k != "total" and isinstance(v, float))
        print(f"#{i}: mdr={rep.mdr} tau={rep.tau} nu={rep.nu} {rep.verdict:10s} total={t['total']:.2f}s  {stages}")
    print(f"degree {args.degree}, {args.samples} samples: median {statistics.median(totals):.2f}s, "
          f"max {max(totals):.2f}s")


if __name__ == "__main__":
    main()
