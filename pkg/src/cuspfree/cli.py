"""Command-line interface.

    cuspfree analyze "y^2*z - x^3" --cuspidal [--json]
    cuspfree batch [corpus.jsonl]
    cuspfree coverage 90 --check-paper
    cuspfree hilbert "x*y*z"
    cuspfree mdr "x^4 + y^3*z"

Exit status: 0 success, 1 mathematical expectation mismatch, 2 input
error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .coverage import check_against_paper, exception_table
from .corpus import load_corpus, run_batch
from .defect import defect_profile
from .errors import (
    EXIT_INPUT,
    EXIT_MISMATCH,
    CuspfreeError,
)
from .graded import ar_dims, mdr, milnor_dims
from .linalg import CERTIFIED, MULTIMODULAR, LinalgConfig
from .poly import make_context, parse_poly
from .report import analyze, error_document, render_text


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _context(args):
    linalg = LinalgConfig(mode=CERTIFIED if args.certified_linalg else MULTIMODULAR)
    return make_context(parse_poly(args.polynomial), args.cuspidal, linalg)


def cmd_analyze(args) -> int:
    rep = analyze(_context(args))
    print(_dump(rep.to_dict()) if args.json else render_text(rep))
    return EXIT_MISMATCH if rep.problems else 0


def cmd_mdr(args) -> int:
    ctx = _context(args)
    r = mdr(ctx)
    print(_dump({"polynomial": ctx.f.render(), "degree": ctx.d, "mdr": r}) if args.json else r)
    return 0


def cmd_hilbert(args) -> int:
    ctx = _context(args)
    hi = args.hi if args.hi is not None else ctx.T
    ar = ar_dims(ctx, 0, hi)
    m = milnor_dims(ctx, 0, hi)
    prof = defect_profile(ctx)
    if args.json:
        print(_dump({
            "polynomial": ctx.f.render(), "T": ctx.T,
            "ar": {str(k): v for k, v in ar.items()},
            "milnor": {str(k): v for k, v in m.items()},
            "defect": {str(k): v for k, v in prof.n.items()},
        }))
    else:
        print(f"# {ctx.f.render()}   T = {ctx.T}")
        print("  k  AR_k  M_k  N_k")
        for k in range(0, hi + 1):
            n = prof.n[k] if k in prof.n else "-"
            print(f"{k:3d} {ar[k]:5d} {m[k]:4d} {n!s:>4}")
    return 0


def cmd_batch(args) -> int:
    linalg = LinalgConfig(mode=CERTIFIED if args.certified_linalg else MULTIMODULAR)
    entries = load_corpus(args.corpus)
    t0 = time.perf_counter()
    results = run_batch(entries, linalg)
    elapsed = time.perf_counter() - t0
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    if args.json:
        doc = {"entries": [], "summary": {"total": len(results), **counts}}
        for r in results:
            item = {"name": r.name, "status": r.status, "observed": r.observed,
                    "mismatches": r.mismatches, "problems": r.problems, "error": r.error}
            if args.timings and r.report is not None:
                item["timings"] = {k: round(v, 4) for k, v in r.report.timings.items()}
            doc["entries"].append(item)
        if args.timings:
            doc["summary"]["elapsed"] = round(elapsed, 3)
        print(_dump(doc))
    else:
        print(f"{'name':28s} {'status':9s} {'mdr':>3} {'tau':>4} {'nu':>3}  verdict")
        for r in results:
            o = r.observed
            print(f"{r.name:28s} {r.status:9s} {o.get('mdr', '-')!s:>3} {o.get('tau', '-')!s:>4} "
                  f"{o.get('nu', '-')!s:>3}  {o.get('verdict', '-')}")
            for k, v in r.mismatches.items():
                print(f"    ExpectationMismatch {r.name}.{k}: expected {v['expected']}, got {v['observed']}")
            for p in r.problems:
                print(f"    {p['code']}: {p['message']}")
            if r.error:
                print(f"    {r.error}")
        print(f"{len(results)} entries: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
              + f"  ({elapsed:.2f}s)")
    errors = [r.error_status for r in results if r.status == "error"]
    if errors:
        return max(errors)
    if any(r.status == "fail" for r in results):
        return EXIT_MISMATCH
    return 0


def cmd_coverage(args) -> int:
    t0 = time.perf_counter()
    table = exception_table(args.d_max)
    diffs = check_against_paper(table) if args.check_paper else None
    elapsed = time.perf_counter() - t0
    if args.json:
        doc = {
            "d_max": table.d_max,
            "exceptions": {str(d): list(g) for d, g in table.rows},
            "threshold": table.threshold,
            "clear_up_to": table.clear_up_to,
            "stats": table.stats,
        }
        if diffs is not None:
            doc["check_paper"] = "PASS" if not diffs else "FAIL"
            doc["differences"] = diffs
        print(_dump(doc))
    else:
        print(f"open (d, mdr) cases for odd d <= {table.d_max}:")
        if not table.rows:
            print("  none")
        for d, gap in table.rows:
            print(f"  d = {d:4d}   mdr in {{{', '.join(map(str, gap))}}}")
        s = table.stats
        print(f"odd degrees: {s['odd_degrees']}, (d, r) pairs with r <= d': {s['pairs']}, "
              f"covered: {s['covered_pairs']}, open: {s['open_pairs']}")
        print(f"no open case for odd d <= {table.clear_up_to}")
        if table.threshold is not None:
            print(f"every mdr <= {table.threshold - 1} is covered (smallest open mdr: {table.threshold})")
        if diffs is not None:
            print("check against published list: " + ("PASS" if not diffs else "FAIL"))
            for line in diffs:
                print("  " + line)
        print(f"({elapsed:.3f}s)")
    return EXIT_MISMATCH if diffs else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cuspidal", action="store_true", default=argparse.SUPPRESS,
                        help="assert the curve is rational cuspidal (enables monodromy/coverage)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--certified-linalg", action="store_true", default=argparse.SUPPRESS,
                        help="use fraction-free elimination instead of multi-modular ranks")
    common.add_argument("--check-paper", action="store_true", default=argparse.SUPPRESS,
                        help="(coverage) compare with the published exception list")

    parser = argparse.ArgumentParser(prog="cuspfree", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full analysis of one curve")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mdr", parents=[common], help="minimal degree of a Jacobian relation")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_mdr)

    p = sub.add_parser("hilbert", parents=[common], help="dump graded dimensions of AR, M and N")
    p.add_argument("polynomial")
    p.add_argument("--hi", type=int, default=None, help="top degree (default T)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("batch", parents=[common], help="analyze a corpus and compare expectations")
    p.add_argument("corpus", nargs="?", default=None, help="JSON-lines corpus (default: shipped)")
    p.add_argument("--timings", action="store_true", help="include timings in JSON output")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("coverage", parents=[common], help="table of (d, mdr) not settled")
    p.add_argument("d_max", type=int)
    p.set_defaults(func=cmd_coverage)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for flag in ("cuspidal", "json", "certified_linalg", "check_paper"):
        if not hasattr(args, flag):
            setattr(args, flag, False)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        doc = {"error": "FileNotFound", "message": str(exc), "exit_status": EXIT_INPUT}
    except CuspfreeError as exc:
        doc = error_document(exc)
    if args.json:
        print(_dump(doc))
    else:
        print(f"error: {doc['error']}: {doc['message']}", file=sys.stderr)
    return doc["exit_status"]


if __name__ == "__main__":
    sys.exit(main())
