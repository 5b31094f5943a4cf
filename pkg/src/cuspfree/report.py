"""Full analysis pipeline and its human/JSON renderings."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from . import linalg
from .classify import classify, mdr_bound_check
from .coverage import conjecture_report, profile as factor_profile
from .defect import defect_profile
from .errors import BoundViolated, CuspfreeError
from .graded import ar_dims, milnor_dims, mdr, tjurina
from .monodromy import defect_window_violations, theorem_a_implication, walther_check
from .poly import CurveContext


@dataclass
class AnalysisReport:
    polynomial: str
    degree: int
    T: int
    cuspidal: bool
    mdr: int
    tau: int
    nu: int
    verdict: str
    exponents: Optional[tuple[int, int]]
    tau_dr: int
    ar: dict
    milnor: dict
    defect: dict
    escalations: int
    notes: list = field(default_factory=list)
    bound: Optional[dict] = None
    walther: Optional[list] = None
    theorem_a: Optional[dict] = None
    window_violations: Optional[list] = None
    coverage: Optional[dict] = None
    conjecture: Optional[dict] = None
    problems: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "polynomial": self.polynomial,
            "degree": self.degree,
            "T": self.T,
            "assume_rational_cuspidal": self.cuspidal,
            "mdr": self.mdr,
            "tau": self.tau,
            "nu": self.nu,
            "verdict": self.verdict,
            "exponents": list(self.exponents) if self.exponents else None,
            "tau_dr": self.tau_dr,
            "ar_dims": {str(k): v for k, v in self.ar.items()},
            "milnor_dims": {str(k): v for k, v in self.milnor.items()},
            "defect_dims": {str(k): v for k, v in self.defect.items()},
            "saturation_escalations": self.escalations,
            "notes": self.notes,
            "bound": self.bound,
            "walther": self.walther,
            "theorem_a": self.theorem_a,
            "window_violations": self.window_violations,
            "coverage": self.coverage,
            "conjecture": self.conjecture,
            "problems": self.problems,
        }
        if timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out


class _Clock:
    def __init__(self):
        self.marks = {}
        self._t = time.perf_counter()
        self._start = self._t

    def lap(self, name):
        now = time.perf_counter()
        self.marks[name] = now - self._t
        self._t = now

    def total(self):
        self.marks["total"] = time.perf_counter() - self._start
        return self.marks


def analyze(ctx: CurveContext) -> AnalysisReport:
    """Run every stage on one curve.

    Theorem-level checks (degree bounds, Walther inequality) that fail are
    collected in ``problems`` instead of aborting, so the report still shows
    the offending numbers.
    """
    clock = _Clock()
    esc0 = linalg.STATS["escalations"]
    d, T = ctx.d, ctx.T
    r = mdr(ctx)
    clock.lap("mdr")
    ar = ar_dims(ctx, 0, d - 1).as_dict()
    milnor = milnor_dims(ctx, 0, T).as_dict()
    clock.lap("hilbert")
    tau = tjurina(ctx)
    clock.lap("tjurina")
    prof = defect_profile(ctx)
    clock.lap("defect")
    c = classify(ctx)
    clock.lap("classify")

    rep = AnalysisReport(
        polynomial=ctx.f.render(), degree=d, T=T, cuspidal=ctx.assume_rational_cuspidal,
        mdr=r, tau=tau, nu=c.nu, verdict=c.verdict, exponents=c.exponents, tau_dr=c.tau_dr,
        ar=ar, milnor=milnor, defect=prof.n.as_dict(), escalations=prof.escalations,
        notes=list(c.notes),
    )
    if prof.escalations:
        rep.notes.append(f"saturation floor escalated {prof.escalations} time(s)")

    try:
        b = mdr_bound_check(ctx, c)
        rep.bound = {"bound": str(b.bound) if b.bound is not None else None,
                     "cuspidal_bound": b.cuspidal_bound,
                     "theorem_a_equality": b.theorem_a_equality}
    except BoundViolated as exc:
        rep.problems.append({"code": exc.code, "message": str(exc)})

    if ctx.assume_rational_cuspidal:
        w = walther_check(ctx, prof, raise_on_failure=False)
        rep.walther = [vars(row) for row in w.rows]
        for row in w.rows:
            if row.status == "fail":
                rep.problems.append({
                    "code": "InequalityViolated",
                    "message": f"j={row.j}: n({row.lhs_degree})={row.lhs} > h2={row.h2}",
                })
        rep.theorem_a = theorem_a_implication(ctx)
        if d % 2 == 1 and d >= 3:
            r0 = factor_profile(d).r0
            if r0 is not None:
                rep.window_violations = defect_window_violations(ctx, r0, prof)
                for j in rep.window_violations:
                    rep.problems.append({"code": "DefectWindowViolated", "message": f"n({j}) > 1"})
        cr = conjecture_report(ctx)
        rep.coverage = {"status": cr.coverage.status, "citation": cr.coverage.citation,
                        "gap": list(cr.coverage.gap) if cr.coverage.gap else None}
        rep.conjecture = {"confirms": cr.confirms,
                          "counterexample_candidate": cr.counterexample_candidate,
                          "diagnostics": cr.diagnostics}
        if cr.counterexample_candidate:
            rep.problems.append({"code": "CounterexampleCandidate",
                                 "message": "Neither verdict for a curve flagged rational cuspidal"})
        clock.lap("monodromy+coverage")
    rep.timings = clock.total()
    rep.timings["linalg_escalations"] = linalg.STATS["escalations"] - esc0
    return rep


def render_text(rep: AnalysisReport) -> str:
    lines = [
        f"curve      : {rep.polynomial}",
        f"degree d   : {rep.degree}    T = 3d-6 = {rep.T}",
        f"mdr(f)     : {rep.mdr}",
        f"tau(C)     : {rep.tau}    tau(d,r) = {rep.tau_dr}",
        f"nu(f)      : {rep.nu}",
        f"verdict    : {rep.verdict}"
        + (f"  exponents (d1,d2) = {rep.exponents}" if rep.exponents else ""),
    ]
    lines.append("")
    lines.append("  k   dim AR_k  dim M_k  dim N_k")
    for k in range(0, rep.T + 1):
        a = rep.ar.get(k, "")
        lines.append(f"{k:3d}   {a!s:>7}  {rep.milnor[k]:7d}  {rep.defect[k]:7d}")
    if rep.walther is not None:
        lines.append("")
        lines.append("  j  residue  e2(k)  e2(d-k)  h1  h2  n(2d-2-j)  status")
        for w in rep.walther:
            lines.append(
                f"{w['j']:3d}  {w['residue']:7d}  {w['e2_k']:5d}  {w['e2_dk']:7d}  "
                f"{w['h1']:2d}  {w['h2']:2d}  {w['lhs']!s:>9}  {w['status']}"
            )
    if rep.coverage is not None:
        lines.append("")
        lines.append(f"coverage   : {rep.coverage['status']} ({rep.coverage['citation']})")
        lines.append(f"conjecture : {'confirmed' if rep.conjecture['confirms'] else 'NOT confirmed'}"
                     " on this curve")
    for n in rep.notes:
        lines.append(f"note       : {n}")
    for p in rep.problems:
        lines.append(f"PROBLEM    : {p['code']}: {p['message']}")
    lines.append("")
    lines.append("timings (s): " + ", ".join(
        f"{k}={v:.3f}" for k, v in rep.timings.items() if isinstance(v, float)))
    return "\n".join(lines)


def error_document(exc: CuspfreeError) -> dict:
    return {"error": exc.code, "message": str(exc), "exit_status": exc.exit_status}
