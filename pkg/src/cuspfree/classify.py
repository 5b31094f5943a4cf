"""Free / nearly free classification of reduced plane curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .defect import nu as compute_nu
from .errors import BoundViolated, InternalInconsistency
from .graded import mdr, tjurina
from .poly import CurveContext

FREE = "Free"
NEARLY_FREE = "NearlyFree"
NEITHER = "Neither"


def tau_formula(d: int, r: int) -> int:
    """Maximal global Tjurina number (d-1)^2 - r(d-1-r) for mdr(f) = r."""
    if d < 2 or r < 0:
        raise ValueError(f"tau_formula needs d >= 2 and r >= 0, got d={d}, r={r}")
    return (d - 1) ** 2 - r * (d - 1 - r)


def verdict_from_nu(nu: int) -> str:
    return {0: FREE, 1: NEARLY_FREE}.get(nu, NEITHER)


def verdict_from_tau(d: int, r: int, tau: int) -> str:
    t = tau_formula(d, r)
    if tau == t:
        return FREE
    if tau == t - 1:
        return NEARLY_FREE
    return NEITHER


@dataclass(frozen=True)
class Classification:
    verdict: str
    d: int
    r: int
    tau: int
    nu: int
    tau_dr: int
    d1: Optional[int] = None
    d2: Optional[int] = None
    notes: tuple[str, ...] = field(default=())

    @property
    def exponents(self):
        return None if self.d1 is None else (self.d1, self.d2)

    def identity_checks(self) -> dict[str, bool]:
        """The exponent relations for the verdict, evaluated exactly."""
        d, tau = self.d, self.tau
        if self.verdict == FREE:
            return {
                "d1+d2=d-1": self.d1 + self.d2 == d - 1,
                "tau=(d-1)^2-d1*d2": tau == (d - 1) ** 2 - self.d1 * self.d2,
                "d1=mdr": self.d1 == self.r,
                "tau=tau(d,r)": tau == self.tau_dr,
            }
        if self.verdict == NEARLY_FREE:
            return {
                "d1+d2=d": self.d1 + self.d2 == d,
                "tau=(d-1)^2-d1*(d2-1)-1": tau == (d - 1) ** 2 - self.d1 * (self.d2 - 1) - 1,
                "d1=mdr": self.d1 == self.r,
                "tau=tau(d,r)-1": tau == self.tau_dr - 1,
            }
        return {"tau<tau(d,r)-1 or verdict by nu": True}


def classify(ctx: CurveContext) -> Classification:
    """Verdict from ν(f), cross-checked against the τ(d, r) criterion."""
    d = ctx.d
    r = mdr(ctx)
    tau = tjurina(ctx)
    n = compute_nu(ctx)
    t = tau_formula(d, r)
    verdict = verdict_from_nu(n)
    by_tau = verdict_from_tau(d, r, tau)
    if verdict != by_tau:
        raise InternalInconsistency(
            f"nu={n} gives {verdict} but tau={tau}, tau(d,r)={t} gives {by_tau} "
            f"for {ctx.f.render()}"
        )
    notes = []
    if r == 0:
        notes.append("mdr(f)=0: C is a union of lines through one point")
    if tau > t:
        notes.append(f"tau={tau} exceeds tau(d,r)={t}; expected tau <= tau(d,r)")
    d1 = d2 = None
    if verdict == FREE:
        d1, d2 = r, d - 1 - r
    elif verdict == NEARLY_FREE:
        d1, d2 = r, d - r
    c = Classification(verdict, d, r, tau, n, t, d1, d2, tuple(notes))
    failed = [name for name, ok in c.identity_checks().items() if not ok]
    if failed:
        raise InternalInconsistency(f"exponent identities fail: {failed}")
    return c


@dataclass(frozen=True)
class BoundReport:
    d: int
    r: int
    verdict: str
    bound: Optional[Fraction]
    cuspidal_bound: Optional[int] = None
    theorem_a_equality: Optional[bool] = None


def check_mdr_bound(d: int, r: int, verdict: str, cuspidal: bool = False) -> BoundReport:
    """mdr <= (d-1)/2 for free, <= d/2 for nearly free; for odd-degree
    rational cuspidal curves also mdr <= (d-1)/2 with equality flagged."""
    bound = None
    if verdict == FREE:
        bound = Fraction(d - 1, 2)
    elif verdict == NEARLY_FREE:
        bound = Fraction(d, 2)
    if bound is not None and r > bound:
        raise BoundViolated(f"mdr={r} exceeds {bound} for a {verdict} curve of degree {d}")
    cusp_bound = eq = None
    if cuspidal and d % 2 == 1:
        cusp_bound = (d - 1) // 2
        if r > cusp_bound:
            raise BoundViolated(
                f"mdr={r} exceeds d'={cusp_bound} for a rational cuspidal curve of degree {d}"
            )
        eq = r == cusp_bound
    return BoundReport(d, r, verdict, bound, cusp_bound, eq)


def mdr_bound_check(ctx: CurveContext, classification: Classification | None = None) -> BoundReport:
    c = classification or classify(ctx)
    return check_mdr_bound(ctx.d, c.r, c.verdict, ctx.assume_rational_cuspidal)
