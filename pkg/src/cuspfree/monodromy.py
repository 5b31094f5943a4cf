"""Divergence-free syzygies and Milnor-fiber eigenspace dimensions.

Eigenvalues exp(-2πi(j-1)/d) are carried as the residue (j-1) mod d; no
complex numbers are ever formed. H^1 eigenspaces come from divergence-free
syzygies, H^2 only through dim H^2 = dim H^1 + 1 (valid for rational
cuspidal curves and λ ≠ 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .defect import DefectProfile, defect_profile
from .errors import InequalityViolated, NotApplicable, QOutOfRange
from .graded import ar_dim, jacobian_matrix, mdr
from .linalg import ExactMatrix, rank
from .poly import CurveContext, dim_S, monomial_index, monomials


@dataclass(frozen=True)
class EigenspaceQuery:
    d: int
    j: int

    def __post_init__(self):
        if not 1 <= self.j <= self.d:
            raise ValueError(f"j={self.j} outside 1..{self.d}")

    @property
    def k(self) -> int:
        return self.j - 1

    @property
    def residue(self) -> int:
        """λ = exp(-2πi * residue / d)."""
        return (self.j - 1) % self.d

    @property
    def is_trivial(self) -> bool:
        return self.residue == 0


def _divergence_matrix(q: int) -> ExactMatrix:
    """(a, b, c) in S_q^3 -> a_x + b_y + c_z in S_{q-1}."""
    n = dim_S(q)
    ent = {}
    for comp in range(3):
        for t, m in enumerate(monomials(q)):
            if m[comp]:
                e = list(m)
                e[comp] -= 1
                ent[(monomial_index(tuple(e)), comp * n + t)] = m[comp]
    return ExactMatrix(dim_S(q - 1), 3 * n, ent)


def e2_dim(ctx: CurveContext, q: int) -> int:
    """dim of {(a,b,c) in AR(f)_{q-2} : a_x + b_y + c_z = 0}, for 0 <= q <= d."""
    if q > ctx.d:
        raise QOutOfRange(f"q={q} > d={ctx.d}: no identification available")
    if q < 0:
        raise QOutOfRange(f"q={q} < 0")
    s = q - 2
    if s < 0:
        return 0
    key = ("e2", q)
    if key not in ctx.cache:
        jac = jacobian_matrix(ctx, s)
        div = _divergence_matrix(s)
        ent = dict(jac.entries)
        ent.update({(i + jac.rows, j): v for (i, j), v in div.entries.items()})
        combined = ExactMatrix(jac.rows + div.rows, jac.cols, ent)
        ctx.cache[key] = combined.cols - rank(combined, ctx.linalg)
    return ctx.cache[key]


def h1_eigen(ctx: CurveContext, query: EigenspaceQuery) -> int:
    """dim H^1(F)_λ = e2(k) + e2(d-k), k = j-1."""
    if not ctx.assume_rational_cuspidal:
        raise NotApplicable("eigenspace formula is used only for rational cuspidal curves")
    if query.is_trivial:
        raise NotApplicable("λ = 1: H^1(F)_1 = H^1(U) = 0 is not computed here")
    if query.d != ctx.d:
        raise ValueError("query degree does not match curve")
    k = query.k
    return e2_dim(ctx, k) + e2_dim(ctx, ctx.d - k)


@dataclass(frozen=True)
class WaltherRow:
    j: int
    residue: int
    e2_k: int
    e2_dk: int
    h1: int
    h2: int
    lhs_degree: int
    lhs: Optional[int]
    status: str  # "pass", "fail" or "vacuous"


@dataclass(frozen=True)
class MonodromyReport:
    d: int
    rows: tuple[WaltherRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    def row(self, j: int) -> WaltherRow:
        return next(r for r in self.rows if r.j == j)


def walther_check(ctx: CurveContext, profile: DefectProfile | None = None,
                  raise_on_failure: bool = True) -> MonodromyReport:
    """Check n(2d-2-j) <= dim H^2(F)_λ for j = 2..d."""
    if not ctx.assume_rational_cuspidal:
        raise NotApplicable("Walther check needs the rational cuspidal assumption")
    prof = profile or defect_profile(ctx)
    d = ctx.d
    rows = []
    for j in range(2, d + 1):
        q = EigenspaceQuery(d, j)
        k = q.k
        a, b = e2_dim(ctx, k), e2_dim(ctx, d - k)
        h1 = a + b
        h2 = h1 + 1
        deg = 2 * d - 2 - j
        if deg in prof.n:
            lhs = prof.n[deg]
            status = "pass" if lhs <= h2 else "fail"
        else:
            lhs, status = None, "vacuous"
        rows.append(WaltherRow(j, q.residue, a, b, h1, h2, deg, lhs, status))
    report = MonodromyReport(d, tuple(rows))
    if raise_on_failure and not report.passed:
        bad = [r for r in rows if r.status == "fail"]
        raise InequalityViolated(
            "; ".join(f"j={r.j}: n({r.lhs_degree})={r.lhs} > h2={r.h2}" for r in bad)
        )
    return report


def theorem_a_implication(ctx: CurveContext) -> Optional[dict]:
    """For odd d = 2d'+1 and mdr >= d': AR(f)_{d'-1} = AR(f)_{d'-2} = 0 and
    hence dim H^1(F)_λ = 0 at j = d'+2. Returns None when not applicable."""
    d = ctx.d
    if d % 2 == 0 or d < 3 or not ctx.assume_rational_cuspidal:
        return None
    dp = (d - 1) // 2
    if mdr(ctx) < dp:
        return None
    ar1, ar2 = ar_dim(ctx, dp - 1), ar_dim(ctx, dp - 2)
    h1 = h1_eigen(ctx, EigenspaceQuery(d, dp + 2)) if dp + 2 <= d else None
    return {"ar(d'-1)": ar1, "ar(d'-2)": ar2, "h1(j=d'+2)": h1,
            "holds": ar1 == 0 and ar2 == 0 and h1 == 0}


def defect_window_violations(ctx: CurveContext, r0: int, profile: DefectProfile | None = None) -> list[int]:
    """Degrees j <= d-3+r0 or j >= 2d-3-r0 where n(j) > 1 (should be empty)."""
    prof = profile or defect_profile(ctx)
    d = ctx.d
    return [
        j for j, v in prof.n.items()
        if (j <= d - 3 + r0 or j >= 2 * d - 3 - r0) and v > 1
    ]
