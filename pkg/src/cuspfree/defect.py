"""The defect module N(f) = I_f / J_f, where I_f is the saturation of J_f."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import ProfileInconsistent
from .graded import GradedDims, jacobian_piece_dim, jacobian_quotient
from .poly import CurveContext, dim_S, monomial_index, monomials

log = logging.getLogger(__name__)

# extra N-floor multipliers (times T+1) tried when the profile fails its checks
ESCALATION_STEPS = (0, 1, 2, 4)


@dataclass(frozen=True)
class DefectProfile:
    n: GradedDims
    nu: int
    T: int
    escalations: int = 0
    violations: tuple[str, ...] = field(default=())

    def __getitem__(self, k: int) -> int:
        return self.n[k]


def _colon_dim(ctx: CurveContext, k: int, N: int) -> int:
    """dim { g in S_k : x^N g, y^N g, z^N g all lie in J_f }."""
    quot = jacobian_quotient(ctx, k + N)
    src = monomials(k)
    selections = []
    for v in range(3):
        sel = []
        for m in src:
            e = list(m)
            e[v] += N
            sel.append(monomial_index(tuple(e)))
        selections.append(sel)
    return quot.selection_kernel_dim(selections, len(src))


def sat_dim(ctx: CurveContext, k: int, extra_floor: int = 0) -> int:
    """dim (I_f)_k as the limit of the colon chain (J_f : (x^N, y^N, z^N))_k.

    Starts at N = T-k+1 (+ extra_floor) and stops at the first N whose
    successor gives the same dimension.
    """
    if k < 0:
        raise ValueError("saturation degree must be nonnegative")
    key = ("sat", k, extra_floor)
    if key in ctx.cache:
        return ctx.cache[key]
    N = max(ctx.T - k + 1, 0) + extra_floor
    prev = _colon_dim(ctx, k, N)
    while prev < dim_S(k):
        cur = _colon_dim(ctx, k, N + 1)
        if cur == prev:
            break
        prev = cur
        N += 1
    ctx.cache[key] = prev
    return prev


def duality_violations(n: GradedDims, T: int) -> list[str]:
    return [
        f"duality: n({j})={n[j]} != n({T - j})={n[T - j]}"
        for j in range(0, T + 1)
        if j < T - j and n[j] != n[T - j]
    ]


def lefschetz_violations(n: GradedDims, T: int) -> list[str]:
    out = []
    mid = T // 2
    for j in range(0, mid):
        if n[j] > n[j + 1]:
            out.append(f"lefschetz: n({j})={n[j]} > n({j + 1})={n[j + 1]}")
    for j in range(mid, T):
        if n[j] < n[j + 1]:
            out.append(f"lefschetz: n({j})={n[j]} < n({j + 1})={n[j + 1]}")
    return out


def _profile_values(ctx: CurveContext, extra_floor: int) -> GradedDims:
    return GradedDims.from_function(
        lambda k: sat_dim(ctx, k, extra_floor) - jacobian_piece_dim(ctx, k), 0, ctx.T
    )


def defect_profile(ctx: CurveContext) -> DefectProfile:
    """Graded dimensions n(k) = dim N(f)_k for k = 0..T, with ν(f).

    The profile must satisfy duality about T/2 and the unimodal Lefschetz
    chain; if it does not, the saturation floor is raised and everything is
    recomputed before giving up.
    """
    if "profile" in ctx.cache:
        return ctx.cache["profile"]
    T = ctx.T
    violations: list[str] = []
    for step, mult in enumerate(ESCALATION_STEPS):
        n = _profile_values(ctx, mult * (T + 1))
        violations = duality_violations(n, T) + lefschetz_violations(n, T)
        if not violations:
            if step:
                log.warning("defect profile of %s needed %d escalation(s)", ctx.f, step)
            prof = DefectProfile(n, n[T // 2], T, escalations=step)
            ctx.cache["profile"] = prof
            return prof
    raise ProfileInconsistent(
        f"defect profile of {ctx.f.render()} violates duality/Lefschetz after "
        f"{len(ESCALATION_STEPS) - 1} escalations: " + "; ".join(violations[:5])
    )


def nu(ctx: CurveContext) -> int:
    """ν(f) = dim N(f)_{⌊T/2⌋}."""
    prof = defect_profile(ctx)
    T = ctx.T
    if prof.n[T // 2] != prof.n[T - T // 2]:
        raise ProfileInconsistent("middle degrees disagree")
    return prof.nu
