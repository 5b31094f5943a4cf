"""Graded pieces of the Jacobian ideal: syzygies AR(f)_q, mdr(f), the
Hilbert function of the Milnor algebra M(f) and the total Tjurina number."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonReducedInput
from .linalg import ExactMatrix, QuotientSpace, kernel
from .poly import CurveContext, HomPoly, dim_S, monomial_index, monomials, partial


@dataclass(frozen=True)
class GradedDims:
    """Finite Hilbert-function table on the degree range [lo, hi]."""

    lo: int
    hi: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.hi - self.lo + 1:
            raise ValueError("value count does not match degree range")
        if any(v < 0 for v in self.values):
            raise ValueError("graded dimensions must be nonnegative")

    def __getitem__(self, k: int) -> int:
        if not self.lo <= k <= self.hi:
            raise KeyError(f"degree {k} outside [{self.lo}, {self.hi}]")
        return self.values[k - self.lo]

    def __contains__(self, k: int) -> bool:
        return self.lo <= k <= self.hi

    def items(self):
        return zip(range(self.lo, self.hi + 1), self.values)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    @classmethod
    def from_function(cls, fn, lo: int, hi: int) -> "GradedDims":
        return cls(lo, hi, tuple(fn(k) for k in range(lo, hi + 1)))


@dataclass(frozen=True)
class SyzygyVector:
    degree: int
    a: HomPoly
    b: HomPoly
    c: HomPoly

    @property
    def components(self):
        return (self.a, self.b, self.c)

    def evaluate(self, ctx: CurveContext) -> HomPoly:
        return self.a * ctx.fx + self.b * ctx.fy + self.c * ctx.fz

    def is_relation(self, ctx: CurveContext) -> bool:
        return self.evaluate(ctx).is_zero()

    def divergence(self) -> HomPoly:
        return partial(self.a, 0) + partial(self.b, 1) + partial(self.c, 2)

    def render(self) -> str:
        return "(" + ", ".join(p.render() for p in self.components) + ")"


def _shift_columns(partials, q: int) -> list[dict]:
    """Columns of (a,b,c) -> a*g0 + b*g1 + c*g2 on S_q^3, one per source monomial."""
    cols = []
    for g in partials:
        gt = list(g.terms.items())
        for m in monomials(q):
            cols.append({
                monomial_index((m[0] + e[0], m[1] + e[1], m[2] + e[2])): c
                for e, c in gt
            })
    return cols


def jacobian_matrix(ctx: CurveContext, q: int) -> ExactMatrix:
    """Matrix of S_q^3 -> S_{q+d-1}, (a,b,c) -> a f_x + b f_y + c f_z.

    Built from an integer multiple of f; kernel and image dimensions are
    unchanged by the scaling.
    """
    key = ("jac", q)
    if key not in ctx.cache:
        nrows = dim_S(q + ctx.d - 1)
        cols = _shift_columns(ctx.int_partials, q)
        ent = {(i, j): v for j, col in enumerate(cols) for i, v in col.items()}
        ctx.cache[key] = ExactMatrix(nrows, len(cols), ent)
    return ctx.cache[key]


def jacobian_quotient(ctx: CurveContext, k: int) -> QuotientSpace:
    """S_k / (J_f)_k as a quotient space, cached per degree."""
    key = ("quot", k)
    if key not in ctx.cache:
        ctx.cache[key] = QuotientSpace(jacobian_matrix(ctx, k - ctx.d + 1), ctx.linalg)
    return ctx.cache[key]


def jacobian_piece_dim(ctx: CurveContext, k: int) -> int:
    """dim (J_f)_k."""
    if k < ctx.d - 1:
        return 0
    return jacobian_quotient(ctx, k).rank_W()


def ar_dim(ctx: CurveContext, q: int) -> int:
    """dim AR(f)_q, the degree-q Jacobian syzygies."""
    if q < 0:
        return 0
    return 3 * dim_S(q) - jacobian_piece_dim(ctx, q + ctx.d - 1)


def ar_basis(ctx: CurveContext, q: int) -> list[SyzygyVector]:
    if q < 0:
        return []
    basis = kernel(jacobian_matrix(ctx, q))
    n = dim_S(q)
    out = []
    for v in basis.vectors:
        a, b, c = (HomPoly.from_vector(q, v[i * n:(i + 1) * n]) for i in range(3))
        syz = SyzygyVector(q, a, b, c)
        if not syz.is_relation(ctx):
            raise ArithmeticError(f"kernel vector {syz.render()} is not a relation")
        out.append(syz)
    return out


def mdr(ctx: CurveContext) -> int:
    """Minimal degree of a Jacobian relation.

    The Koszul relations (0, f_z, -f_y), ... live in degree d-1, so the
    search always terminates there.
    """
    if "mdr" not in ctx.cache:
        for q in range(ctx.d):
            if ar_dim(ctx, q) > 0:
                ctx.cache["mdr"] = q
                break
        else:
            raise ArithmeticError("no relation up to degree d-1; Koszul relations missing")
    return ctx.cache["mdr"]


def milnor_dim(ctx: CurveContext, k: int) -> int:
    """dim M(f)_k = dim S_k - dim (J_f)_k."""
    if k < 0:
        return 0
    return dim_S(k) - jacobian_piece_dim(ctx, k)


def tjurina(ctx: CurveContext) -> int:
    """Total Tjurina number as the stable value of the Hilbert function of M(f).

    Scans upward from max(T, d-1) until three consecutive equal values. A
    run of d strictly increasing values is taken as evidence of a
    non-reduced f (a heuristic guard).
    """
    if "tau" in ctx.cache:
        return ctx.cache["tau"]
    d = ctx.d
    start = max(ctx.T, d - 1)
    vals = []
    k = start
    limit = start + 4 * d + 10
    while k <= limit:
        vals.append(milnor_dim(ctx, k))
        if len(vals) >= 3 and vals[-1] == vals[-2] == vals[-3]:
            ctx.cache["tau"] = vals[-1]
            return vals[-1]
        tail = vals[-d:]
        if len(tail) == d and all(a < b for a, b in zip(tail, tail[1:])):
            raise NonReducedInput(
                f"dim M(f)_k strictly increasing on {start}..{k}: "
                f"{ctx.f.render()} looks non-reduced"
            )
        k += 1
    raise NonReducedInput(f"Hilbert function of M(f) did not stabilize by degree {limit}")


def ar_dims(ctx: CurveContext, lo: int, hi: int) -> GradedDims:
    return GradedDims.from_function(lambda q: ar_dim(ctx, q), lo, hi)


def milnor_dims(ctx: CurveContext, lo: int, hi: int) -> GradedDims:
    return GradedDims.from_function(lambda k: milnor_dim(ctx, k), lo, hi)

