"""Which result settles "rational cuspidal ⇒ free or nearly free" for a
given degree d and minimal relation degree r, and the resulting tables of
uncovered (d, r) pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .classify import FREE, NEARLY_FREE, classify
from .errors import DegreeTooSmall, EvenDegree, NonUniqueMaxPrimePower, NotApplicable

COVERED_EVEN = "CoveredEven"
COVERED_MDR_SMALL = "CoveredMdrSmall"
COVERED_PRIME_POWER = "CoveredPrimePower"
COVERED_THM_A = "CoveredThmA"
COVERED_THM_B = "CoveredThmB"
COVERED_THM_B_I = "CoveredThmB_i"
INVALID_FOR_CUSPIDAL = "InvalidForCuspidal"
OPEN = "Open"

# Published list of the seven uncovered cases for odd d <= 90.
PAPER_EXCEPTIONS_90 = {
    35: (16,),
    45: (21,),
    55: (26,),
    63: (29, 30),
    65: (31,),
    77: (36, 37),
    85: (41,),
}


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as (prime, exponent) pairs."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


@dataclass(frozen=True)
class FactorizationProfile:
    d: int
    factors: tuple[tuple[int, int], ...]
    p1: int
    k1: int
    p1k1: int
    e1: int
    d_prime: int
    r0: Optional[int]

    @property
    def m(self) -> int:
        return len(self.factors)


def profile(d: int) -> FactorizationProfile:
    """Factorization data of an odd degree d >= 3 with the largest prime power first."""
    if d < 3:
        raise DegreeTooSmall(f"d={d} < 3")
    if d % 2 == 0:
        raise EvenDegree(f"d={d} is even")
    factors = factorize(d)
    powers = sorted(((p ** k, p, k) for p, k in factors), reverse=True)
    if len(powers) > 1 and powers[0][0] == powers[1][0]:
        raise NonUniqueMaxPrimePower(f"d={d}: largest prime power is not unique")
    p1k1, p1, k1 = powers[0]
    e1 = d // p1k1
    r0 = (d - e1) // 2 if len(factors) >= 2 else None
    ordered = tuple((p, k) for _, p, k in powers)
    return FactorizationProfile(d, ordered, p1, k1, p1k1, e1, (d - 1) // 2, r0)


def is_three_prime_power(d: int) -> bool:
    """d = 3 p^k with p prime (any p, including 3)."""
    if d % 3:
        return False
    rest = d // 3
    return rest > 1 and len(factorize(rest)) == 1


def is_five_prime_power(d: int) -> bool:
    if d % 5:
        return False
    rest = d // 5
    return rest > 3 and len(factorize(rest)) == 1


@dataclass(frozen=True)
class CoverageVerdict:
    d: int
    r: int
    status: str
    citation: str
    gap: Optional[tuple[int, int]] = None

    @property
    def covered(self) -> bool:
        return self.status.startswith("Covered")


def gap_interval(d: int) -> Optional[tuple[int, int]]:
    """Inclusive interval [r0+1, d'-1] left open by the theorems, or None if empty."""
    if d % 2 == 0 or d < 3:
        return None
    prof = profile(d)
    if prof.r0 is None:
        return None
    lo, hi = max(prof.r0 + 1, 2), prof.d_prime - 1
    return (lo, hi) if lo <= hi else None


def coverage(d: int, r: int) -> CoverageVerdict:
    if d < 2:
        raise DegreeTooSmall(f"d={d} < 2")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if d % 2 == 0:
        return CoverageVerdict(d, r, COVERED_EVEN, "earlier result: all even degrees")
    if r <= 1:
        return CoverageVerdict(d, r, COVERED_MDR_SMALL, "mdr(f) <= 1 forces nearly free")
    prof = profile(d)
    if prof.m == 1:
        return CoverageVerdict(d, r, COVERED_PRIME_POWER, "earlier result: d a prime power")
    gap = gap_interval(d)
    if r > prof.d_prime:
        return CoverageVerdict(
            d, r, INVALID_FOR_CUSPIDAL,
            f"Theorem A: mdr(f) <= d'={prof.d_prime} for rational cuspidal curves", gap,
        )
    if r == prof.d_prime:
        return CoverageVerdict(d, r, COVERED_THM_A, "Theorem A: mdr(f) = d'", gap)
    if r <= prof.r0:
        if is_three_prime_power(d):
            return CoverageVerdict(d, r, COVERED_THM_B_I, f"Theorem B i): d = 3p^k, r <= r0={prof.r0}", gap)
        cite = f"Theorem B: r <= r0={prof.r0}"
        if is_five_prime_power(d):
            cite += " (d = 5p^k, Theorem B ii)"
        return CoverageVerdict(d, r, COVERED_THM_B, cite, gap)
    cite = f"open: r in [r0+1, d'-1] = [{gap[0]}, {gap[1]}]"
    if is_five_prime_power(d):
        cite += " (the Theorem B ii) exception mdr = d'-1)"
    return CoverageVerdict(d, r, OPEN, cite, gap)


@dataclass(frozen=True)
class ExceptionTable:
    d_max: int
    rows: tuple[tuple[int, tuple[int, ...]], ...]
    threshold: Optional[int] = None  # smallest r left open, over all listed d
    stats: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rows)

    @property
    def clear_up_to(self) -> int:
        """Largest D such that no odd d <= D has an open case (capped at d_max)."""
        return self.rows[0][0] - 1 if self.rows else self.d_max


def exception_table(d_max: int) -> ExceptionTable:
    """All odd d <= d_max with a nonempty open interval of mdr values."""
    if d_max < 3:
        raise DegreeTooSmall(f"d_max={d_max} < 3")
    rows = []
    pairs = open_pairs = 0
    for d in range(3, d_max + 1, 2):
        dp = (d - 1) // 2
        for r in range(0, dp + 1):
            pairs += 1
            if coverage(d, r).status == OPEN:
                open_pairs += 1
        gap = gap_interval(d)
        if gap:
            rows.append((d, tuple(range(gap[0], gap[1] + 1))))
    threshold = min((g[0] for _, g in rows), default=None)
    stats = {"odd_degrees": len(range(3, d_max + 1, 2)), "pairs": pairs,
             "open_pairs": open_pairs, "covered_pairs": pairs - open_pairs}
    return ExceptionTable(d_max, tuple(rows), threshold, stats)


def check_against_paper(table: ExceptionTable) -> list[str]:
    """Differences from the published list, over odd d <= min(d_max, 90)."""
    top = min(table.d_max, 90)
    got = {d: g for d, g in table.rows if d <= top}
    published = {d: g for d, g in PAPER_EXCEPTIONS_90.items() if d <= top}
    diffs = []
    for d in sorted(set(got) | set(published)):
        if got.get(d) != published.get(d):
            diffs.append(f"d={d}: computed {got.get(d)}, published {published.get(d)}")
    return diffs


def remark_bound(d: int) -> int:
    """⌈3d/7⌉, a lower bound for r0 when d is odd composite, not a prime power, d != 15."""
    prof = profile(d)
    if prof.m == 1:
        raise NotApplicable(f"d={d} is a prime power")
    if d == 15:
        raise NotApplicable("d=15 has e1 = 3 > d/7")
    bound = -(-3 * d // 7)
    if prof.r0 < bound:
        raise ArithmeticError(f"d={d}: r0={prof.r0} < ceil(3d/7)={bound}")
    return bound


@dataclass(frozen=True)
class ConjectureReport:
    verdict: str
    coverage: CoverageVerdict
    confirms: bool
    counterexample_candidate: bool
    diagnostics: dict = field(default_factory=dict)


def conjecture_report(ctx) -> ConjectureReport:
    """Classify a curve asserted to be rational cuspidal and say which result
    covers its (d, mdr); a Neither verdict is flagged as a candidate
    counterexample."""
    if not ctx.assume_rational_cuspidal:
        raise NotApplicable("conjecture report needs the rational cuspidal assumption")
    c = classify(ctx)
    cov = coverage(ctx.d, c.r)
    confirms = c.verdict in (FREE, NEARLY_FREE)
    diag = {}
    if not confirms:
        diag = {"d": c.d, "mdr": c.r, "tau": c.tau, "nu": c.nu, "tau(d,r)": c.tau_dr,
                "coverage": cov.status, "polynomial": ctx.f.render(),
                "note": "Neither verdict under the rational cuspidal flag; "
                        "check the cuspidality assertion"}
    return ConjectureReport(c.verdict, cov, confirms, not confirms, diag)
