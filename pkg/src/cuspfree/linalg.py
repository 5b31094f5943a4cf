"""Exact rank, kernel and membership over Q.

Ranks take one of two routes: a certified exact rank of the cleared
integer matrix (FLINT's ``fmpz_mat``), or a multi-modular route that reduces
modulo word-size primes near 2^61 (``nmod_mat``) and escalates to the
certified route whenever two primes disagree. Kernels use our own
fraction-free Gauss-Jordan elimination so the basis is canonical.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import flint
import numpy as np

from .errors import DimensionMismatch

log = logging.getLogger(__name__)

CERTIFIED = "certified"
MULTIMODULAR = "multimodular"


def _primes_below(n: int, count: int) -> tuple[int, ...]:
    out = []
    c = n - 1
    while len(out) < count:
        if flint.fmpz(c).is_prime():
            out.append(c)
        c -= 2 if c % 2 else 1
    return tuple(out)


DEFAULT_PRIMES = _primes_below(2**61, 4)


@dataclass(frozen=True)
class LinalgConfig:
    mode: str = MULTIMODULAR
    primes: tuple[int, ...] = DEFAULT_PRIMES
    # at least this many usable primes must agree before a modular answer is trusted
    quorum: int = 2

    def __post_init__(self):
        if self.mode not in (CERTIFIED, MULTIMODULAR):
            raise ValueError(f"unknown linalg mode {self.mode!r}")


CERTIFIED_CONFIG = LinalgConfig(mode=CERTIFIED)

# escalation events are counted so tests and reports can see them
STATS = {"escalations": 0, "modular_ranks": 0, "certified_ranks": 0}


class ExactMatrix:
    """Sparse matrix with exact (int or Fraction) entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i},{j}) outside {rows}x{cols}")
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = v
        return cls(nrows, ncols, ent)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.rows != self.rows:
            raise DimensionMismatch("row counts differ")
        ent = dict(self.entries)
        ent.update({(i, j + self.cols): v for (i, j), v in other.entries.items()})
        return ExactMatrix(self.rows, self.cols + other.cols, ent)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != {self.cols}")
        out = [0] * self.rows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] += a * v[j]
        return out

    def integer_rows(self) -> list[list[int]]:
        """Dense rows scaled to integers; row scaling preserves rank and kernel."""
        rows = self.dense()
        out = []
        for row in rows:
            den = lcm(1, *(Fraction(v).denominator for v in row if v))
            out.append([int(Fraction(v) * den) for v in row])
        return out

    def to_nmod(self, p: int):
        """Reduction mod p, or None if p divides some denominator."""
        idx = np.empty(len(self.entries), dtype=np.int64)
        vals = np.empty(len(self.entries), dtype=np.uint64)
        c = self.cols
        for t, ((i, j), v) in enumerate(self.entries.items()):
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    return None
                v = v.numerator * pow(v.denominator, -1, p)
            idx[t] = i * c + j
            vals[t] = v % p
        flat = np.zeros(self.rows * self.cols, dtype=np.uint64)
        flat[idx] = vals
        return flint.nmod_mat(self.rows, self.cols, flat.tolist(), p)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


@dataclass(frozen=True)
class KernelBasis:
    dimension: int
    vectors: tuple[tuple[int, ...], ...]


# -- certified route ----------------------------------------------------------

def bareiss_rref(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan elimination.

    Returns (matrix, pivot columns). On exit every pivot entry equals the
    last pivot used and all other entries of pivot columns are zero.
    """
    a = [list(r) for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        pr = a[r]
        for i in range(m):
            if i == r:
                continue
            ai = a[i]
            f = ai[c]
            a[i] = [(p * ai[j] - f * pr[j]) // prev for j in range(ncols)]
        prev = p
        pivots.append(c)
        r += 1
        if r == m:
            break
    return a, pivots


def _normalize(v: list[int]) -> tuple[int, ...]:
    g = 0
    for t in v:
        g = gcd(g, t)
    if g == 0:
        return tuple(v)
    lead = next(t for t in v if t)
    if lead < 0:
        g = -g
    return tuple(t // g for t in v)


def _rank_certified(M: ExactMatrix) -> int:
    STATS["certified_ranks"] += 1
    if not M.entries:
        return 0
    return flint.fmpz_mat(M.integer_rows()).rank()


# -- modular route ------------------------------------------------------------

def _modular_ranks(M: ExactMatrix, config: LinalgConfig) -> list[int]:
    ranks = []
    for p in config.primes:
        A = M.to_nmod(p)
        if A is None:
            continue
        ranks.append(A.rank())
        if len(ranks) >= config.quorum:
            break
    return ranks


def rank(M: ExactMatrix, mode: str | LinalgConfig = MULTIMODULAR) -> int:
    """Exact rank of M over Q."""
    config = mode if isinstance(mode, LinalgConfig) else LinalgConfig(mode=mode)
    if not M.entries:
        return 0
    if config.mode == CERTIFIED:
        return _rank_certified(M)
    STATS["modular_ranks"] += 1
    ranks = _modular_ranks(M, config)
    if len(ranks) >= config.quorum and len(set(ranks)) == 1:
        return ranks[0]
    STATS["escalations"] += 1
    log.info("modular ranks %s disagree on %r; escalating to certified", ranks, M)
    return _rank_certified(M)


def kernel(M: ExactMatrix) -> KernelBasis:
    """Canonical basis of the right null space over Q.

    Vectors are integral, content-free, with first nonzero entry positive,
    and each is checked against M before being returned.
    """
    if M.cols == 0:
        return KernelBasis(0, ())
    rows = M.integer_rows() if M.rows else [[0] * M.cols]
    red, pivots = bareiss_rref(rows)
    pivot_set = set(pivots)
    vectors = []
    D = red[len(pivots) - 1][pivots[-1]] if pivots else 1
    for j in range(M.cols):
        if j in pivot_set:
            continue
        v = [0] * M.cols
        v[j] = D
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][j]
        v = _normalize(v)
        if any(M.apply(v)):
            raise ArithmeticError("kernel vector failed exact verification")
        vectors.append(v)
    return KernelBasis(len(vectors), tuple(vectors))


def member(M: ExactMatrix, target: Sequence, mode: str | LinalgConfig = CERTIFIED) -> bool:
    """True iff target lies in the column span of M."""
    if len(target) != M.rows:
        raise DimensionMismatch(f"target length {len(target)} != {M.rows} rows")
    if not any(target):
        return True
    col = ExactMatrix(M.rows, 1, {(i, 0): v for i, v in enumerate(target) if v})
    return rank(M.hstack(col), mode) == rank(M, mode)


# -- quotients by a column space ---------------------------------------------

class QuotientSpace:
    """The quotient Q^n / colspan(W) for a fixed matrix W with n rows.

    Used for questions of the form "which g have all of their monomial
    shifts inside colspan(W)". Modular computations project through a left
    kernel of W mod p; the certified fallback stacks W blocks explicitly.
    """

    def __init__(self, W: ExactMatrix, config: LinalgConfig):
        self.W = W
        self.config = config
        self._rank = None
        self._left = {}  # prime -> (rank W mod p, left kernel rows as nmod_mat or None)

    @property
    def n(self) -> int:
        return self.W.rows

    def _modular(self, p):
        if p not in self._left:
            A = self.W.to_nmod(p)
            if A is None:
                self._left[p] = None
            else:
                X, nul = A.transpose().nullspace()
                r = self.W.rows - nul
                # rows of L annihilate every column of W
                L = None
                if nul:
                    cols = np.array([[int(v) for v in row[:nul]] for row in X.tolist()],
                                    dtype=np.uint64)
                    L = np.ascontiguousarray(cols.T)
                self._left[p] = (r, L)
        return self._left[p]

    def rank_W(self) -> int:
        if self._rank is None:
            self._rank = rank(self.W, self.config)
        return self._rank

    def dim(self) -> int:
        return self.n - self.rank_W()

    def selection_kernel_dim(self, selections: Sequence[Sequence[int]], src_dim: int) -> int:
        """dim { g in Q^src_dim : S_i g in colspan(W) for every i }.

        Each selection S_i maps basis vector t of the source to basis vector
        ``selections[i][t]`` of the target (monomial multiplication).
        """
        for sel in selections:
            if len(sel) != src_dim:
                raise DimensionMismatch("selection length != source dimension")
        if src_dim == 0:
            return 0
        if self.config.mode == MULTIMODULAR:
            answers = []
            for p in self.config.primes:
                res = self._modular(p)
                if res is None:
                    continue
                r, L = res
                if L is None:
                    q = 0
                else:
                    stacked = np.concatenate([L[:, list(sel)] for sel in selections])
                    q = flint.nmod_mat(stacked.shape[0], src_dim,
                                       stacked.ravel().tolist(), p).rank()
                answers.append((r, q))
                if len(answers) >= self.config.quorum:
                    break
            STATS["modular_ranks"] += 1
            if len(answers) >= self.config.quorum and len(set(answers)) == 1:
                if self._rank is None:
                    self._rank = answers[0][0]
                return src_dim - answers[0][1]
            STATS["escalations"] += 1
            log.info("modular quotient ranks %s disagree; escalating", answers)
        return src_dim - self._certified_stacked_rank(selections, src_dim)

    def _certified_stacked_rank(self, selections, src_dim) -> int:
        # rank [diag(W,...,W) | stacked selections] - k * rank W
        k = len(selections)
        n, wc = self.W.rows, self.W.cols
        ent = {}
        for b in range(k):
            for (i, j), v in self.W.entries.items():
                ent[(b * n + i, b * wc + j)] = v
            for t, s in enumerate(selections[b]):
                ent[(b * n + s, k * wc + t)] = 1
        big = ExactMatrix(k * n, k * wc + src_dim, ent)
        cert = LinalgConfig(mode=CERTIFIED)
        rW = rank(self.W, cert)
        self._rank = rW
        return rank(big, cert) - k * rW


def matrix_from_columns(nrows: int, columns: Iterable[dict]) -> ExactMatrix:
    """Build a matrix from sparse columns given as {row: value} dicts."""
    ent = {}
    ncols = 0
    for j, col in enumerate(columns):
        ncols = j + 1
        for i, v in col.items():
            if v:
                ent[(i, j)] = v
    return ExactMatrix(nrows, ncols, ent)
