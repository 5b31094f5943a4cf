"""Homogeneous polynomials in x, y, z with exact rational coefficients."""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from types import MappingProxyType
from typing import Mapping, Union

from .errors import (
    DegreeTooSmall,
    EulerCheckFailed,
    NotHomogeneous,
    PolySyntaxError,
    ZeroPolynomial,
)

Exps = tuple[int, int, int]
Scalar = Union[int, Fraction]

VARS = ("x", "y", "z")


def dim_S(k: int) -> int:
    """Dimension of the space of degree-k forms in three variables."""
    if k < 0:
        return 0
    return (k + 1) * (k + 2) // 2


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[Exps, ...]:
    """Basis of S_k ordered by decreasing x-exponent, then decreasing y-exponent."""
    if k < 0:
        return ()
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


def monomial_index(e: Exps) -> int:
    """Position of a monomial inside ``monomials(sum(e))``."""
    s = e[1] + e[2]
    return s * (s + 1) // 2 + e[2]


def _var_index(v) -> int:
    if isinstance(v, int) and 0 <= v < 3:
        return v
    try:
        return VARS.index(v)
    except ValueError:
        raise ValueError(f"unknown variable {v!r}") from None


class HomPoly:
    """Immutable sparse homogeneous polynomial.

    A zero polynomial still remembers its degree so that sums and products
    stay graded; constants' derivatives get degree -1.
    """

    __slots__ = ("degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[Exps, Scalar] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(t) for t in e)
            if len(e) != 3 or min(e) < 0:
                raise ValueError(f"bad exponent vector {e}")
            if sum(e) != degree:
                raise NotHomogeneous(f"monomial {e} does not have degree {degree}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.degree = degree
        self._terms = MappingProxyType(clean)
        self._hash = None

    @classmethod
    def monomial(cls, e: Exps, coeff: Scalar = 1) -> "HomPoly":
        return cls(sum(e), {tuple(e): coeff})

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, {})

    @property
    def terms(self) -> Mapping[Exps, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e: Exps) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.degree == other.degree
        return self.degree == other.degree and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"HomPoly({self.render()!r}, degree={self.degree})"

    def __str__(self):
        return self.render()

    def _check_same_degree(self, other: "HomPoly"):
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise NotHomogeneous(f"cannot add degrees {self.degree} and {other.degree}")

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        self._check_same_degree(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return HomPoly(self.degree, out)

    def __neg__(self):
        return HomPoly(self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HomPoly(self.degree, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, HomPoly):
            return NotImplemented
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return HomPoly(self.degree + other.degree, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = HomPoly(0, {(0, 0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def vector(self) -> list[Fraction]:
        """Dense coefficient vector in the basis ``monomials(degree)``."""
        v = [Fraction(0)] * dim_S(self.degree)
        for e, c in self._terms.items():
            v[monomial_index(e)] = c
        return v

    @classmethod
    def from_vector(cls, degree: int, vec) -> "HomPoly":
        return cls(degree, {e: c for e, c in zip(monomials(degree), vec) if c})

    def denominator_lcm(self) -> int:
        return lcm(1, *(c.denominator for c in self._terms.values()))

    def integer_multiple(self) -> "HomPoly":
        """Scalar multiple with integer coefficients (same zero locus, same ideals)."""
        return self * self.denominator_lcm()

    def render(self) -> str:
        """Canonical text form; ``parse_poly(p.render()) == p``."""
        if self.is_zero():
            return "0"
        parts = []
        for e in monomials(self.degree):
            c = self._terms.get(e)
            if c is None:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k
            )
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def substitute_linear(self, matrix) -> "HomPoly":
        """Compose with the linear change (x,y,z) -> matrix @ (x,y,z)."""
        forms = [
            HomPoly(1, {(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]})
            for row in matrix
        ]
        powers = [[HomPoly(0, {(0, 0, 0): 1})] for _ in range(3)]
        for i in range(3):
            for _ in range(self.degree):
                powers[i].append(powers[i][-1] * forms[i])
        out = HomPoly.zero(self.degree)
        for e, c in self._terms.items():
            out = out + (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]) * c
        return out


def partial(p: HomPoly, v) -> HomPoly:
    """Formal partial derivative with respect to ``v`` ('x', 'y', 'z' or 0..2)."""
    i = _var_index(v)
    out = {}
    for e, c in p.terms.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
    return HomPoly(p.degree - 1, out)


# -- parsing ------------------------------------------------------------------

_Sparse = dict  # Exps -> Fraction, not necessarily homogeneous


def _sp_add(a: _Sparse, b: _Sparse, sign=1) -> _Sparse:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + sign * c
        if not out[e]:
            del out[e]
    return out


def _sp_mul(a: _Sparse, b: _Sparse) -> _Sparse:
    out: _Sparse = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _sp_const(a: _Sparse):
    if not a:
        return Fraction(0)
    if set(a) == {(0, 0, 0)}:
        return a[(0, 0, 0)]
    return None


def _eval(node) -> _Sparse:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return {(0, 0, 0): Fraction(node.value)} if node.value else {}
    if isinstance(node, ast.Name):
        if node.id not in VARS:
            raise PolySyntaxError(f"unknown symbol {node.id!r}")
        e = [0, 0, 0]
        e[VARS.index(node.id)] = 1
        return {tuple(e): Fraction(1)}
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval(node.operand)
        return {e: -c for e, c in val.items()} if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return _sp_add(left, right)
        if isinstance(node.op, ast.Sub):
            return _sp_add(left, right, -1)
        if isinstance(node.op, ast.Mult):
            return _sp_mul(left, right)
        if isinstance(node.op, ast.Div):
            c = _sp_const(right)
            if c is None:
                raise PolySyntaxError("division only by a nonzero constant")
            if c == 0:
                raise PolySyntaxError("division by zero")
            return {e: v / c for e, v in left.items()}
        if isinstance(node.op, ast.Pow):
            n = _sp_const(right)
            if n is None or n.denominator != 1 or n < 0:
                raise PolySyntaxError("exponent must be a nonnegative integer")
            out = {(0, 0, 0): Fraction(1)}
            for _ in range(int(n)):
                out = _sp_mul(out, left)
            return out
    raise PolySyntaxError(f"unsupported syntax: {ast.dump(node)[:60]}")


def parse_poly(text: str) -> HomPoly:
    """Parse an expression in x, y, z into an expanded homogeneous polynomial.

    Accepts integer/rational coefficients, ``^`` (or ``**``) powers, ``*``,
    ``+``, ``-``, division by constants and parentheses.
    """
    src = text.replace("^", "**").strip()
    if not src:
        raise PolySyntaxError("empty polynomial text")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolySyntaxError(f"malformed polynomial {text!r}: {exc.msg}") from None
    terms = _eval(tree)
    if not terms:
        raise ZeroPolynomial(f"{text!r} expands to zero")
    degrees = {sum(e) for e in terms}
    if len(degrees) > 1:
        raise NotHomogeneous(f"{text!r} mixes degrees {sorted(degrees)}")
    return HomPoly(degrees.pop(), terms)


# -- curve context ------------------------------------------------------------

@dataclass(frozen=True)
class CurveContext:
    """The curve f = 0 with its partials and the defect-module top degree T."""

    f: HomPoly
    fx: HomPoly
    fy: HomPoly
    fz: HomPoly
    T: int
    assume_rational_cuspidal: bool = False
    linalg: object = None
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def d(self) -> int:
        return self.f.degree

    @property
    def partials(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return (self.fx, self.fy, self.fz)

    @property
    def int_partials(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        """Partials of an integer multiple of f; used to build integer matrices."""
        if "int_partials" not in self.cache:
            g = self.f.integer_multiple()
            self.cache["int_partials"] = tuple(partial(g, v) for v in range(3))
        return self.cache["int_partials"]


def make_context(f: HomPoly, assume_rational_cuspidal: bool = False, linalg=None) -> CurveContext:
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no curve")
    d = f.degree
    if d < 2:
        raise DegreeTooSmall(f"degree {d} < 2")
    fx, fy, fz = (partial(f, v) for v in range(3))
    x, y, z = (HomPoly.monomial(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    if x * fx + y * fy + z * fz != f * d:
        raise EulerCheckFailed(f"Euler relation fails for {f.render()}")
    if linalg is None:
        from .linalg import LinalgConfig
        linalg = LinalgConfig()
    return CurveContext(f, fx, fy, fz, 3 * d - 6, assume_rational_cuspidal, linalg)
