from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from cuspfree.errors import EulerCheckFailed, NotHomogeneous, PolySyntaxError, ZeroPolynomial
from cuspfree.poly import (
    HomPoly, dim_S, make_context, monomial_index, monomials, parse_poly, partial,
)

import oracle


@pytest.mark.parametrize("k,expected", [(-1, 0), (0, 1), (1, 3), (2, 6), (5, 21)])
def test_dim_S(k, expected):
    assert dim_S(k) == expected


def test_monomial_index_matches_enumeration():
    for k in range(8):
        for i, e in enumerate(monomials(k)):
            assert monomial_index(e) == i


def test_parse_examples():
    f = parse_poly("y^2*z - x^3")
    assert f.degree == 3
    assert f.coeff((0, 2, 1)) == 1 and f.coeff((3, 0, 0)) == -1
    assert parse_poly("x*y*z").render() == "x*y*z"
    g = parse_poly("3/2*x^2 - (y - z)**2")
    assert g.coeff((2, 0, 0)) == Fraction(3, 2)
    assert g.coeff((0, 1, 1)) == 2


@pytest.mark.parametrize("text,exc", [
    ("x^2 + y", NotHomogeneous),
    ("x - x", ZeroPolynomial),
    ("x^2 +", PolySyntaxError),
    ("sin(x)", PolySyntaxError),
    ("x^-1", PolySyntaxError),
    ("w*x", PolySyntaxError),
    ("x/y", PolySyntaxError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_poly(text)


def test_partials():
    f = parse_poly("y^2*z - x^3")
    assert partial(f, "x") == parse_poly("-3*x^2")
    assert partial(f, "y") == parse_poly("2*y*z")
    assert partial(f, 2) == parse_poly("y^2")
    assert partial(parse_poly("x^2"), "y").is_zero()


def test_make_context():
    ctx = make_context(parse_poly("x*y*z"))
    assert ctx.d == 3 and ctx.T == 3
    assert [str(p) for p in ctx.partials] == ["y*z", "x*z", "x*y"]


def test_euler_check_catches_bad_partials(monkeypatch):
    import cuspfree.poly as poly_mod
    real = poly_mod.partial
    monkeypatch.setattr(poly_mod, "partial", lambda p, v: real(p, v) * 2 if v in ("x", 0) else real(p, v))
    with pytest.raises(EulerCheckFailed):
        make_context(parse_poly("x^3 + y^3 + z^3"))


def test_zero_poly_keeps_degree():
    f = parse_poly("x^4 + y*z^3")
    z = f - f
    assert z.degree == 4 and z.is_zero()
    assert z == HomPoly.zero(4)


coeffs = st.integers(-5, 5)


@st.composite
def hompolys(draw, max_degree=6):
    d = draw(st.integers(0, max_degree))
    ms = monomials(d)
    terms = {m: draw(coeffs) for m in draw(st.lists(st.sampled_from(ms), max_size=6))}
    return HomPoly(d, terms)


def _to_sympy(p):
    return sp.expand(sum(sp.Rational(c.numerator, c.denominator) * oracle.X**a * oracle.Y**b * oracle.Z**e
                         for (a, b, e), c in p.terms.items()))


@given(hompolys(), hompolys(), st.sampled_from("xyz"))
def test_leibniz_rule(f, g, v):
    lhs = partial(f * g, v)
    rhs = partial(f, v) * g + f * partial(g, v)
    assert lhs == rhs


@given(hompolys(), hompolys())
def test_product_matches_sympy(f, g):
    assert _to_sympy(f * g) == sp.expand(_to_sympy(f) * _to_sympy(g))


@given(hompolys())
def test_render_parse_round_trip(f):
    if f.is_zero():
        return
    assert parse_poly(f.render()) == f


@given(hompolys())
def test_euler_relation(f):
    if f.degree == 0:
        return
    x, y, z = (parse_poly(v) for v in "xyz")
    lhs = x * partial(f, "x") + y * partial(f, "y") + z * partial(f, "z")
    assert lhs == f * f.degree


@given(st.integers(0, 30))
def test_dim_S_counts_monomials(k):
    assert dim_S(k) == len(monomials(k)) == len(oracle.mons(k))
