import sys

import pytest

from cuspfree.classify import (
    FREE, NEARLY_FREE, NEITHER, check_mdr_bound, classify, mdr_bound_check, tau_formula,
    verdict_from_nu, verdict_from_tau,
)
from cuspfree.errors import BoundViolated, InternalInconsistency
from cuspfree.poly import make_context, parse_poly


def ctx_of(text, cusp=False):
    return make_context(parse_poly(text), cusp)


@pytest.mark.parametrize("d,r,tau", [(3, 1, 3), (3, 0, 4), (4, 1, 7), (5, 2, 12), (10, 4, 61)])
def test_tau_formula_values(d, r, tau):
    assert tau_formula(d, r) == tau


def test_tau_formula_symmetry():
    for d in range(2, 101):
        for r in range(0, d):
            assert tau_formula(d, r) == tau_formula(d, d - 1 - r)


def test_tau_formula_rejects_bad_input():
    with pytest.raises(ValueError):
        tau_formula(1, 0)


def test_verdict_helpers():
    assert verdict_from_nu(0) == FREE
    assert verdict_from_nu(1) == NEARLY_FREE
    assert verdict_from_nu(5) == NEITHER
    assert verdict_from_tau(3, 1, 3) == FREE
    assert verdict_from_tau(3, 1, 2) == NEARLY_FREE
    assert verdict_from_tau(3, 1, 1) == NEITHER


def test_classify_cuspidal_cubic():
    c = classify(ctx_of("y^2*z - x^3", True))
    assert (c.verdict, c.r, c.tau, c.nu, c.exponents) == (NEARLY_FREE, 1, 2, 1, (1, 2))
    assert all(c.identity_checks().values())


def test_classify_triangle():
    c = classify(ctx_of("x*y*z"))
    assert (c.verdict, c.r, c.tau, c.nu, c.exponents) == (FREE, 1, 3, 0, (1, 1))
    assert all(c.identity_checks().values())


def test_classify_mdr_zero_note():
    c = classify(ctx_of("x^3 - y^3"))
    assert c.verdict == FREE and c.exponents == (0, 2)
    assert any("mdr(f)=0" in n for n in c.notes)


def test_classify_neither():
    c = classify(ctx_of("y^2*z - x^3 - x^2*z"))
    assert c.verdict == NEITHER and c.exponents is None and c.nu == 2


def test_nu_tau_disagreement_raises(monkeypatch):
    cl = sys.modules["cuspfree.classify"]
    monkeypatch.setattr(cl, "compute_nu", lambda ctx: 0)
    with pytest.raises(InternalInconsistency):
        cl.classify(ctx_of("y^2*z - x^3"))


def test_bound_checks():
    assert check_mdr_bound(7, 3, FREE).bound == 3
    rep = check_mdr_bound(7, 3, NEARLY_FREE, cuspidal=True)
    assert rep.cuspidal_bound == 3 and rep.theorem_a_equality
    with pytest.raises(BoundViolated):
        check_mdr_bound(7, 4, FREE)
    with pytest.raises(BoundViolated):
        check_mdr_bound(7, 4, NEARLY_FREE, cuspidal=True)
    with pytest.raises(BoundViolated):
        check_mdr_bound(7, 4, NEARLY_FREE)
    check_mdr_bound(8, 4, NEARLY_FREE)
    check_mdr_bound(7, 6, NEITHER)


def test_bound_on_corpus(corpus_contexts):
    for name, (entry, ctx) in corpus_contexts.items():
        if "slow" in entry.tags:
            continue
        mdr_bound_check(ctx)


def test_corpus_verdicts(corpus_contexts):
    for name, (entry, ctx) in corpus_contexts.items():
        if "slow" in entry.tags:
            continue
        c = classify(ctx)
        exp = entry.expected
        assert (c.r, c.tau, c.verdict, c.nu) == (exp["mdr"], exp["tau"], exp["verdict"], exp["nu"]), name
        assert c.verdict == verdict_from_tau(c.d, c.r, c.tau)
        assert c.tau <= c.tau_dr
