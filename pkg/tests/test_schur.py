"""Schur elements: fixtures, four-way agreement, symmetries, specializations."""

from fractions import Fraction

import pytest

from arikikoike.algebra import shared_spec
from arikikoike.combinat import Multipartition, multipartitions, std_tableaux
from arikikoike.ratfunc import EvalPoint, ParamSpec, q_fact
from arikikoike.schur import (
    METHODS,
    P_H,
    eta_closed_form,
    eta_shape,
    generic_degree_ratio,
    schur_element,
    schur_gamma,
    schur_hook,
    schur_report,
    schur_symbol,
    schur_trace,
    symmetry_checks,
)


# ---------------------------------------------------------------------------
# Small closed-form fixtures
# ---------------------------------------------------------------------------

def test_r1_n2_fixtures(ps1, spec12):
    ps = ps1
    two = Multipartition(((2,),))
    onone = Multipartition(((1, 1),))
    assert schur_hook(two, ps) == ps.one + ps.q()
    assert schur_hook(onone, ps) == (ps.one + ps.q()) / ps.q()
    assert schur_trace(spec12, two) == ps.one + ps.q()
    assert schur_trace(spec12, onone) == (ps.one + ps.q()) / ps.q()


def test_r2_n1_fixtures(ps2):
    ps = ps2
    lam = Multipartition(((1,), ()))
    swap = Multipartition(((), (1,)))
    assert schur_hook(lam, ps) == (ps.Q(2) - ps.Q(1)) / ps.Q(2)
    assert schur_hook(swap, ps) == (ps.Q(1) - ps.Q(2)) / ps.Q(1)


def test_P_H_small_cases(ps1, ps2):
    assert P_H(ps1, 2) == ps1.one + ps1.q()
    assert P_H(ps2, 1) == ps2.Q(1) - ps2.Q(2)
    # P_H vanishes at an inadmissible point (Q_1 = q Q_2) and not at a
    # generic one.
    bad = EvalPoint(Fraction(2), (Fraction(6), Fraction(3)))
    good = EvalPoint(Fraction(2), (Fraction(7), Fraction(3)))
    assert P_H(ps2, 2).evaluate(bad) == 0
    assert P_H(ps2, 2).evaluate(good) != 0


# ---------------------------------------------------------------------------
# Four-way agreement (small sizes; larger sizes live in the acceptance tests)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r,n", [(1, 2), (1, 3), (2, 2)])
def test_four_way_agreement(r, n):
    spec = shared_spec(r, n)
    for lam in multipartitions(n, r):
        rep = schur_report(spec, lam)
        assert rep.agree, rep.to_record()
        assert set(rep.values) == set(METHODS)


def test_schur_element_dispatch(spec22):
    lam = Multipartition(((1,), (1,)))
    vals = {m: schur_element(spec22, lam, m) for m in METHODS}
    assert len({str(v) for v in vals.values()}) == 1
    with pytest.raises(ValueError):
        schur_element(spec22, lam, "determinant")


# ---------------------------------------------------------------------------
# Beta-symbol formula details
# ---------------------------------------------------------------------------

def test_symbol_shift_invariance(ps2, ps3):
    for ps, n in ((ps2, 3), (ps3, 2)):
        for lam in multipartitions(n, ps.r):
            L0 = max(1, lam.length)
            base = schur_symbol(lam, ps, L0)
            for L in (L0 + 1, L0 + 2):
                assert schur_symbol(lam, ps, L) == base


def test_symbol_exponent_constants():
    # For r = L = 2 the exponents specialize to a_{rL} = n + 1, b_{rL} = 1.
    r, L, n = 2, 2, 3
    a_rL = n * (r - 1) + (r * (r - 1) // 2) * (L * (L - 1) // 2)
    b_rL = r * L * (L - 1) * (2 * r * L - r - 3) // 12
    assert a_rL == n + 1
    assert b_rL == 1


# ---------------------------------------------------------------------------
# One-row shapes
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r,n", [(1, 3), (2, 2), (3, 2)])
def test_eta_closed_form(r, n):
    ps = ParamSpec(r)
    for t in range(1, r + 1):
        lam = eta_shape(n, r, t)
        want = eta_closed_form(n, r, t, ps)
        assert schur_hook(lam, ps) == want
        assert schur_symbol(lam, ps) == want
        assert schur_gamma(lam, ps) == want


def test_eta_r1_is_q_factorial(ps1):
    assert eta_closed_form(4, 1, 1, ps1) == q_fact(4, ps1)


# ---------------------------------------------------------------------------
# Symmetries and generic degrees
# ---------------------------------------------------------------------------

def test_symmetry_checks_all_pass(ps2):
    results = symmetry_checks(ps2, 2)
    assert results
    assert all(ok for _, _, ok in results)


def test_generic_degree_ratio_normalization(ps2):
    lam = eta_shape(2, 2, 1)
    assert generic_degree_ratio(lam, ps2) == ps2.one


def test_generic_degree_ratio_Q_homogeneity(ps2):
    # The ratio depends only on q and the ratios of the Q's: scaling every
    # Q_s by the same constant leaves it unchanged.
    for lam in multipartitions(2, 2):
        ratio = generic_degree_ratio(lam, ps2)
        base = EvalPoint(Fraction(5, 2), (Fraction(3), Fraction(7)))
        scaled = EvalPoint(Fraction(5, 2), (Fraction(3) * 11, Fraction(7) * 11))
        assert ratio.evaluate(base) == ratio.evaluate(scaled)


# ---------------------------------------------------------------------------
# Specializations
# ---------------------------------------------------------------------------

def test_group_algebra_specialization_small():
    pt1 = EvalPoint(Fraction(1), (Fraction(1),))
    pt2 = EvalPoint(Fraction(1), (Fraction(-1), Fraction(1)))
    for r, n, pt in ((1, 3, pt1), (2, 2, pt2)):
        ps = ParamSpec(r)
        order = r**n * [1, 1, 2, 6][n]
        for lam in multipartitions(n, r):
            val = schur_hook(lam, ps).evaluate(pt)
            assert len(std_tableaux(lam)) * val == order
