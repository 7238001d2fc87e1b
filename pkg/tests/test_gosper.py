"""Indefinite-summability engine: normal form, dispersion, polynomial solver,
ratio assembly, and end-to-end certificate synthesis."""
from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from wzpi import (
    ClosedForm,
    DegenerateRatio,
    HyperTerm,
    PochFactor,
    Poly2,
    RatFunc2,
    UniPolyQn,
    WZIdentity,
    builtin_record,
    gosper_normal_form,
    gosper_solve,
    h_ratio,
    load_builtin,
    rhs_exact,
    synthesize_certificate,
    term_value,
    wz_residual,
)
from wzpi.gosper import _gcd_uqn, dispersion_candidates

from conftest import poly2s

K = Poly2.var("k")
N = Poly2.var("n")


def uqn(p: Poly2) -> UniPolyQn:
    return UniPolyQn.from_poly2(p)


# -- coefficient tower ---------------------------------------------------------------

@given(poly2s(), poly2s())
def test_tower_arithmetic_matches_bivariate_arithmetic(a, b):
    fa, fb = uqn(a), uqn(b)
    for n0 in (0, 1, Fraction(5, 2)):
        for k0 in (-1, 0, 3):
            assert (fa + fb).eval_n(n0).eval(k0) == (a + b).eval(n0, k0)
            assert (fa * fb).eval_n(n0).eval(k0) == (a * b).eval(n0, k0)
            assert (-fa).eval_n(n0).eval(k0) == -a.eval(n0, k0)


@given(poly2s(), st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_tower_shift_commutes_with_eval(a, delta):
    f = uqn(a)
    shifted = f.shift(delta)
    for n0 in (0, 2):
        assert shifted.eval_n(n0) == f.eval_n(n0).shift(delta)


@given(poly2s(max_degree=2), poly2s(max_degree=2))
def test_tower_division_reconstructs(a, b):
    assume(not b.is_zero)
    fa, fb = uqn(a), uqn(b)
    quot, rem = fa.divrem(fb)
    assert quot * fb + rem == fa
    assert rem.is_zero or rem.degree() < fb.degree()
    prod = fa * fb
    if not fa.is_zero:
        assert prod.divexact(fb) == fa


@given(poly2s())
def test_tower_denominator_clearing(a):
    from wzpi import RatFn
    f = uqn(a)
    cleared, L = f.clear_denominators()
    assert not L.is_zero
    for i, c in enumerate(cleared):
        assert f.coeff(i) * RatFn(L) == RatFn(c)
    assert f.to_ratfunc2().equal(RatFunc2(a, 1))


# -- gcd over the rational-function field ---------------------------------------------

@settings(max_examples=30)
@given(poly2s(max_degree=2, max_terms=4), poly2s(max_degree=2, max_terms=4),
       poly2s(max_degree=2, max_terms=4))
def test_gcd_contains_planted_common_factor(a, b, d):
    assume(d.degree("k") >= 1)
    assume(not a.is_zero and not b.is_zero)
    f = uqn(a * d)
    g = uqn(b * d)
    got = _gcd_uqn(f, g)
    assert got.degree() >= d.degree("k")
    f.divexact(got)
    g.divexact(got)
    _, rem = got.divrem(uqn(d))
    assert rem.is_zero


def test_gcd_of_coprime_inputs_is_constant():
    f = uqn(K ** 2 + 1)
    g = uqn(K + 3)
    assert _gcd_uqn(f, g).degree() == 0


# -- dispersion ------------------------------------------------------------------------

def test_dispersion_candidates_catch_integer_shifts():
    assert 5 in dispersion_candidates(uqn(K), uqn(K - 5))
    cands = dispersion_candidates(uqn(K * (K - 2)), uqn(K - 3))
    assert {1, 3} <= set(cands)


def test_dispersion_candidates_handle_parameterized_roots():
    q = uqn(K - N)
    r = uqn(K - N - 4)
    assert 4 in dispersion_candidates(q, r)


def test_dispersion_candidates_scale_beyond_degree_counts():
    # root gap 40 with degree-1 inputs: the gap, not the degree, matters
    assert 40 in dispersion_candidates(uqn(K), uqn(K - 40))


@settings(max_examples=20)
@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=3),
       st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=3))
def test_dispersion_candidates_are_complete_for_integer_roots(qroots, rroots):
    q = Poly2.const(1)
    for x in qroots:
        q = q * (K - x)
    r = Poly2.const(1)
    for x in rroots:
        r = r * (K - x)
    true_disp = {b - a for a in qroots for b in rroots if b >= a}
    assert true_disp <= set(dispersion_candidates(uqn(q), uqn(r)))


# -- normal form ------------------------------------------------------------------------

def check_normal_form(ratio: RatFunc2):
    p, q, r = gosper_normal_form(ratio)
    # defining equation: ratio(k) = (q/r) * p(k+1)/p(k)
    lhs = ratio * p.to_ratfunc2() * r.to_ratfunc2()
    rhs = q.to_ratfunc2() * p.shift(1).to_ratfunc2()
    assert lhs.equal(rhs)
    # shifted coprimality
    if q.degree() > 0 and r.degree() > 0:
        for j in range(0, 8):
            assert _gcd_uqn(q, r.shift(j)).degree() <= 0
    return p, q, r


def test_normal_form_known_shapes():
    p, q, r = check_normal_form(RatFunc2(K + 2, K))
    assert p == UniPolyQn([0, 1, 1])           # k(k+1)
    assert q == UniPolyQn([1]) and r == UniPolyQn([1])

    p, q, r = check_normal_form(RatFunc2(Poly2.const(1), 1))
    assert p == q == r == UniPolyQn([1])

    p, q, r = check_normal_form(RatFunc2(Poly2.const(5), 1))
    assert q == UniPolyQn([5])
    assert p == r == UniPolyQn([1])


def test_normal_form_with_parameter():
    # ratio (k+n+1)/(k+n) shifts a parameterized root
    check_normal_form(RatFunc2(K + N + 1, K + N))


@settings(max_examples=25)
@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=0, max_size=2),
       st.lists(st.integers(min_value=-4, max_value=4), min_size=0, max_size=2),
       st.integers(min_value=1, max_value=5))
def test_normal_form_property_on_random_rational_ratios(nroots, droots, scale):
    num = Poly2.const(scale)
    for x in nroots:
        num = num * (K - x)
    den = Poly2.const(1)
    for x in droots:
        den = den * (K - x)
    check_normal_form(RatFunc2(num, den))


def test_zero_ratio_is_degenerate():
    with pytest.raises(DegenerateRatio):
        gosper_normal_form(RatFunc2(Poly2(), 1))


# -- polynomial solver --------------------------------------------------------------

def test_solver_sums_the_identity_summand_k():
    p, q, r = gosper_normal_form(RatFunc2(K + 1, K))
    x = gosper_solve(p, q, r)
    assert x == UniPolyQn([0, Fraction(-1, 2), Fraction(1, 2)])


def test_solver_rejects_factorial_growth():
    p, q, r = gosper_normal_form(RatFunc2(K + 1, 1))
    assert gosper_solve(p, q, r) is None


def test_solver_rejects_reciprocal_summand():
    # a_k = 1/k has no hypergeometric antidifference
    ratio = RatFunc2(K, K + 1)
    p, q, r = gosper_normal_form(ratio)
    assert gosper_solve(p, q, r) is None


@pytest.mark.parametrize("power", [2, 3])
def test_solver_handles_power_sums(power):
    # a_k = k^power: antidifference is the Faulhaber polynomial
    ratio = RatFunc2((K + 1) ** power, K ** power)
    p, q, r = gosper_normal_form(ratio)
    x = gosper_solve(p, q, r)
    assert x is not None
    # verify: with a_k = k^power, the antidifference S satisfies
    # S(k+1) - S(k) = a_k; reconstruct S/a as r(k-1) x / p and check values
    from wzpi.unipoly import RatFn
    rm1 = r.shift(-1)
    for k0 in range(2, 8):
        s_over_a = (rm1.eval_n(0).eval(k0) * x.eval_n(0).eval(k0)
                    / p.eval_n(0).eval(k0))
        s_over_a_next = (rm1.eval_n(0).eval(k0 + 1) * x.eval_n(0).eval(k0 + 1)
                         / p.eval_n(0).eval(k0 + 1))
        a_k = Fraction(k0) ** power
        a_k1 = Fraction(k0 + 1) ** power
        assert s_over_a_next * a_k1 - s_over_a * a_k == a_k


# -- ratio assembly -----------------------------------------------------------------

@pytest.mark.parametrize("name, n0, k0", [
    ("theorem1", 4, 1),
    ("zeilberger", 5, 2),
])
def test_difference_ratio_matches_exact_values(name, n0, k0):
    ident = load_builtin(name)
    ratio = h_ratio(ident)

    def h(n, k):
        return (term_value(ident.term, n + 1, k) / rhs_exact(ident.rhs, n + 1)
                - term_value(ident.term, n, k) / rhs_exact(ident.rhs, n))

    expected = h(n0, k0 + 1) / h(n0, k0)
    assert ratio.eval(n0, k0) == expected


def test_constant_row_makes_the_difference_degenerate():
    term = HyperTerm(poch=(PochFactor(0, 1, 1),), fact_pow=1,
                     z=Fraction(1, 2), p=(1,))
    ident = WZIdentity(name="flat", term=term, rhs=ClosedForm(1, ()),
                       certificate=None, carlson_a=None, kind="wz")
    with pytest.raises(DegenerateRatio):
        h_ratio(ident)
    with pytest.raises(DegenerateRatio):
        synthesize_certificate(ident)


# -- end-to-end synthesis ------------------------------------------------------------

FAST_NAMES = ("zeilberger", "theorem1", "theorem2", "theorem3")


@pytest.mark.parametrize("name", FAST_NAMES)
def test_synthesis_produces_verified_certificates(name, synthesis):
    result = synthesis.get(name)
    assert result.status == "Summable"
    assert result.certificate is not None
    assert result.report is not None and result.report.symbolic_ok
    ident = load_builtin(name)
    assert wz_residual(ident, result.certificate).num.is_zero
    # boundary normalization: certificate vanishes along k = 0
    assert not result.certificate.num.eval_k(0)


@pytest.mark.parametrize("name", ["theorem1", "theorem3"])
def test_synthesis_reproduces_printed_certificates(name, synthesis):
    printed = load_builtin(name).certificate
    assert synthesis.get(name).certificate.equal(printed)


def test_synthesis_exposes_the_sign_error_in_the_flagged_certificate(synthesis):
    printed = load_builtin("theorem2").certificate
    synth = synthesis.get("theorem2").certificate
    assert not synth.equal(printed)
    assert synth.equal(RatFunc2(-printed.num, printed.den))


def test_synthesis_metadata_is_reported(synthesis):
    result = synthesis.get("theorem1")
    assert result.dispersion_set == (1,)
    assert result.degree_bound_used >= 0


def test_synthesis_never_blesses_a_false_identity():
    rec = builtin_record("theorem1")
    wrong = replace(rec, rhs_base=rec.rhs_base * 2).to_identity()
    try:
        result = synthesize_certificate(wrong)
    except (RuntimeError, DegenerateRatio):
        return
    assert result.status == "NotSummable"
    assert result.certificate is None
