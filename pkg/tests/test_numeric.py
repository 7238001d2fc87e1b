"""Floating-point layer: log-gamma, numeric closed forms, series summation
with alternating-series acceleration, and the machine-precision pi targets."""
from __future__ import annotations

import math
import random
from fractions import Fraction

import mpmath
import pytest

from wzpi import (
    HyperTerm,
    NoConvergence,
    NumericConfig,
    PochFactor,
    PoleError,
    builtin_record,
    carlson_point_check,
    load_builtin,
    log_gamma,
    pi_from_series,
    poch_exact,
    poch_numeric,
    rhs_exact,
    rhs_numeric,
    trig_identity_check,
    trig_root_residuals,
)
from wzpi.numeric import series_numeric

from conftest import THEOREM_NAMES, WZ_NAMES

mpmath.mp.dps = 40

# alternating probe series with known limits
LN2_TERM = HyperTerm(poch=(PochFactor(0, 1, 2), PochFactor(0, 2, -1)),
                     fact_pow=1, z=-1, p=(1,))
LEIBNIZ_TERM = HyperTerm(poch=(PochFactor(0, Fraction(1, 2), 1),
                               PochFactor(0, Fraction(3, 2), -1)),
                         fact_pow=0, z=-1, p=(1,))
CATALAN_TERM = HyperTerm(poch=(PochFactor(0, Fraction(1, 2), 2),
                               PochFactor(0, Fraction(3, 2), -2)),
                         fact_pow=0, z=-1, p=(1,))
CATALAN = 0.915965594177219015054603514932

ALT_CFG = NumericConfig(target_abs_tol=1e-12, acceleration="alternating")


# -- log-gamma ----------------------------------------------------------------------

def test_log_gamma_spot_values():
    la, sign = log_gamma(0.5)
    assert sign == 1 and abs(la - math.log(math.sqrt(math.pi))) < 1e-14
    la, sign = log_gamma(5.0)
    assert sign == 1 and abs(la - math.log(24.0)) < 1e-14
    la, sign = log_gamma(-0.5)
    assert sign == -1 and abs(la - math.log(2 * math.sqrt(math.pi))) < 1e-14


def test_log_gamma_matches_stdlib_on_positive_axis():
    rng = random.Random(20260814)
    for _ in range(200):
        x = rng.uniform(1e-3, 30.0)
        la, sign = log_gamma(x)
        assert sign == 1
        assert abs(la - math.lgamma(x)) < 1e-12 * max(1.0, abs(la))


def test_log_gamma_matches_high_precision_oracle():
    for x in (0.25, 0.75, 1.5, 2.5, 7.25, 19.875, -0.25, -3.7, -8.125):
        la, sign = log_gamma(x)
        g = mpmath.gamma(x)
        assert sign == mpmath.sign(g)
        assert abs(la - float(mpmath.log(abs(g)))) < 1e-12 * max(1.0, abs(la))


def test_log_gamma_recurrence():
    rng = random.Random(1103)
    for _ in range(200):
        x = rng.uniform(1e-2, 30.0)
        la1, s1 = log_gamma(x + 1.0)
        la0, s0 = log_gamma(x)
        assert s0 == s1 == 1
        assert abs(la1 - la0 - math.log(x)) < 1e-12 * max(1.0, abs(la1))


def test_log_gamma_reflection():
    rng = random.Random(4821)
    checked = 0
    while checked < 200:
        x = rng.uniform(-10.0, 10.0)
        if abs(x - round(x)) < 1e-3:
            continue
        la_x, s_x = log_gamma(x)
        la_r, s_r = log_gamma(1.0 - x)
        # Gamma(x) Gamma(1-x) sin(pi x) / pi == 1
        value = (s_x * s_r * math.exp(la_x + la_r)
                 * math.sin(math.pi * (x - math.floor(x)))
                 * (1 if math.floor(x) % 2 == 0 else -1) / math.pi)
        assert abs(value - 1.0) < 1e-12
        checked += 1


def test_log_gamma_poles():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            log_gamma(x)


def test_gamma_quarter_ratio_against_frozen_oracle():
    la_14, _ = log_gamma(0.25)
    la_34, _ = log_gamma(0.75)
    ratio = math.exp(la_14 - la_34)
    assert abs(ratio - 2.95867511918863889231082135773) < 1e-13


# -- numeric Pochhammer and closed forms ----------------------------------------------

def test_poch_numeric_of_zero_count_is_exactly_one():
    assert poch_numeric(Fraction(3, 7), 0) == 1.0
    assert poch_numeric(-2.5, 0) == 1.0


def test_poch_numeric_matches_exact_values():
    rng = random.Random(7)
    checked = 0
    while checked < 100:
        arg = Fraction(rng.randint(-40, 40), rng.choice([1, 2, 3, 4, 6]))
        count = rng.randint(0, 15)
        if arg.denominator == 1 and arg <= 0:
            continue    # gamma pole: outside the numeric contract
        exact = poch_exact(arg, count)
        got = poch_numeric(arg, count)
        assert abs(got - float(exact)) <= 1e-11 * abs(float(exact))
        checked += 1


@pytest.mark.parametrize("name", WZ_NAMES)
def test_rhs_numeric_tracks_exact_rhs(name):
    rhs = load_builtin(name).rhs
    for n in range(16):
        exact = float(rhs_exact(rhs, n))
        got = rhs_numeric(rhs, n)
        assert abs(got - exact) <= 1e-12 * abs(exact)


def test_rhs_numeric_at_rational_points_matches_oracle():
    rhs = load_builtin("theorem1").rhs
    pt = Fraction(-1, 2)
    got = rhs_numeric(rhs, pt)
    # closed form: base^n * prod Gamma-ratio factors, via high precision
    expected = mpmath.mpf(1)
    expected *= mpmath.power(mpmath.mpf(rhs.base.numerator)
                             / rhs.base.denominator, mpmath.mpf(-0.5))
    for arg, e in rhs.poch_n:
        a = mpmath.mpf(arg.numerator) / arg.denominator
        expected *= (mpmath.gamma(a + mpmath.mpf(-0.5)) / mpmath.gamma(a)) ** e
    assert abs(got - float(expected)) < 1e-13


# -- series summation ------------------------------------------------------------------

def test_direct_summation_of_exponential_series():
    term = HyperTerm(poch=(), fact_pow=1, z=Fraction(1, 2), p=(1,))
    v = series_numeric(term, 0, NumericConfig(target_abs_tol=1e-12))
    assert abs(v - math.exp(0.5)) < 1e-12


def test_direct_summation_raises_on_slow_series():
    slow = HyperTerm(poch=(PochFactor(0, 1, 2), PochFactor(0, 2, -2)),
                     fact_pow=0, z=1, p=(1,))
    with pytest.raises(NoConvergence):
        series_numeric(slow, 0, NumericConfig(target_abs_tol=1e-10))


def test_accelerator_reaches_ln2():
    v = series_numeric(LN2_TERM, 0, ALT_CFG)
    assert abs(v - math.log(2.0)) < 1e-10


def test_accelerator_reaches_pi_over_4():
    v = series_numeric(LEIBNIZ_TERM, 0, ALT_CFG)
    assert abs(v - math.pi / 4.0) < 1e-10


def test_accelerator_reaches_catalan_constant():
    v = series_numeric(CATALAN_TERM, 0, ALT_CFG)
    assert abs(v - CATALAN) < 1e-10
    assert abs(CATALAN - float(mpmath.catalan)) < 1e-15


# -- rational-point checks --------------------------------------------------------------

@pytest.mark.parametrize("name", THEOREM_NAMES)
def test_rational_point_checks_hit_two_over_pi(name):
    chk = carlson_point_check(load_builtin(name))
    assert chk.point == Fraction(-1, 2 * builtin_record(name).carlson_a)
    assert chk.target == 2.0 / math.pi
    assert chk.rhs_error < 1e-9
    assert chk.series_error < 1e-9
    assert chk.series_vs_rhs < 1e-9


def test_identity_extends_off_the_standard_point():
    chk = carlson_point_check(load_builtin("theorem1"), point=Fraction(-1, 4))
    assert chk.series_vs_rhs < 1e-12
    assert chk.rhs_error > 0.1          # off-point value is far from 2/pi


@pytest.mark.parametrize("name", THEOREM_NAMES)
def test_series_value_matches_high_precision_oracle(name):
    ident = load_builtin(name)
    chk = carlson_point_check(ident)
    assert abs(chk.rhs_value - float(2 / mpmath.pi)) < 1e-9


def test_theorem6_closed_form_special_value():
    ident = load_builtin("theorem6")
    got = rhs_numeric(ident.rhs, Fraction(-1, 2))
    cos_sum = math.cos(math.pi / 5) + math.cos(2 * math.pi / 5)
    special = math.sqrt(5.0) / (math.pi * cos_sum)
    assert abs(got - special) < 1e-12


def test_half_angle_cosine_sum_identity():
    assert trig_identity_check() < 1e-15
    r1, r2 = trig_root_residuals()
    assert abs(r1) < 1e-12 and abs(r2) < 1e-12


# -- pi estimates ------------------------------------------------------------------------

def test_two_term_tail_estimate_reaches_double_precision():
    est = pi_from_series("r1103", terms=2)
    assert abs(est - math.pi) < 1e-12


def test_one_term_estimate_matches_frozen_error():
    est = pi_from_series("r1103", terms=1)
    err = abs(est - math.pi)
    assert 7.5e-8 < err < 7.8e-8


def test_accelerated_alternating_estimate():
    est = pi_from_series("ramanujan", NumericConfig(target_abs_tol=1e-12,
                                                    acceleration="alternating"))
    assert abs(est - math.pi) < 1e-12


def test_unknown_series_name_rejected():
    with pytest.raises(KeyError):
        pi_from_series("not_a_series")


def test_no_convergence_propagates_through_pi_estimates():
    with pytest.raises(NoConvergence):
        pi_from_series("r1103", NumericConfig(target_abs_tol=1e-40, max_terms=3))
