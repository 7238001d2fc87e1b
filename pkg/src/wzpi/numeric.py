"""Floating-point evaluation of the catalog: closed forms at real arguments,
series summation with optional alternating-series acceleration, and the
machine-precision spot checks used by the test suite and CLI.

The closed forms are products of Pochhammer symbols at rational offsets, so
everything reduces to a log-gamma kernel (Lanczos approximation, g = 7, with
reflection for arguments left of 1/2 and explicit sign tracking).  Series at
the analytic-continuation point converge like k^(-1/2) with alternating
signs, far too slowly to sum directly; the accelerator maps n terms of an
alternating series to roughly 1.76*n digits (error ~ (3 + sqrt(8))^(-n)), so
fifty terms give full double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .terms import ClosedForm, HyperTerm, PoleError, p_eval
from .wz import WZIdentity

__all__ = [
    "CarlsonCheck",
    "NoConvergence",
    "NumericConfig",
    "carlson_point_check",
    "log_gamma",
    "pi_from_series",
    "poch_numeric",
    "rhs_numeric",
    "series_numeric",
    "term_numeric",
    "trig_identity_check",
    "trig_root_residuals",
]


class NoConvergence(ArithmeticError):
    """Raised when a series fails to reach the requested tolerance."""


@dataclass(frozen=True)
class NumericConfig:
    """Knobs for series evaluation.

    acceleration: "none" sums directly with an alternating/decreasing tail
    bound; "alternating" applies the Chebyshev-weighted accelerator (only
    valid when consecutive terms truly alternate in sign).
    """

    target_abs_tol: float = 1e-10
    max_terms: int = 10000
    acceleration: str = "none"


# -- log-gamma kernel ----------------------------------------------------------

_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _sinpi(x: float) -> float:
    """sin(pi*x) computed from the nearest-integer residual for accuracy."""
    r = x - round(x)
    s = math.sin(math.pi * r)
    return s if round(x) % 2 == 0 else -s


def _lanczos_positive(x: float) -> float:
    """log Gamma(x) for x >= 0.5."""
    xm1 = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (xm1 + i)
    t = xm1 + 7.5
    return _HALF_LOG_2PI + (xm1 + 0.5) * math.log(t) - t + math.log(acc)


def log_gamma(x: float) -> tuple[float, int]:
    """(log |Gamma(x)|, sign of Gamma(x)); raises PoleError at 0, -1, -2, ..."""
    x = float(x)
    if x >= 0.5:
        return _lanczos_positive(x), 1
    if x == math.floor(x):
        raise PoleError(f"gamma pole at {x}")
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    s = _sinpi(x)
    value = math.log(math.pi / abs(s)) - log_gamma(1.0 - x)[0]
    return value, 1 if s > 0 else -1


def poch_numeric(arg: float, count: float) -> float:
    """Pochhammer (arg)_count = Gamma(arg + count)/Gamma(arg) for real count."""
    arg = float(arg)
    count = float(count)
    if count == 0.0:
        return 1.0
    la, sa = log_gamma(arg + count)
    lb, sb = log_gamma(arg)
    return sa * sb * math.exp(la - lb)


# -- closed form and term values at real arguments ------------------------------


def rhs_numeric(rhs: ClosedForm, n: float) -> float:
    """Closed-form value base^n * prod (arg)_n^e at a real argument n."""
    value = float(rhs.base) ** float(n)
    for arg, power in rhs.poch_n:
        value *= poch_numeric(float(arg), n) ** power
    return value


def term_numeric(t: HyperTerm, n: float, k: int) -> float:
    """Summand value at real n and integer k >= 0 (prefactors included)."""
    value = float(t.prefactor_rational) * math.sqrt(float(t.prefactor_sqrt))
    value *= float(t.z) ** k * float(p_eval(t, k))
    for f in t.poch:
        value *= poch_numeric(f.n_coeff * n + float(f.offset), k) ** f.power
    value /= math.factorial(k) ** t.fact_pow
    return value


def _term_ratio(t: HyperTerm, n: float) -> Callable[[int], float]:
    """Returns k -> t(k+1)/t(k) evaluated in floats."""
    z = float(t.z)
    pc = [float(c) for c in t.p]

    def ratio(k: int) -> float:
        r = z
        pk = sum(c * k ** i for i, c in enumerate(pc))
        pk1 = sum(c * (k + 1) ** i for i, c in enumerate(pc))
        if len(pc) > 1:
            r *= pk1 / pk
        for f in t.poch:
            r *= (f.n_coeff * n + float(f.offset) + k) ** f.power
        r /= float(k + 1) ** t.fact_pow
        return r

    return ratio


def _accelerated_alternating(a: list[float]) -> float:
    """Chebyshev-weighted sum of sum_k (-1)^k a_k from the first len(a) terms."""
    m = len(a)
    d = (3.0 + math.sqrt(8.0)) ** m
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(m):
        c = b - c
        s += c * a[k]
        b *= (k + m) * (k - m) / ((k + 0.5) * (k + 1.0))
    return s / d


def series_numeric(
    t: HyperTerm | WZIdentity, n: float, cfg: Optional[NumericConfig] = None
) -> float:
    """Sum the series over k >= 0 at a real argument n.

    Direct summation stops once the term magnitude is below tolerance (valid
    for alternating or geometrically decaying tails); the accelerated path
    needs only O(digits) terms of a strictly alternating series.
    """
    if isinstance(t, WZIdentity):
        t = t.term
    cfg = cfg or NumericConfig()
    ratio = _term_ratio(t, n)
    t0 = term_numeric(t, n, 0)
    if cfg.acceleration == "alternating":
        if float(t.z) >= 0:
            raise ValueError("alternating acceleration needs negative z")
        m = int(math.log(4.0 / cfg.target_abs_tol) / math.log(3.0 + math.sqrt(8.0))) + 3
        m = min(m, cfg.max_terms)
        a = [abs(t0)]
        for k in range(m - 1):
            a.append(a[-1] * abs(ratio(k)))
        return math.copysign(1.0, t0) * _accelerated_alternating(a)
    total = 0.0
    tk = t0
    for k in range(cfg.max_terms):
        total += tk
        nxt = tk * ratio(k)
        if abs(nxt) <= cfg.target_abs_tol and abs(nxt) <= abs(tk):
            return total
        tk = nxt
    raise NoConvergence(
        f"series did not reach {cfg.target_abs_tol:g} within {cfg.max_terms} terms"
    )


# -- analytic-continuation spot check -------------------------------------------


@dataclass(frozen=True)
class CarlsonCheck:
    """Both sides of an identity evaluated at the off-lattice point n = -1/(2a).

    At that point the closed form must equal 2/pi, and the (no longer
    terminating) series must converge to the same value.  series_vs_rhs is
    the residual between the two computed sides; rhs_error and series_error
    compare each side against 2/pi.
    """

    identity_name: str
    point: Fraction
    rhs_value: float
    series_value: float
    target: float
    rhs_error: float
    series_error: float
    series_vs_rhs: float


def carlson_point_check(
    ident: WZIdentity,
    cfg: Optional[NumericConfig] = None,
    *,
    point: Optional[Fraction] = None,
) -> CarlsonCheck:
    """Evaluate closed form and series at n = -1/(2a) (or a supplied point)."""
    if point is None:
        if ident.carlson_a is None:
            raise ValueError(f"{ident.name} has no continuation point")
        point = Fraction(-1, 2 * ident.carlson_a)
    if ident.rhs is None:
        raise ValueError(f"{ident.name} has no closed form")
    cfg = cfg or NumericConfig(target_abs_tol=1e-12, acceleration="alternating")
    target = 2.0 / math.pi
    rhs_value = rhs_numeric(ident.rhs, float(point))
    series_value = series_numeric(ident.term, float(point), cfg)
    return CarlsonCheck(
        identity_name=ident.name,
        point=point,
        rhs_value=rhs_value,
        series_value=series_value,
        target=target,
        rhs_error=abs(rhs_value - target),
        series_error=abs(series_value - target),
        series_vs_rhs=abs(series_value - rhs_value),
    )


# -- pi estimators ---------------------------------------------------------------


def pi_from_series(
    name: str,
    cfg: Optional[NumericConfig] = None,
    *,
    terms: Optional[int] = None,
) -> float:
    """Estimate pi from one of the two numeric-kind catalog series.

    The alternating series sums to 2/pi (accelerated; `terms` caps the number
    of accelerator terms), the positive geometric one to 1/pi (summed
    directly; each term adds roughly eight digits).
    """
    from .catalog import load_builtin

    cfg = cfg or NumericConfig(target_abs_tol=1e-13)
    t = load_builtin(name).term
    if float(t.z) < 0:
        m = terms or (
            int(math.log(4.0 / cfg.target_abs_tol) / math.log(3.0 + math.sqrt(8.0)))
            + 3
        )
        m = min(m, cfg.max_terms)
        ratio = _term_ratio(t, 0.0)
        t0 = term_numeric(t, 0.0, 0)
        a = [abs(t0)]
        for k in range(m - 1):
            a.append(a[-1] * abs(ratio(k)))
        return 2.0 / (math.copysign(1.0, t0) * _accelerated_alternating(a))
    total = 0.0
    tk = term_numeric(t, 0.0, 0)
    ratio = _term_ratio(t, 0.0)
    limit = terms if terms is not None else cfg.max_terms
    for k in range(limit):
        total += tk
        if terms is None and abs(tk) < cfg.target_abs_tol * abs(total):
            break
        tk *= ratio(k)
    else:
        if terms is None:
            raise NoConvergence("series did not settle within max_terms")
    return 1.0 / total


# -- trigonometric closed-form helpers -------------------------------------------


def trig_identity_check() -> float:
    """|cos(pi/5) + cos(2 pi/5) - sqrt(5)/2| (exactly zero in real arithmetic)."""
    return abs(math.cos(math.pi / 5) + math.cos(2 * math.pi / 5) - math.sqrt(5) / 2)


def trig_root_residuals() -> tuple[float, float]:
    """Residuals of 4x^2 - 2x - 1 at its two roots cos(pi/5) and cos(3 pi/5)."""

    def quad(x: float) -> float:
        return 4 * x * x - 2 * x - 1

    return quad(math.cos(math.pi / 5)), quad(math.cos(3 * math.pi / 5))
