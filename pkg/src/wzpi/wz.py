"""WZ-pair verification for terminating hypergeometric identities.

For a summand F(n, k) with row closed form RHS(n), let Fhat = F / RHS.  A
certificate R(n, k) proves the identity when   s - 1 = R(n,k+1) * r - R(n,k)
holds as a rational-function identity, where r = F(n,k+1)/F(n,k) and
s = Fhat(n+1,k)/Fhat(n,k).  That is the WZ relation
Fhat(n+1,k) - Fhat(n,k) = G(n,k+1) - G(n,k) with G = R * Fhat, divided
through by Fhat; cross-multiplication decides it exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import Poly2, Rat, RatFunc2
from .terms import (ClosedForm, HyperTerm, PoleError, p_eval, poch_exact,
                    rhs_exact, shift_quotient_k, shift_quotient_n, term_value,
                    termination_bound)
from .unipoly import UniPoly


class MissingCertificate(ValueError):
    """The requested check needs a certificate the identity does not carry."""


class PoleOnLattice(ArithmeticError):
    """A certificate denominator genuinely vanishes at a lattice point."""


@dataclass(frozen=True)
class WZIdentity:
    name: str
    term: HyperTerm
    rhs: Optional[ClosedForm]
    certificate: Optional[RatFunc2]
    carlson_a: Optional[int]
    kind: str  # "wz" (terminating, provable) or "numeric" (summation target only)


@dataclass
class CertReport:
    """Outcome of the certificate checks; None marks a check that was not run.

    The overall verdict is the conjunction of the flags that did run.
    """
    identity_name: str
    symbolic_ok: Optional[bool] = None
    boundary_ok: Optional[bool] = None
    base_case_ok: Optional[bool] = None
    exact_sums_ok: Optional[bool] = None
    n_checked: int = 0
    failure_detail: str = ""

    @property
    def ok(self) -> bool:
        flags = (self.symbolic_ok, self.boundary_ok, self.base_case_ok,
                 self.exact_sums_ok)
        ran = [f for f in flags if f is not None]
        return bool(ran) and all(ran)

    def merged(self, other: "CertReport") -> "CertReport":
        def pick(a, b):
            return b if b is not None else a
        detail = "; ".join(x for x in (self.failure_detail, other.failure_detail) if x)
        return CertReport(
            identity_name=self.identity_name,
            symbolic_ok=pick(self.symbolic_ok, other.symbolic_ok),
            boundary_ok=pick(self.boundary_ok, other.boundary_ok),
            base_case_ok=pick(self.base_case_ok, other.base_case_ok),
            exact_sums_ok=pick(self.exact_sums_ok, other.exact_sums_ok),
            n_checked=max(self.n_checked, other.n_checked),
            failure_detail=detail,
        )


def _require_wz(ident: WZIdentity) -> None:
    if ident.kind != "wz" or ident.rhs is None:
        raise ValueError(f"{ident.name}: not a terminating identity with a closed form")


def wz_residual(ident: WZIdentity, certificate: Optional[RatFunc2] = None) -> RatFunc2:
    """(s - 1) - (R(n,k+1)*r - R(n,k)) as an exact rational function.

    Zero iff the certificate proves the identity.
    """
    _require_wz(ident)
    cert = certificate if certificate is not None else ident.certificate
    if cert is None:
        raise MissingCertificate(f"{ident.name} carries no certificate")
    r = shift_quotient_k(ident.term)
    s = shift_quotient_n(ident.term, ident.rhs)
    return (s - 1) - (cert.shift("k", 1) * r - cert)


def verify_certificate(ident: WZIdentity, n_scan: int = 20) -> CertReport:
    """Symbolic WZ check plus boundary and base-case checks.

    Also scans the summation support for certificate-denominator zeros up to
    n = n_scan; hits are reported in failure_detail but do not flip any flag
    (the symbolic identity is a polynomial statement, and boundary values are
    handled exactly by the telescoping probe).
    """
    _require_wz(ident)
    if ident.certificate is None:
        raise MissingCertificate(f"{ident.name} carries no certificate")
    report = CertReport(identity_name=ident.name)
    cert = ident.certificate

    residual = wz_residual(ident)
    report.symbolic_ok = residual.num.is_zero
    if not report.symbolic_ok:
        nterms = len(residual.num.terms)
        report.failure_detail = (
            f"WZ residual is a nonzero rational function "
            f"({nterms} monomials in the numerator)")

    num_at_0 = cert.num.eval_k(0)
    den_at_0 = cert.den.eval_k(0)
    report.boundary_ok = (not num_at_0) and bool(den_at_0)
    if not report.boundary_ok:
        report.failure_detail = "; ".join(
            x for x in (report.failure_detail,
                        "certificate does not vanish at k = 0") if x)

    report.base_case_ok = check_base_case(ident)
    if not report.base_case_ok:
        report.failure_detail = "; ".join(
            x for x in (report.failure_detail, "base case n = 0 sum differs") if x)

    poles = []
    for n in range(n_scan + 1):
        bound = termination_bound(ident.term, n)
        if bound is None:
            break
        for k in range(bound + 1):
            if not cert.den.eval(n, k):
                poles.append((n, k))
    if poles:
        report.failure_detail = "; ".join(
            x for x in (report.failure_detail,
                        f"certificate denominator vanishes on support at {poles[:4]}")
            if x)
    return report


def check_base_case(ident: WZIdentity) -> bool:
    """Exact equality of the n = 0 row sum with the closed form (which is 1)."""
    _require_wz(ident)
    bound = termination_bound(ident.term, 0)
    if bound is None:
        raise ValueError(f"{ident.name}: series does not terminate at n = 0")
    total = sum(term_value(ident.term, 0, k) for k in range(bound + 1))
    return total == rhs_exact(ident.rhs, 0)


def verify_exact_sums(ident: WZIdentity, n_max: int = 20) -> CertReport:
    """Exact row sums against the closed form for n = 0..n_max."""
    _require_wz(ident)
    report = CertReport(identity_name=ident.name)
    for n in range(n_max + 1):
        bound = termination_bound(ident.term, n)
        if bound is None:
            raise ValueError(f"{ident.name}: series does not terminate at n = {n}")
        total = sum(term_value(ident.term, n, k) for k in range(bound + 1))
        expected = rhs_exact(ident.rhs, n)
        if total != expected:
            report.exact_sums_ok = False
            report.n_checked = n
            report.failure_detail = (
                f"row sum mismatch at n = {n}: {total} != {expected}")
            return report
    report.exact_sums_ok = True
    report.n_checked = n_max
    return report


# -- exact values of G on the lattice ------------------------------------------

def _poch_unipoly(n_coeff: int, offset: Rat, k: int) -> UniPoly:
    """(offset + n_coeff*n)_k as a polynomial in n."""
    prod = UniPoly.const(1)
    for j in range(k):
        prod = prod * UniPoly((offset + j, n_coeff))
    return prod


def g_value(ident: WZIdentity, n: int, k: int) -> Rat:
    """Exact G(n, k) = R(n,k) * F(n,k) / RHS(n), resolving removable 0/0.

    When the certificate denominator vanishes at (n, k), G is evaluated as a
    univariate rational function of n at fixed k: every Pochhammer factor is a
    polynomial in n there, so the removable singularity cancels by deflating
    the shared (n - n0) factors.  A genuine pole raises PoleOnLattice.
    """
    _require_wz(ident)
    if ident.certificate is None:
        raise MissingCertificate(f"{ident.name} carries no certificate")
    cert = ident.certificate
    t = ident.term
    rhs_val = rhs_exact(ident.rhs, n)

    den_val = cert.den.eval(n, k)
    if den_val:
        return (cert.num.eval(n, k) / den_val) * term_value(t, n, k) / rhs_val

    # 0/0 candidate: build A(nu)/B(nu) = R(nu,k) * F(nu,k) at fixed k.
    scalar = t.prefactor_rational * p_eval(t, k) * t.z ** k
    if t.fact_pow:
        scalar /= poch_exact(1, k) ** t.fact_pow
    a_poly = UniPoly(cert.num.eval_k(k)) * scalar
    b_poly = UniPoly(cert.den.eval_k(k))
    for f in t.poch:
        piece = _poch_unipoly(f.n_coeff, f.offset, k) ** abs(f.power)
        if f.power > 0:
            a_poly = a_poly * piece
        else:
            b_poly = b_poly * piece
    if a_poly.is_zero:
        return Fraction(0)
    ord_a, a_defl = a_poly.root_multiplicity(n)
    ord_b, b_defl = b_poly.root_multiplicity(n)
    if ord_b > ord_a:
        raise PoleOnLattice(
            f"{ident.name}: G has a pole of order {ord_b - ord_a} at (n={n}, k={k})")
    if ord_b < ord_a:
        return Fraction(0)
    return a_defl.eval(n) / b_defl.eval(n) / rhs_val


def telescoping_probe(ident: WZIdentity, n: int, k_max: int) -> Rat:
    """Exact sum of G(n,k+1) - G(n,k) over k = 0..k_max.

    Telescopes to G(n, k_max+1) - G(n, 0); every intermediate G value is
    evaluated exactly, so a genuine certificate pole inside the range raises
    PoleOnLattice rather than being silently skipped.
    """
    values = [g_value(ident, n, k) for k in range(k_max + 2)]
    total = sum(values[k + 1] - values[k] for k in range(k_max + 1))
    assert total == values[-1] - values[0]
    return total
