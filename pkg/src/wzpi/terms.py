"""Hypergeometric summands and their exact shift structure.

A summand F(n, k) is a product of Pochhammer factors (c + b*n)_k to integer
powers, divided by k!^fact_pow, times z^k, a polynomial multiplier p(k), and a
constant prefactor.  Right-hand sides are closed forms base^n * prod (a_i)_n^e_i.

Everything here is exact: lattice values are Fractions, shift quotients are
rational functions of (n, k).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import Poly2, Rat, RatFunc2


class PoleError(ArithmeticError):
    """A denominator factor vanished at the requested lattice point."""


@dataclass(frozen=True)
class PochFactor:
    n_coeff: int   # b in (c + b*n)_k
    offset: Rat    # c
    power: int     # multiplicity; positive = numerator, negative = denominator

    def __post_init__(self):
        if self.power == 0:
            raise ValueError("PochFactor power must be nonzero")
        object.__setattr__(self, "offset", Fraction(self.offset))

    def arg_at(self, n: "Rat | int") -> Rat:
        return self.offset + self.n_coeff * Fraction(n)


@dataclass(frozen=True)
class HyperTerm:
    poch: tuple[PochFactor, ...]
    fact_pow: int                      # power of k! in the denominator
    z: Rat                             # geometric base, z^k
    p: tuple[Rat, ...]                 # multiplier polynomial in k, ascending
    prefactor_rational: Rat = Fraction(1)
    prefactor_sqrt: Rat = Fraction(1)  # value under a square root (numeric only)

    def __post_init__(self):
        object.__setattr__(self, "poch", tuple(self.poch))
        object.__setattr__(self, "z", Fraction(self.z))
        object.__setattr__(self, "p", tuple(Fraction(c) for c in self.p))
        object.__setattr__(self, "prefactor_rational", Fraction(self.prefactor_rational))
        object.__setattr__(self, "prefactor_sqrt", Fraction(self.prefactor_sqrt))


@dataclass(frozen=True)
class ClosedForm:
    base: Rat                              # base^n
    poch_n: tuple[tuple[Rat, int], ...]    # (argument, power) pairs, powers nonzero

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(
            self, "poch_n",
            tuple((Fraction(a), int(e)) for (a, e) in self.poch_n))


def poch_exact(arg: "Rat | int", count: int) -> Rat:
    """Rising factorial (arg)_count for integer count (negative allowed)."""
    arg = Fraction(arg)
    if count >= 0:
        v = Fraction(1)
        for j in range(count):
            v *= arg + j
        return v
    v = Fraction(1)
    for j in range(1, -count + 1):
        f = arg - j
        if not f:
            raise PoleError(f"({arg})_{count} hits a zero factor")
        v *= f
    return 1 / v


def p_eval(t: HyperTerm, k: "Rat | int") -> Rat:
    k = Fraction(k)
    v = Fraction(0)
    for c in reversed(t.p):
        v = v * k + c
    return v


def term_value(t: HyperTerm, n: int, k: int) -> Rat:
    """Exact summand value at a lattice point (square-root prefactor excluded).

    Numerator factors may vanish (the value is then 0); a vanishing
    denominator factor raises PoleError.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    v = t.prefactor_rational * p_eval(t, k) * t.z ** k
    for f in t.poch:
        pk = poch_exact(f.arg_at(n), k)
        if f.power > 0:
            v *= pk ** f.power
        else:
            if not pk:
                raise PoleError(
                    f"denominator factor ({f.arg_at(n)})_{k} vanishes at n={n}, k={k}")
            v /= pk ** (-f.power)
    if t.fact_pow:
        v /= poch_exact(1, k) ** t.fact_pow
    return v


def termination_bound(t: HyperTerm, n: int) -> Optional[int]:
    """Largest k with a possibly nonzero summand, or None if the series
    does not terminate at this n.

    A numerator factor with argument v a nonpositive integer kills every
    k > -v, so the bound is min(-v) over such factors.
    """
    bound: Optional[int] = None
    for f in t.poch:
        if f.power <= 0:
            continue
        v = f.arg_at(n)
        if v.denominator == 1 and v <= 0:
            b = -int(v)
            bound = b if bound is None else min(bound, b)
    return bound


def rhs_exact(rhs: ClosedForm, n: int) -> Rat:
    v = rhs.base ** n
    for (arg, e) in rhs.poch_n:
        pk = poch_exact(arg, n)
        if e > 0:
            v *= pk ** e
        else:
            if not pk:
                raise PoleError(f"({arg})_{n} vanishes in a denominator")
            v /= pk ** (-e)
    return v


# -- shift quotients ----------------------------------------------------------

def _p_poly(t: HyperTerm, delta: int) -> Poly2:
    """p(k + delta) as a Poly2."""
    poly = Poly2()
    for i, c in enumerate(t.p):
        poly = poly + Poly2({(0, i): c})
    return poly.shift("k", delta) if delta else poly


def _linear(b: int, c: Rat, k_coeff: int = 1) -> Poly2:
    return Poly2({(1, 0): Fraction(b), (0, 1): Fraction(k_coeff), (0, 0): Fraction(c)})


def shift_quotient_k_parts(t: HyperTerm) -> "tuple[list[Poly2], list[Poly2], Rat]":
    """Factored F(n,k+1)/F(n,k): (numerator factors, denominator factors, scalar)."""
    num: list[Poly2] = []
    den: list[Poly2] = []
    if len(t.p) > 1 or (t.p and t.p[0] != 1):
        num.append(_p_poly(t, 1))
        den.append(_p_poly(t, 0))
    for f in t.poch:
        target = num if f.power > 0 else den
        for _ in range(abs(f.power)):
            target.append(_linear(f.n_coeff, f.offset))
    for _ in range(t.fact_pow):
        den.append(Poly2({(0, 1): Fraction(1), (0, 0): Fraction(1)}))  # k + 1
    return num, den, t.z


def shift_quotient_k(t: HyperTerm) -> RatFunc2:
    """F(n,k+1)/F(n,k) as an explicit rational function of (n, k)."""
    num, den, scal = shift_quotient_k_parts(t)
    np = Poly2.const(scal)
    for f in num:
        np = np * f
    dp = Poly2.const(1)
    for f in den:
        dp = dp * f
    return RatFunc2(np, dp)


def shift_quotient_n_parts(t: HyperTerm, rhs: ClosedForm) \
        -> "tuple[list[Poly2], list[Poly2], Rat]":
    """Factored Fhat(n+1,k)/Fhat(n,k) where Fhat = F / RHS.

    For a factor (c + b*n)_k: shifting n by 1 multiplies the Pochhammer by
      prod_{j=0..b-1} (c+bn+k+j)/(c+bn+j)          when b > 0,
      prod_{j=1..|b|} (c+bn-j)/(c+bn-j+k)          when b < 0,
    all raised to the factor's power.  The RHS contributes base and (a_i + n)
    to its powers in the denominator.
    """
    num: list[Poly2] = []
    den: list[Poly2] = []
    scal = 1 / rhs.base
    for f in t.poch:
        b = f.n_coeff
        if b == 0:
            continue
        pieces: list[tuple[Poly2, Poly2]] = []  # (numerator, denominator) pairs
        if b > 0:
            for j in range(b):
                pieces.append((_linear(b, f.offset + j),
                               _linear(b, f.offset + j, k_coeff=0)))
        else:
            for j in range(1, -b + 1):
                pieces.append((_linear(b, f.offset - j, k_coeff=0),
                               _linear(b, f.offset - j)))
        for (pn, pd) in pieces:
            for _ in range(abs(f.power)):
                if f.power > 0:
                    num.append(pn)
                    den.append(pd)
                else:
                    num.append(pd)
                    den.append(pn)
    for (arg, e) in rhs.poch_n:
        piece = Poly2({(1, 0): Fraction(1), (0, 0): Fraction(arg)})  # arg + n
        for _ in range(abs(e)):
            (den if e > 0 else num).append(piece)
    return num, den, scal


def shift_quotient_n(t: HyperTerm, rhs: ClosedForm) -> RatFunc2:
    """Fhat(n+1,k)/Fhat(n,k) as an explicit rational function of (n, k)."""
    num, den, scal = shift_quotient_n_parts(t, rhs)
    np = Poly2.const(scal)
    for f in num:
        np = np * f
    dp = Poly2.const(1)
    for f in den:
        dp = dp * f
    return RatFunc2(np, dp)


# -- structural reduction at the singular parameter value ----------------------

RAMANUJAN_POCH = {Fraction(1, 2): 3}   # (1/2)_k^3 ...
RAMANUJAN_FACT_POW = 3                 # ... over k!^3
RAMANUJAN_Z = Fraction(-1)
RAMANUJAN_P = (Fraction(1), Fraction(4))


def carlson_substitution(t: HyperTerm, a: int) -> "tuple[dict[Rat, int], int, Rat, tuple[Rat, ...]]":
    """Substitute n = -1/(2a) into the factor list and normalize.

    Factors whose argument becomes 1 are folded into the factorial power
    (since (1)_k = k!).  Returns (argument -> net power, factorial power, z, p).
    """
    if a == 0:
        raise ValueError("a must be a nonzero integer")
    point = Fraction(-1, 2 * a)
    args: dict[Rat, int] = {}
    fact = t.fact_pow
    for f in t.poch:
        v = f.arg_at(point)
        if v == 1:
            fact -= f.power
        else:
            args[v] = args.get(v, 0) + f.power
    return ({v: e for v, e in args.items() if e}, fact, t.z, t.p)


def reduces_to_ramanujan(t: HyperTerm, a: int) -> bool:
    """True iff n = -1/(2a) collapses the summand to the alternating
    (1/2)^3 / k!^3 * (4k+1) * (-1)^k shape."""
    args, fact, z, p = carlson_substitution(t, a)
    return (args == RAMANUJAN_POCH and fact == RAMANUJAN_FACT_POW
            and z == RAMANUJAN_Z and p == RAMANUJAN_P)
