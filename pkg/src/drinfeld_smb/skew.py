"""Skew polynomials, Drinfeld modules, j-invariants, reduction analysis.

A TwistedPoly is sum c_i tau^i with tau the q-power Frobenius and
tau c = c^q tau; multiplication is composition of the additive polynomials
sum c_i X^{q^i}.  A rank-r Drinfeld module is determined by phi_t, a
twisted polynomial of tau-degree r with constant coefficient exactly t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .fq import FqField
from .ratfunc import Place, RatFunc, place_valuation


@dataclass(frozen=True)
class TwistedPoly:
    field: FqField
    coeffs: tuple[RatFunc, ...]  # ascending tau-degree, no trailing zeros

    @staticmethod
    def make(F: FqField, coeffs) -> "TwistedPoly":
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return TwistedPoly(F, tuple(cs))

    @staticmethod
    def zero(F: FqField) -> "TwistedPoly":
        return TwistedPoly(F, ())

    @staticmethod
    def one(F: FqField) -> "TwistedPoly":
        return TwistedPoly(F, (RatFunc.const(F, 1),))

    @property
    def tau_degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TwistedPoly") -> "TwistedPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TwistedPoly.make(self.field, out)

    def scale(self, c: RatFunc) -> "TwistedPoly":
        if c.is_zero():
            return TwistedPoly.zero(self.field)
        return TwistedPoly(self.field, tuple(c * x for x in self.coeffs))


def skew_mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """(f g)_k = sum_{i+j=k} f_i (g_j)^(q^i); composition of additives."""
    if f.is_zero() or g.is_zero():
        return TwistedPoly.zero(f.field)
    F = f.field
    zero = RatFunc.const(F, 0)
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if fi.is_zero():
            continue
        for j, gj in enumerate(g.coeffs):
            if gj.is_zero():
                continue
            out[i + j] = out[i + j] + fi * gj.frobenius(i)
    return TwistedPoly.make(F, out)


@dataclass(frozen=True)
class DrinfeldModule:
    field: FqField
    rank: int
    phi_t: TwistedPoly

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.phi_t.tau_degree != self.rank:
            raise ValueError("phi_t tau-degree must equal the rank")
        t = RatFunc.of_poly(self.field, P.T)
        if self.phi_t.coeffs[0] != t:
            raise ValueError("constant coefficient of phi_t must be t")

    @staticmethod
    def make(F: FqField, coeff_strings) -> "DrinfeldModule":
        coeffs = tuple(RatFunc.parse(F, s) for s in coeff_strings)
        tp = TwistedPoly.make(F, coeffs)
        return DrinfeldModule(F, tp.tau_degree, tp)

    def coefficient_valuations(self, w: Place):
        """[w(a_1), ..., w(a_r)] (tau-degrees 1..r)."""
        return [place_valuation(c, w) for c in self.phi_t.coeffs[1:]]


def phi_of(module: DrinfeldModule, a) -> TwistedPoly:
    """phi_a = sum alpha_i (phi_t)^i for a = sum alpha_i t^i in A."""
    F = module.field
    out = TwistedPoly.zero(F)
    power = TwistedPoly.one(F)
    for i, alpha in enumerate(a):
        if i:
            power = skew_mul(power, module.phi_t)
        if alpha:
            out = out + power.scale(RatFunc.const(F, alpha))
    return out


def j_invariant(module: DrinfeldModule) -> RatFunc:
    """a_1^(q+1)/a_2 for rank 2."""
    if module.rank != 2:
        raise ValueError("j-invariant is defined for rank 2")
    a1, a2 = module.phi_t.coeffs[1], module.phi_t.coeffs[2]
    return a1 ** (module.field.q + 1) / a2


def two_term_j_valuation(module: DrinfeldModule, s: int, w: Place) -> Fraction:
    """w(j) for a two-term module (coefficients at tau^0, tau^s, tau^r):
    j = a_s^((q^r-1)/(q-1)) / a_r^((q^s-1)/(q-1))."""
    q, r = module.field.q, module.rank
    ws = place_valuation(module.phi_t.coeffs[s], w)
    wr = place_valuation(module.phi_t.coeffs[r], w)
    return Fraction(q**r - 1, q - 1) * ws - Fraction(q**s - 1, q - 1) * wr


@dataclass(frozen=True)
class ReductionProfile:
    place: Place
    stable: bool
    reduced_rank: int
    twist_valuation: Fraction

    def twisted_valuations(self, module: DrinfeldModule):
        """Coefficient valuations of b phi b^{-1}, w(b) = twist_valuation:
        w(a_i) - (q^i - 1) w(b).  All >= 0, zero at r', positive above."""
        q = module.field.q
        vals = module.coefficient_valuations(self.place)
        return [
            v - (q ** (i + 1) - 1) * self.twist_valuation
            for i, v in enumerate(vals)
        ]


def reduction_profile(module: DrinfeldModule, w: Place) -> ReductionProfile:
    """Stable-model data at a finite place.

    The twist valuation is v = min_i w(a_i)/(q^i - 1) over 1 <= i <= r with
    a_i != 0, and r' is the largest minimizer: the twisted coefficient
    valuations are then >= 0, vanish at r', and are strictly positive above
    r', which is the rank-r' reduction signature.  phi has stable reduction
    over K itself iff v is an integer (the twist b can be taken in K).
    """
    if w.kind != "finite":
        raise ValueError("reduction is undefined at the infinite place")
    q = module.field.q
    vals = module.coefficient_valuations(w)
    best = None
    r_prime = None
    for i, v in enumerate(vals, start=1):
        if v == float("inf"):
            continue
        ratio = Fraction(v, q**i - 1)
        if best is None or ratio <= best:
            best = ratio
            r_prime = i
    if best is None:
        raise ValueError("phi_t has no nonzero coefficient above tau^0")
    return ReductionProfile(
        place=w,
        stable=(best.denominator == 1),
        reduced_rank=r_prime,
        twist_valuation=best,
    )
