"""The rational function field F = F_q(t), places, and exact valuations.

RatFunc values are reduced fractions of F_q[t] polynomials with monic
denominator; all Drinfeld-module coefficients live here so that every
valuation in the pipeline is an exact rational.  Places are the infinite
place (w(t) = -1) and the monic irreducibles of A; valuations are
normalized so w(F^x) = Z, with w(0) = +infinity (the INF marker).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .fq import FqField

INF = float("inf")


@dataclass(frozen=True)
class RatFunc:
    field: FqField
    num: tuple[int, ...]
    den: tuple[int, ...]

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    # construction ------------------------------------------------------

    @staticmethod
    def make(F: FqField, num, den=P.ONE) -> "RatFunc":
        """Build a reduced fraction with monic denominator."""
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RatFunc(F, P.ZERO, P.ONE)
        if den != P.ONE:
            g = P.gcd(F, num, den)
            if g != P.ONE:
                num = P.divrem(F, num, g)[0]
                den = P.divrem(F, den, g)[0]
            if den[-1] != 1:
                c = F.inv(den[-1])
                num = P.scalar_mul(F, c, num)
                den = P.scalar_mul(F, c, den)
        return RatFunc(F, num, den)

    @staticmethod
    def of_poly(F: FqField, a) -> "RatFunc":
        return RatFunc(F, a, P.ONE)

    @staticmethod
    def const(F: FqField, c: int) -> "RatFunc":
        return RatFunc(F, P.constant(F, c), P.ONE)

    # queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_poly(self) -> bool:
        return self.den == P.ONE

    # arithmetic --------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        F = self.field
        num = P.add(
            F, P.mul(F, self.num, other.den), P.mul(F, other.num, self.den)
        )
        return RatFunc.make(F, num, P.mul(F, self.den, other.den))

    def __neg__(self) -> "RatFunc":
        return RatFunc(self.field, P.neg(self.field, self.num), self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        F = self.field
        if self.den == P.ONE and other.den == P.ONE:
            return RatFunc(F, P.mul(F, self.num, other.num), P.ONE)
        return RatFunc.make(
            F,
            P.mul(F, self.num, other.num),
            P.mul(F, self.den, other.den),
        )

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero in F")
        F = self.field
        return RatFunc.make(
            F,
            P.mul(F, self.num, other.den),
            P.mul(F, self.den, other.num),
        )

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            if self.is_zero():
                raise ZeroDivisionError("0 to a negative power")
            return RatFunc.make(
                self.field,
                P.pow_(self.field, self.den, -e),
                P.pow_(self.field, self.num, -e),
            )
        return RatFunc(
            self.field,
            P.pow_(self.field, self.num, e),
            P.pow_(self.field, self.den, e),
        )

    def frobenius(self, i: int) -> "RatFunc":
        """self^(q^i) by exponent spreading on numerator and denominator."""
        F = self.field
        return RatFunc(
            F,
            P.frobenius_pow(F, self.num, i),
            P.frobenius_pow(F, self.den, i),
        )

    # strings -----------------------------------------------------------

    @staticmethod
    def parse(F: FqField, s: str) -> "RatFunc":
        """Parse "t^3", "(t^2+1)/(t+1)", "1/t"."""
        s = s.replace(" ", "")
        depth = 0
        split = -1
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
                break
        def strip_parens(x: str) -> str:
            while x.startswith("(") and x.endswith(")"):
                x = x[1:-1]
            return x
        if split < 0:
            return RatFunc.of_poly(F, P.parse_poly(F, strip_parens(s)))
        num = P.parse_poly(F, strip_parens(s[:split]))
        den = P.parse_poly(F, strip_parens(s[split + 1:]))
        return RatFunc.make(F, num, den)

    def __str__(self) -> str:
        ns = P.format_poly(self.field, self.num)
        if self.den == P.ONE:
            return ns
        ds = P.format_poly(self.field, self.den)
        if "+" in ns:
            ns = f"({ns})"
        if "+" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"


@dataclass(frozen=True)
class Place:
    """A prime of F_q(t): the infinite place or a monic irreducible of A."""

    field: FqField
    kind: str  # "infinite" | "finite"
    uniformizer: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("infinite", "finite"):
            raise ValueError(f"bad place kind {self.kind!r}")
        if self.kind == "finite":
            if not P.is_monic(self.uniformizer):
                raise ValueError("finite place needs a monic uniformizer")
            if not P.is_irreducible(self.field, self.uniformizer):
                raise ValueError("uniformizer is not irreducible")

    @staticmethod
    def infinite(F: FqField) -> "Place":
        return Place(F, "infinite")

    @staticmethod
    def finite(F: FqField, u) -> "Place":
        return Place(F, "finite", tuple(u))

    @property
    def residue_degree(self) -> int:
        if self.kind == "infinite":
            return 1
        return len(self.uniformizer) - 1

    def __str__(self) -> str:
        if self.kind == "infinite":
            return "infinite"
        return f"({P.format_poly(self.field, self.uniformizer)})"


def place_valuation(x: RatFunc, w: Place):
    """Normalized valuation of x at w; INF for x = 0."""
    if x.is_zero():
        return INF
    F = x.field
    if w.kind == "infinite":
        return Fraction(len(x.den) - len(x.num))
    u = w.uniformizer
    return Fraction(P.ord_at(F, x.num, u) - P.ord_at(F, x.den, u))


def poly_valuation(F: FqField, a, w: Place):
    """Valuation of a polynomial a in A at w."""
    return place_valuation(RatFunc.of_poly(F, a), w)
