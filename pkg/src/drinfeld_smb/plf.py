"""Exact piecewise-linear Herbrand psi-function calculus.

A psi-function is continuous, convex, identity on [-1, 0], with finitely
many knots and a final slope; it is stored as an exact knot list in normal
form (no collinear interior knots), so equality of functions is equality of
representations.  The functions built here are the transition functions
psi(y) = integral from 0 to y of #G^0 / #G^r dr of the relevant extensions,
which compose along towers and carry the ramification filtration in their
slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError


def characteristic(q: int) -> int:
    """Smallest prime factor of q (= p for a prime power)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    f = 2
    while f * f <= q:
        if q % f == 0:
            return f
        f += 1
    return q


@dataclass(frozen=True)
class PiecewiseLinear:
    """Convex increasing piecewise-linear function on [-1, infinity),
    identity on [-1, 0].  knots are (y, value) pairs in strictly increasing
    y starting at (-1, -1); the last segment has slope final_slope."""

    knots: tuple[tuple[Fraction, Fraction], ...]
    final_slope: Fraction

    @staticmethod
    def make(knots, final_slope) -> "PiecewiseLinear":
        ks = [(Fraction(y), Fraction(v)) for y, v in knots]
        fs = Fraction(final_slope)
        if not ks or ks[0] != (Fraction(-1), Fraction(-1)):
            ks.insert(0, (Fraction(-1), Fraction(-1)))
        # normal form: drop interior knots where the slope does not change
        out = [ks[0]]
        for i in range(1, len(ks)):
            y, v = ks[i]
            nxt_slope = (
                Fraction(ks[i + 1][1] - v, ks[i + 1][0] - y)
                if i + 1 < len(ks)
                else fs
            )
            prev_slope = Fraction(v - out[-1][1], y - out[-1][0])
            if nxt_slope != prev_slope:
                out.append((y, v))
        return PiecewiseLinear(tuple(out), fs)

    def __post_init__(self):
        ks = self.knots
        if not ks or ks[0] != (Fraction(-1), Fraction(-1)):
            raise ValueError("domain must start at the knot (-1, -1)")
        for (y0, _), (y1, _) in zip(ks, ks[1:]):
            if y0 >= y1:
                raise ValueError("knots must have strictly increasing y")
        slopes = self.slopes()
        if any(s <= 0 for s in slopes):
            raise ValueError("slopes must be positive")
        if any(s0 > s1 for s0, s1 in zip(slopes, slopes[1:])):
            raise ValueError("slopes must be non-decreasing (convexity)")
        if self(Fraction(0)) != 0:
            raise ValueError("psi must be the identity on [-1, 0]")

    @staticmethod
    def identity() -> "PiecewiseLinear":
        return PiecewiseLinear.make([], Fraction(1))

    def slopes(self) -> list[Fraction]:
        """Slope of every piece left to right, final slope last."""
        out = [
            Fraction(v1 - v0, y1 - y0)
            for (y0, v0), (y1, v1) in zip(self.knots, self.knots[1:])
        ]
        out.append(self.final_slope)
        return out

    def __call__(self, y) -> Fraction:
        y = Fraction(y)
        if y < -1:
            raise ValueError("psi is defined on [-1, infinity)")
        ks = self.knots
        for i in range(len(ks) - 1, -1, -1):
            y0, v0 = ks[i]
            if y >= y0:
                slope = self.slopes()[i] if i < len(ks) - 1 else self.final_slope
                return v0 + slope * (y - y0)
        raise AssertionError("unreachable")

    def inverse(self, x) -> Fraction:
        """Preimage of x (the function is strictly increasing)."""
        x = Fraction(x)
        if x < -1:
            raise ValueError("values lie in [-1, infinity)")
        ks = self.knots
        slopes = self.slopes()
        for i in range(len(ks) - 1, -1, -1):
            y0, v0 = ks[i]
            if x >= v0:
                return y0 + Fraction(x - v0, slopes[i] if i < len(ks) - 1 else self.final_slope)
        raise AssertionError("unreachable")

    def break_ys(self) -> list[Fraction]:
        """Positive break y-coordinates (wild ramification breaks); the
        tame break at 0, when present, is excluded."""
        return [y for y, _ in self.knots[1:] if y > 0]

    def pieces(self):
        """(from_y, to_y or None, slope, intercept) per piece; the last
        piece is unbounded (to_y None).  intercept is the value at y = 0
        of the extended line."""
        out = []
        slopes = self.slopes()
        for i, (y0, v0) in enumerate(self.knots):
            s = slopes[i]
            to_y = self.knots[i + 1][0] if i + 1 < len(self.knots) else None
            out.append((y0, to_y, s, v0 - s * y0))
        return out


def plf_compose(f: PiecewiseLinear, g: PiecewiseLinear) -> PiecewiseLinear:
    """f after g: y -> f(g(y)).  Knots are g's knots merged with the
    g-preimages of f's knots; slopes multiply piece by piece."""
    ys = {y for y, _ in g.knots[1:]}
    for x, _ in f.knots[1:]:
        y = g.inverse(x)
        if y > -1:
            ys.add(y)
    knots = [(y, f(g(y))) for y in sorted(ys)]
    return PiecewiseLinear.make(knots, f.final_slope * g.final_slope)


def psi_infinite_wild(w_j, w_0, E: int, q: int) -> PiecewiseLinear:
    """psi of the division-field extension at the infinite place in the
    wild case: breaks r_n = (-w(j) + w_0 q^n)/(q - 1) for n = m..1, slopes
    E, qE, ..., q^m E, with m located by w(j) in (w_0 q^(m+1), w_0 q^m)."""
    w_j, w_0 = Fraction(w_j), Fraction(w_0)
    p = characteristic(q)
    if w_0 >= 0:
        raise HypothesisError("w_0 must be negative")
    if not w_j < w_0 * q:
        raise HypothesisError("tame range: w(j) >= w_0 q")
    if w_j.denominator == 1 and w_j % p == 0:
        raise HypothesisError("p divides w(j)")
    if E % p == 0:
        raise HypothesisError("p divides E")
    m = 1
    while not (w_0 * q ** (m + 1) < w_j):
        m += 1
    E = Fraction(E)
    breaks = [Fraction(-w_j + w_0 * q**n, q - 1) for n in range(m, 0, -1)]
    knots = []
    y_prev, v_prev = Fraction(0), Fraction(0)
    slope = E
    for r in breaks:
        knots.append((y_prev, v_prev))
        v_prev = v_prev + slope * (r - y_prev)
        y_prev = r
        slope *= q
    knots.append((y_prev, v_prev))
    return PiecewiseLinear.make(knots, slope)


def psi_splitting_field(q_pow: int, v_c: int, v_a: int, e: int) -> PiecewiseLinear:
    """psi of the splitting field of X^(q^s) + aX - c over a local field:
    pieces y, ey on [0, R], e q^s y - (q^s - 1) e R, with
    R = v_a q^s/(q^s - 1) - v_c."""
    p = characteristic(q_pow)
    if v_c % p == 0:
        raise HypothesisError("p divides v_c")
    if e % p == 0:
        raise HypothesisError("p divides e")
    if not Fraction(-v_c, q_pow) < v_a - v_c:
        raise HypothesisError("Newton polygon is not a single segment")
    R = Fraction(v_a * q_pow, q_pow - 1) - v_c
    if R <= 0:
        raise HypothesisError("R <= 0")
    e = Fraction(e)
    return PiecewiseLinear.make(
        [(0, 0), (R, e * R)], e * q_pow
    )


def psi_finite_bad(q: int, d: int, n: int, E: int, R) -> PiecewiseLinear:
    """psi of the u^n-division-field extension at a finite place of bad
    reduction: pieces y, Ey on [0, R], q^(nd) E y - (q^(nd) - 1) E R,
    with R = -w(j)/(q - 1)."""
    p = characteristic(q)
    R = Fraction(R)
    if R <= 0:
        raise HypothesisError("good reduction: tame")
    if E % p == 0:
        raise HypothesisError("p divides E")
    w_j = -R * (q - 1)
    if w_j.denominator == 1 and w_j % p == 0:
        raise HypothesisError("p divides w(j)")
    E = Fraction(E)
    return PiecewiseLinear.make(
        [(0, 0), (R, E * R)], E * q ** (n * d)
    )


@dataclass(frozen=True)
class FiltrationReport:
    """Ramification filtration orders read off a psi-function: #G^y is
    constant on each piece and equals g0_order divided by the slope."""

    g0_order: int
    breaks: tuple[tuple[Fraction, Fraction, int], ...]
    # (upper break y, lower break psi(y), order of G^y on the piece ending
    # at y); the order after the last break is 1.


def filtration_from_psi(f: PiecewiseLinear) -> FiltrationReport:
    if f.final_slope.denominator != 1:
        raise ValueError("final slope must be an integer group order")
    g0 = int(f.final_slope)
    breaks = []
    slopes = f.slopes()
    for i, (y, v) in enumerate(f.knots):
        if y <= 0:
            continue
        slope = slopes[i - 1]  # slope of the piece ending at y
        if slope == slopes[i]:
            continue  # not a genuine break (cannot happen in normal form)
        if slope.denominator != 1 or g0 % int(slope):
            raise ValueError(
                f"slope {slope} does not divide the final slope {g0}"
            )
        breaks.append((y, v, g0 // int(slope)))
    orders = [o for _, _, o in breaks]
    if orders != sorted(orders, reverse=True) or len(set(orders)) != len(orders):
        raise ValueError("filtration orders must strictly decrease")
    return FiltrationReport(g0, tuple(breaks))


def conductor_from_breaks(rank_fn_breaks, r: int, initial_rank: int) -> Fraction:
    """Exact integral from 0 to infinity of (r - rank of the fixed part).

    rank_fn_breaks lists (break y, rank after y); the rank is initial_rank
    on (0, first break] and must reach r at the last break.
    """
    total = Fraction(0)
    y_prev = Fraction(0)
    rank = initial_rank
    for y, nxt in rank_fn_breaks:
        y = Fraction(y)
        if y <= y_prev:
            raise ValueError("breaks must be strictly increasing and > 0")
        if nxt < rank:
            raise ValueError("rank must be non-decreasing")
        if nxt > r:
            raise ValueError("rank exceeds r")
        total += (r - rank) * (y - y_prev)
        y_prev, rank = y, nxt
    if rank != r:
        raise ValueError("rank never reaches r: the integral diverges")
    return total
