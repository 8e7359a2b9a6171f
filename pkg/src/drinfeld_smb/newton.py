"""Newton polygons and root-valuation profiles over a place.

A polygon is the lower convex hull of (x, valuation) points; a hull segment
of slope s and horizontal span l certifies l roots of valuation -s.  For an
additive polynomial P the nonzero roots are those of P(X)/X, so x-coordinates
are q^i - 1; the zero root is never counted in profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import INF, Place, place_valuation


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, Fraction], ...]

    def slopes(self):
        """(slope, horizontal span) per segment, left to right."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append((Fraction(y1 - y0, x1 - x0), x1 - x0))
        return out


@dataclass(frozen=True)
class ValuationProfile:
    """Multiset of exact rationals, entries (valuation, multiplicity)
    sorted by strictly decreasing valuation."""

    entries: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def from_pairs(pairs) -> "ValuationProfile":
        acc: dict[Fraction, int] = {}
        for v, m in pairs:
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                acc[v] = acc.get(v, 0) + m
        return ValuationProfile(
            tuple(sorted(acc.items(), key=lambda e: e[0], reverse=True))
        )

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def max_valuation(self) -> Fraction:
        if not self.entries:
            raise ValueError("empty profile")
        return self.entries[0][0]

    def as_multiset(self) -> dict[Fraction, int]:
        return dict(self.entries)

    def subtract(self, other: "ValuationProfile") -> "ValuationProfile":
        """Multiset difference; other must be contained in self."""
        acc = dict(self.entries)
        for v, m in other.entries:
            have = acc.get(v, 0)
            if have < m:
                raise ValueError(f"multiset underflow at valuation {v}")
            if have == m:
                del acc[v]
            else:
                acc[v] = have - m
        return ValuationProfile.from_pairs(acc.items())


def lower_hull(points) -> NewtonPolygon:
    """Lower convex hull; +inf (zero-coefficient) points are dropped,
    collinear interior points are not vertices."""
    finite = [(x, Fraction(y)) for x, y in points if y != INF]
    if len(finite) < 2:
        raise ValueError("need at least two finite points")
    finite.sort()
    for (x0, _), (x1, _) in zip(finite, finite[1:]):
        if x0 == x1:
            raise ValueError("duplicate x-coordinate")
    hull: list[tuple[int, Fraction]] = []
    for pt in finite:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # keep strictly increasing slopes
            if (y1 - y0) * (pt[0] - x1) >= (pt[1] - y1) * (x1 - x0):
                hull.pop()
            else:
                break
        hull.append(pt)
    return NewtonPolygon(tuple(hull))


def profile_from_hull(hull: NewtonPolygon) -> ValuationProfile:
    return ValuationProfile.from_pairs(
        (-s, span) for s, span in hull.slopes()
    )


def root_valuations(tp, w: Place, shift_valuation=None) -> ValuationProfile:
    """Root-valuation multiset of an additive polynomial at w.

    Without a shift: the q^deg - 1 nonzero roots of tp(X)/X (the zero root
    is excluded).  With shift_valuation = w(c), c a nonzero constant: the
    q^deg roots of tp(X) - c, polygon points (0, w(c)) and (q^i, w(c_i)).
    """
    if not tp.coeffs or all(c.is_zero() for c in tp.coeffs):
        raise ValueError("zero polynomial")
    q = tp.field.q
    if shift_valuation is None:
        points = [
            (q**i - 1, place_valuation(c, w))
            for i, c in enumerate(tp.coeffs)
        ]
        if len(tp.coeffs) == 1:
            raise ValueError("constant additive polynomial has no nonzero roots")
    else:
        if shift_valuation == INF:
            raise ValueError("shift must be the valuation of a nonzero constant")
        points = [(0, Fraction(shift_valuation))] + [
            (q**i, place_valuation(c, w)) for i, c in enumerate(tp.coeffs)
        ]
    return profile_from_hull(lower_hull(points))
