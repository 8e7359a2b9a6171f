"""Local conductors, J-height, global conductor, Szpiro report (rank 2).

The local conductor measures wild ramification of the u-adic Tate module:
0 in the tame cases, (-w(j) + w_0 q)/(q - 1) at the infinite place and
-w(j)/(q - 1) at a finite place in the wild case.  Each closed form is
cross-checked against conductor_from_breaks applied to the matching
psi-function's ramification breaks.  Wild cases with p | w(j) are outside
the covered hypotheses and are reported as such, never as a number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .errors import HypothesisError
from .plf import (
    characteristic,
    conductor_from_breaks,
    psi_finite_bad,
    psi_infinite_wild,
)
from .ratfunc import INF, Place, place_valuation
from .skew import DrinfeldModule, j_invariant


@dataclass(frozen=True)
class ConductorReport:
    place: Place
    case: str  # "C1_wild" | "C2_tame" | "hypothesis_failed"
    local_conductor: Fraction | None  # None iff hypothesis_failed
    w_j: Fraction

    @property
    def degree(self) -> int:
        return self.place.residue_degree


def conductor_local(module: DrinfeldModule, w: Place) -> ConductorReport:
    """Local conductor at w, case split on w(j) against w_0 q (infinite)
    or 0 (finite); the wild closed form is verified against the integral
    of the matching psi-function's rank step function."""
    if module.rank != 2:
        raise ValueError("conductors are implemented for rank 2")
    q = module.field.q
    p = characteristic(q)
    w_j = place_valuation(j_invariant(module), w)
    w0 = Fraction(-1)
    if w.kind == "infinite":
        if not w_j < w0 * q:
            return ConductorReport(w, "C2_tame", Fraction(0), w_j)
        if w_j % p == 0:
            return ConductorReport(w, "hypothesis_failed", None, w_j)
        f = Fraction(-w_j + w0 * q, q - 1)
        psi = psi_infinite_wild(w_j, w0, 1, q)
        r1 = psi.break_ys()[-1]
        if conductor_from_breaks([(r1, 2)], 2, 1) != f:
            raise AssertionError("conductor cross-check failed")
        return ConductorReport(w, "C1_wild", f, w_j)
    if w_j >= 0:
        return ConductorReport(w, "C2_tame", Fraction(0), w_j)
    if w_j % p == 0:
        return ConductorReport(w, "hypothesis_failed", None, w_j)
    f = Fraction(-w_j, q - 1)
    psi = psi_finite_bad(q, 1, 1, 1, f)
    if conductor_from_breaks([(psi.break_ys()[-1], 2)], 2, 1) != f:
        raise AssertionError("conductor cross-check failed")
    return ConductorReport(w, "C1_wild", f, w_j)


def _relevant_places(module: DrinfeldModule):
    """The infinite place plus every finite place with w(j) != 0, sorted
    by degree then coefficient order."""
    F = module.field
    j = j_invariant(module)
    if j.is_zero():
        raise HypothesisError("j = 0 out of scope")
    finite = set()
    for part in (j.num, j.den):
        finite.update(P.factor(F, part)[1])
    places = [Place.infinite(F)]
    places.extend(
        Place.finite(F, u) for u in sorted(finite, key=lambda u: (len(u), u))
    )
    return places


def j_height(module: DrinfeldModule) -> Fraction:
    """h_J = sum over all places of deg(w) max(-w(j), 0); only j's poles
    contribute, so the scan covers the infinite place and the factors of
    j's numerator and denominator."""
    j = j_invariant(module)
    if j.is_zero():
        raise HypothesisError("j = 0 out of scope")
    total = Fraction(0)
    for w in _relevant_places(module):
        w_j = place_valuation(j, w)
        if w_j < 0:
            total += w.residue_degree * (-w_j)
    return total


def global_conductor(module: DrinfeldModule):
    """(sum of deg(w) f_w over all places, per-place reports).  Raises if
    any place falls outside the covered hypotheses, naming the places."""
    reports = [conductor_local(module, w) for w in _relevant_places(module)]
    failed = [r.place for r in reports if r.case == "hypothesis_failed"]
    if failed:
        raise HypothesisError(
            "hypothesis_failed at " + ", ".join(str(w) for w in failed)
        )
    total = sum(
        (r.degree * r.local_conductor for r in reports), Fraction(0)
    )
    return total, tuple(reports)


@dataclass(frozen=True)
class SzpiroReport:
    h_J: Fraction
    global_conductor: Fraction
    bound: Fraction
    holds: bool
    per_place: tuple[ConductorReport, ...]


def szpiro_report(module: DrinfeldModule) -> SzpiroReport:
    """h_J(phi) <= f(phi) (q - 1)/[F : F_q(t)] + q with [F : F_q(t)] = 1."""
    q = module.field.q
    h = j_height(module)
    f, reports = global_conductor(module)
    bound = f * (q - 1) + q
    return SzpiroReport(h, f, bound, h <= bound, reports)
