"""SMB valuation profiles of phi[u^n], computed three independent ways.

The engine computes the successive-minimal-basis valuations of the u^n
division points by
  (1) Newton recursion: level-1 values from the polygon of phi_u(X)/X with
      greedy span removal, higher levels by repeated largest-slope
      extraction from phi_u(X) - lambda;
  (2) closed forms: the rank-2 formulas at the infinite place (two cases,
      with the wild case governed by the integer m locating w(j) among
      w_0 q^m), the two-term rank-r generalization, and the finite-place
      bad-reduction formula through the stable twist;
  (3) the lattice dictionary: exp_valuation applied to the period-lattice
      generator valuations;
and validates the induced per-degree rules against a brute-force oracle:
the full valuation multiset of phi[u^n] minus zero read off the Newton
polygon of phi_{u^n}(X)/X.

Scope: rank 2 at any place, two-term rank r at the infinite place.  Places
dividing u are refused (the min rule underlying span removal and the
per-degree prediction is not available there).
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .errors import (
    AmbiguousCancellationError,
    BudgetError,
    HypothesisError,
    UnsupportedShapeError,
)
from .lattice import LatticeModel, SMBProfile, exp_valuation, lattice_to_division
from .newton import (
    NewtonPolygon,
    ValuationProfile,
    lower_hull,
    profile_from_hull,
    root_valuations,
)
from .ratfunc import INF, Place, place_valuation
from .skew import DrinfeldModule, phi_of, j_invariant, reduction_profile

DEFAULT_BUDGET = 2**16


# -- shape analysis -----------------------------------------------------


def two_term_shape(module: DrinfeldModule):
    """(s, r) if phi_t has nonzero coefficients exactly at tau^0, tau^s,
    tau^r (s < r); (None, r) if only at tau^0, tau^r; else None."""
    support = [
        i for i, c in enumerate(module.phi_t.coeffs) if i > 0 and not c.is_zero()
    ]
    r = module.rank
    if support == [r]:
        return (None, r)
    if len(support) == 2 and support[1] == r:
        return (support[0], r)
    return None


def _require_engine_shape(module: DrinfeldModule):
    if module.rank == 2:
        return
    if two_term_shape(module) is None:
        raise UnsupportedShapeError(
            "unsupported shape: engine scope is rank 2 and two-term rank r"
        )


def _check_place_u(module: DrinfeldModule, w: Place, u):
    if not P.is_monic(u) or not P.is_irreducible(module.field, u):
        raise ValueError("u must be a monic irreducible of A")
    if w.kind == "finite" and tuple(u) == w.uniformizer:
        raise ValueError("w divides u: min-rule unsupported")


# -- Newton recursion ---------------------------------------------------


@dataclass(frozen=True)
class RecursionTrace:
    levels: tuple[SMBProfile, ...]  # j = 1..n
    polygons: tuple[tuple[NewtonPolygon, ...], ...]


def _points_of(tp, w: Place, shift=None):
    q = tp.field.q
    if shift is None:
        return [
            (q**i - 1, place_valuation(c, w)) for i, c in enumerate(tp.coeffs)
        ]
    return [(0, Fraction(shift))] + [
        (q**i, place_valuation(c, w)) for i, c in enumerate(tp.coeffs)
    ]


def _term_min_valuation(coeff_vals, lam: Fraction, q: int) -> Fraction:
    """w(sum c_k x^(q^k)) for w(x) = lam via the unique term-wise minimum.

    coeff_vals: [(k, w(c_k))] over nonzero coefficients.
    """
    terms = [wc + q**k * lam for k, wc in coeff_vals]
    best = min(terms)
    if len(terms) > 1 and terms.count(best) > 1:
        raise AmbiguousCancellationError(
            "ambiguous cancellation: tied term-wise minimum"
        )
    return best


def _residue_coeff_valuations(module: DrinfeldModule, u, w: Place):
    """For each nonzero residue a mod u: [(k, w(coeff_k of phi_a))]."""
    F = module.field
    d = len(u) - 1
    out = []
    for codes in itertools.product(F.elements(), repeat=d):
        a = P.poly(codes)
        if not a:
            continue
        pa = phi_of(module, a)
        vals = [
            (k, place_valuation(c, w))
            for k, c in enumerate(pa.coeffs)
            if not c.is_zero()
        ]
        out.append(vals)
    return out


def smb_recursion(
    module: DrinfeldModule, u, n: int, w: Place
) -> RecursionTrace:
    """SMB valuations of phi[u^j] for j = 1..n by Newton recursion."""
    _require_engine_shape(module)
    _check_place_u(module, w, u)
    if n < 1:
        raise ValueError("n must be >= 1")
    F = module.field
    q = F.q
    r = module.rank
    phi_u = phi_of(module, u)

    # At a finite place with w not dividing u, every nonzero a mod u acts
    # invertibly on the good-reduction part, whose nonzero elements all
    # have the same valuation (the twisted model's phi[u] good part maps
    # onto psi[u] minus zero, all of valuation 0 since w(u) = 0).  That
    # pins w(a lambda) exactly where term-wise minima tie harmlessly.
    good_val = None
    if w.kind == "finite":
        good_val = -reduction_profile(module, w).twist_valuation

    def act_valuation(coeff_vals, lam):
        if lam == good_val:
            return good_val
        return _term_min_valuation(coeff_vals, lam, q)

    # level 1: polygon of phi_u(X)/X, greedy with span removal
    base_hull = lower_hull(_points_of(phi_u, w))
    full = profile_from_hull(base_hull)
    residues = _residue_coeff_valuations(module, u, w)
    lambdas = [full.max_valuation()]
    remainder = full
    for _ in range(2, r + 1):
        span: dict[Fraction, int] = {}
        for combo in itertools.product(
            [None, *range(len(residues))], repeat=len(lambdas)
        ):
            if all(c is None for c in combo):
                continue
            val = min(
                act_valuation(residues[c], lam)
                for c, lam in zip(combo, lambdas)
                if c is not None
            )
            span[val] = span.get(val, 0) + 1
        remainder = full.subtract(ValuationProfile.from_pairs(span.items()))
        lambdas.append(remainder.max_valuation())
    levels = [
        SMBProfile(w, tuple(u), 1, tuple(sorted(lambdas, reverse=True)))
    ]
    polygons = [(base_hull,)]

    # levels >= 2: largest root of phi_u(X) - lambda_{i,j-1}
    for j in range(2, n + 1):
        prev = levels[-1].valuations
        polys = []
        vals = []
        for lam in prev:
            hull = lower_hull(_points_of(phi_u, w, shift=lam))
            polys.append(hull)
            slope0 = hull.slopes()[0][0]
            vals.append(-slope0)
        levels.append(
            SMBProfile(w, tuple(u), j, tuple(sorted(vals, reverse=True)))
        )
        polygons.append(tuple(polys))
    return RecursionTrace(tuple(levels), tuple(polygons))


# -- closed forms -------------------------------------------------------


@dataclass(frozen=True)
class Rank2ClosedForm:
    place_kind: str
    case: str  # "C1" | "C2" | "finite_bad"
    q: int
    d: int
    n: int
    w0: Fraction | None
    w1: Fraction  # INF allowed (a_1 = 0) in case C2
    w2: Fraction
    w_j: Fraction
    m: int | None
    omega: tuple[Fraction, ...]  # lattice generators (infinite: omega_1,2;
    # finite: the single omega0_2)
    lam: tuple[Fraction, Fraction]

    def xi(self, i: int, k: int) -> Fraction:
        """w(xi_{i,k}), the SMB valuations of phi[t^k] (infinite place)."""
        if self.place_kind != "infinite":
            raise ValueError("xi values belong to the infinite place")
        q = self.q
        if self.case == "C2":
            return -(self.w0 * (k - 1) + Fraction(self.w2 - self.w0, q * q - 1))
        if i == 1:
            return -(self.w0 * (k - 1) + Fraction(self.w1 - self.w0, q - 1))
        m = self.m
        if k <= m:
            return -Fraction(
                self.w2 + self.w1 * (q**k - q - 1), (q - 1) * q**k
            )
        return -(
            self.w0 * (k - m)
            + Fraction(self.w2 + self.w1 * (q**m - q - 1), (q - 1) * q**m)
        )


def closed_form_rank2(
    w0, w1, w2, q: int, d: int, n: int, place_kind: str, w_u=Fraction(0)
) -> Rank2ClosedForm:
    """Rank-2 closed forms, verbatim.

    Infinite place: case C1 when w(j) < w0 q, with m locating w(j) in the
    half-open interval (w0 q^(m+1), w0 q^m]; case C2 otherwise.  Finite
    place: bad-reduction stable signature w1 = 0, w2 > 0 required; w_u is
    w(u) (0 when w does not divide u).
    """
    w2 = Fraction(w2)
    if place_kind == "infinite":
        w0 = Fraction(w0)
        if w0 >= 0:
            raise ValueError("w0 must be negative")
        if w1 == INF:
            w_j = INF
        else:
            w1 = Fraction(w1)
            w_j = (q + 1) * w1 - w2
        if w_j != INF and w_j < w0 * q:
            m = 1
            while not (w0 * q ** (m + 1) < w_j):
                m += 1
            if not w_j <= w0 * q**m:
                raise HypothesisError("w(j) escaped its interval")  # unreachable
            omega1 = w0 + Fraction(w1 - w0, q - 1)
            omega2 = w0 * m + Fraction(w_j, (q - 1) * q**m) - Fraction(w1, q - 1)
            cf = Rank2ClosedForm(
                "infinite", "C1", q, d, n, w0, w1, w2, w_j, m,
                (omega1, omega2), (Fraction(0), Fraction(0)),
            )
        else:
            om = w0 + Fraction(w0 - w2, q * q - 1)
            cf = Rank2ClosedForm(
                "infinite", "C2", q, d, n, w0, w1, w2, w_j, None,
                (om, om), (Fraction(0), Fraction(0)),
            )
        return dataclasses.replace(cf, lam=(cf.xi(1, n * d), cf.xi(2, n * d)))
    # finite place
    w1 = Fraction(w1)
    if w1 != 0 or w2 <= 0:
        raise ValueError("finite closed form needs the stable bad signature")
    w_j = (q + 1) * w1 - w2
    lam1 = (
        Fraction(w_u, (q**d - 1) * q ** ((n - 1) * d))
        if w_u
        else Fraction(0)
    )
    omega0_2 = Fraction(w_j, q - 1)
    lam2 = Fraction(w_j, (q - 1) * q ** (n * d))
    return Rank2ClosedForm(
        "finite", "finite_bad", q, d, n, None, w1, w2, w_j, None,
        (omega0_2,), (lam1, lam2),
    )


@dataclass(frozen=True)
class TwoTermClosedForm:
    r: int
    s: int
    q: int
    d: int
    n: int
    w0: Fraction
    w_s: Fraction
    w_r: Fraction
    w_j: Fraction
    case: str  # "C1" | "C2"
    m: int | None
    omega: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]


def closed_form_two_term(
    r: int, s: int, w0, w_s, w_r, q: int, d: int, n: int
) -> TwoTermClosedForm:
    """Two-term rank-r closed forms at the infinite place.

    j = a_s^((q^r-1)/(q-1)) / a_r^((q^s-1)/(q-1)); case C1 when
    w(j) < w0 q^s (q^(r-s)-1)/(q-1), with m from the analogous half-open
    interval in q^(ms); lambda values are the plain shift by -w0 n d,
    valid for n >= m/d (C1) and all n (C2).
    """
    if not 1 <= s < r:
        raise ValueError("need 1 <= s < r")
    w0, w_s, w_r = Fraction(w0), Fraction(w_s), Fraction(w_r)
    if w0 >= 0:
        raise ValueError("w0 must be negative")
    w_j = Fraction(q**r - 1, q - 1) * w_s - Fraction(q**s - 1, q - 1) * w_r
    scale = Fraction(q ** (r - s) - 1, q - 1)
    if w_j < w0 * q**s * scale:
        m = 1
        while not (w0 * q ** ((m + 1) * s) * scale < w_j):
            m += 1
        low = w0 + Fraction(w_s - w0, q**s - 1)
        high = (
            w0 * m
            + Fraction(
                w_j * (q - 1), q ** (m * s) * (q**s - 1) * (q ** (r - s) - 1)
            )
            - Fraction(w_s, q**s - 1)
        )
        omega = (low,) * s + (high,) * (r - s)
        if n * d < m:
            raise HypothesisError(
                "two-term lambda shift needs n >= m/d in case C1"
            )
        lam = tuple(v - w0 * n * d for v in omega)
        return TwoTermClosedForm(
            r, s, q, d, n, w0, w_s, w_r, w_j, "C1", m, omega, lam
        )
    om = w0 + Fraction(w0 - w_r, q**r - 1)
    omega = (om,) * r
    lam = tuple(v - w0 * n * d for v in omega)
    return TwoTermClosedForm(
        r, s, q, d, n, w0, w_s, w_r, w_j, "C2", None, omega, lam
    )


# -- predicted and oracle multisets -------------------------------------


def predict_division_multiset(
    profile: SMBProfile, degree_rules, q: int
) -> ValuationProfile:
    """Multiset of w over phi[u^n] minus zero from per-degree rules.

    degree_rules maps (i, deg a) for i in 1..r, deg a in 0..nd-1 to
    w(a . lambda_i); a combination's valuation is the coordinate-wise
    minimum (min rule), counted over all q^(r n d) - 1 coefficient tuples.
    """
    r = len(profile.valuations)
    nd = profile.n * (len(profile.u) - 1)
    options = [(None, 1)] + [(e, (q - 1) * q**e) for e in range(nd)]
    acc: dict[Fraction, int] = {}
    for combo in itertools.product(options, repeat=r):
        if all(e is None for e, _ in combo):
            continue
        try:
            val = min(
                degree_rules[(i + 1, e)]
                for i, (e, _) in enumerate(combo)
                if e is not None
            )
        except KeyError as exc:
            raise ValueError(f"degree rule missing for {exc.args[0]}") from None
        count = 1
        for _, c in combo:
            count *= c
        acc[val] = acc.get(val, 0) + count
    return ValuationProfile.from_pairs(acc.items())


def oracle_division_multiset(
    module: DrinfeldModule, u, n: int, w: Place, budget: int = DEFAULT_BUDGET
) -> ValuationProfile:
    """Ground truth: root valuations of phi_{u^n}(X)/X."""
    d = len(u) - 1
    size = module.field.q ** (module.rank * n * d)
    if size > budget:
        raise BudgetError(
            f"enumeration size q^(r n d) = {size} exceeds budget {budget}"
        )
    un = P.pow_(module.field, u, n)
    return root_valuations(phi_of(module, un), w)


@dataclass(frozen=True)
class MultisetReport:
    predicted: ValuationProfile
    oracle: ValuationProfile
    equal: bool


# -- the assembled three-way analysis -----------------------------------


@dataclass(frozen=True)
class SMBAnalysis:
    place: Place
    u: tuple[int, ...]
    n: int
    case: str  # "C1" | "C2" | "finite_bad" | "finite_good"
    w_j: Fraction  # INF when j = 0
    m: int | None
    twist: Fraction  # finite places: valuation of the stable twist b
    closed: SMBProfile
    dictionary: SMBProfile
    lattice: LatticeModel | None  # twisted model at finite places
    degree_rules: dict


def analyze(module: DrinfeldModule, w: Place, u, n: int) -> SMBAnalysis:
    """Closed-form + dictionary profiles and per-degree prediction rules."""
    _require_engine_shape(module)
    _check_place_u(module, w, u)
    if n < 1:
        raise ValueError("n must be >= 1")
    q = module.field.q
    d = len(u) - 1
    nd = n * d
    if w.kind == "infinite":
        if module.rank == 2:
            vals = module.coefficient_valuations(w)
            cf = closed_form_rank2(
                Fraction(-1), vals[0], vals[1], q, d, n, "infinite"
            )
            L = LatticeModel("infinite", 0, cf.omega, q, cf.w0)
            lam_dict = lattice_to_division(L, d, n)
            if cf.case == "C1" and nd >= cf.m:
                rules = {
                    (i, e): cf.xi(i, nd - e)
                    for i in (1, 2)
                    for e in range(nd)
                }
            else:
                rules = _rules_from_lattice(L, cf.omega, nd)
            return SMBAnalysis(
                w, tuple(u), n, cf.case, cf.w_j, cf.m, Fraction(0),
                SMBProfile(w, tuple(u), n, cf.lam),
                SMBProfile(w, tuple(u), n, lam_dict),
                L, rules,
            )
        shape = two_term_shape(module)
        s, r = shape
        if s is None:
            raise UnsupportedShapeError(
                "one-term phi_t of rank > 2 is out of scope"
            )
        w_s = place_valuation(module.phi_t.coeffs[s], w)
        w_r = place_valuation(module.phi_t.coeffs[r], w)
        cf2 = closed_form_two_term(r, s, Fraction(-1), w_s, w_r, q, d, n)
        L = LatticeModel("infinite", 0, cf2.omega, q, cf2.w0)
        lam_dict = lattice_to_division(L, d, n)
        rules = _rules_from_lattice(L, cf2.omega, nd)
        return SMBAnalysis(
            w, tuple(u), n, cf2.case, cf2.w_j, cf2.m, Fraction(0),
            SMBProfile(w, tuple(u), n, cf2.lam),
            SMBProfile(w, tuple(u), n, lam_dict),
            L, rules,
        )
    # finite place
    if module.rank != 2:
        raise UnsupportedShapeError(
            "finite-place engine scope is rank 2"
        )
    rp = reduction_profile(module, w)
    v = rp.twist_valuation
    j = j_invariant(module)
    w_j = place_valuation(j, w)
    if rp.reduced_rank == 2:
        lam = (Fraction(-v), Fraction(-v))
        rules = {(i, e): -v for i in (1, 2) for e in range(nd)}
        return SMBAnalysis(
            w, tuple(u), n, "finite_good", w_j, None, v,
            SMBProfile(w, tuple(u), n, lam),
            SMBProfile(w, tuple(u), n, lam),
            None, rules,
        )
    # bad reduction through the stable twist: twisted w1 = 0, w2 = -w(j)
    tw = rp.twisted_valuations(module)
    cf = closed_form_rank2(None, tw[0], tw[1], q, d, n, "finite")
    L = LatticeModel("finite", 1, cf.omega, q)
    lam_t = lattice_to_division(L, d, n, good_part=(Fraction(0),))
    lam = tuple(x - v for x in cf.lam)
    lam_dict = tuple(x - v for x in lam_t)
    omega0_2 = cf.omega[0]
    rules = {(1, e): -v for e in range(nd)}
    for e in range(nd):
        rules[(2, e)] = exp_valuation(L, Fraction(omega0_2, q ** (nd - e))) - v
    return SMBAnalysis(
        w, tuple(u), n, "finite_bad", w_j, None, v,
        SMBProfile(w, tuple(u), n, lam),
        SMBProfile(w, tuple(u), n, lam_dict),
        L, rules,
    )


def _rules_from_lattice(L: LatticeModel, omega, nd: int) -> dict:
    """Per-degree rules from the exponential: w(a lambda_i) =
    exp_valuation(deg(a) w0 + w(omega_i) - nd w0) (infinite place)."""
    rules = {}
    for i, om in enumerate(omega, start=1):
        for e in range(nd):
            rules[(i, e)] = exp_valuation(L, om + (e - nd) * L.w0)
    return rules


def verify_multiset(
    module: DrinfeldModule,
    w: Place,
    u,
    n: int,
    budget: int = DEFAULT_BUDGET,
) -> MultisetReport:
    """Predicted per-degree multiset vs the Newton oracle."""
    analysis = analyze(module, w, u, n)
    predicted = predict_division_multiset(
        analysis.closed, analysis.degree_rules, module.field.q
    )
    oracle = oracle_division_multiset(module, u, n, w, budget)
    return MultisetReport(predicted, oracle, predicted.entries == oracle.entries)
