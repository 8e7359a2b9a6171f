"""Valuation-level lattice models and the exponential/SMB dictionary.

A lattice is known only through the valuations of a successive minimal
basis plus its scaling law: at the infinite place w(a omega) =
deg(a) w_0 + w(omega), at a finite place (Tate lattice of a rank-r'
good-reduction module) w(a omega) = q^(r' deg a) w(omega).  By the min
rule the valuation multiset of the whole lattice is a function of exactly
this data, so lattice vectors never materialize.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .newton import ValuationProfile
from .ratfunc import Place


@dataclass(frozen=True)
class LatticeModel:
    place_kind: str  # "infinite" | "finite"
    reduced_rank: int  # r'; 0 for infinite-place lattices
    generator_valuations: tuple[Fraction, ...]  # SMB order: decreasing
    q: int
    w0: Fraction = Fraction(-1)  # w(t), scaling unit at the infinite place

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.generator_valuations)
        object.__setattr__(self, "generator_valuations", vals)
        if self.place_kind not in ("infinite", "finite"):
            raise ValueError(f"bad place kind {self.place_kind!r}")
        if list(vals) != sorted(vals, reverse=True):
            raise ValueError("generator valuations must be sorted decreasing")
        if self.place_kind == "finite":
            if self.reduced_rank < 1:
                raise ValueError("finite-place lattice needs r' >= 1")
            if any(v >= 0 for v in vals):
                raise ValueError("finite-place lattice valuations must be < 0")
        else:
            if self.reduced_rank != 0:
                raise ValueError("infinite-place lattice has reduced_rank 0")
            if self.w0 >= 0:
                raise ValueError("w0 must be negative")

    @property
    def rank(self) -> int:
        return len(self.generator_valuations)

    def scale(self, v: Fraction, e: int) -> Fraction:
        """w(a omega) for w(omega) = v and deg(a) = e."""
        if self.place_kind == "infinite":
            return v + e * self.w0
        return self.q ** (self.reduced_rank * e) * v


def lattice_values_above(L: LatticeModel, threshold) -> ValuationProfile:
    """Exact multiset of valuations w(mu) > threshold, mu in the lattice,
    mu != 0.  Scaling strictly decreases valuation with coefficient degree,
    so each coordinate admits finitely many degree classes; the valuation
    of a combination is the coordinate-wise minimum (min rule)."""
    threshold = Fraction(threshold)
    if L.place_kind == "finite" and threshold >= 0:
        raise ValueError("threshold must be < 0 at a finite place")
    if L.rank == 0:
        return ValuationProfile(())
    q = L.q
    options = []
    for v in L.generator_valuations:
        # (value or None for the zero coefficient, count of coefficients)
        opts: list[tuple[Fraction | None, int]] = [(None, 1)]
        e = 0
        while L.scale(v, e) > threshold:
            opts.append((L.scale(v, e), (q - 1) * q**e))
            e += 1
        options.append(opts)
    acc: dict[Fraction, int] = {}
    for combo in itertools.product(*options):
        vals = [v for v, _ in combo if v is not None]
        if not vals:
            continue
        value = min(vals)
        if value <= threshold:
            continue
        count = 1
        for _, c in combo:
            count *= c
        acc[value] = acc.get(value, 0) + count
    return ValuationProfile.from_pairs(acc.items())


def exp_valuation(L: LatticeModel, v) -> Fraction:
    """w(e_phi(x)) for w(x) = v:
    v + sum over mu in Lambda with w(mu) > v of (v - w(mu));
    equal-valuation lattice points contribute nothing."""
    v = Fraction(v)
    out = v
    for mu_val, mult in lattice_values_above(L, v).entries:
        out += mult * (v - mu_val)
    return out


@dataclass(frozen=True)
class SMBProfile:
    """Valuations of a successive minimal basis of phi[u^n]."""

    place: Place | None
    u: tuple[int, ...]
    n: int
    valuations: tuple[Fraction, ...]  # sorted decreasing

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.valuations)
        object.__setattr__(self, "valuations", vals)
        if list(vals) != sorted(vals, reverse=True):
            raise ValueError("SMB valuations must be sorted decreasing")


def lattice_to_division(
    L: LatticeModel, d: int, n: int, good_part=()
) -> tuple[Fraction, ...]:
    """SMB valuations of phi[u^n] from lattice data (deg(u) = d).

    Infinite place: w(lambda_i) = exp_valuation(w(omega_i) - w(u^n)) with
    w(u^n) = n d w0.  Finite place: the first r' values come from the
    good-reduction module (caller-supplied; all 0 when w does not divide u)
    and the rest from exp_valuation of the largest Newton root of
    psi_{u^n}(X) - omega0_i, whose valuation is omega0_i / q^(r' n d).
    """
    if L.place_kind == "infinite":
        shift = -n * d * L.w0
        return tuple(exp_valuation(L, w + shift) for w in L.generator_valuations)
    lam = list(Fraction(v) for v in good_part)
    if len(lam) != L.reduced_rank:
        raise ValueError("good_part must have r' entries")
    scale = L.q ** (L.reduced_rank * n * d)
    for w in L.generator_valuations:
        lam.append(exp_valuation(L, Fraction(w, scale)))
    return tuple(sorted(lam, reverse=True))


def division_to_lattice(
    profile: SMBProfile, reduced_rank: int, q: int, w0=Fraction(-1)
) -> LatticeModel:
    """Inverse dictionary under the largeness condition.

    Infinite place: w(omega_i) = w(lambda_i) + w(u^n) (Cor. of
    |lambda_i||u^n| = |omega_i|), requiring nd(-w0) > w(lambda_1) -
    w(lambda_r).  Finite place: w(omega0_i) = q^(r' n d) w(lambda_i) for
    i > r', requiring q^(r' n d) > w(lambda_r)/w(lambda_{r'+1}).
    """
    d = len(profile.u) - 1
    nd = profile.n * d
    lam = profile.valuations
    if profile.place is None or profile.place.kind == "infinite":
        if lam and nd * (-w0) <= lam[0] - lam[-1]:
            raise ValueError("largeness condition fails: u^n too small")
        return LatticeModel(
            "infinite", 0, tuple(v + nd * w0 for v in lam), q, w0
        )
    r_prime = reduced_rank
    tail = lam[r_prime:]
    if any(v >= 0 for v in tail):
        raise ValueError("non-good part of the profile must be negative")
    scale = q ** (r_prime * nd)
    if len(tail) >= 2 and not Fraction(tail[-1], tail[0]) < scale:
        raise ValueError("largeness condition fails: u^n too small")
    return LatticeModel("finite", r_prime, tuple(v * scale for v in tail), q, w0)


def smb_dictionary(obj, d: int, n: int, direction: str, **kw):
    """Dispatcher per the two directions of the dictionary."""
    if direction == "lattice_to_division":
        return lattice_to_division(obj, d, n, **kw)
    if direction == "division_to_lattice":
        return division_to_lattice(obj, **kw)
    raise ValueError(f"bad direction {direction!r}")
