"""Rational functions and places: field laws, valuations, product formula."""

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_smb import poly as P
from drinfeld_smb.fq import FqField
from drinfeld_smb.ratfunc import INF, Place, RatFunc, place_valuation

F2 = FqField(2)
F3 = FqField(3)


def ratfuncs(F, max_deg=4):
    coeff = st.integers(0, F.q - 1)
    num = st.lists(coeff, min_size=0, max_size=max_deg + 1).map(P.poly)
    den = st.lists(coeff, min_size=0, max_size=max_deg + 1).map(P.poly).filter(
        lambda a: bool(a)
    )
    return st.builds(lambda n, d: RatFunc.make(F, n, d), num, den)


@given(ratfuncs(F3), ratfuncs(F3), ratfuncs(F3))
@settings(max_examples=60)
def test_field_laws(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == RatFunc.const(F3, 0)
    if not x.is_zero():
        assert x / x == RatFunc.const(F3, 1)


@given(ratfuncs(F2))
def test_parse_str_round_trip(x):
    assert RatFunc.parse(F2, str(x)) == x


def places(F):
    return [
        Place.infinite(F),
        Place.finite(F, (0, 1)),
        Place.finite(F, (1, 1)),
        Place.finite(F, (1, 1, 1) if F.q == 2 else (1, 0, 1)),
    ]


@given(ratfuncs(F2), ratfuncs(F2))
@settings(max_examples=60)
def test_valuation_is_additive_and_ultrametric(x, y):
    for w in places(F2):
        vx, vy = place_valuation(x, w), place_valuation(y, w)
        vxy = place_valuation(x * y, w)
        if x.is_zero() or y.is_zero():
            assert vxy == INF
        else:
            assert vxy == vx + vy
        vsum = place_valuation(x + y, w)
        assert vsum >= min(vx, vy)
        if vx != vy:
            assert vsum == min(vx, vy)


@given(ratfuncs(F3), st.integers(0, 2))
@settings(max_examples=40)
def test_frobenius_scales_valuation(x, i):
    if x.is_zero():
        return
    for w in places(F3):
        assert place_valuation(x.frobenius(i), w) == F3.q**i * place_valuation(
            x, w
        )


@given(st.lists(st.integers(0, 2), min_size=1, max_size=7).map(P.poly))
@settings(max_examples=100)
def test_product_formula(a):
    """sum over all places of deg(w) w(a) = 0 for nonzero a in A."""
    if not a:
        return
    x = RatFunc.of_poly(F3, a)
    total = place_valuation(x, Place.infinite(F3))
    _, parts = P.factor(F3, a)
    for u in parts:
        w = Place.finite(F3, u)
        total += w.residue_degree * place_valuation(x, w)
    assert total == 0


def test_place_validation():
    with pytest.raises(ValueError):
        Place.finite(F2, (1, 0, 1))  # (t+1)^2: not irreducible
    with pytest.raises(ValueError):
        Place.finite(F2, (1, 2))  # not reduced / not monic over F_2
    assert Place.finite(F2, (1, 1, 1)).residue_degree == 2


def test_zero_valuation_is_infinite():
    z = RatFunc.const(F2, 0)
    for w in places(F2):
        assert place_valuation(z, w) == INF
