"""Piecewise-linear psi-calculus: shapes, composition, filtrations."""

import random
from fractions import Fraction as Fr

import pytest

from drinfeld_smb.errors import HypothesisError
from drinfeld_smb.plf import (
    PiecewiseLinear,
    conductor_from_breaks,
    filtration_from_psi,
    plf_compose,
    psi_finite_bad,
    psi_infinite_wild,
    psi_splitting_field,
)


def test_identity_and_validation():
    ident = PiecewiseLinear.identity()
    assert ident(Fr(5)) == 5 and ident(-1) == -1
    with pytest.raises(ValueError):
        PiecewiseLinear.make([(0, 0), (1, 0)], 1)  # zero slope
    with pytest.raises(ValueError):
        PiecewiseLinear.make([(0, 0), (1, 3)], 1)  # slopes decrease
    with pytest.raises(ValueError):
        PiecewiseLinear.make([(0, 1)], 2)  # not identity on [-1, 0]


def test_psi_infinite_wild_shapes():
    f = psi_infinite_wild(-3, -1, 1, 2)
    assert f.break_ys() == [Fr(1)] and f.final_slope == 2
    f2 = psi_infinite_wild(-5, -1, 1, 2)
    assert f2.break_ys() == [Fr(1), Fr(3)]
    assert f2.slopes() == [Fr(1), Fr(2), Fr(4)]
    # with E = 3 the [0, r_m] piece becomes a real knot at 0
    f3 = psi_infinite_wild(-3, -1, 3, 2)
    assert f3.slopes() == [Fr(1), Fr(3), Fr(6)]


def test_psi_infinite_wild_break_values():
    """psi(r_i) = R_i = -w(j) E/(q-1) - w_0 E q^m (m - i - 1/(q-1))."""
    for q, w_j, E in ((2, -5, 1), (2, -11, 3), (3, -10, 2)):
        f = psi_infinite_wild(w_j, -1, E, q)
        m = len(f.break_ys())
        assert f.final_slope == q**m * E
        for i, r in zip(range(m, 0, -1), f.break_ys()):
            expect = Fr(-w_j * E, q - 1) - Fr(-1) * E * q**m * (
                m - i - Fr(1, q - 1)
            )
            assert f(r) == expect


def test_psi_infinite_wild_guards():
    with pytest.raises(HypothesisError, match="p divides w"):
        psi_infinite_wild(-4, -1, 1, 2)
    with pytest.raises(HypothesisError, match="p divides E"):
        psi_infinite_wild(-3, -1, 2, 2)
    with pytest.raises(HypothesisError, match="tame"):
        psi_infinite_wild(-2, -1, 1, 2)


def test_psi_splitting_field():
    g = psi_splitting_field(2, -1, 0, 1)
    assert g(Fr(1)) == 1 and g(Fr(2)) == 3  # 2y - 1 beyond R = 1
    assert psi_splitting_field(4, -1, 0, 1).final_slope == 4
    assert psi_splitting_field(4, -1, 0, 3).slopes()[-2:] == [Fr(3), Fr(12)]
    with pytest.raises(HypothesisError, match="v_c"):
        psi_splitting_field(2, -2, 0, 1)
    with pytest.raises(HypothesisError, match="p divides e"):
        psi_splitting_field(2, -1, 0, 2)
    with pytest.raises(HypothesisError, match="single segment"):
        psi_splitting_field(2, -1, -3, 1)


def test_psi_finite_bad():
    h = psi_finite_bad(2, 1, 1, 1, 1)
    assert h(Fr(1)) == 1 and h.final_slope == 2
    assert psi_finite_bad(2, 1, 2, 1, 1).final_slope == 4
    with pytest.raises(HypothesisError, match="tame"):
        psi_finite_bad(2, 1, 1, 1, 0)
    with pytest.raises(HypothesisError, match="p divides w"):
        psi_finite_bad(3, 1, 1, 1, Fr(3, 2))  # w(j) = -(q-1)R = -3
    with pytest.raises(HypothesisError, match="p divides E"):
        psi_finite_bad(2, 1, 1, 4, 1)


def test_tame_tower_composition():
    """A tame degree-E base change under the n-level wild extension equals
    the wild function with the E folded in."""
    E = 3
    tame = PiecewiseLinear.make([(0, 0)], E)
    inner = psi_finite_bad(2, 1, 2, 1, E * Fr(1))
    assert plf_compose(inner, tame) == psi_finite_bad(2, 1, 2, E, 1)


def random_psi(rng: random.Random) -> PiecewiseLinear:
    ys = sorted(rng.sample(range(1, 40), rng.randint(0, 3)))
    slope = 1
    knots = [(Fr(0), Fr(0))]
    for y in ys:
        y = Fr(y, rng.randint(1, 3))
        if y <= knots[-1][0]:
            continue
        knots.append((y, knots[-1][1] + slope * (y - knots[-1][0])))
        slope *= rng.randint(1, 3)
    return PiecewiseLinear.make(knots, slope * rng.randint(1, 3))


def test_composition_identity_and_associativity():
    rng = random.Random(3)
    ident = PiecewiseLinear.identity()
    for _ in range(100):
        f, g, h = (random_psi(rng) for _ in range(3))
        assert plf_compose(ident, f) == f
        assert plf_compose(f, ident) == f
        assert plf_compose(f, plf_compose(g, h)) == plf_compose(
            plf_compose(f, g), h
        )


def test_composition_sample_values():
    rng = random.Random(5)
    for _ in range(50):
        f, g = random_psi(rng), random_psi(rng)
        fg = plf_compose(f, g)
        for y in (Fr(-1), Fr(-1, 2), Fr(0), Fr(1, 3), Fr(2), Fr(17, 2), Fr(40)):
            assert fg(y) == f(g(y))


def test_filtration_orders():
    f = psi_infinite_wild(-5, -1, 1, 2)  # q = 2, m = 2
    rep = filtration_from_psi(f)
    assert rep.g0_order == 4
    assert [o for _, _, o in rep.breaks] == [4, 2]
    assert filtration_from_psi(PiecewiseLinear.identity()).breaks == ()
    g = psi_splitting_field(4, -1, 0, 3)
    rep_g = filtration_from_psi(g)
    assert rep_g.g0_order == 12 and [o for _, _, o in rep_g.breaks] == [4]
    with pytest.raises(ValueError, match="divide"):
        filtration_from_psi(PiecewiseLinear.make([(0, 0), (1, 2)], 5))


def test_filtration_round_trip():
    """Rebuilding psi from a filtration report returns the same function."""
    for f in (
        psi_infinite_wild(-11, -1, 1, 2),
        psi_finite_bad(3, 1, 1, 2, Fr(1, 2)),
    ):
        rep = filtration_from_psi(f)
        knots = [(Fr(0), Fr(0))]
        for y, v, order in rep.breaks:
            knots.append((y, v))
        rebuilt = PiecewiseLinear.make(knots, rep.g0_order)
        # slopes between breaks follow from the orders
        assert rebuilt == f


def test_conductor_from_breaks():
    assert conductor_from_breaks([(1, 2)], 2, initial_rank=1) == 1
    assert conductor_from_breaks([(1, 2)], 2, initial_rank=0) == 2
    assert conductor_from_breaks([(Fr(1, 2), 2)], 2, initial_rank=2) == 0
    with pytest.raises(ValueError, match="exceeds"):
        conductor_from_breaks([(1, 3)], 2, initial_rank=1)
    with pytest.raises(ValueError, match="non-decreasing"):
        conductor_from_breaks([(1, 2), (2, 1)], 2, initial_rank=1)
    with pytest.raises(ValueError, match="reaches"):
        conductor_from_breaks([(1, 1)], 2, initial_rank=0)
