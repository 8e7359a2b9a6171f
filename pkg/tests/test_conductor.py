"""Conductors, J-height, and the Szpiro inequality."""

import random
from fractions import Fraction as Fr

import pytest

from drinfeld_smb import poly as P
from drinfeld_smb.conductor import (
    conductor_local,
    global_conductor,
    j_height,
    szpiro_report,
)
from drinfeld_smb.errors import HypothesisError
from drinfeld_smb.fq import FqField
from drinfeld_smb.plf import conductor_from_breaks, psi_finite_bad, psi_infinite_wild
from drinfeld_smb.ratfunc import Place, RatFunc
from drinfeld_smb.skew import DrinfeldModule, TwistedPoly

F2 = FqField(2)
F3 = FqField(3)
WINF2 = Place.infinite(F2)
WT2 = Place.finite(F2, (0, 1))


def test_local_anchors():
    mod = DrinfeldModule.make(F2, ["t", "t", "1"])
    rep = conductor_local(mod, WINF2)
    assert (rep.case, rep.local_conductor, rep.w_j) == ("C1_wild", Fr(1), Fr(-3))
    rep_t = conductor_local(mod, WT2)
    assert (rep_t.case, rep_t.local_conductor) == ("C2_tame", Fr(0))
    bad = DrinfeldModule.make(F2, ["t", "1", "t"])
    rep_bad = conductor_local(bad, WT2)
    assert (rep_bad.case, rep_bad.local_conductor, rep_bad.w_j) == (
        "C1_wild", Fr(1), Fr(-1),
    )


def test_wild_hypothesis_guard():
    """The module with w(j) = -q(q+1) (p | w(j)) must report
    hypothesis_failed, never a number."""
    mod = DrinfeldModule.make(F2, ["t", "t^2+t", "1"])
    rep = conductor_local(mod, WINF2)
    assert rep.case == "hypothesis_failed"
    assert rep.local_conductor is None
    assert rep.w_j == Fr(-6)
    with pytest.raises(HypothesisError, match="infinite"):
        global_conductor(mod)


def test_j_height():
    assert j_height(DrinfeldModule.make(F2, ["t", "t", "1"])) == 3  # j = t^3
    assert j_height(DrinfeldModule.make(F2, ["t", "1", "t"])) == 1  # j = 1/t
    assert j_height(DrinfeldModule.make(F2, ["t", "1", "1"])) == 0  # j = 1
    with pytest.raises(HypothesisError, match="j = 0"):
        j_height(DrinfeldModule.make(F2, ["t", "0", "1"]))


def test_global_conductor():
    assert global_conductor(DrinfeldModule.make(F2, ["t", "t", "1"]))[0] == 1
    assert global_conductor(DrinfeldModule.make(F2, ["t", "1", "t"]))[0] == 1
    assert global_conductor(DrinfeldModule.make(F2, ["t", "1", "1"]))[0] == 0


def test_szpiro_anchor_equality():
    rep = szpiro_report(DrinfeldModule.make(F2, ["t", "t", "1"]))
    assert (rep.h_J, rep.global_conductor, rep.bound) == (Fr(3), Fr(1), Fr(3))
    assert rep.holds and rep.h_J == rep.bound


def test_szpiro_second_anchor():
    rep = szpiro_report(DrinfeldModule.make(F2, ["t", "1", "t"]))
    assert (rep.h_J, rep.global_conductor, rep.bound, rep.holds) == (
        Fr(1), Fr(1), Fr(3), True,
    )


def test_conductor_equals_psi_integral():
    """Closed forms match the integral of the psi-derived rank function."""
    # infinite wild: rank 1 on (0, r_1], 2 after
    for w_j, q in ((-3, 2), (-5, 2), (-7, 3)):
        psi = psi_infinite_wild(w_j, -1, 1, q)
        r1 = psi.break_ys()[-1]
        assert conductor_from_breaks([(r1, 2)], 2, 1) == Fr(-w_j - q, q - 1)
    # finite wild
    for w_j, q in ((-1, 2), (-5, 2), (-1, 3)):
        R = Fr(-w_j, q - 1)
        psi = psi_finite_bad(q, 1, 1, 1, R)
        assert conductor_from_breaks([(psi.break_ys()[-1], 2)], 2, 1) == R


def test_conductor_is_twist_invariant():
    """j is twist-invariant, so every report matches under b = t."""
    mod = DrinfeldModule.make(F2, ["t", "t", "1"])
    twisted = DrinfeldModule.make(F2, ["t", "t^2", "t^3"])
    for w in (WINF2, WT2, Place.finite(F2, (1, 1))):
        a, b = conductor_local(mod, w), conductor_local(twisted, w)
        assert (a.case, a.local_conductor, a.w_j) == (
            b.case, b.local_conductor, b.w_j,
        )


def test_random_sweep_small():
    """40 random in-hypothesis modules over F_2 and F_3 all satisfy the
    inequality (the full 200-module sweep runs in the acceptance tests)."""
    rng = random.Random(1)
    fields = [F2, F3]
    done = 0
    while done < 40:
        F = fields[done % 2]
        coeffs = [
            P.poly([rng.randrange(F.q) for _ in range(rng.randint(1, 5))])
            for _ in range(2)
        ]
        if not coeffs[1]:
            continue
        t = RatFunc.of_poly(F, P.T)
        tp = TwistedPoly.make(
            F, (t, RatFunc.of_poly(F, coeffs[0]), RatFunc.of_poly(F, coeffs[1]))
        )
        try:
            rep = szpiro_report(DrinfeldModule(F, 2, tp))
        except HypothesisError:
            continue
        done += 1
        assert rep.holds
