"""SMB engine: recursion vs closed forms vs dictionary vs oracle."""

from fractions import Fraction as Fr

import pytest

from drinfeld_smb.corpus import rank2_cases, two_term_cases
from drinfeld_smb.engine import (
    analyze,
    closed_form_rank2,
    closed_form_two_term,
    oracle_division_multiset,
    predict_division_multiset,
    smb_recursion,
    two_term_shape,
    verify_multiset,
)
from drinfeld_smb.errors import BudgetError, HypothesisError, UnsupportedShapeError
from drinfeld_smb.fq import FqField
from drinfeld_smb.ratfunc import INF, Place
from drinfeld_smb.skew import DrinfeldModule

F2 = FqField(2)
F3 = FqField(3)
WINF2 = Place.infinite(F2)
WT2 = Place.finite(F2, (0, 1))
T = (0, 1)
T1 = (1, 1)


def test_anchor_c1_wild():
    """tX + tX^2 + X^4 over F_2 at infinity: (n-1, n-3/2)."""
    mod = DrinfeldModule.make(F2, ["t", "t", "1"])
    for n in (1, 2, 3):
        rec = smb_recursion(mod, T, n, WINF2)
        assert rec.levels[-1].valuations == (Fr(n - 1), Fr(2 * n - 3, 2))


def test_anchor_c2_tame():
    """tX + X^2 + X^4 over F_2 at infinity: (n-1) - 1/3, twice."""
    mod = DrinfeldModule.make(F2, ["t", "1", "1"])
    for n in (1, 2, 3):
        rec = smb_recursion(mod, T, n, WINF2)
        v = Fr(n - 1) - Fr(1, 3)
        assert rec.levels[-1].valuations == (v, v)


def test_anchor_finite_bad():
    """tX + X^2 + tX^4 at (t), u = t+1: (0, -1/2^n)."""
    mod = DrinfeldModule.make(F2, ["t", "1", "t"])
    for n in (1, 2, 3):
        rec = smb_recursion(mod, T1, n, WT2)
        assert rec.levels[-1].valuations == (Fr(0), Fr(-1, 2**n))


def test_anchor_two_term():
    tt1 = DrinfeldModule.make(F2, ["t", "t", "0", "1"])
    tt2 = DrinfeldModule.make(F2, ["t", "1", "0", "1"])
    assert analyze(tt1, WINF2, T, 1).closed.valuations == (
        Fr(0), Fr(-1, 6), Fr(-1, 6),
    )
    assert analyze(tt2, WINF2, T, 1).closed.valuations == (
        Fr(-1, 7), Fr(-1, 7), Fr(-1, 7),
    )


def test_closed_form_m_location():
    cf = closed_form_rank2(Fr(-1), Fr(-1), Fr(2), 2, 1, 2, "infinite")
    assert (cf.case, cf.m, cf.w_j) == ("C1", 2, Fr(-5))
    assert cf.omega == (Fr(-1), Fr(-9, 4))
    cf2 = closed_form_rank2(Fr(-1), Fr(0), Fr(0), 2, 1, 1, "infinite")
    assert (cf2.case, cf2.m) == ("C2", None)
    assert cf2.omega == (Fr(-4, 3), Fr(-4, 3))


def test_closed_form_a1_zero():
    cf = closed_form_rank2(Fr(-1), INF, Fr(0), 2, 1, 1, "infinite")
    assert cf.case == "C2" and cf.w_j == INF


def test_two_term_needs_enough_levels_in_c1():
    # s = 1, r = 3, q = 2, w_s = -3: w(j) = -21, threshold -6, m = 2
    cf = closed_form_two_term(3, 1, Fr(-1), Fr(-3), Fr(0), 2, 1, 2)
    assert cf.case == "C1" and cf.m == 2
    with pytest.raises(HypothesisError):
        closed_form_two_term(3, 1, Fr(-1), Fr(-3), Fr(0), 2, 1, 1)


def test_guards():
    mod3 = DrinfeldModule.make(F2, ["t", "1", "1", "1"])  # rank 3, 3 terms
    assert two_term_shape(mod3) is None
    with pytest.raises(UnsupportedShapeError):
        smb_recursion(mod3, T, 1, WINF2)
    mod = DrinfeldModule.make(F2, ["t", "t", "1"])
    with pytest.raises(ValueError, match="w divides u"):
        analyze(mod, WT2, T, 1)
    with pytest.raises(ValueError, match="irreducible"):
        analyze(mod, WINF2, (1, 0, 1), 1)
    with pytest.raises(BudgetError):
        oracle_division_multiset(mod, T, 3, WINF2, budget=10)
    with pytest.raises(UnsupportedShapeError):
        analyze(DrinfeldModule.make(F2, ["t", "0", "0", "1"]), WINF2, T, 1)


def test_predict_missing_rule():
    an = analyze(DrinfeldModule.make(F2, ["t", "t", "1"]), WINF2, T, 1)
    rules = dict(an.degree_rules)
    rules.pop((2, 0))
    with pytest.raises(ValueError, match="degree rule"):
        predict_division_multiset(an.closed, rules, 2)


def test_three_way_and_oracle_on_rank2_corpus():
    for case in rank2_cases():
        an = analyze(case.module, case.place, case.u, case.n)
        rec = smb_recursion(case.module, case.u, case.n, case.place)
        assert (
            an.closed.valuations
            == rec.levels[-1].valuations
            == an.dictionary.valuations
        ), case
        rep = verify_multiset(case.module, case.place, case.u, case.n)
        assert rep.equal, case


def test_three_way_and_oracle_on_two_term_corpus():
    for case in two_term_cases():
        an = analyze(case.module, case.place, case.u, case.n)
        rec = smb_recursion(case.module, case.u, case.n, case.place)
        assert (
            an.closed.valuations
            == rec.levels[-1].valuations
            == an.dictionary.valuations
        ), case
        rep = verify_multiset(case.module, case.place, case.u, case.n)
        assert rep.equal, case


def test_recursion_levels_are_nested():
    """Level j values are the level j-1 values shifted up the tower: each
    lambda_{i,j} has valuation below lambda_{i,j-1} and the level-1 profile
    is reproduced at every step of the trace."""
    mod = DrinfeldModule.make(F3, ["t", "t", "1"])
    trace = smb_recursion(mod, T, 3, Place.infinite(F3))
    for lower, upper in zip(trace.levels, trace.levels[1:]):
        assert upper.n == lower.n + 1
        assert all(u > l for u, l in zip(upper.valuations, lower.valuations))
