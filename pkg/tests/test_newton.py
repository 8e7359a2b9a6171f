"""Newton polygons and valuation profiles."""

from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from drinfeld_smb.fq import FqField
from drinfeld_smb.newton import (
    ValuationProfile,
    lower_hull,
    profile_from_hull,
    root_valuations,
)
from drinfeld_smb.ratfunc import INF, Place
from drinfeld_smb.skew import DrinfeldModule

F2 = FqField(2)


def test_hull_drops_infinite_and_collinear_points():
    hull = lower_hull([(0, 0), (1, 1), (2, 2), (3, 0), (4, INF)])
    assert hull.vertices == ((0, Fr(0)), (3, Fr(0)))


def test_hull_known_polygon():
    # phi_t of tX + tX^2 + X^4 at the infinite place: (0,-1), (1,-1), (3,0)
    hull = lower_hull([(0, -1), (1, -1), (3, 0)])
    assert hull.slopes() == [(Fr(0), 1), (Fr(1, 2), 2)]
    profile = profile_from_hull(hull)
    assert profile.entries == ((Fr(0), 1), (Fr(-1, 2), 2))


def test_hull_errors():
    with pytest.raises(ValueError):
        lower_hull([(0, 0), (0, 1)])  # duplicate x
    with pytest.raises(ValueError):
        lower_hull([(0, 0), (1, INF)])  # fewer than two finite points


points = st.lists(
    st.tuples(
        st.integers(0, 30),
        st.fractions(min_value=-10, max_value=10),
    ),
    min_size=2,
    max_size=12,
    unique_by=lambda p: p[0],
)


@given(points)
def test_hull_is_below_all_points_with_increasing_slopes(pts):
    hull = lower_hull(pts)
    slopes = [s for s, _ in hull.slopes()]
    assert slopes == sorted(slopes)
    assert len(set(slopes)) == len(slopes)
    xs = {x for x, _ in hull.vertices}
    assert min(x for x, _ in pts) in xs and max(x for x, _ in pts) in xs
    for x, y in pts:
        for (x0, y0), (x1, y1) in zip(hull.vertices, hull.vertices[1:]):
            if x0 <= x <= x1:
                assert (y - y0) * (x1 - x0) >= (y1 - y0) * (x - x0)


def test_root_valuations_counts_and_values():
    module = DrinfeldModule.make(F2, ["t", "t", "1"])
    w = Place.infinite(F2)
    profile = root_valuations(module.phi_t, w)
    assert profile.total() == F2.q**module.rank - 1
    assert profile.entries == ((Fr(0), 1), (Fr(-1, 2), 2))
    shifted = root_valuations(module.phi_t, w, shift_valuation=Fr(0))
    assert shifted.total() == F2.q**module.rank


def test_profile_multiset_operations():
    a = ValuationProfile.from_pairs([(Fr(1), 2), (Fr(0), 3), (Fr(1), 1)])
    assert a.entries == ((Fr(1), 3), (Fr(0), 3))
    assert a.max_valuation() == 1
    b = ValuationProfile.from_pairs([(Fr(1), 1)])
    assert a.subtract(b).entries == ((Fr(1), 2), (Fr(0), 3))
    with pytest.raises(ValueError):
        a.subtract(ValuationProfile.from_pairs([(Fr(2), 1)]))
    with pytest.raises(ValueError):
        a.subtract(ValuationProfile.from_pairs([(Fr(1), 5)]))
