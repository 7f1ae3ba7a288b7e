import random
from fractions import Fraction as F

import pytest

from tuttepoly.regions import (V2, V3, check_thm61_hypotheses,
                               diamond_interval, diamond_series,
                               interior_samples, interval_Im,
                               interval_Im_cocyc, interval_Im_cyc, membership,
                               refine_until_decided, v3_cubic, v3_plus)
from tuttepoly.roots import nth_root_enclosure
from tuttepoly.weightmaps import RegionInterval, diamond_fixed_point_enclosure


def ends(R):
    assert R.is_exact()
    return (R.lo.lo, R.hi.lo)


def test_interval_Im_exact_dyadic_parameters():
    # q = 1 - (1/2)^m makes the m-th root exactly 1/2
    assert ends(interval_Im(F(3, 4), 2)) == (F(-3, 2), F(-1, 2))
    assert ends(interval_Im(F(7, 8), 3)) == (F(-3, 2), F(-7, 12))
    assert ends(interval_Im(F(15, 16), 4)) == (F(-3, 2), F(-5, 8))
    assert ends(interval_Im(F(15, 16), 2)) == (F(-5, 4), F(-3, 4))


def test_interval_family_ordering():
    q = F(7, 8)
    cocyc = interval_Im_cocyc(q, 3)
    cyc = interval_Im_cyc(q, 3)
    mid = interval_Im(q, 3)
    assert ends(cocyc) == (F(-3, 2), F(-1, 2))
    assert ends(cyc) == (F(-7, 4), F(-7, 12))
    # -q/(1-s) <= -(1+s) < -q/(1+s) <= -(1-s)
    assert cyc.lo.lo <= mid.lo.lo < mid.hi.lo <= cocyc.hi.lo
    with pytest.raises(ValueError):
        interval_Im(F(3, 2), 2)


def test_v3_cubic_values_and_root_location():
    q = F(3, 4)
    c = v3_cubic(q)
    assert c.eval(-q / 2) == q ** 3 / 8
    assert c.eval(-q) == q ** 3 - q ** 2
    r = v3_plus(q)
    assert -q < r.interval.lo and r.interval.hi < -q / 2
    # the optimal upper endpoint strictly exceeds the m=3 interval's
    i3_hi = interval_Im(q, 3).hi
    assert i3_hi.hi < r.interval.lo


def test_diamond_interval_exact_at_top():
    R = diamond_interval(F(32, 27))
    assert ends(R) == (F(-4, 3), F(-8, 9))
    assert not R.lo_open and not R.hi_open


def test_diamond_series_partial_sums():
    q = F(1, 4)
    vp, vm = diamond_series(q, 20)
    enc = diamond_fixed_point_enclosure(q, width=F(1, 2 ** 60))
    assert abs(vp - enc.midpoint) < F(1, 10 ** 6)
    # the second series converges to the dual point q/v+
    assert abs(q / vm - enc.midpoint) < F(1, 10 ** 6)
    assert vm < -1 < vp


def test_V2_V3_crossover():
    # q = 9/8: both families end exactly at -3/4
    a = V2(F(9, 8))
    b = V3(F(9, 8))
    assert ends(a) == (F(-3, 2), F(-3, 4))
    assert ends(b) == (F(-3, 2), F(-3, 4))
    # beyond the crossover both collapse to the closed diamond interval
    top = V2(F(32, 27))
    assert ends(top) == (F(-4, 3), F(-8, 9))
    assert not top.lo_open
    with pytest.raises(ValueError):
        V2(F(1))
    with pytest.raises(ValueError):
        V3(F(3, 2))


def test_V2_contains_minus_one():
    # (q-1)^2 < q^2 - q for q > 1, so -1 is strictly interior
    for q in (F(33, 32), F(9, 8)):
        R = V2(q)
        assert membership(F(-1), R) == "inside"


def test_membership_and_refinement():
    R = V2(F(9, 8))
    assert membership(F(-1), R) == "inside"
    assert membership(F(-3, 4), R) == "outside"   # open exact endpoint
    assert membership(F(-2), R) == "outside"
    # irrational endpoint: enclosure may need refinement to decide
    assert refine_until_decided(F(-11, 10), lambda w: V2(F(33, 32), w)) \
        in ("inside", "outside")


def test_interior_samples():
    rng = random.Random(0)
    R = interval_Im(F(15, 16), 2)
    pts = interior_samples(R, 10, rng)
    assert len(pts) == 10
    assert all(F(-5, 4) < p < F(-3, 4) for p in pts)


def test_thm61_falsifier():
    q = F(15, 16)
    V = interval_Im(q, 2)
    good = check_thm61_hypotheses(V, q, 2, gamma=0, samples=3)
    assert good.status.startswith("UNFALSIFIED")
    bad_gamma = check_thm61_hypotheses(V, q, 2, gamma=1, samples=3)
    assert bad_gamma.status == "FALSIFIED"
    assert bad_gamma.d_witnesses
    # interval escaping (-2, -q/2) fails hypothesis (a)
    wide = RegionInterval.exact(F(-3), F(-1))
    assert not check_thm61_hypotheses(wide, q, 2, gamma=0, samples=1).a_ok
