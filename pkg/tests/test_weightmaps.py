import random
from fractions import Fraction as F

import pytest

from tuttepoly.weightmaps import (INF, RegionInterval, diamond_cubic,
                                  diamond_fixed_point_enclosure,
                                  diamond_iterate, diamond_map,
                                  diamond_multiplier_enclosure, dualw,
                                  first_nonnegative_iterate,
                                  interval_par_image, interval_ser_image, par,
                                  ser)


def test_par_ser_values():
    assert par(F(1), F(1)) == 3
    assert par(F(-1, 2), F(-1, 2)) == F(-3, 4)
    assert ser(F(2), F(1), F(1)) == F(1, 4)
    assert ser(F(32, 27), F(-8, 9), F(-8, 9)) == F(-4, 3)
    assert par(F(-4, 3), F(-4, 3)) == F(-8, 9)


def test_ser_pole_and_indeterminate():
    assert ser(F(3), F(-1), F(-2)) is INF
    with pytest.raises(ZeroDivisionError):
        ser(F(2), F(0), F(-2))


def test_dualw_involution():
    assert dualw(F(2), F(4)) == F(1, 2)
    v = F(-5, 7)
    assert dualw(F(3, 2), dualw(F(3, 2), v)) == v
    with pytest.raises(ZeroDivisionError):
        dualw(F(2), F(0))


def test_diamond_map_is_par_of_ser():
    rng = random.Random(5)
    for _ in range(30):
        q = F(rng.randint(-20, 20), 8)
        v = F(rng.randint(-24, 24), 8)
        if q == 0:
            continue
        s = ser(q, v, v)
        expect = INF if s is INF else par(s, s)
        got = diamond_map(q, v)
        if expect is INF:
            assert got is INF
        else:
            assert got == expect
    assert diamond_map(F(2), F(1)) == F(9, 16)
    assert diamond_map(F(2), F(-1)) is INF        # v = -q/2 pole
    assert diamond_map(F(2), INF) is INF


def test_diamond_cubic_fixed_points():
    # roots of v^3 - 2qv - q^2 are exactly the fixed points off the pole
    q = F(32, 27)
    c = diamond_cubic(q)
    assert c.eval(F(-8, 9)) == 0
    assert c.eval(F(16, 9)) == 0
    assert c.eval(F(-4, 3)) != 0                  # q/v+ is NOT a fixed point
    assert diamond_map(q, F(-8, 9)) == F(-8, 9)
    assert diamond_map(q, F(16, 9)) == F(16, 9)


def test_fixed_point_enclosure():
    # rational at the top of the admissible range
    e = diamond_fixed_point_enclosure(F(32, 27))
    assert e.is_point() and e.lo == F(-8, 9)
    # irrational in the interior
    e1 = diamond_fixed_point_enclosure(F(1))
    assert F(-3, 4) <= e1.lo <= e1.hi <= F(-1, 2)
    c = diamond_cubic(F(1))
    assert c.eval(e1.lo) * c.eval(e1.hi) < 0
    with pytest.raises(ValueError):
        diamond_fixed_point_enclosure(F(3, 2))


def test_multiplier_enclosure():
    # neutral fixed point exactly at the endpoint parameter
    lam = diamond_multiplier_enclosure(F(32, 27))
    assert lam.is_point() and lam.lo == 1
    # strictly repelling below it
    lam1 = diamond_multiplier_enclosure(F(1), width=F(1, 10 ** 6))
    assert lam1.lo > 1


def test_iterates_and_escape():
    q = F(1, 2)
    # above the middle fixed point the iterates escape to nonnegative values
    k = first_nonnegative_iterate(q, F(-1, 8), cap=500)
    assert k is not None
    w = diamond_iterate(q, F(-1, 8), k)
    assert w is INF or w >= 0
    # immediate pole counts as escape on the next step
    assert first_nonnegative_iterate(F(2), F(-1), cap=5) == 1
    # nonnegative input escapes at step 0
    assert first_nonnegative_iterate(q, F(1), cap=5) == 0


def test_region_interval_contains():
    I = RegionInterval.exact(F(-5, 4), F(-3, 4))
    inner = RegionInterval.exact(F(-9, 8), F(-7, 8))
    assert I.contains_interval(inner)
    assert not inner.contains_interval(I)
    # open interval does not contain a closed one sharing an endpoint
    closed = RegionInterval.exact(F(-5, 4), F(-1), lo_open=False)
    assert not I.contains_interval(closed)
    assert RegionInterval.exact(F(-5, 4), F(-1), lo_open=False) \
        .contains_interval(RegionInterval.exact(F(-5, 4), F(-9, 8),
                                                lo_open=False, hi_open=False))


def test_interval_par_image_closure():
    I = RegionInterval.exact(F(-5, 4), F(-3, 4))
    img = interval_par_image(I, I)
    assert img.lo.lo == F(-17, 16) and img.hi.hi == F(-15, 16)
    assert I.contains_interval(img)


def test_interval_ser_image_closure():
    q = F(15, 16)
    I = RegionInterval.exact(F(-5, 4), F(-3, 4))
    img = interval_ser_image(q, I, I)
    assert img.lo.lo == F(-1) and img.hi.hi == F(-15, 17)
    assert I.contains_interval(img)


def test_interval_ser_image_errors():
    q = F(15, 16)
    with pytest.raises(ValueError):
        interval_ser_image(q, RegionInterval.exact(F(-1), F(1)),
                           RegionInterval.exact(F(-2), F(-1)))
    with pytest.raises(ValueError):
        # prefactor q + v1 + v2 changes sign over the box
        interval_ser_image(q, RegionInterval.exact(F(-2), F(-1, 4)),
                           RegionInterval.exact(F(-2), F(-1, 4)))
