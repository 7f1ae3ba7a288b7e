from fractions import Fraction as F

import pytest

from tuttepoly.exact import UniPoly
from tuttepoly.roots import (DEFAULT_WIDTH, isolate_root_in, isolate_roots,
                             nth_root_enclosure, refine_root, root_bound,
                             sturm_count, sturm_sequence)


def test_sturm_count_basic():
    p = UniPoly([-1, 0, 1])               # x^2 - 1
    seq = sturm_sequence(p)
    assert sturm_count(seq, F(-2), F(0)) == 1
    assert sturm_count(seq, F(-2), F(2)) == 2
    assert sturm_count(seq, F(2), F(3)) == 0


def test_root_bound_contains_all_roots():
    p = UniPoly([-6, 11, -6, 1])          # roots 1, 2, 3
    assert root_bound(p) > 3


def test_isolate_roots_with_multiplicity():
    # (x + 8/9)^2 (x - 16/9) = x^3 - (64/27) x - 1024/729
    p = UniPoly([F(-1024, 729), F(-64, 27), 0, 1])
    roots = isolate_roots(p)
    assert len(roots) == 2
    r1, r2 = roots
    assert r1.multiplicity == 2 and r2.multiplicity == 1
    assert r1.interval.contains(F(-8, 9))
    assert r2.interval.contains(F(16, 9))


def test_isolate_roots_disjoint_and_sorted():
    p = UniPoly([-6, 11, -6, 1])          # roots 1, 2, 3
    roots = isolate_roots(p)
    assert len(roots) == 3
    for r, x in zip(roots, (F(1), F(2), F(3))):
        assert r.interval.contains(x)
    for a, b in zip(roots, roots[1:]):
        assert a.interval.hi <= b.interval.lo


def test_isolate_roots_none():
    assert isolate_roots(UniPoly([1, 0, 1])) == []       # x^2 + 1
    with pytest.raises(ValueError):
        isolate_roots(UniPoly([]))


def test_isolate_root_in_irrational():
    p = UniPoly([-2, 0, 1])
    r = isolate_root_in(p, F(1), F(2))
    assert r.interval.width <= DEFAULT_WIDTH
    assert r.interval.lo ** 2 <= 2 <= r.interval.hi ** 2


def test_isolate_root_in_endpoint_hits():
    p = UniPoly([-1, 0, 1])
    assert isolate_root_in(p, F(1), F(2)).interval.is_point()
    assert isolate_root_in(p, F(1, 2), F(1)).interval.is_point()
    with pytest.raises(ValueError):
        isolate_root_in(p, F(2), F(3))    # no root there


def test_refine_root():
    p = UniPoly([-2, 0, 1])
    r = isolate_root_in(p, F(1), F(2), width=F(1, 4))
    fine = refine_root(r, F(1, 2 ** 30))
    assert fine.interval.width <= F(1, 2 ** 30)
    assert r.interval.contains(fine.interval.midpoint)


def test_nth_root_exact_detection():
    assert nth_root_enclosure(F(16), 4).is_point()
    assert nth_root_enclosure(F(16), 4).lo == 2
    assert nth_root_enclosure(F(1, 64), 3).lo == F(1, 4)
    assert nth_root_enclosure(F(0), 5).lo == 0
    assert nth_root_enclosure(F(9, 4), 2).lo == F(3, 2)


def test_nth_root_enclosure_irrational():
    e = nth_root_enclosure(F(2), 2, width=F(1, 2 ** 30))
    assert e.width <= F(1, 2 ** 30)
    assert e.lo ** 2 <= 2 <= e.hi ** 2
    with pytest.raises(ValueError):
        nth_root_enclosure(F(-1), 2)
