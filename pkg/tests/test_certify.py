import pytest

from tuttepoly.certify import (SUITES, block_pool, connected_multigraph_pool,
                               matroid_pool, run_all, run_suite,
                               weight_values)
from fractions import Fraction as F
import random


def test_pools():
    pool = connected_multigraph_pool(3)
    assert all(g.component_count() == 1 for g in pool)
    assert all(1 <= g.m <= 3 for g in pool)
    assert all(not any(u == v for (_, u, v) in g.edges) for g in pool)
    bp = block_pool(3)
    for g in bp:
        for blk in g.blocks().blocks:
            assert blk.trivial or len(blk.edges) >= 3
    mp = matroid_pool(6)
    assert all(len(m.ground) <= 6 for m in mp)


def test_weight_values_grid():
    rng = random.Random(0)
    vals = weight_values(F(-2), F(0), rng, 4, include_endpoints=True)
    assert F(-2) in vals and F(0) in vals and F(-1) in vals
    assert all(F(-2) <= v <= F(0) for v in vals)
    interior = weight_values(F(-2), F(0), rng, 4, include_endpoints=False)
    assert all(F(-2) < v < F(0) for v in interior)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_clean_small_bounds(name):
    report = run_suite(name, seed=1, bounds="small")
    assert report.cases > 0
    assert report.clean, report.violations[:3]


def test_suite_reproducible():
    a = run_suite("blocks", seed=5, bounds="small")
    b = run_suite("blocks", seed=5, bounds="small")
    assert a.cases == b.cases and a.clean and b.clean


def test_poison_negative_control():
    # a deliberately flipped first case must surface as a violation,
    # proving the checks can actually fail
    report = run_suite("q_negative", seed=0, bounds="small", poison=True)
    assert len(report.violations) == 1
    v = report.violations[0]
    assert v.expected.startswith("poisoned: NOT (")
    assert v.suite == "q_negative"
    d = report.to_dict()
    assert d["violations"][0]["expected"] == v.expected
    assert set(d) == {"suite", "cases", "violations", "seed", "bounds",
                      "elapsed"}


def test_run_all_and_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
    reports = run_all(seed=2, bounds="small")
    assert sorted(r.suite for r in reports) == sorted(SUITES)
    assert all(r.clean for r in reports)
