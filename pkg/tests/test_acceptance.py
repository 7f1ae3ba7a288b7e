"""Top-level acceptance gate: ten end-to-end checks, one pass/fail line each.

Run with ``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the
summary lines immediately).
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

from tuttepoly.certify import matroid_pool, run_all
from tuttepoly.cli import main as cli_main
from tuttepoly.engine import z_delcon, z_expansion, z_potts_coloring
from tuttepoly.exact import BiPoly, RationalEnclosure, interval_div
from tuttepoly.graphs import (MultiGraph, banana_graph, cycle_graph,
                              path_graph)
from tuttepoly.matroids import minor_contract, minor_delete
from tuttepoly.regions import V2, V3, diamond_interval, diamond_series, interval_Im
from tuttepoly.weightmaps import (RegionInterval, diamond_cubic, diamond_map,
                                  diamond_multiplier_enclosure,
                                  interval_par_image, interval_ser_image, par,
                                  ser)


@contextmanager
def report(num, label, budget_s):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} ({label}): FAIL "
              f"[{time.perf_counter() - t0:.1f}s]")
        raise
    elapsed = time.perf_counter() - t0
    print(f"ACCEPTANCE {num} ({label}): PASS [{elapsed:.1f}s]")
    assert elapsed < budget_s, f"budget {budget_s}s exceeded: {elapsed:.1f}s"


def _random_multigraph(rng, max_n, max_m):
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    return MultiGraph(n, [(i, rng.randrange(n), rng.randrange(n))
                          for i in range(m)])


def test_01_route_equivalence():
    with report(1, "three-route oracle equivalence", 60):
        rng = random.Random(20260824)
        for _ in range(200):
            g = _random_multigraph(rng, 6, 10)
            for _ in range(5):
                q = F(rng.randint(-24, 24), rng.randint(1, 6))
                if q == 0:
                    q = F(1, 3)
                w = {eid: F(rng.randint(-12, 12), rng.randint(1, 4))
                     for eid in g.edge_ids()}
                assert z_delcon(g, q, w).value == z_expansion(g, q, w)
        for _ in range(100):
            g = _random_multigraph(rng, 6, 8)
            w = {eid: F(rng.randint(-8, 8), rng.randint(1, 3))
                 for eid in g.edge_ids()}
            for q in (1, 2, 3, 4):
                assert z_potts_coloring(g, q, w) == z_expansion(g, F(q), w)


def test_02_exact_zero_witnesses():
    with report(2, "exact partition-function zeros", 1):
        s = F(1, 2)
        for m in (2, 3, 4):
            q = 1 - F(1, 2) ** m          # the m-th root of 1-q is exactly 1/2
            g = banana_graph(m)
            assert z_expansion(g, q, {e: -(1 - s) for e in g.edge_ids()}) == 0
            c = cycle_graph(m)
            assert z_expansion(c, q, {e: -q / (1 - s)
                                      for e in c.edge_ids()}) == 0
            if m % 2 == 0:                # even m: the mirror points too
                assert z_expansion(g, q, {e: -(1 + s)
                                          for e in g.edge_ids()}) == 0
                assert z_expansion(c, q, {e: -q / (1 + s)
                                          for e in c.edge_ids()}) == 0


def test_03_diamond_fixed_point_exact():
    with report(3, "diamond fixed-point algebra at q=32/27", 1):
        q, vp, vm = F(32, 27), F(-8, 9), F(-4, 3)
        R = diamond_interval(q)
        assert R.lo == RationalEnclosure.point(vm)
        assert R.hi == RationalEnclosure.point(vp)
        assert diamond_map(q, vp) == vp
        assert ser(q, vp, vp) == vm and par(vm, vm) == vp
        assert diamond_multiplier_enclosure(q) == RationalEnclosure.point(1)
        # fixed-point identities as exact rational-function identities
        x, y = BiPoly.x(), BiPoly.y()
        cubic = y ** 3 - 2 * x * y - x ** 2
        assert (x + y) ** 2 - y ** 2 - y ** 3 == -cubic   # par(q/v, q/v) - v
        N = y ** 4 + 4 * y ** 3 + 2 * x * y ** 2
        D = (x + 2 * y) ** 2
        assert N - y * D == y * cubic                     # diamond(v) - v
        assert diamond_cubic(q).eval(vp) == 0


def test_04_substitution_identity():
    with report(4, "two-path substitution identity", 30):
        rng = random.Random(4)
        bases = [path_graph(1), path_graph(2), cycle_graph(3),
                 banana_graph(2)]
        for i in range(50):
            g = bases[i % len(bases)]
            while True:
                q = F(rng.randint(-16, 16), 8)
                v = F(rng.randint(-24, 24), 8)
                if q != 0 and q + 2 * v != 0:
                    break
            dg, _ = g.diamond_expand()
            lhs = z_expansion(dg, q, {e: v for e in dg.edge_ids()})
            dv = diamond_map(q, v)
            rhs = (q + 2 * v) ** (2 * g.m) * \
                z_expansion(g, q, {e: dv for e in g.edge_ids()})
            assert lhs == rhs
        # the v = -q/2 limit of the prefactored identity
        for g in bases:
            for q in (F(2), F(1, 2), F(-1)):
                dg, _ = g.diamond_expand()
                lhs = z_expansion(dg, q, {e: -q / 2 for e in dg.edge_ids()})
                assert lhs == q ** g.component_count() * (q / 2) ** (4 * g.m)


def test_05_all_suites_clean():
    with report(5, "six sign-theorem suites, default bounds", 300):
        reports = run_all(seed=0)
        for r in reports:
            assert r.clean, (r.suite, r.violations[:3])
        assert sorted(r.suite for r in reports) == \
            ["blocks", "diamond", "q_above_one", "q_negative", "structure",
             "unit_interval"]


def test_06_interval_algebra():
    with report(6, "interval inclusion and closure algebra", 10):
        q = 1 - F(1, 2) ** 12             # all three radicals exactly dyadic
        I2, I3, I4 = (interval_Im(q, m) for m in (2, 3, 4))
        for I in (I2, I3, I4):
            assert I.is_exact()
        assert I3.contains_interval(I2) and I3.lo.lo < I2.lo.lo \
            and I2.hi.lo < I3.hi.lo
        assert I4.contains_interval(I3) and I4.lo.lo < I3.lo.lo \
            and I3.hi.lo < I4.hi.lo
        assert I2.contains_interval(interval_par_image(I4, I4))
        assert I2.contains_interval(interval_ser_image(q, I4, I4))

        # three-way equivalence for self-dual closed intervals [q/v+, v+]
        # with q/v+ <= -1 <= v+ < 0:
        #   par-closed  <=>  ser-closed  <=>  v+^3 - 2q v+ - q^2 >= 0
        cubic = diamond_cubic(q)
        for t in (F(1), F(15, 16), F(7, 8), F(13, 16), F(3, 4), F(11, 16),
                  F(5, 8), F(9, 16), F(1, 2), F(3, 8)):
            vp = -t * q
            assert -1 <= vp < 0 and q / vp <= -1
            V = RegionInterval.exact(q / vp, vp, lo_open=False, hi_open=False)
            par_closed = V.contains_interval(interval_par_image(V, V))
            try:
                ser_closed = V.contains_interval(interval_ser_image(q, V, V))
            except ValueError:
                ser_closed = False        # image unbounded through the pole
            cubic_sign = cubic.eval(vp) >= 0
            assert par_closed == ser_closed == cubic_sign, (vp, par_closed,
                                                            ser_closed,
                                                            cubic_sign)


def test_07_series_vs_bisection():
    with report(7, "power series vs certified bisection", 5):
        q = F(1, 4)
        vp, vm = diamond_series(q, 20)
        R = diamond_interval(q, width=F(1, 2 ** 60))
        tol = F(1, 10 ** 6)
        assert abs(vp - R.hi.midpoint) < tol
        assert abs(vm - R.lo.midpoint) < tol


def test_08_crossover_at_nine_eighths():
    with report(8, "family crossover at q=9/8", 1):
        q = F(9, 8)
        a, b = V2(q), V3(q)
        assert a.hi == RationalEnclosure.point(F(-3, 4))
        assert b.hi == RationalEnclosure.point(F(-3, 4))
        assert diamond_cubic(q).eval(F(-3, 4)) == 0
        g2 = banana_graph(2)
        assert z_expansion(g2, q, {0: F(-3, 2), 1: F(-3, 4)}) == 0
        g3 = banana_graph(3)
        assert z_expansion(g3, q, {e: F(-3, 2) for e in g3.edge_ids()}) == 0


def test_09_structure_propositions():
    with report(9, "splitting edges and elements", 180):
        from networkx.generators.atlas import graph_atlas_g
        checked = 0
        for nxg in graph_atlas_g():
            n = nxg.number_of_nodes()
            if n < 3 or n > 7:
                continue
            g = MultiGraph(n, [(i, u, v)
                               for i, (u, v) in enumerate(nxg.edges())])
            if not g.is_2connected():
                continue
            if sum(1 for v in range(n) if g.degree(v) == 2) > 1:
                continue
            checked += 1
            assert g.splitting_edge() is not None, g
        assert checked > 50
        checked_m = 0
        for m in matroid_pool(6):
            if not m.is_2connected():
                continue
            if m.find_parallel_pair() or m.find_series_pair():
                continue
            checked_m += 1
            assert any(minor_delete(m, e).is_2connected()
                       and minor_contract(m, e).is_2connected()
                       for e in sorted(m.ground)), m.name
        assert checked_m > 0


def test_10_region_csv_invariants(capsys):
    with report(10, "region CSV invariants", 30):
        step = F(32, 27) / 200
        assert cli_main(["regions", "--q-grid", str(step), "32/27",
                         str(step)]) == 0
        out = capsys.readouterr().out
        lines = [l for l in out.splitlines() if l and not l.startswith("#")]
        header = lines[0].split(",")
        rows = [dict(zip(header, l.split(","))) for l in lines[1:]]
        assert len(rows) == 200
        for row in rows:
            q = F(row["q"])
            assert 0 < q <= F(32, 27)
            assert -3 * q / 4 <= F(row["v_diamond_plus_lo"])
            assert F(row["v_diamond_plus_hi"]) < -q / 2
            if q < 1:
                assert F(row["v4_plus"]) < F(row["v_diamond_plus_lo"])

        def single_row(qs):
            assert cli_main(["regions", "--q-grid", qs, qs, "1"]) == 0
            text = capsys.readouterr().out
            ls = [l for l in text.splitlines() if l and not l.startswith("#")]
            return dict(zip(ls[0].split(","), ls[1].split(",")))

        assert single_row("3/4")["v2_plus"] == "-1/2"
        r = single_row("15/16")
        assert r["v2_plus"] == "-3/4" and r["v4_plus"] == "-5/8"
        r = single_row("9/8")
        assert r["V2_hi"] == "-3/4" and r["V3_hi"] == "-3/4"
        r = single_row("32/27")
        assert r["v_diamond_plus_lo"] == "-8/9"
        assert r["v_diamond_plus_hi"] == "-8/9"
        assert r["v_diamond_minus_lo"] == "-4/3"
        assert r["v_diamond_minus_hi"] == "-4/3"
