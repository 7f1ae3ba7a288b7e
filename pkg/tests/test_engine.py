import random
from fractions import Fraction as F

import pytest

from tuttepoly.engine import (coeff_partial_derivative, coeffs, coeffs_matroid,
                              chromatic, contract_edge_set,
                              duality_identity_check, flow, subset_census,
                              tutte_xy, u24_closed_form, z_as_qpoly, z_bipoly,
                              z_delcon, z_expansion, z_from_coeffs,
                              z_matroid_expansion, z_over_qc,
                              z_potts_coloring)
from tuttepoly.exact import UniPoly
from tuttepoly.graphs import (MultiGraph, banana_graph, complete_graph,
                              cycle_graph, path_graph)
from tuttepoly.matroids import direct_sum, dual, graphic, uniform


def wmap(g, v):
    return {eid: F(v) for eid in g.edge_ids()}


def test_expansion_closed_forms():
    # Z_K2 = q^2 + q v ; Z_C3 = q^3 + 3q^2 v + 3q v^2 + q v^3
    k2 = path_graph(1)
    assert z_expansion(k2, F(2), {0: F(1)}) == 6
    c3 = cycle_graph(3)
    q, v = F(5), F(-1, 2)
    assert z_expansion(c3, q, wmap(c3, v)) == \
        q**3 + 3 * q**2 * v + 3 * q * v**2 + q * v**3
    # tree: Z = q (q+v)^2
    p2 = path_graph(2)
    assert z_expansion(p2, F(2), wmap(p2, 1)) == 18


def test_expansion_loop_and_empty():
    loop = cycle_graph(1)
    assert z_expansion(loop, F(3), {0: F(2)}) == 3 * (1 + 2)
    assert z_expansion(MultiGraph(2), F(5), {}) == 25


def test_missing_weight_rejected():
    with pytest.raises(ValueError):
        z_expansion(path_graph(1), F(2), {})


def test_coeffs_and_reassembly():
    c3 = cycle_graph(3)
    w = wmap(c3, F(-1, 3))
    cs = coeffs(c3, w)
    assert len(cs) == 3
    v = F(-1, 3)
    assert cs == [3 * v**2 + v**3, 3 * v, F(1)]
    for q in (F(2), F(-1), F(7, 3)):
        assert z_from_coeffs(cs, q) == z_expansion(c3, q, w)


def test_coloring_route_agrees():
    rng = random.Random(7)
    for g in [path_graph(2), cycle_graph(4), banana_graph(3),
              complete_graph(4), MultiGraph(3, [(0, 0, 0), (1, 0, 1), (2, 1, 2)])]:
        w = {eid: F(rng.randint(-8, 8), 4) for eid in g.edge_ids()}
        for q in (1, 2, 3):
            assert z_potts_coloring(g, q, w) == z_expansion(g, F(q), w)
    with pytest.raises(ValueError):
        z_potts_coloring(path_graph(1), 0, {0: F(1)})


def test_delcon_agrees_with_expansion():
    rng = random.Random(11)
    graphs = [path_graph(3), cycle_graph(5), banana_graph(4),
              complete_graph(4),
              MultiGraph(4, [(0, 0, 0), (1, 0, 1), (2, 1, 2), (3, 2, 3),
                             (4, 3, 1), (5, 1, 2)]),
              MultiGraph(5, [(0, 0, 1), (1, 1, 2), (2, 2, 0),
                             (3, 3, 4)])]          # disconnected
    for g in graphs:
        for _ in range(4):
            q = F(rng.randint(-12, 12), rng.randint(1, 4))
            if q == 0:
                continue
            w = {eid: F(rng.randint(-10, 10), rng.randint(1, 3))
                 for eid in g.edge_ids()}
            assert z_delcon(g, q, w).value == z_expansion(g, q, w)


def test_delcon_q_zero():
    g = cycle_graph(3)
    assert z_delcon(g, F(0), wmap(g, 1)).value == 0
    assert z_delcon(MultiGraph(0), F(0), {}).value == 1


def test_delcon_series_pole_falls_back_to_branching():
    # C_4 at weights with q + v1 + v2 = 0 for every pair
    g = cycle_graph(4)
    q, v = F(2), F(-1)
    assert z_delcon(g, q, wmap(g, v)).value == z_expansion(g, q, wmap(g, v))


def test_chromatic_flow_tutte():
    assert chromatic(cycle_graph(3)) == UniPoly([0, 2, -3, 1])
    assert flow(cycle_graph(3)) == UniPoly([-1, 1])
    assert flow(complete_graph(4)) == UniPoly([-6, 11, -6, 1])
    t = tutte_xy(path_graph(1))
    assert t.terms == {(1, 0): F(1)}                     # T_K2 = x
    t3 = tutte_xy(cycle_graph(3))
    assert t3.terms == {(2, 0): F(1), (1, 0): F(1), (0, 1): F(1)}


def test_subset_census_triangle():
    assert subset_census(cycle_graph(3)) == \
        {(3, 0): 1, (2, 1): 3, (1, 2): 3, (1, 3): 1}


def test_z_bipoly_matches_expansion():
    g = complete_graph(4)
    p = z_bipoly(g)
    for (q, v) in [(F(2), F(1)), (F(-1), F(-1, 2)), (F(3, 4), F(-5, 4))]:
        assert p.eval(q, v) == z_expansion(g, q, wmap(g, v))


def test_qpoly_and_shift():
    g = path_graph(2)
    w = wmap(g, F(1))
    p = z_as_qpoly(g, w)
    assert p.eval(F(2)) == 18
    assert z_over_qc(g, w) == UniPoly([1, 2, 1])         # (q+1)^2


def test_contract_edge_set_drops_created_loops():
    g = banana_graph(2)
    out = contract_edge_set(g, [0, 1])
    assert out.n == 1 and out.m == 0


def test_coeff_partial_derivative():
    g = cycle_graph(3)
    w = wmap(g, F(-1, 2))
    # repeated edge: each weight has degree <= 1, so the derivative vanishes
    assert coeff_partial_derivative(g, w, [0, 0], 2) == 0
    # dC[2]/dv0 = coefficient C[2] of the contraction C_3 / e0 = C_2
    c2 = g.contract(0)
    expect = coeffs(c2, {eid: w[eid] for eid in c2.edge_ids()})[1]
    assert coeff_partial_derivative(g, w, [0], 2) == expect


def test_matroid_expansion_matches_graph():
    # Z-tilde(M(G)) = q^-|V| Z(G) for connected G ... in general q^(k-n) scale
    g = cycle_graph(4)
    m = graphic(g)
    w = wmap(g, F(-2, 3))
    q = F(5, 2)
    assert z_matroid_expansion(m, q, w) == z_expansion(g, q, w) / q**g.n


def test_coeffs_matroid():
    m = uniform(1, 2)
    w = {0: F(2), 1: F(3)}
    # rank 0: empty set; rank 1: {0}, {1}, {0,1}
    assert coeffs_matroid(m, w) == [F(1), F(2) + F(3) + F(6)]


def test_duality_identity():
    for m in [graphic(cycle_graph(3)), uniform(2, 4),
              direct_sum(uniform(1, 2), graphic(path_graph(2)))]:
        w = {e: F(3, 2) if e % 2 else F(-1, 2) for e in m.ground}
        assert duality_identity_check(m, F(7, 3), w)


def test_u24_closed_form_cross_check():
    rng = random.Random(3)
    m = uniform(2, 4)
    for _ in range(5):
        q = F(rng.randint(1, 9), 4)
        w = {e: F(rng.randint(-9, 9), 5) for e in m.ground}
        lhs = u24_closed_form(q, [w[e] for e in sorted(m.ground)])
        assert lhs == q * q * z_matroid_expansion(m, q, w)
