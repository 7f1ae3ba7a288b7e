"""Certification suites: the sign theorems instantiated on enumerated
small graphs and matroids at exact rational points.

Each suite sweeps a family of instances against one group of sign
statements and returns a SuiteReport whose violation list is empty when
every instance satisfies its predicted sign.  Violations carry enough
data (serialized instance, q, weights, computed value) to re-verify the
failure independently through the subgraph expansion.

The ``poison`` flag is a negative control: it flips the outcome of the
first case so the reporting/exit-status path can be exercised.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .engine import (coeff_partial_derivative, coeffs, coeffs_matroid,
                     chromatic, u24_closed_form, z_expansion, z_from_coeffs,
                     z_matroid_expansion, z_over_qc)
from .exact import BiPoly, RationalEnclosure, UniPoly, interval_div
from .graphs import (MultiGraph, banana_graph, canonical_form, complete_graph,
                     cycle_graph, enumerate_nonseparable, format_graph,
                     path_graph)
from .matroids import (Matroid, direct_sum, dual, graphic, minor_contract,
                       minor_delete, uniform)
from .regions import (check_thm61_hypotheses, diamond_interval,
                      interior_samples, interval_Im, v3_cubic, v3_plus, V2, V3)
from .weightmaps import (INF, RegionInterval, diamond_cubic,
                         diamond_fixed_point_enclosure, diamond_iterate,
                         diamond_map, diamond_multiplier_enclosure,
                         first_nonnegative_iterate, par, ser)

BOUNDS = {
    "default": {"max_pool_edges": 5, "max_matroid_elems": 6,
                "random_weights": 8, "atlas_max_vertices": 7},
    "small": {"max_pool_edges": 4, "max_matroid_elems": 5,
              "random_weights": 3, "atlas_max_vertices": 6},
}


@dataclass
class Violation:
    suite: str
    instance: str
    q: str
    weights: dict
    expected: str
    value: str


@dataclass
class SuiteReport:
    suite: str
    cases: int
    violations: list
    seed: int
    bounds: dict
    elapsed: float

    @property
    def clean(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"suite": self.suite, "cases": self.cases,
                "violations": [asdict(v) for v in self.violations],
                "seed": self.seed, "bounds": self.bounds,
                "elapsed": self.elapsed}


class _Checker:
    """Counts cases and collects violations; optionally poisons one case."""

    def __init__(self, suite: str, poison: bool = False):
        self.suite = suite
        self.cases = 0
        self.violations: list[Violation] = []
        self._poison_pending = poison

    def check(self, ok: bool, instance, q, weights, expected: str, value):
        self.cases += 1
        if self._poison_pending:
            self._poison_pending = False
            ok = not ok
            expected = f"poisoned: NOT ({expected})"
        if not ok:
            self.violations.append(Violation(
                self.suite, str(instance), str(q),
                {str(k): str(v) for k, v in (weights or {}).items()},
                expected, str(value)))

    def report(self, seed: int, bounds: dict, t0: float) -> SuiteReport:
        return SuiteReport(self.suite, self.cases, self.violations,
                           seed, bounds, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Instance pools and weight grids

@lru_cache(maxsize=None)
def connected_multigraph_pool(max_edges: int) -> tuple[MultiGraph, ...]:
    """All connected loopless multigraphs with 1..max_edges edges, up to iso."""
    out: list[MultiGraph] = []
    seen: set[tuple] = set()
    for n in range(2, max_edges + 2):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for m in range(max(1, n - 1), max_edges + 1):
            for combo in combinations_with_replacement(pairs, m):
                used = set()
                for (u, v) in combo:
                    used.update((u, v))
                if len(used) != n:
                    continue
                g = MultiGraph(n, [(i, u, v) for i, (u, v) in enumerate(combo)])
                if g.component_count() != 1:
                    continue
                key = canonical_form(g)
                if key not in seen:
                    seen.add(key)
                    out.append(g)
    return tuple(out)


def _next_eid(g: MultiGraph) -> int:
    return max(g.edge_ids(), default=-1) + 1


def _disjoint_union(g1: MultiGraph, g2: MultiGraph) -> MultiGraph:
    off, eoff = g1.n, _next_eid(g1)
    edges = list(g1.edges) + [(eoff + i, u + off, v + off)
                              for i, (_, u, v) in enumerate(g2.edges)]
    return MultiGraph(g1.n + g2.n, edges)


def _one_point_join(g1: MultiGraph, g2: MultiGraph) -> MultiGraph:
    """Identify vertex 0 of g2 with vertex 0 of g1 (a cut vertex)."""
    off, eoff = g1.n, _next_eid(g1)

    def remap(x):
        return 0 if x == 0 else off + x - 1

    edges = list(g1.edges) + [(eoff + i, remap(u), remap(v))
                              for i, (_, u, v) in enumerate(g2.edges)]
    return MultiGraph(g1.n + g2.n - 1, edges)


def _extra_graphs() -> list[MultiGraph]:
    """Named instances past the exhaustive bound (still <= 7 edges)."""
    theta = MultiGraph(5, [(0, 0, 2), (1, 2, 1), (2, 0, 3), (3, 3, 1),
                           (4, 0, 4), (5, 4, 1)])
    return [cycle_graph(6), cycle_graph(7), banana_graph(6), banana_graph(7),
            complete_graph(4), theta]


@lru_cache(maxsize=None)
def block_pool(min_block_edges: int) -> tuple[MultiGraph, ...]:
    """Graphs in which every nontrivial block has >= min_block_edges edges."""
    out = []
    for size in range(min_block_edges, 6):
        out.extend(enumerate_nonseparable(size))
    tri = cycle_graph(3)
    if min_block_edges <= 3:
        out.append(_one_point_join(tri, tri))          # bowtie, 6 edges
    if min_block_edges <= 2:
        out.append(_one_point_join(banana_graph(2), banana_graph(2)))
    if min_block_edges <= 4:
        out.append(_one_point_join(cycle_graph(4), cycle_graph(4)))
    return tuple(g for g in out if min(
        (len(b.edges) for b in g.blocks().blocks if not b.trivial),
        default=min_block_edges) >= min_block_edges)


@lru_cache(maxsize=None)
def matroid_pool(max_elems: int) -> tuple[Matroid, ...]:
    ms: list[Matroid] = []
    for nel in range(1, max_elems + 1):
        for r in range(0, nel + 1):
            ms.append(uniform(r, nel))
    base_graphs = [path_graph(2), cycle_graph(3), banana_graph(2),
                   banana_graph(3), cycle_graph(4), complete_graph(4)]
    graphics = [graphic(g) for g in base_graphs if g.m <= max_elems]
    ms.extend(graphics)
    ms.extend(dual(m) for m in graphics)
    if max_elems >= 5:
        ms.append(direct_sum(uniform(1, 2), graphic(cycle_graph(3))))
    return tuple(ms)


def _interior_rational(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    denom = 2 ** 12
    k = rng.randint(1, denom - 1)
    return lo + Fraction(k, denom) * (hi - lo)


def weight_values(lo: Fraction, hi: Fraction, rng: random.Random,
                  nrand: int = 8, include_endpoints: bool = False) -> list[Fraction]:
    vals = [Fraction(lo), Fraction(hi)] if include_endpoints else []
    vals.append((Fraction(lo) + Fraction(hi)) / 2)
    vals.extend(_interior_rational(rng, lo, hi) for _ in range(nrand))
    return vals


def _bounds(bounds) -> dict:
    if bounds is None:
        return dict(BOUNDS["default"])
    if isinstance(bounds, str):
        return dict(BOUNDS[bounds])
    return dict(BOUNDS["default"], **bounds)


# ---------------------------------------------------------------------------
# Suite 1: q < 0

def suite_q_negative(seed: int = 0, bounds=None, poison: bool = False) -> SuiteReport:
    """Coefficient alternation and fixed-sign statements for q < 0.

    Covers: alternating coefficient signs (-1)^(n-k) C[k] >= 0 with weights
    in [-2, 0] (strict on the open interval), vanishing below the component
    count, (-1)^n Z > 0 for q < 0, the loop variant (weight >= -1, with Z
    identically zero at weight exactly -1), mixed first partials of the
    coefficients, the matroid rank-coefficient analogue with contractions,
    and the complementary q < 0 region (bridges >= -q, others >= -q/2) with
    sign (-1)^c.
    """
    b = _bounds(bounds)
    rng = random.Random(seed)
    ck = _Checker("q_negative", poison)
    t0 = time.perf_counter()
    qs = [Fraction(-3), Fraction(-1), Fraction(-1, 2)]

    pool = list(connected_multigraph_pool(b["max_pool_edges"])) + _extra_graphs()
    pool.append(_disjoint_union(cycle_graph(3), cycle_graph(3)))

    for g in pool:
        n = g.n
        c = g.component_count()
        vals = weight_values(Fraction(-2), Fraction(0), rng,
                             nrand=b["random_weights"], include_endpoints=True)
        assignments = [{eid: v for eid in g.edge_ids()} for v in vals]
        for _ in range(2):
            assignments.append({eid: _interior_rational(rng, Fraction(-2), Fraction(0))
                                for eid in g.edge_ids()})
        for w in assignments:
            cs = coeffs(g, w)
            inst = format_graph(g, w)
            strict = all(-2 < v < 0 for v in w.values())
            for k in range(1, n + 1):
                val = cs[k - 1]
                if k < c:
                    ck.check(val == 0, inst, "coeff", w,
                             f"C[{k}] == 0 below component count", val)
                else:
                    s = (-1) ** (n - k) * val
                    if strict:
                        ck.check(s > 0, inst, "coeff", w,
                                 f"(-1)^(n-{k}) C[{k}] > 0 (open weights)", val)
                    else:
                        ck.check(s >= 0, inst, "coeff", w,
                                 f"(-1)^(n-{k}) C[{k}] >= 0", val)
            for q in qs:
                z = z_from_coeffs(cs, q)
                ck.check((-1) ** n * z > 0, inst, q, w,
                         "(-1)^n Z > 0 for q < 0 (loopless)", z)

    # Loop variants: weight on the loop >= -1; equality kills Z entirely.
    for base in [path_graph(1), cycle_graph(3), banana_graph(2)]:
        loop_id = _next_eid(base)
        gl = MultiGraph(base.n, list(base.edges) + [(loop_id, 0, 0)])
        for vloop in [Fraction(-1), Fraction(-1, 2), Fraction(1)]:
            w = {eid: Fraction(-1, 2) for eid in base.edge_ids()}
            w[loop_id] = vloop
            inst = format_graph(gl, w)
            for q in qs:
                z = z_expansion(gl, q, w)
                if vloop == -1:
                    ck.check(z == 0, inst, q, w, "Z == 0 at loop weight -1", z)
                else:
                    ck.check((-1) ** gl.n * z > 0, inst, q, w,
                             "(-1)^n Z > 0 with loop weight > -1", z)

    # Mixed partials of the coefficients over distinct edge sets: sign
    # (-1)^(n-k+l+gamma(S)) with weights in [-1, 0] (safe for edges that
    # become loops under contraction).
    for g in pool:
        if g.m > 5:
            continue
        dw = [{eid: Fraction(-1) for eid in g.edge_ids()},
              {eid: Fraction(-1, 2) for eid in g.edge_ids()},
              {eid: _interior_rational(rng, Fraction(-1), Fraction(0))
               for eid in g.edge_ids()}]
        for w in dw:
            inst = format_graph(g, w)
            for ell in (1, 2):
                for S in combinations(g.edge_ids(), ell):
                    gamma = g.cyclomatic(S)
                    for k in range(1, g.n + 1):
                        val = coeff_partial_derivative(g, w, list(S), k)
                        s = (-1) ** (g.n - k + ell + gamma) * val
                        ck.check(s >= 0, inst, f"dC[{k}]/d{S}", w,
                                 f"(-1)^(n-k+l+gamma) dC[{k}] >= 0", val)

    # Matroid analogue: (-1)^r Ct[r] >= 0, Ct[0] = prod over loops (1+v),
    # Zt >= 0 at q < 0; same statement for single-element contractions.
    for m in matroid_pool(b["max_matroid_elems"]):
        elems = sorted(m.ground)
        loops = [e for e in elems if m.rank([e]) == 0]
        r = m.full_rank
        vlist = [Fraction(-1), Fraction(-1, 2),
                 _interior_rational(rng, Fraction(-1), Fraction(0))]
        if not loops:
            vlist += [Fraction(-2), Fraction(-3, 2)]
        for v in vlist:
            w = {e: v for e in elems}
            ct = coeffs_matroid(m, w)
            for rr in range(r + 1):
                ck.check((-1) ** rr * ct[rr] >= 0, m.name, "coeff", w,
                         f"(-1)^{rr} Ct[{rr}] >= 0", ct[rr])
            pl = Fraction(1)
            for e in loops:
                pl *= 1 + w[e]
            ck.check(ct[0] == pl, m.name, "coeff", w,
                     "Ct[0] == prod over loops of (1+v)", ct[0])
            for q in (Fraction(-3), Fraction(-1, 2)):
                zt = sum((ct[rr] * q ** (-rr) for rr in range(r + 1)), Fraction(0))
                ck.check(zt >= 0, m.name, q, w, "Zt >= 0 for q < 0", zt)
            if v < -1:
                # Contracting may turn spanned elements into loops, whose
                # weights must stay >= -1 for the contraction statement.
                continue
            for e in elems[:3]:
                rho = m.rank([e])
                mc = minor_contract(m, e)
                wc = {x: w[x] for x in mc.ground}
                ctc = coeffs_matroid(mc, wc)
                for rr in range(len(ctc)):
                    s = (-1) ** (rr + 2 * rho) * ctc[rr]
                    ck.check(s >= 0, mc.name, "coeff", wc,
                             f"(-1)^(r+rho) dCt[{rr + rho}] >= 0", ctc[rr])

    # Complementary region: bridges v >= -q, non-bridges v >= -q/2;
    # sign (-1)^c, strict iff every bridge is strictly above -q.
    for g in pool:
        kinds = {eid: g.classify_edge(eid) for eid in g.edge_ids()}
        c = g.component_count()
        has_bridge = any(k == "bridge" for k in kinds.values())
        for q in qs:
            cases = [(-q, -q / 2), (-q, -q / 2 + 1), (-q + 1, -q / 2),
                     (-q + _interior_rational(rng, Fraction(0), Fraction(2)),
                      -q / 2 + _interior_rational(rng, Fraction(0), Fraction(2)))]
            for (bv, nv) in cases:
                w = {eid: (bv if kinds[eid] == "bridge" else nv)
                     for eid in g.edge_ids()}
                z = z_expansion(g, q, w)
                strict = (not has_bridge) or bv > -q
                s = (-1) ** c * z
                ck.check(s > 0 if strict else s >= 0, format_graph(g, w), q, w,
                         "(-1)^c Z {} 0 (bridges >= -q, others >= -q/2)"
                         .format(">" if strict else ">="), z)

    return ck.report(seed, b, t0)


# ---------------------------------------------------------------------------
# Suite 2: 0 < q < 1

def suite_unit_interval(seed: int = 0, bounds=None, poison: bool = False) -> SuiteReport:
    """Sign and derivative statements for 0 < q < 1 (q = 1 - r^2, r rational).

    Covers: (-1)^(n+c) Z > 0 with normal weights in the open interval
    (-1-r, -1+r), bridge weights below -q and loop weights above -1;
    endpoint-sharpness zeros; the loopless derivative ladder
    (-1)^(n-c-l) d^l/dq^l (Z/q^c) > 0 with weights in (-1-r, -q); the
    q -> 1 chromatic limit; and the matroid mirrors.
    """
    b = _bounds(bounds)
    rng = random.Random(seed)
    ck = _Checker("unit_interval", poison)
    t0 = time.perf_counter()
    rs = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    pool = connected_multigraph_pool(b["max_pool_edges"])

    for r in rs:
        q = 1 - r * r
        nlo, nhi = -1 - r, -1 + r          # normal edges, open
        blo, bhi = -q - 1, -q              # bridges: v < -q, open at -q
        for g in pool:
            kinds = {eid: g.classify_edge(eid) for eid in g.edge_ids()}
            n, c = g.n, g.component_count()
            assignments = [{eid: ((blo + bhi) / 2 if kinds[eid] == "bridge"
                                  else (nlo + nhi) / 2)
                            for eid in g.edge_ids()}]
            for _ in range(3):
                assignments.append(
                    {eid: (_interior_rational(rng, blo, bhi)
                           if kinds[eid] == "bridge"
                           else _interior_rational(rng, nlo, nhi))
                     for eid in g.edge_ids()})
            for w in assignments:
                z = z_expansion(g, q, w)
                ck.check((-1) ** (n + c) * z > 0, format_graph(g, w), q, w,
                         "(-1)^(n+c) Z > 0 on the unit-interval ranges", z)

        # Loop variant: a loop with weight > -1 keeps the sign.
        base = cycle_graph(3)
        loop_id = _next_eid(base)
        gl = MultiGraph(base.n, list(base.edges) + [(loop_id, 0, 0)])
        for vloop in (Fraction(-1, 2), Fraction(2)):
            w = {eid: Fraction(-1) for eid in base.edge_ids()}
            w[loop_id] = vloop
            z = z_expansion(gl, q, w)
            ck.check((-1) ** (gl.n + 1) * z > 0, format_graph(gl, w), q, w,
                     "(-1)^(n+c) Z > 0 with a loop above -1", z)

        # Endpoint sharpness: C2 vanishes at v = -1-r; trees vanish at -q.
        z = z_expansion(banana_graph(2), q,
                        {0: -1 - r, 1: -1 - r})
        ck.check(z == 0, "C2", q, {0: -1 - r, 1: -1 - r},
                 "Z == 0 at the lower normal endpoint", z)
        tree = path_graph(2)
        z = z_expansion(tree, q, {0: -q, 1: -q})
        ck.check(z == 0, "path2", q, {0: -q, 1: -q},
                 "Z == 0 at bridge weight -q", z)

        # Derivative ladder: loopless graphs, all weights in (-1-r, -q).
        dlo, dhi = -1 - r, -q
        for g in pool:
            c = g.component_count()
            assignments = [{eid: (dlo + dhi) / 2 for eid in g.edge_ids()}]
            for _ in range(2):
                assignments.append({eid: _interior_rational(rng, dlo, dhi)
                                    for eid in g.edge_ids()})
            for w in assignments:
                p = z_over_qc(g, w)
                for ell in range(0, g.n - c + 1):
                    d = p.derivative(ell).eval(q)
                    ck.check((-1) ** (g.n - c - ell) * d > 0,
                             format_graph(g, w), q, w,
                             f"(-1)^(n-c-{ell}) d^{ell}(Z/q^c) > 0", d)

        # Matroid mirrors.
        for m in matroid_pool(b["max_matroid_elems"]):
            elems = sorted(m.ground)
            kinds = {e: m.classify_element(e) for e in elems}
            w = {}
            for e in elems:
                if kinds[e] == "loop":
                    w[e] = Fraction(-1, 2)
                elif kinds[e] == "coloop":
                    w[e] = -q - Fraction(1, 2)
                else:
                    w[e] = _interior_rational(rng, nlo, nhi)
            zt = z_matroid_expansion(m, q, w)
            ck.check((-1) ** m.full_rank * zt > 0, m.name, q, w,
                     "(-1)^r(M) Zt > 0 on the unit-interval ranges", zt)
            if all(k != "loop" for k in kinds.values()):
                wd = {e: (dlo + dhi) / 2 for e in elems}
                P = UniPoly(list(reversed(coeffs_matroid(m, wd))))
                for ell in range(m.full_rank + 1):
                    d = P.derivative(ell).eval(q)
                    ck.check((-1) ** (m.full_rank - ell) * d > 0, m.name, q, wd,
                             f"(-1)^(r-{ell}) d^{ell}(q^r Zt) > 0", d)

    # Chromatic limit at q = 1: (-1)^(n-c-l) d^l(P/q^c)|_1 >= 0.
    for g in pool:
        c = g.component_count()
        p = chromatic(g).shift_down(c)
        for ell in range(0, g.n - c + 1):
            d = p.derivative(ell).eval(Fraction(1))
            ck.check((-1) ** (g.n - c - ell) * d >= 0, format_graph(g), 1, {},
                     f"(-1)^(n-c-{ell}) d^{ell}(P/q^c)|_1 >= 0", d)

    return ck.report(seed, b, t0)


# ---------------------------------------------------------------------------
# Suite 3: the block interval family

def suite_blocks(seed: int = 0, bounds=None, poison: bool = False) -> SuiteReport:
    """The self-dual interval family for graphs with large blocks.

    At q = 1 - (1/2)^m all radicals are exact (s = 1/2): checks the
    endpoint ordering, the two-vertex and cycle zero locations, interior
    strict signs, the block sign theorem over the interval, the cubic
    characterization of the optimal m=3 interval, the rank-2 four-element
    matroid corner cases, and the doubled-triangle reduction chain.
    """
    b = _bounds(bounds)
    rng = random.Random(seed)
    ck = _Checker("blocks", poison)
    t0 = time.perf_counter()
    s = Fraction(1, 2)

    for mm in (2, 3, 4):
        q = 1 - Fraction(1, 2 ** mm)
        lo, hi = -(1 + s), -q / (1 + s)    # the self-dual interval, exact here

        # Endpoint ordering of the four family endpoints.
        ck.check(-q / (1 - s) <= lo < hi <= -(1 - s), f"ordering m={mm}", q, {},
                 "-q/(1-s) <= -(1+s) < -q/(1+s) <= -(1-s)", (lo, hi))

        # Zero locations: two-vertex multigraph and the m-cycle.
        K = banana_graph(mm)
        z = z_expansion(K, q, {e: -(1 - s) for e in K.edge_ids()})
        ck.check(z == 0, f"K2^({mm})", q, {}, "Z == 0 at v = -(1-s)", z)
        C = cycle_graph(mm)
        z = z_expansion(C, q, {e: -q / (1 - s) for e in C.edge_ids()})
        ck.check(z == 0, f"C{mm}", q, {}, "Z == 0 at v = -q/(1-s)", z)
        if mm % 2 == 0:
            z = z_expansion(K, q, {e: -(1 + s) for e in K.edge_ids()})
            ck.check(z == 0, f"K2^({mm})", q, {}, "Z == 0 at v = -(1+s) (even m)", z)
            z = z_expansion(C, q, {e: -q / (1 + s) for e in C.edge_ids()})
            ck.check(z == 0, f"C{mm}", q, {}, "Z == 0 at v = -q/(1+s) (even m)", z)

        # Interior strict signs on the one-sided families.
        for v in weight_values(-(1 + s), -(1 - s), rng, nrand=4):
            z = z_expansion(K, q, {e: v for e in K.edge_ids()})
            ck.check(z < 0, f"K2^({mm})", q, {"all": v},
                     "Z < 0 inside (-(1+s), -(1-s))", z)
        for v in weight_values(-q / (1 - s), -q / (1 + s), rng, nrand=4):
            z = z_expansion(C, q, {e: v for e in C.edge_ids()})
            ck.check((-1) ** mm * z < 0, f"C{mm}", q, {"all": v},
                     "(-1)^m Z < 0 inside the dual interval", z)

        # Block sign theorem over the interval.
        for g in block_pool(mm):
            n, c = g.n, g.component_count()
            vals = weight_values(lo, hi, rng, nrand=b["random_weights"])
            assignments = [{eid: v for eid in g.edge_ids()} for v in vals[:4]]
            for _ in range(2):
                assignments.append({eid: _interior_rational(rng, lo, hi)
                                    for eid in g.edge_ids()})
            for w in assignments:
                z = z_expansion(g, q, w)
                ck.check((-1) ** (n + c) * z > 0, format_graph(g, w), q, w,
                         f"(-1)^(n+c) Z > 0 over I_{mm}", z)

        # Cubic characterization of the optimal m=3 interval.
        if mm == 3:
            cub = v3_cubic(q)
            ck.check(cub.eval(-q / 2) == q ** 3 / 8, "v3 cubic", q, {},
                     "cubic(-q/2) == q^3/8", cub.eval(-q / 2))
            ck.check(cub.eval(-q) == q ** 3 - q ** 2, "v3 cubic", q, {},
                     "cubic(-q) == q^3 - q^2", cub.eval(-q))
            ck.check(24 * q * (q - 1) < 0, "v3 cubic", q, {},
                     "derivative has negative discriminant (single real root)",
                     24 * q * (q - 1))
            enc = v3_plus(q).interval
            qenc = interval_div(RationalEnclosure.point(q), enc)
            ck.check(hi < enc.lo and qenc.hi < lo, "v3 interval", q, {},
                     "I_3 strictly inside (q/v3+, v3+)", (qenc, enc))
            opt = RegionInterval(qenc, enc, True, True, tag="v3opt")
            for g in block_pool(3):
                pts = interior_samples(opt, 2, rng)
                w = {eid: rng.choice(pts) for eid in g.edge_ids()}
                z = z_expansion(g, q, w)
                ck.check((-1) ** (g.n + g.component_count()) * z > 0,
                         format_graph(g, w), q, w,
                         "(-1)^(n+c) Z > 0 over the optimal m=3 interval", z)

        # Rank-2, four-element matroid corner cases (m = 4 endpoints).
        if mm == 4:
            for j in range(5):
                vs = [lo] * (4 - j) + [hi] * j
                val = u24_closed_form(q, vs)
                ck.check(val >= 0, "U(2,4)", q, dict(enumerate(vs)),
                         "q^2 Zt >= 0 at interval-endpoint corners", val)
            for _ in range(5):
                vs = [_interior_rational(rng, lo, hi) for _ in range(4)]
                val = u24_closed_form(q, vs)
                ck.check(val > 0, "U(2,4)", q, dict(enumerate(vs)),
                         "q^2 Zt > 0 at interior points", val)
            vs = [_interior_rational(rng, lo, hi) for _ in range(4)]
            m24 = uniform(2, 4)
            zt = z_matroid_expansion(m24, q, dict(enumerate(vs)))
            ck.check(u24_closed_form(q, vs) == q * q * zt, "U(2,4)", q,
                     dict(enumerate(vs)), "closed form == q^2 Zt", zt)

            # Doubled-triangle reduction chain: series weight of two interval
            # edges lands in the m=2 interval, as does the parallel weight.
            i2lo, i2hi = -(1 + Fraction(1, 4)), -q / (1 + Fraction(1, 4))
            W2 = MultiGraph(3, [(0, 0, 1), (1, 0, 1), (2, 1, 2), (3, 2, 0)])
            for v in weight_values(lo, hi, rng, nrand=4):
                sv = ser(q, v, v)
                ck.check(sv is not INF and i2lo < sv < i2hi, "series map", q,
                         {"v": v}, "ser(v, v) inside I_2", sv)
                pv = par(v, v)
                ck.check(i2lo < pv < i2hi, "parallel map", q,
                         {"v": v}, "par(v, v) inside I_2", pv)
                w = {eid: v for eid in W2.edge_ids()}
                z = z_expansion(W2, q, w)
                ck.check(z > 0, format_graph(W2, w), q, w,
                         "(-1)^(n+c) Z > 0 for the doubled triangle", z)

    return ck.report(seed, b, t0)


# ---------------------------------------------------------------------------
# Suite 4: the diamond substitution

def suite_diamond(seed: int = 0, bounds=None, poison: bool = False) -> SuiteReport:
    """The two-parallel-paths substitution and its weight map.

    Covers: the substitution identity (expansion on the expanded graph vs
    prefactor times the mapped weight), its v = -q/2 limit, the exact
    fixed-point algebra at q = 32/27, the fixed-point identities as exact
    rational-function identities, escape of iterates to nonnegative
    weights with the resulting positivity, the two pointwise inequalities
    behind monotonicity, and the decreasing fixed-point multiplier.
    """
    b = _bounds(bounds)
    rng = random.Random(seed)
    ck = _Checker("diamond", poison)
    t0 = time.perf_counter()
    bases = [path_graph(1), path_graph(2), cycle_graph(3), banana_graph(2)]

    # Substitution identity at random rational points.
    for i in range(50):
        g = bases[i % len(bases)]
        while True:
            q = _interior_rational(rng, Fraction(-2), Fraction(2))
            v = _interior_rational(rng, Fraction(-3), Fraction(3))
            if q != 0 and q + 2 * v != 0:
                break
        dg, _ = g.diamond_expand()
        lhs = z_expansion(dg, q, {eid: v for eid in dg.edge_ids()})
        dv = diamond_map(q, v)
        rhs = (q + 2 * v) ** (2 * g.m) * z_expansion(
            g, q, {eid: dv for eid in g.edge_ids()})
        ck.check(lhs == rhs, format_graph(g), q, {"all": v},
                 "Z of expanded graph == (q+2v)^(2m) Z(G, mapped v)", (lhs, rhs))

    # The v = -q/2 limit.
    for g in bases:
        for q in (Fraction(2), Fraction(1, 2), Fraction(-1)):
            dg, _ = g.diamond_expand()
            v = -q / 2
            lhs = z_expansion(dg, q, {eid: v for eid in dg.edge_ids()})
            want = q ** g.component_count() * (q / 2) ** (4 * g.m)
            ck.check(lhs == want, format_graph(g), q, {"all": v},
                     "limit value q^k (q/2)^(4m) at v = -q/2", lhs)

    # Exact fixed-point algebra at q = 32/27.
    q0, vp, vm = Fraction(32, 27), Fraction(-8, 9), Fraction(-4, 3)
    ck.check(ser(q0, vp, vp) == vm, "fixed point", q0, {},
             "ser(v+, v+) == v-", ser(q0, vp, vp))
    ck.check(par(vm, vm) == vp, "fixed point", q0, {},
             "par(v-, v-) == v+", par(vm, vm))
    ck.check(diamond_map(q0, vp) == vp, "fixed point", q0, {},
             "diamond(v+) == v+", diamond_map(q0, vp))
    R = diamond_interval(q0)
    ck.check(R.lo == RationalEnclosure.point(vm)
             and R.hi == RationalEnclosure.point(vp), "interval", q0, {},
             "interval == [-4/3, -8/9] exactly", R)
    mult = diamond_multiplier_enclosure(q0)
    ck.check(mult == RationalEnclosure.point(1), "multiplier", q0, {},
             "multiplier == 1 exactly", mult)

    # Rational-function identities (x stands for q, y for v).
    x, y = BiPoly.x(), BiPoly.y()
    lhsP = (x + y) ** 2 - y ** 2 - y ** 3        # numerator of par(q/v, q/v) - v
    rhsP = -(y ** 3 - 2 * x * y - x ** 2)
    ck.check(lhsP == rhsP, "identity", "-", {},
             "par(q/v, q/v) - v has numerator -(v^3 - 2qv - q^2)", lhsP)
    N = y ** 4 + 4 * y ** 3 + 2 * x * y ** 2     # diamond numerator
    D = (x + 2 * y) ** 2
    ck.check(N - y * D == y * (y ** 3 - 2 * x * y - x ** 2), "identity", "-", {},
             "diamond(v) - v == v (v^3 - 2qv - q^2) / (q+2v)^2", N - y * D)
    third = Fraction(1, 3)
    rhs2 = ((BiPoly.const(1) + y) ** 4
            + (x - BiPoly.const(1))
            * (6 * (y + third * x + BiPoly.const(third)) ** 2
               + third * (x ** 2 - x + BiPoly.const(1))))
    ck.check(N + x * D == rhs2, "identity", "-", {},
             "diamond(v) + q numerator identity", N + x * D)

    # Fixed-point identities at sampled q via enclosures: par(q/v+, q/v+)
    # re-encloses v+ up to the enclosure width.
    for i in range(10):
        q = Fraction(32, 27) * Fraction(i + 1, 11)
        e = diamond_fixed_point_enclosure(q)
        pe = interval_div(RationalEnclosure.point(q), e)
        onep = RationalEnclosure(pe.lo + 1, pe.hi + 1)
        prods = (onep.lo * onep.lo, onep.lo * onep.hi, onep.hi * onep.hi)
        img = RationalEnclosure(min(prods) - 1, max(prods) - 1)
        tol = 8 * (e.width + img.width) + Fraction(1, 2 ** 40)
        ck.check(img.lo <= e.hi + tol and e.lo - tol <= img.hi,
                 "fixed point", q, {}, "par(v-, v-) re-encloses v+", (img, e))

    # Escape of iterates and the positivity that follows.
    for q in (Fraction(1, 2), Fraction(1), Fraction(9, 8)):
        e = diamond_fixed_point_enclosure(q)
        v = e.hi / 2                       # strictly between v+ and 0
        k = first_nonnegative_iterate(q, v, 500)
        ck.check(k is not None, "iterates", q, {"v": v},
                 "iterate reaches a nonnegative weight (v > v+)", k)
        if k is not None:
            wk = diamond_iterate(q, v, k)
            for g in (path_graph(1), cycle_graph(3)):
                if wk is INF:
                    ck.check(True, format_graph(g), q, {}, "limit case", "inf")
                else:
                    z = z_expansion(g, q, {eid: wk for eid in g.edge_ids()})
                    ck.check(z > 0, format_graph(g), q, {"all": wk},
                             "Z > 0 at the escaped weight", z)
        vminus = interval_div(RationalEnclosure.point(q), e)
        v2 = vminus.lo - 1                 # strictly below v-
        k2 = first_nonnegative_iterate(q, par(v2, v2), 500)
        ck.check(k2 is not None, "iterates", q, {"v": v2},
                 "par(v, v) escapes for v < v-", k2)
    for q in (Fraction(3, 2), Fraction(2)):
        for v in (Fraction(-1), Fraction(-3), Fraction(-1, 2)):
            k = first_nonnegative_iterate(q, v, 500)
            ck.check(k is not None, "iterates", q, {"v": v},
                     "iterates escape for q > 32/27 and any v", k)

    # Pointwise inequality: diamond(v) >= -q for q >= 1, strict except (1, -1).
    for q in (Fraction(1), Fraction(9, 8), Fraction(3, 2)):
        for num in range(-16, 9):
            v = Fraction(num, 4)
            d = diamond_map(q, v)
            if d is INF:
                ck.check(True, "pointwise", q, {"v": v}, "pole counts as +inf", d)
            elif q == 1 and v == -1:
                ck.check(d == -1, "pointwise", q, {"v": v},
                         "equality exactly at (1, -1)", d)
            else:
                ck.check(d > -q, "pointwise", q, {"v": v},
                         "diamond(v) > -q for q >= 1", d)

    # The fixed-point multiplier decreases in q and hits 1 at 32/27.
    qs = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1),
          Fraction(9, 8), Fraction(32, 27)]
    encs = [diamond_multiplier_enclosure(q, Fraction(1, 10 ** 8)) for q in qs]
    for (qa, a), (qb, bb) in zip(zip(qs, encs), zip(qs[1:], encs[1:])):
        ck.check(a.lo > bb.hi, "multiplier", f"{qa}->{qb}", {},
                 "multiplier strictly decreasing in q", (a, bb))
    ck.check(encs[-1] == RationalEnclosure.point(1), "multiplier",
             Fraction(32, 27), {}, "multiplier 1 at the right endpoint", encs[-1])

    return ck.report(seed, b, t0)


# ---------------------------------------------------------------------------
# Suite 5: 1 < q <= 32/27

def suite_q_above_one(seed: int = 0, bounds=None, poison: bool = False) -> SuiteReport:
    """Sign (-1)^(n+c+b) over the two interval families above q = 1.

    Covers: bridgeless graphs over the two-edge-block interval, graphs
    whose blocks have >= 3 edges over the three-edge-block interval, exact
    boundary zeros, the q = 9/8 crossover, and the matroid analogue with
    b counting 2-connected components.
    """
    b = _bounds(bounds)
    rng = random.Random(seed)
    ck = _Checker("q_above_one", poison)
    t0 = time.perf_counter()
    qs = [Fraction(33, 32), Fraction(9, 8), Fraction(32, 27)]

    for q in qs:
        R2, R3 = V2(q), V3(q)
        for (R, mm) in ((R2, 2), (R3, 3)):
            pool = block_pool(mm)
            pts = interior_samples(R, 6, rng)
            for g in pool:
                dec = g.blocks()
                sgn = (-1) ** (g.n + dec.c + dec.b)
                for _ in range(3):
                    w = {eid: rng.choice(pts) for eid in g.edge_ids()}
                    z = z_expansion(g, q, w)
                    ck.check(sgn * z > 0, format_graph(g, w), q, w,
                             f"(-1)^(n+c+b) Z > 0 over V_{mm}", z)

        # Two-vertex boundary zero: (1 + v-)(1 + v+) == 1 - q with
        # v-+- = -q -+ sqrt(q^2 - q), verified without radicals.
        lhs = (1 - q) ** 2 - (q * q - q)
        ck.check(lhs == 1 - q, "C2 boundary", q, {},
                 "(1-q)^2 - (q^2-q) == 1-q (multivariate root)", lhs)

    # The q = 9/8 crossover, exactly.
    q = Fraction(9, 8)
    R2, R3 = V2(q), V3(q)
    ck.check(R2.hi == RationalEnclosure.point(Fraction(-3, 4)), "V2", q, {},
             "upper endpoint -3/4 exactly", R2.hi)
    ck.check(R3.hi == RationalEnclosure.point(Fraction(-3, 4)), "V3", q, {},
             "upper endpoint -3/4 exactly", R3.hi)
    ck.check(diamond_cubic(q).eval(Fraction(-3, 4)) == 0, "cubic", q, {},
             "-3/4 is a root of the fixed-point cubic at 9/8",
             diamond_cubic(q).eval(Fraction(-3, 4)))
    z = z_expansion(banana_graph(2), q, {0: Fraction(-3, 2), 1: Fraction(-3, 4)})
    ck.check(z == 0, "C2", q, {0: "-3/2", 1: "-3/4"},
             "boundary zero at (-3/2, -3/4)", z)
    z = z_expansion(banana_graph(3), q,
                    {e: Fraction(-3, 2) for e in range(3)})
    ck.check(z == 0, "K2^(3)", q, {}, "boundary zero at all -3/2", z)

    # Matroid analogue: b = number of 2-connected components, each with
    # >= m elements.
    for q in qs:
        R2, R3 = V2(q), V3(q)
        pool2 = [graphic(banana_graph(2)), graphic(cycle_graph(3)),
                 uniform(2, 4), graphic(banana_graph(3)),
                 direct_sum(graphic(banana_graph(2)), graphic(banana_graph(2)))]
        pool3 = [graphic(cycle_graph(3)), graphic(banana_graph(3)),
                 uniform(2, 4), dual(uniform(2, 4))]
        for (R, pool, mm) in ((R2, pool2, 2), (R3, pool3, 3)):
            pts = interior_samples(R, 6, rng)
            for m in pool:
                b2 = len(m.connected_components_2())
                w = {e: rng.choice(pts) for e in m.ground}
                zt = z_matroid_expansion(m, q, w)
                ck.check((-1) ** (m.full_rank + b2) * zt > 0, m.name, q, w,
                         f"(-1)^(r+b) Zt > 0 over V_{mm}", zt)

    return ck.report(seed, b, t0)


# ---------------------------------------------------------------------------
# Suite 6: structural propositions

def suite_structure(seed: int = 0, bounds=None, poison: bool = False) -> SuiteReport:
    """Splitting-edge/element existence and the hypothesis falsifier.

    Covers: every simple 2-connected graph up to the vertex bound with at
    most one degree-2 vertex has an edge whose deletion and contraction
    are both 2-connected; the matroid version on constructor-reachable
    matroids with no 2-element circuit or cocircuit; and the abstract
    block-theorem hypothesis checker falsifies each forbidden
    (gamma, q, interval) combination while leaving valid ones standing.
    """
    b = _bounds(bounds)
    ck = _Checker("structure", poison)
    t0 = time.perf_counter()

    # Splitting edges in simple 2-connected graphs.
    from networkx.generators.atlas import graph_atlas_g
    checked = 0
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        if n < 3 or n > b["atlas_max_vertices"]:
            continue
        g = MultiGraph(n, [(i, u, v) for i, (u, v) in enumerate(nxg.edges())])
        if not g.is_2connected():
            continue
        if sum(1 for v in range(n) if g.degree(v) == 2) > 1:
            continue
        checked += 1
        e = g.splitting_edge()
        ck.check(e is not None, format_graph(g), "-", {},
                 "a splitting edge exists (<= 1 degree-2 vertex)", e)
    ck.check(checked > 0, "atlas", "-", {}, "atlas sweep nonempty", checked)

    # Splitting elements in 2-connected matroids with no 2-circuit or
    # 2-cocircuit.
    for m in matroid_pool(b["max_matroid_elems"]):
        if not m.is_2connected():
            continue
        if m.find_parallel_pair() is not None or m.find_series_pair() is not None:
            continue
        found = None
        for e in sorted(m.ground):
            if (minor_delete(m, e).is_2connected()
                    and minor_contract(m, e).is_2connected()):
                found = e
                break
        ck.check(found is not None, m.name, "-", {},
                 "a splitting element exists (no 2-circuit/2-cocircuit)", found)

    # Hypothesis falsifier: forbidden (gamma, q) combinations break, valid
    # ones stand.
    q = Fraction(15, 16)                       # 0 < q < 1: gamma must be 0
    I2 = RegionInterval.exact(Fraction(-5, 4), Fraction(-3, 4), True, True,
                              tag="I2")
    rep = check_thm61_hypotheses(I2, q, m=2, gamma=0, samples=4, seed=seed)
    ck.check(rep.status.startswith("UNFALSIFIED"), "I2, gamma=0", q, {},
             "valid hypotheses stand", rep.status)
    rep = check_thm61_hypotheses(I2, q, m=2, gamma=1, samples=4, seed=seed)
    ck.check(rep.status == "FALSIFIED", "I2, gamma=1", q, {},
             "wrong parity class is falsified for q < 1", rep.status)

    q = Fraction(9, 8)                         # q > 1: gamma must be 1
    W = RegionInterval.exact(Fraction(-3, 2), Fraction(-3, 4), True, True,
                             tag="V2")
    rep = check_thm61_hypotheses(W, q, m=2, gamma=1, samples=4, seed=seed)
    ck.check(rep.status.startswith("UNFALSIFIED"), "V2, gamma=1", q, {},
             "valid hypotheses stand for q > 1", rep.status)
    rep = check_thm61_hypotheses(W, q, m=2, gamma=0, samples=4, seed=seed)
    ck.check(rep.status == "FALSIFIED", "V2, gamma=0", q, {},
             "wrong parity class is falsified for q > 1", rep.status)

    # A nonnegative weight breaks hypothesis (a) outright.
    V = RegionInterval.exact(Fraction(-3, 5), Fraction(-2, 5), True, True,
                             tag="near -1/2")
    rep = check_thm61_hypotheses(V, Fraction(3, 2), m=2, gamma=0,
                                 samples=2, seed=seed)
    ck.check(rep.status == "FALSIFIED", "q=3/2 interval", Fraction(3, 2), {},
             "interval outside (-2, -q/2) is falsified", rep.status)

    # The two-vertex family crosses zero near v = -1 when q > 1: witnesses
    # that no interval with gamma = 0 can work there.
    q = Fraction(3, 2)
    for mm in (2, 3, 4):
        g = banana_graph(mm)
        w = {e: Fraction(-1, 2) for e in g.edge_ids()}
        z = z_expansion(g, q, w)
        ck.check((-1) ** (g.n - 1) * z <= 0, format_graph(g, w), q, w,
                 "gamma=0 sign fails on the two-vertex family at q=3/2", z)

    return ck.report(seed, b, t0)


# ---------------------------------------------------------------------------
# Registry

SUITES = {
    "q_negative": suite_q_negative,
    "unit_interval": suite_unit_interval,
    "blocks": suite_blocks,
    "diamond": suite_diamond,
    "q_above_one": suite_q_above_one,
    "structure": suite_structure,
}


def run_suite(name: str, seed: int = 0, bounds=None,
              poison: bool = False) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](seed=seed, bounds=bounds, poison=poison)


def run_all(seed: int = 0, bounds=None, poison: bool = False) -> list[SuiteReport]:
    return [run_suite(name, seed=seed, bounds=bounds, poison=poison)
            for name in SUITES]
