"""Partition-function evaluation by three independent routes, plus
coefficient vectors, the q-polynomial form, and classical specializations.

Routes:
  * subgraph expansion  -- sum over all edge subsets (the defining formula),
  * coloring sum        -- for positive integer q, sum over vertex colorings,
  * reduced deletion-contraction -- loop/bridge rules, component and block
    factorization, parallel and (wide-sense) series reduction, then branching.
All three agree wherever defined; the expansion is the oracle of record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Iterable, Optional

from .exact import BiPoly, UniPoly
from .graphs import MultiGraph
from .matroids import Matroid, dual

EXPANSION_EDGE_LIMIT = 24


@dataclass
class EvalResult:
    value: Fraction
    route: str
    trace: list = field(default_factory=list)


def _check_weights(g: MultiGraph, w: dict[int, Fraction]) -> None:
    for eid in g.edge_ids():
        if eid not in w:
            raise ValueError(f"missing weight for edge {eid}")


def _subset_products(weights: list[Fraction]) -> list[Fraction]:
    """prod[s] = product of weights in bitmask subset s (2^m entries)."""
    m = len(weights)
    prod = [Fraction(1)] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        prod[s] = prod[s ^ low] * weights[low.bit_length() - 1]
    return prod


def _subset_components(g: MultiGraph) -> list[int]:
    """k(A) for every bitmask subset A over the graph's edge order."""
    m = g.m
    ks = [0] * (1 << m)
    edge_ends = [(u, v) for (_, u, v) in g.edges]
    for s in range(1 << m):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        k = g.n
        for i in range(m):
            if s >> i & 1:
                ru, rv = find(edge_ends[i][0]), find(edge_ends[i][1])
                if ru != rv:
                    parent[ru] = rv
                    k -= 1
        ks[s] = k
    return ks


def z_expansion(g: MultiGraph, q: Fraction, w: dict[int, Fraction]) -> Fraction:
    """Z(q, v) = sum over edge subsets A of q^k(A) * prod of weights in A."""
    _check_weights(g, w)
    if g.m > EXPANSION_EDGE_LIMIT:
        raise ValueError(f"expansion limited to {EXPANSION_EDGE_LIMIT} edges")
    q = Fraction(q)
    ws = [Fraction(w[eid]) for eid in g.edge_ids()]
    prod = _subset_products(ws)
    ks = _subset_components(g)
    qpow = [q**k for k in range(g.n + 1)]
    return sum((qpow[ks[s]] * prod[s] for s in range(1 << g.m)), Fraction(0))


def coeffs(g: MultiGraph, w: dict[int, Fraction]) -> list[Fraction]:
    """Coefficient vector [C[1], ..., C[n]] of Z as a polynomial in q."""
    _check_weights(g, w)
    if g.m > EXPANSION_EDGE_LIMIT:
        raise ValueError(f"expansion limited to {EXPANSION_EDGE_LIMIT} edges")
    ws = [Fraction(w[eid]) for eid in g.edge_ids()]
    prod = _subset_products(ws)
    ks = _subset_components(g)
    out = [Fraction(0)] * (g.n + 1)
    for s in range(1 << g.m):
        out[ks[s]] += prod[s]
    return out[1:]


def z_from_coeffs(cs: list[Fraction], q: Fraction) -> Fraction:
    q = Fraction(q)
    total = Fraction(0)
    qp = Fraction(1)
    for c in cs:
        qp *= q
        total += c * qp
    return total


def z_matroid_expansion(m: Matroid, q: Fraction,
                        w: dict[int, Fraction]) -> Fraction:
    """Z-tilde(q, v) = sum over subsets A of q^-r(A) * prod of weights in A."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("matroid form needs q != 0")
    elems = sorted(m.ground)
    if len(elems) > EXPANSION_EDGE_LIMIT:
        raise ValueError(f"expansion limited to {EXPANSION_EDGE_LIMIT} elements")
    for e in elems:
        if e not in w:
            raise ValueError(f"missing weight for element {e}")
    ws = [Fraction(w[e]) for e in elems]
    prod = _subset_products(ws)
    total = Fraction(0)
    for s in range(1 << len(elems)):
        sub = frozenset(elems[i] for i in range(len(elems)) if s >> i & 1)
        total += prod[s] * q ** (-m.rank(sub))
    return total


def coeffs_matroid(m: Matroid, w: dict[int, Fraction]) -> list[Fraction]:
    """[Ct[0], ..., Ct[r(M)]]: Ct[r] = sum over subsets of rank r of weights."""
    elems = sorted(m.ground)
    if len(elems) > EXPANSION_EDGE_LIMIT:
        raise ValueError(f"expansion limited to {EXPANSION_EDGE_LIMIT} elements")
    ws = [Fraction(w[e]) for e in elems]
    prod = _subset_products(ws)
    out = [Fraction(0)] * (m.full_rank + 1)
    for s in range(1 << len(elems)):
        sub = frozenset(elems[i] for i in range(len(elems)) if s >> i & 1)
        out[m.rank(sub)] += prod[s]
    return out


def z_potts_coloring(g: MultiGraph, q: int, w: dict[int, Fraction]) -> Fraction:
    """Sum over q-colorings of the vertices of prod(1 + v_e [colors agree])."""
    _check_weights(g, w)
    if not (isinstance(q, int) and q >= 1):
        raise ValueError("coloring route needs a positive integer q")
    if q > 5 or g.n > 10:
        raise ValueError("coloring route limited to q <= 5, n <= 10")
    total = Fraction(0)
    for sigma in iproduct(range(q), repeat=g.n):
        term = Fraction(1)
        for (eid, u, v) in g.edges:
            if sigma[u] == sigma[v]:
                term *= 1 + w[eid]
        total += term
    return total


# ---------------------------------------------------------------------------
# Reduced deletion-contraction

def _induced_subgraph(g: MultiGraph, vertices: frozenset,
                      edges: frozenset) -> MultiGraph:
    vs = sorted(vertices)
    remap = {v: i for i, v in enumerate(vs)}
    return MultiGraph(len(vs), [(eid, remap[u], remap[v])
                                for (eid, u, v) in g.edges if eid in edges])


def _branch_edge(g: MultiGraph) -> int:
    """Lowest edge id among normal edges touching a maximum-degree endpoint."""
    best = None
    for (eid, u, v) in g.edges:
        if g.classify_edge(eid) != "normal":
            continue
        key = (-max(g.degree(u), g.degree(v)), eid)
        if best is None or key < best:
            best = key
    assert best is not None
    return best[1]


def _replace_weight(w: dict[int, Fraction], eid: int,
                    value: Fraction) -> dict[int, Fraction]:
    out = dict(w)
    out[eid] = value
    return out


def _zd(g: MultiGraph, q: Fraction, w: dict[int, Fraction],
        trace: list) -> Fraction:
    if g.m == 0:
        return q**g.n

    # Loops and bridges reduce immediately.
    kinds = {eid: g.classify_edge(eid) for eid in g.edge_ids()}
    for eid, kind in kinds.items():
        if kind == "loop":
            trace.append(("loop", eid))
            return (1 + w[eid]) * _zd(g.delete(eid), q, w, trace)
    for eid, kind in kinds.items():
        if kind == "bridge":
            trace.append(("bridge", eid))
            return (q + w[eid]) * _zd(g.contract(eid), q, w, trace)

    # Disconnected: product over components.
    k, labels = g.components()
    if k > 1:
        trace.append(("components", k))
        total = Fraction(1)
        for comp in range(k):
            verts = frozenset(v for v in range(g.n) if labels[v] == comp)
            edges = frozenset(eid for (eid, u, v) in g.edges if labels[u] == comp)
            total *= _zd(_induced_subgraph(g, verts, edges), q, w, trace)
        return total

    # Connected with several blocks: product over blocks divided by q^(b-1).
    dec = g.blocks()
    if len(dec.blocks) > 1:
        trace.append(("blocks", len(dec.blocks)))
        total = Fraction(1)
        for blk in dec.blocks:
            total *= _zd(_induced_subgraph(g, blk.vertices, blk.edges),
                         q, w, trace)
        return total / q ** (len(dec.blocks) - 1)

    pair = g.find_parallel_pair()
    if pair is not None:
        e1, e2 = pair
        trace.append(("parallel", e1, e2))
        veff = (1 + w[e1]) * (1 + w[e2]) - 1
        return _zd(g.delete(e2), q, _replace_weight(w, e1, veff), trace)

    pair = g.find_series_pair_wide()
    if pair is not None:
        e1, e2 = pair
        denom = q + w[e1] + w[e2]
        if denom != 0:
            trace.append(("series", e1, e2))
            veff = w[e1] * w[e2] / denom
            return denom * _zd(g.contract(e2), q,
                               _replace_weight(w, e1, veff), trace)

    eid = _branch_edge(g)
    trace.append(("branch", eid))
    return (_zd(g.delete(eid), q, w, trace)
            + w[eid] * _zd(g.contract(eid), q, w, trace))


def z_delcon(g: MultiGraph, q: Fraction, w: dict[int, Fraction]) -> EvalResult:
    """Evaluate Z by reduction rules; agrees exactly with z_expansion."""
    _check_weights(g, w)
    q = Fraction(q)
    if q == 0:
        # Z has a root of multiplicity >= 1 at q = 0 for any graph with
        # vertices; the coefficient route avoids dividing by q in reductions.
        value = Fraction(1) if g.n == 0 else Fraction(0)
        return EvalResult(value, "delcon", [("q=0", None)])
    trace: list = []
    value = _zd(g, q, w, trace)
    return EvalResult(value, "delcon", trace)


# ---------------------------------------------------------------------------
# Coefficient calculus

def contract_edge_set(g: MultiGraph, edges: Iterable[int]) -> MultiGraph:
    """Contract a set of edges; edges that become loops are simply removed."""
    out = g
    for eid in edges:
        (_, u, v) = out.edge(eid)
        out = out.delete(eid) if u == v else out.contract(eid)
    return out


def coeff_partial_derivative(g: MultiGraph, w: dict[int, Fraction],
                             edges: list[int], k: int) -> Fraction:
    """Mixed first partial of C[k] in the weights of the listed edges.

    Zero when an edge repeats (each weight enters with degree <= 1);
    otherwise the matching coefficient of the contraction by those edges.
    """
    if len(set(edges)) != len(edges):
        return Fraction(0)
    gc = contract_edge_set(g, edges)
    wc = {eid: w[eid] for eid in gc.edge_ids()}
    cs = coeffs(gc, wc)
    if not (1 <= k <= gc.n):
        return Fraction(0)
    return cs[k - 1]


def z_as_qpoly(g: MultiGraph, w: dict[int, Fraction]) -> UniPoly:
    """Z(q) as an exact polynomial in q for fixed rational weights."""
    return UniPoly([Fraction(0)] + coeffs(g, w))


def z_over_qc(g: MultiGraph, w: dict[int, Fraction]) -> UniPoly:
    """Z(q)/q^c, c = number of components; division is exact."""
    c = g.component_count()
    return z_as_qpoly(g, w).shift_down(c)


def subset_census(g: MultiGraph) -> dict[tuple[int, int], int]:
    """N[(k, a)] = number of edge subsets with k components and a edges."""
    if g.m > EXPANSION_EDGE_LIMIT:
        raise ValueError(f"expansion limited to {EXPANSION_EDGE_LIMIT} edges")
    ks = _subset_components(g)
    out: dict[tuple[int, int], int] = {}
    for s in range(1 << g.m):
        key = (ks[s], bin(s).count("1"))
        out[key] = out.get(key, 0) + 1
    return out


def z_bipoly(g: MultiGraph) -> BiPoly:
    """Z as a bivariate polynomial in (q, v) with all edge weights equal."""
    return BiPoly({kv: Fraction(c) for kv, c in subset_census(g).items()})


def chromatic(g: MultiGraph) -> UniPoly:
    """Proper-coloring polynomial: Z at all weights -1."""
    w = {eid: Fraction(-1) for eid in g.edge_ids()}
    return z_as_qpoly(g, w)


def flow(g: MultiGraph) -> UniPoly:
    """Nowhere-zero-flow polynomial: (-1)^|E| q^-|V| Z(q, -q), exactly."""
    out: dict[int, Fraction] = {}
    sign_m = (-1) ** g.m
    for (k, a), cnt in subset_census(g).items():
        # q^k (-q)^a / q^n  ->  exponent k + a - n >= 0 (cyclomatic number)
        exp = k + a - g.n
        out[exp] = out.get(exp, Fraction(0)) + sign_m * (-1) ** a * cnt
    size = max(out, default=-1) + 1
    cs = [Fraction(0)] * size
    for e, c in out.items():
        cs[e] = c
    return UniPoly(cs)


def tutte_xy(g: MultiGraph) -> BiPoly:
    """Corank-nullity form: sum over subsets of (x-1)^(k-c) (y-1)^(k+a-n)."""
    c = g.component_count()
    xm1 = BiPoly.x() - BiPoly.const(1)
    ym1 = BiPoly.y() - BiPoly.const(1)
    total = BiPoly()
    for (k, a), cnt in subset_census(g).items():
        total = total + cnt * xm1 ** (k - c) * ym1 ** (k + a - g.n)
    return total


# ---------------------------------------------------------------------------
# Matroid identities

def duality_identity_check(m: Matroid, q: Fraction,
                           w: dict[int, Fraction]) -> bool:
    """Dual evaluation identity: the dual at v equals the primal at q/v,
    scaled by q^r(E) * prod(v_e / q)."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("needs q != 0")
    if any(Fraction(w[e]) == 0 for e in m.ground):
        raise ValueError("needs all weights nonzero")
    lhs = z_matroid_expansion(dual(m), q, w)
    wd = {e: q / Fraction(w[e]) for e in m.ground}
    scale = q ** m.full_rank
    for e in sorted(m.ground):
        scale *= Fraction(w[e]) / q
    rhs = scale * z_matroid_expansion(m, q, wd)
    return lhs == rhs


def u24_closed_form(q: Fraction, vs: list[Fraction]) -> Fraction:
    """q^2 * Z-tilde of the rank-2 uniform matroid on 4 elements."""
    if len(vs) != 4:
        raise ValueError("exactly four weights required")
    q = Fraction(q)
    prod = Fraction(1)
    s = Fraction(0)
    for v in vs:
        prod *= 1 + Fraction(v)
        s += Fraction(v)
    return prod + (q - 1) * s + (q * q - 1)
