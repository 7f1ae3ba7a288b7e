"""The named zero-free weight intervals and their machinery.

Builds the self-dual interval family I_m (with its cocircuit/circuit
variants), the diamond fixed-point interval, and the two q > 1 interval
families; provides membership tests, power-series cross-checks, and a
falsifier for the abstract block-theorem hypotheses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .engine import z_expansion
from .exact import RationalEnclosure, UniPoly, interval_div, interval_poly_eval
from .graphs import MultiGraph, enumerate_nonseparable, format_graph
from .roots import DEFAULT_WIDTH, RootEnclosure, isolate_root_in, nth_root_enclosure
from .weightmaps import (RegionInterval, diamond_fixed_point_enclosure,
                         interval_par_image, interval_ser_image)

Q32_27 = Fraction(32, 27)
Q9_8 = Fraction(9, 8)


def _neg(e: RationalEnclosure) -> RationalEnclosure:
    return RationalEnclosure(-e.hi, -e.lo)


def _shift(e: RationalEnclosure, c: Fraction) -> RationalEnclosure:
    return RationalEnclosure(e.lo + c, e.hi + c)


def _qdiv(q: Fraction, e: RationalEnclosure) -> RationalEnclosure:
    return interval_div(RationalEnclosure.point(q), e)


def _root_1mq(q: Fraction, m: int, width: Fraction) -> RationalEnclosure:
    if not 0 < q < 1:
        raise ValueError("interval family defined for 0 < q < 1")
    return nth_root_enclosure(1 - Fraction(q), m, width)


def interval_Im_cocyc(q: Fraction, m: int,
                      width: Fraction = DEFAULT_WIDTH) -> RegionInterval:
    """(-(1+s), -(1-s)) with s the m-th root of 1-q: the cocircuit family."""
    s = _root_1mq(q, m, width)
    return RegionInterval(_neg(_shift(s, 1)), _shift(s, -1),
                          True, True, tag=f"Icocyc[m={m},q={q}]")


def interval_Im_cyc(q: Fraction, m: int,
                    width: Fraction = DEFAULT_WIDTH) -> RegionInterval:
    """(-q/(1-s), -q/(1+s)): the dual (circuit) family."""
    q = Fraction(q)
    s = _root_1mq(q, m, width)
    lo = _neg(_qdiv(q, _shift(_neg(s), 1)))
    hi = _neg(_qdiv(q, _shift(s, 1)))
    return RegionInterval(lo, hi, True, True, tag=f"Icyc[m={m},q={q}]")


def interval_Im(q: Fraction, m: int,
                width: Fraction = DEFAULT_WIDTH) -> RegionInterval:
    """The self-dual interval (-(1+s), -q/(1+s))."""
    q = Fraction(q)
    s = _root_1mq(q, m, width)
    lo = _neg(_shift(s, 1))
    hi = _neg(_qdiv(q, _shift(s, 1)))
    return RegionInterval(lo, hi, True, True, tag=f"I[m={m},q={q}]")


def v3_cubic(q: Fraction) -> UniPoly:
    """v^3 + 3qv^2 + (q^2+2q)v + q^2: its unique real root is the optimal
    self-dual upper endpoint for blocks with >= 3 edges."""
    q = Fraction(q)
    return UniPoly([q * q, q * q + 2 * q, 3 * q, 1])


def v3_plus(q: Fraction, width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """Enclosure of the unique real root, certified inside (-q, -q/2)."""
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("needs 0 < q < 1")
    return isolate_root_in(v3_cubic(q), -q, -q / 2, width)


def diamond_interval(q: Fraction,
                     width: Fraction = DEFAULT_WIDTH) -> RegionInterval:
    """The closed interval [q/v+, v+] around the middle fixed point of the
    diamond map; the maximal parallel/series-closed negative interval."""
    q = Fraction(q)
    vp = diamond_fixed_point_enclosure(q, width)
    vm = _qdiv(q, vp)
    return RegionInterval(vm, vp, False, False, tag=f"Idiamond[q={q}]")


def diamond_series(q: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Exact partial sums of the fixed-point power series.

    v+ = -q/2 - sum_{m>=1} q^(m+1)/(2m 8^m) C(3m, m-1)
    v- = -2   + sum_{m>=1} 2 q^m /(m 8^m)   C(3m-2, m-1)
    """
    q = Fraction(q)
    if terms < 1:
        raise ValueError("need at least one term")
    vp = -q / 2
    vm = Fraction(-2)
    for m in range(1, terms + 1):
        vp -= Fraction(comb(3 * m, m - 1), 2 * m * 8**m) * q ** (m + 1)
        vm += Fraction(2 * comb(3 * m - 2, m - 1), m * 8**m) * q**m
    return vp, vm


def V2(q: Fraction, width: Fraction = DEFAULT_WIDTH) -> RegionInterval:
    """Zero-free weight interval for bridgeless graphs at 1 < q <= 32/27:
    (-q - sqrt(q^2-q), -q + sqrt(q^2-q)) up to the crossover q = 9/8, the
    diamond interval beyond it."""
    q = Fraction(q)
    if not 1 < q <= Q32_27:
        raise ValueError("needs 1 < q <= 32/27")
    if q <= Q9_8:
        s = nth_root_enclosure(q * q - q, 2, width)
        return RegionInterval(_neg(_shift(s, q)), _shift(s, -q),
                              True, True, tag=f"V2[q={q}]")
    r = diamond_interval(q, width)
    return RegionInterval(r.lo, r.hi, False, False, tag=f"V2[q={q}]")


def V3(q: Fraction, width: Fraction = DEFAULT_WIDTH) -> RegionInterval:
    """Zero-free interval for graphs whose blocks have >= 3 edges: upper
    endpoint -1 + t - t^2 with t the cube root of q-1 (q <= 9/8), lower
    endpoint its dual; the diamond interval beyond the crossover."""
    q = Fraction(q)
    if not 1 < q <= Q32_27:
        raise ValueError("needs 1 < q <= 32/27")
    if q <= Q9_8:
        t = nth_root_enclosure(q - 1, 3, width)
        hi = interval_poly_eval(UniPoly([-1, 1, -1]), t)
        lo = _qdiv(q, hi)
        return RegionInterval(lo, hi, True, True, tag=f"V3[q={q}]")
    r = diamond_interval(q, width)
    return RegionInterval(r.lo, r.hi, False, False, tag=f"V3[q={q}]")


# ---------------------------------------------------------------------------
# Membership

def membership(v: Fraction, R: RegionInterval) -> str:
    """'inside', 'outside', or 'undecided' (v falls in an endpoint enclosure)."""
    v = Fraction(v)
    if v < R.lo.lo or v > R.hi.hi:
        return "outside"
    if R.lo.is_point() and v == R.lo.lo:
        return "outside" if R.lo_open else "inside"
    if R.hi.is_point() and v == R.hi.lo:
        return "outside" if R.hi_open else "inside"
    if R.lo.hi < v < R.hi.lo:
        return "inside"
    return "undecided"


def refine_until_decided(v: Fraction,
                         builder: Callable[[Fraction], RegionInterval],
                         budget: int = 20,
                         start_width: Fraction = DEFAULT_WIDTH) -> str:
    """Rebuild the interval at shrinking widths until membership resolves."""
    width = start_width
    for _ in range(budget):
        result = membership(v, builder(width))
        if result != "undecided":
            return result
        width /= 2**8
    return "undecided"


def interior_samples(R: RegionInterval, count: int,
                     rng: random.Random) -> list[Fraction]:
    """Rational points certified interior to the interval."""
    lo, hi = R.lo.hi, R.hi.lo
    if lo >= hi:
        raise ValueError("enclosures leave no certified interior")
    out = []
    denom = 2**20
    for _ in range(count):
        t = Fraction(rng.randint(1, denom - 1), denom)
        out.append(lo + t * (hi - lo))
    return out


# ---------------------------------------------------------------------------
# Abstract block-theorem hypothesis falsifier

@dataclass
class Thm61Report:
    a_ok: bool
    b_ok: bool
    c_ok: bool
    d_witnesses: list = field(default_factory=list)
    d_samples: int = 0

    @property
    def status(self) -> str:
        if self.a_ok and self.b_ok and self.c_ok and not self.d_witnesses:
            return f"UNFALSIFIED({self.d_samples})"
        return "FALSIFIED"


def check_thm61_hypotheses(V: RegionInterval, q: Fraction, m: int,
                           gamma: int, samples: int = 5,
                           seed: int = 0) -> Thm61Report:
    """Check the four hypotheses of the abstract block theorem.

    (a) V inside (-2, -q/2); (b) parallel closure; (c) series closure —
    all three decided exactly through interval images.  (d) the sign
    condition on non-separable graphs with exactly m edges, sampled at
    interior rational weight vectors: falsifiable only, never proven.
    """
    q = Fraction(q)
    outer = RegionInterval.exact(Fraction(-2), -q / 2, True, True, tag="outer")
    a_ok = outer.contains_interval(V)
    b_ok = V.contains_interval(interval_par_image(V, V))
    try:
        c_ok = V.contains_interval(interval_ser_image(q, V, V))
    except ValueError:
        c_ok = False

    rng = random.Random(seed)
    witnesses = []
    total = 0
    graphs = enumerate_nonseparable(m)
    points = interior_samples(V, samples, rng)
    for g in graphs:
        sign = (-1) ** (g.n - 1 + gamma)
        for _ in range(samples):
            w = {eid: rng.choice(points) for eid in g.edge_ids()}
            total += 1
            z = z_expansion(g, q, w)
            if sign * z <= 0:
                witnesses.append({"graph": format_graph(g),
                                  "q": str(q),
                                  "weights": {k: str(v) for k, v in w.items()},
                                  "value": str(z)})
    return Thm61Report(a_ok, b_ok, c_ok, witnesses, total)
