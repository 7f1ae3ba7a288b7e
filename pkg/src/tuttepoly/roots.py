"""Certified real-root isolation via Sturm sequences, plus n-th-root enclosures.

Everything is exact: Sturm counts certify "exactly one root in this interval",
bisection refines enclosures, and rational roots collapse to point intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import RationalEnclosure, UniPoly, enclosure_refine

DEFAULT_WIDTH = Fraction(1, 2**40)


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        _, r = seq[-2].divmod(seq[-1])
        seq.append(-r)
    seq.pop()
    return seq


def _sign_changes(seq: list[UniPoly], x: Fraction) -> int:
    signs = []
    for p in seq:
        v = p.eval(x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(seq: list[UniPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p.coeffs[-1])
    return 1 + max(abs(c) for c in p.coeffs) / lead


@dataclass(frozen=True)
class RootEnclosure:
    """An interval certified (by Sturm count) to contain exactly one root."""

    poly: UniPoly            # squarefree polynomial actually isolated
    interval: RationalEnclosure
    multiplicity: int = 1

    def refine(self, width: Fraction) -> "RootEnclosure":
        return refine_root(self, width)


def _rational_root_at(p: UniPoly, x: Fraction) -> bool:
    return p.eval(x) == 0


def isolate_roots(p: UniPoly) -> list[RootEnclosure]:
    """Disjoint isolating intervals for all real roots, sorted ascending.

    Works on the squarefree part; multiplicities are recovered by repeated
    gcd with the derivative.  Exact rational roots are returned as point
    intervals when bisection lands on them.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree_part()
    if sf.degree == 0:
        return []

    # multiplicity of each root: how many entries of the gcd chain keep it
    chain = [p]
    while chain[-1].degree > 0:
        nxt = chain[-1].gcd(chain[-1].derivative())
        if nxt.degree == 0:
            break
        chain.append(nxt)

    def multiplicity_of(enc: RationalEnclosure) -> int:
        mult = 1
        for deeper in chain[1:]:
            seq = sturm_sequence(deeper)
            if enc.is_point():
                if deeper.eval(enc.lo) == 0:
                    mult += 1
            elif sturm_count(seq, enc.lo, enc.hi) > 0:
                mult += 1
        return mult

    seq = sturm_sequence(sf)
    bound = root_bound(sf)
    out: list[RootEnclosure] = []

    def recurse(lo: Fraction, hi: Fraction):
        count = sturm_count(seq, lo, hi)
        if count == 0:
            return
        if count == 1:
            # shrink until the open lower endpoint is safely excluded
            enc = RationalEnclosure(lo, hi)
            if sf.eval(hi) == 0:
                enc = RationalEnclosure.point(hi)
            out.append(RootEnclosure(sf, enc))
            return
        mid = (lo + hi) / 2
        recurse(lo, mid)
        recurse(mid, hi)

    recurse(-bound, bound)
    out.sort(key=lambda r: r.interval.lo)

    # Tighten non-point enclosures so the endpoints have definite, opposite
    # signs (adjacent bisection intervals can leave a root sitting on lo).
    def tighten(enc: RationalEnclosure) -> RationalEnclosure:
        lo, hi = enc.lo, enc.hi
        if sf.eval(hi) == 0:
            return RationalEnclosure.point(hi)
        while sf.eval(lo) == 0:
            t = (3 * lo + hi) / 4
            while sturm_count(seq, lo, t) > 0:
                if sf.eval(t) == 0:
                    return RationalEnclosure.point(t)
                t = (lo + t) / 2
            lo = t
        return RationalEnclosure(lo, hi)

    tightened = []
    for r in out:
        enc = r.interval if r.interval.is_point() else tighten(r.interval)
        tightened.append(RootEnclosure(sf, enc, multiplicity_of(enc)))
    return tightened


def refine_root(r: RootEnclosure, width: Fraction) -> RootEnclosure:
    if r.interval.is_point() or r.interval.width <= width:
        return r
    sf = r.poly
    enc = r.interval
    flo, fhi = sf.eval(enc.lo), sf.eval(enc.hi)
    if flo == 0:
        return RootEnclosure(sf, RationalEnclosure.point(enc.lo), r.multiplicity)
    if fhi == 0:
        return RootEnclosure(sf, RationalEnclosure.point(enc.hi), r.multiplicity)
    new = enclosure_refine(enc, sf.eval, width)
    return RootEnclosure(sf, new, r.multiplicity)


def isolate_root_in(p: UniPoly, lo: Fraction, hi: Fraction,
                    width: Fraction = DEFAULT_WIDTH) -> RootEnclosure:
    """The unique root of p in [lo, hi]; raises if the count is not one."""
    sf = p.squarefree_part()
    if sf.eval(lo) == 0:
        return RootEnclosure(sf, RationalEnclosure.point(lo))
    seq = sturm_sequence(sf)
    n = sturm_count(seq, lo, hi)
    if n != 1:
        raise ValueError(f"expected exactly one root in ({lo}, {hi}], found {n}")
    enc = RationalEnclosure(lo, hi)
    if sf.eval(hi) == 0:
        enc = RationalEnclosure.point(hi)
    return refine_root(RootEnclosure(sf, enc), width)


def nth_root_enclosure(x: Fraction, n: int,
                       width: Fraction = DEFAULT_WIDTH) -> RationalEnclosure:
    """Enclosure of x**(1/n) for x >= 0; exact when x is an exact n-th power."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if n < 1:
        raise ValueError("root index must be >= 1")
    if x == 0:
        return RationalEnclosure.point(0)
    # exact n-th power detection on numerator and denominator
    num, den = x.numerator, x.denominator
    rn = round(num ** (1 / n))
    rd = round(den ** (1 / n))
    for cn in (rn - 1, rn, rn + 1):
        for cd in (rd - 1, rd, rd + 1):
            if cn > 0 and cd > 0 and cn**n == num and cd**n == den:
                return RationalEnclosure.point(Fraction(cn, cd))
    hi = max(x, Fraction(1))
    p = UniPoly([-x] + [Fraction(0)] * (n - 1) + [Fraction(1)])
    return enclosure_refine(RationalEnclosure(Fraction(0), hi), p.eval, width)
