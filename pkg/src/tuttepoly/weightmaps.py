"""Weight algebra for two-terminal reductions: parallel, series, duality,
and the diamond map (two parallel two-edge paths), with interval images.

The only non-rational value that ever arises is +infinity, produced by a
series reduction whose prefactor vanishes; the diamond map absorbs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exact import (RationalEnclosure, UniPoly, interval_div,
                    interval_poly_eval)
from .roots import DEFAULT_WIDTH, RootEnclosure, isolate_root_in, refine_root


class _Infinity:
    """The single +infinity sentinel used by series/diamond limits."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+inf"


INF = _Infinity()
ExtendedWeight = Union[Fraction, _Infinity]


def par(v1: Fraction, v2: Fraction) -> Fraction:
    """Parallel connection: 1 + v multiplies."""
    return (1 + Fraction(v1)) * (1 + Fraction(v2)) - 1


def ser(q: Fraction, v1: Fraction, v2: Fraction) -> ExtendedWeight:
    """Series connection: 1 + q/v multiplies; the prefactor q+v1+v2 may
    vanish, giving +infinity (0/0 is rejected)."""
    q, v1, v2 = Fraction(q), Fraction(v1), Fraction(v2)
    denom = q + v1 + v2
    num = v1 * v2
    if denom == 0:
        if num == 0:
            raise ZeroDivisionError("indeterminate 0/0 series weight")
        return INF
    return num / denom


def dualw(q: Fraction, v: Fraction) -> Fraction:
    """Duality map v -> q/v (an involution for v != 0)."""
    v = Fraction(v)
    if v == 0:
        raise ZeroDivisionError("duality map undefined at v = 0")
    return Fraction(q) / v


def diamond_cubic(q: Fraction) -> UniPoly:
    """v^3 - 2qv - q^2, whose roots are the nontrivial fixed points."""
    q = Fraction(q)
    return UniPoly([-q * q, -2 * q, 0, 1])


def diamond_map(q: Fraction, v: ExtendedWeight) -> ExtendedWeight:
    """(v ser v) par (v ser v) = v^2 (v^2 + 4v + 2q) / (q + 2v)^2.

    v = -q/2 (the series pole) and +infinity both map to +infinity.
    """
    if v is INF:
        return INF
    q, v = Fraction(q), Fraction(v)
    denom = q + 2 * v
    if denom == 0:
        return INF
    return v * v * (v * v + 4 * v + 2 * q) / (denom * denom)


def diamond_iterate(q: Fraction, v: ExtendedWeight, k: int) -> ExtendedWeight:
    for _ in range(k):
        v = diamond_map(q, v)
    return v


def first_nonnegative_iterate(q: Fraction, v: ExtendedWeight,
                              cap: int) -> Optional[int]:
    """Least k with the k-th iterate >= 0 (or +infinity); None if cap hit."""
    for k in range(cap + 1):
        if v is INF or v >= 0:
            return k
        v = diamond_map(q, v)
    return None


def diamond_fixed_point_enclosure(q: Fraction,
                                  width: Fraction = DEFAULT_WIDTH) -> RationalEnclosure:
    """Enclosure of the middle fixed point, which lies in [-3q/4, -q/2)."""
    q = Fraction(q)
    if not 0 < q <= Fraction(32, 27):
        raise ValueError("fixed point requires 0 < q <= 32/27")
    enc = isolate_root_in(diamond_cubic(q), -3 * q / 4, -q / 2, width)
    return enc.interval


def diamond_multiplier_enclosure(q: Fraction,
                                 width: Fraction = Fraction(1, 10**6)) -> RationalEnclosure:
    """Enclosure of the derivative of the diamond map at its middle fixed
    point; exact when the fixed point is rational."""
    q = Fraction(q)
    cubic = diamond_cubic(q)
    # derivative of N/D with N = v^4+4v^3+2qv^2, D = (q+2v)^2 simplifies to
    # (N'(q+2v) - 4N) / (q+2v)^3
    N = UniPoly([0, 0, 2 * q, 4, 1])
    num = N.derivative() * UniPoly([q, 2]) - 4 * N
    den = UniPoly([q, 2]) ** 3

    enc = diamond_fixed_point_enclosure(q)
    if enc.is_point():
        v = enc.lo
        return RationalEnclosure.point(num.eval(v) / den.eval(v))
    v_width = enc.width
    while True:
        out = interval_div(interval_poly_eval(num, enc),
                           interval_poly_eval(den, enc))
        if out.width <= width:
            return out
        v_width /= 16
        enc = refine_root(RootEnclosure(cubic.squarefree_part(), enc),
                          v_width).interval
        if enc.is_point():
            v = enc.lo
            return RationalEnclosure.point(num.eval(v) / den.eval(v))


# ---------------------------------------------------------------------------
# Weight intervals and their images under the reduction maps

@dataclass(frozen=True)
class RegionInterval:
    """A weight interval with enclosure endpoints and open/closed flags."""

    lo: RationalEnclosure
    hi: RationalEnclosure
    lo_open: bool
    hi_open: bool
    tag: str = ""

    @staticmethod
    def exact(lo: Fraction, hi: Fraction, lo_open: bool = True,
              hi_open: bool = True, tag: str = "") -> "RegionInterval":
        return RegionInterval(RationalEnclosure.point(lo),
                              RationalEnclosure.point(hi),
                              lo_open, hi_open, tag)

    def is_exact(self) -> bool:
        return self.lo.is_point() and self.hi.is_point()

    def contains_interval(self, other: "RegionInterval") -> bool:
        """Certified subset test; False when enclosures cannot decide."""
        if self.lo.hi < other.lo.lo:
            lo_ok = True
        elif self.lo.is_point() and other.lo.is_point():
            a, b = self.lo.lo, other.lo.lo
            lo_ok = a < b or (a == b and (not self.lo_open or other.lo_open))
        else:
            lo_ok = False
        if other.hi.hi < self.hi.lo:
            hi_ok = True
        elif self.hi.is_point() and other.hi.is_point():
            a, b = self.hi.lo, other.hi.lo
            hi_ok = b < a or (a == b and (not self.hi_open or other.hi_open))
        else:
            hi_ok = False
        return lo_ok and hi_ok


def _min_enc(*encs: RationalEnclosure) -> RationalEnclosure:
    return RationalEnclosure(min(e.lo for e in encs), min(e.hi for e in encs))


def _max_enc(*encs: RationalEnclosure) -> RationalEnclosure:
    return RationalEnclosure(max(e.lo for e in encs), max(e.hi for e in encs))


def _iv_par(a: RationalEnclosure, b: RationalEnclosure) -> RationalEnclosure:
    pa = RationalEnclosure(a.lo + 1, a.hi + 1)
    pb = RationalEnclosure(b.lo + 1, b.hi + 1)
    prods = (pa.lo * pb.lo, pa.lo * pb.hi, pa.hi * pb.lo, pa.hi * pb.hi)
    return RationalEnclosure(min(prods) - 1, max(prods) - 1)


def interval_par_image(A: RegionInterval, B: RegionInterval) -> RegionInterval:
    """Image of A x B under the parallel map (exact up to endpoint
    enclosures: the map is affine in each argument, so extremes sit on
    corners of the box)."""
    corners = [_iv_par(x, y)
               for x in (A.lo, A.hi) for y in (B.lo, B.hi)]
    lo_open = A.lo_open or B.lo_open
    hi_open = A.hi_open or B.hi_open
    return RegionInterval(_min_enc(*corners), _max_enc(*corners),
                          lo_open, hi_open,
                          tag=f"par({A.tag},{B.tag})")


def _enc_qdiv(q: Fraction, e: RationalEnclosure) -> RationalEnclosure:
    """Enclosure of q/v over v in e (e must not straddle 0)."""
    return interval_div(RationalEnclosure.point(q), e)


def interval_ser_image(q: Fraction, A: RegionInterval,
                       B: RegionInterval) -> RegionInterval:
    """Image under the series map, computed through duality:
    ser(v1, v2) = q / par(q/v1, q/v2).  Requires the prefactor q+v1+v2 to
    keep one sign over the box (and 0 outside both intervals)."""
    q = Fraction(q)
    if A.lo.lo <= 0 <= A.hi.hi or B.lo.lo <= 0 <= B.hi.hi:
        raise ValueError("series image needs weight intervals avoiding 0")
    pre_hi = q + A.hi.hi + B.hi.hi
    pre_lo = q + A.lo.lo + B.lo.lo
    if pre_lo <= 0 <= pre_hi:
        raise ValueError("series prefactor may vanish inside the box")
    Ad = RegionInterval(_enc_qdiv(q, A.hi), _enc_qdiv(q, A.lo),
                        A.hi_open, A.lo_open, tag=f"dual({A.tag})")
    Bd = RegionInterval(_enc_qdiv(q, B.hi), _enc_qdiv(q, B.lo),
                        B.hi_open, B.lo_open, tag=f"dual({B.tag})")
    P = interval_par_image(Ad, Bd)
    if P.lo.lo <= 0 <= P.hi.hi:
        raise ValueError("series image passes through the pole")
    return RegionInterval(_enc_qdiv(q, P.hi), _enc_qdiv(q, P.lo),
                          P.hi_open, P.lo_open,
                          tag=f"ser({A.tag},{B.tag})")
