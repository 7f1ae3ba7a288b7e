"""Exact rational arithmetic: polynomials, rational-function identities, enclosures.

All numbers are arbitrary-precision fractions (``fractions.Fraction``), so
every operation in this package is exact; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Rational = Fraction


def rat(text: str | int | Fraction) -> Fraction:
    """Parse a rational written as "p/q" or "p"."""
    return Fraction(text)


def rat_str(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(x)


class UniPoly:
    """Dense univariate polynomial with rational coefficients.

    Coefficients are indexed by degree (lowest first).  The zero polynomial
    has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([Fraction(c)])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "UniPoly":
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        p = self
        for _ in range(order):
            p = UniPoly([i * c for i, c in enumerate(p.coeffs)][1:])
        return p

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 1)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            quot[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by x^k; the low-order coefficients must all be zero."""
        if any(self.coeffs[:k]):
            raise ValueError(f"polynomial not divisible by x^{k}")
        return UniPoly(self.coeffs[k:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        if self.degree <= 1:
            return self.monic()
        return self.divexact(self.gcd(self.derivative())).monic()


def poly_derivative(p: UniPoly, order: int) -> UniPoly:
    """Exact formal derivative d^order/dx^order of p."""
    return p.derivative(order)


class BiPoly:
    """Polynomial in two indeterminates with rational coefficients.

    Stored sparsely as a map (i, j) -> coefficient of x^i y^j; only nonzero
    entries are kept, so equality of maps is equality of polynomials.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): Fraction(c)})

    @staticmethod
    def x() -> "BiPoly":
        return BiPoly({(1, 0): Fraction(1)})

    @staticmethod
    def y() -> "BiPoly":
        return BiPoly({(0, 1): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPoly({self.terms})"

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, Fraction(0)) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, x: Fraction, y: Fraction) -> Fraction:
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def subst_y_minus_x(self) -> UniPoly:
        """Substitute y = -x, giving a univariate polynomial in x."""
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            k = i + j
            out[k] = out.get(k, Fraction(0)) + c * (-1) ** j
        size = max(out, default=-1) + 1
        coeffs = [Fraction(0)] * size
        for k, v in out.items():
            coeffs[k] = v
        return UniPoly(coeffs)

    def as_unipoly_in_x(self) -> UniPoly:
        """Convert to a univariate polynomial; requires no y-dependence."""
        if any(j for (_, j) in self.terms):
            raise ValueError("polynomial depends on the second variable")
        size = max((i for (i, _) in self.terms), default=-1) + 1
        coeffs = [Fraction(0)] * size
        for (i, _), v in self.terms.items():
            coeffs[i] = v
        return UniPoly(coeffs)


def ratfunc_identity_check(num_l: BiPoly, den_l: BiPoly,
                           num_r: BiPoly, den_r: BiPoly) -> bool:
    """Decide num_l/den_l == num_r/den_r by exact cross multiplication."""
    if den_l.is_zero() or den_r.is_zero():
        raise ZeroDivisionError("identically-zero denominator")
    return num_l * den_r == num_r * den_l


@dataclass(frozen=True)
class RationalEnclosure:
    """A closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("enclosure endpoints out of order")

    @staticmethod
    def point(x) -> "RationalEnclosure":
        x = Fraction(x)
        return RationalEnclosure(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def contains_enclosure(self, other: "RationalEnclosure") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def enclosure_refine(enc: RationalEnclosure,
                     sign_test: Callable[[Fraction], Fraction],
                     width: Fraction,
                     max_iter: int = 4096) -> RationalEnclosure:
    """Bisect [lo, hi] down to the requested width.

    ``sign_test`` must have opposite (nonzero) signs at the endpoints, or be
    exactly zero at one of them.  If a bisection midpoint hits the root
    exactly, the result collapses to a point interval.
    """
    lo, hi = enc.lo, enc.hi
    flo, fhi = sign_test(lo), sign_test(hi)
    if flo == 0:
        return RationalEnclosure.point(lo)
    if fhi == 0:
        return RationalEnclosure.point(hi)
    if (flo > 0) == (fhi > 0):
        raise ValueError("sign test does not change sign over the enclosure")
    for _ in range(max_iter):
        if hi - lo <= width:
            return RationalEnclosure(lo, hi)
        mid = (lo + hi) / 2
        fmid = sign_test(mid)
        if fmid == 0:
            return RationalEnclosure.point(mid)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    raise RuntimeError("bisection failed to reach the requested width")


# Interval arithmetic helpers used for certified evaluation of rational
# functions over enclosures.

def _iv_add(a: RationalEnclosure, b: RationalEnclosure) -> RationalEnclosure:
    return RationalEnclosure(a.lo + b.lo, a.hi + b.hi)


def _iv_mul(a: RationalEnclosure, b: RationalEnclosure) -> RationalEnclosure:
    prods = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return RationalEnclosure(min(prods), max(prods))


def _iv_div(a: RationalEnclosure, b: RationalEnclosure) -> RationalEnclosure:
    if b.lo <= 0 <= b.hi:
        raise ZeroDivisionError("interval denominator contains zero")
    quots = (a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi)
    return RationalEnclosure(min(quots), max(quots))


def interval_poly_eval(p: UniPoly, x: RationalEnclosure) -> RationalEnclosure:
    """Horner evaluation of p over an interval (outer enclosure)."""
    acc = RationalEnclosure.point(0)
    for c in reversed(p.coeffs):
        acc = _iv_add(_iv_mul(acc, x), RationalEnclosure.point(c))
    return acc


def interval_div(a: RationalEnclosure, b: RationalEnclosure) -> RationalEnclosure:
    return _iv_div(a, b)
