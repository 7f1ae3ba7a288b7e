"""Matroids as rank oracles: graphic, uniform, dual, direct sum, minors.

A matroid is a ground set of element ids plus a rank function on subsets.
Duals and minors are lazy wrappers that stack the defining rank formulas;
ranks are memoized per matroid since subset-exponential sweeps dominate.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, FrozenSet, Iterable, Optional

from .graphs import MultiGraph, parse_graph


class Matroid:
    """Ground set + rank oracle with memoization."""

    def __init__(self, ground: Iterable[int],
                 rank_fn: Callable[[FrozenSet[int]], int],
                 name: str = "matroid"):
        self.ground = frozenset(int(e) for e in ground)
        self._rank_fn = rank_fn
        self._memo: dict[FrozenSet[int], int] = {}
        self.name = name

    def rank(self, subset: Iterable[int]) -> int:
        s = frozenset(subset)
        if not s <= self.ground:
            raise ValueError("subset not within the ground set")
        if s not in self._memo:
            self._memo[s] = self._rank_fn(s)
        return self._memo[s]

    @property
    def full_rank(self) -> int:
        return self.rank(self.ground)

    def __repr__(self):
        return f"Matroid({self.name}, |E|={len(self.ground)})"

    # -- element classification -------------------------------------------

    def classify_element(self, e: int) -> str:
        """'loop', 'coloop', or 'normal'."""
        if e not in self.ground:
            raise ValueError(f"unknown element {e}")
        if self.rank([e]) == 0:
            return "loop"
        if self.rank(self.ground - {e}) == self.full_rank - 1:
            return "coloop"
        return "normal"

    def find_parallel_pair(self) -> Optional[tuple[int, int]]:
        """A 2-element circuit: r({e1,e2}) = 1 with neither element a loop."""
        elems = sorted(self.ground)
        for i, e1 in enumerate(elems):
            if self.rank([e1]) == 0:
                continue
            for e2 in elems[i + 1:]:
                if self.rank([e2]) == 0:
                    continue
                if self.rank([e1, e2]) == 1:
                    return (e1, e2)
        return None

    def find_series_pair(self) -> Optional[tuple[int, int]]:
        """A 2-element cocircuit, i.e. a parallel pair of the dual."""
        return dual(self).find_parallel_pair()

    def spanned_by(self, s: Iterable[int], e: int) -> bool:
        s = frozenset(s)
        if e in s:
            raise ValueError("element already in the set")
        return self.rank(s | {e}) == self.rank(s)

    # -- connectivity ------------------------------------------------------

    def is_2connected(self) -> bool:
        """No bipartition E = E1 + E2 (both nonempty) with r(E1)+r(E2)=r(E)."""
        elems = sorted(self.ground)
        if len(elems) <= 1:
            return True
        full = self.full_rank
        anchor = elems[0]
        rest = elems[1:]
        for k in range(0, len(rest) + 1):
            for extra in combinations(rest, k):
                e1 = frozenset((anchor,) + extra)
                e2 = self.ground - e1
                if not e2:
                    continue
                if self.rank(e1) + self.rank(e2) == full:
                    return False
        return True

    def connected_components_2(self) -> list[frozenset]:
        """Finest decomposition into 2-connected components."""
        if len(self.ground) == 0:
            return []
        if self.is_2connected():
            return [self.ground]
        elems = sorted(self.ground)
        full = self.full_rank
        anchor = elems[0]
        rest = elems[1:]
        for k in range(0, len(rest) + 1):
            for extra in combinations(rest, k):
                e1 = frozenset((anchor,) + extra)
                e2 = self.ground - e1
                if not e2:
                    continue
                if self.rank(e1) + self.rank(e2) == full:
                    return (restrict(self, e1).connected_components_2()
                            + restrict(self, e2).connected_components_2())
        raise AssertionError("unreachable: separation must exist")


# ---------------------------------------------------------------------------
# Constructors

def graphic(g: MultiGraph) -> Matroid:
    """Cycle matroid: r(A) = |V| - k(A)."""
    def rank_fn(s: FrozenSet[int]) -> int:
        return g.n - g.component_count(s)
    return Matroid(g.edge_ids(), rank_fn, name="graphic")


def uniform(r: int, nelems: int) -> Matroid:
    if not (0 <= r <= nelems):
        raise ValueError("need 0 <= r <= n")
    def rank_fn(s: FrozenSet[int]) -> int:
        return min(len(s), r)
    return Matroid(range(nelems), rank_fn, name=f"U({r},{nelems})")


def dual(m: Matroid) -> Matroid:
    """Dual matroid: r*(A) = |A| + r(E - A) - r(E)."""
    full = m.full_rank
    def rank_fn(s: FrozenSet[int]) -> int:
        return len(s) + m.rank(m.ground - s) - full
    return Matroid(m.ground, rank_fn, name=f"dual({m.name})")


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum on a relabeled ground set 0..|E1|+|E2|-1.

    Elements of m1 keep their order in the low range; elements of m2 follow.
    """
    e1 = sorted(m1.ground)
    e2 = sorted(m2.ground)
    to1 = {i: e for i, e in enumerate(e1)}
    to2 = {i + len(e1): e for i, e in enumerate(e2)}
    def rank_fn(s: FrozenSet[int]) -> int:
        s1 = frozenset(to1[x] for x in s if x in to1)
        s2 = frozenset(to2[x] for x in s if x in to2)
        return m1.rank(s1) + m2.rank(s2)
    return Matroid(range(len(e1) + len(e2)), rank_fn,
                   name=f"({m1.name})+({m2.name})")


def restrict(m: Matroid, subset: Iterable[int]) -> Matroid:
    sub = frozenset(subset)
    def rank_fn(s: FrozenSet[int]) -> int:
        return m.rank(s)
    return Matroid(sub, rank_fn, name=f"{m.name}|restr")


def minor_delete(m: Matroid, e: int) -> Matroid:
    if e not in m.ground:
        raise ValueError(f"unknown element {e}")
    def rank_fn(s: FrozenSet[int]) -> int:
        return m.rank(s)
    return Matroid(m.ground - {e}, rank_fn, name=f"{m.name}\\{e}")


def minor_contract(m: Matroid, e: int) -> Matroid:
    """Contraction: r(A) = r_M(A + e) - 1 for non-loops, r_M(A + e) for loops."""
    if e not in m.ground:
        raise ValueError(f"unknown element {e}")
    is_loop = m.rank([e]) == 0
    def rank_fn(s: FrozenSet[int]) -> int:
        r = m.rank(s | {e})
        return r if is_loop else r - 1
    return Matroid(m.ground - {e}, rank_fn, name=f"{m.name}/{e}")


# ---------------------------------------------------------------------------
# Rank-axiom spot checks (used by tests and the certifier)

def check_rank_axioms(m: Matroid) -> bool:
    """Exhaustive rank-axiom verification; intended for |E| <= 6."""
    elems = sorted(m.ground)
    if len(elems) > 12:
        raise ValueError("ground set too large for exhaustive checks")
    subsets = []
    for k in range(len(elems) + 1):
        subsets.extend(frozenset(c) for c in combinations(elems, k))
    if m.rank(frozenset()) != 0:
        return False
    for s in subsets:
        rs = m.rank(s)
        if not (0 <= rs <= len(s)):
            return False
        for e in elems:
            if e not in s:
                re = m.rank(s | {e})
                if not (rs <= re <= rs + 1):
                    return False
    for a in subsets:
        for b in subsets:
            if m.rank(a | b) + m.rank(a & b) > m.rank(a) + m.rank(b):
                return False
    return True


# ---------------------------------------------------------------------------
# Text format

def parse_matroid(text: str,
                  read_file: Callable[[str], str]) -> tuple[Matroid, dict[int, Fraction]]:
    """Parse the matroid text format.

    Records: "uniform <r> <n>" | "graphic <graph-file>" | "dual <matroid-file>"
    | "directsum <file> <file>", plus weight lines "w <id> <p/q>".
    ``read_file`` resolves referenced file names to their contents.
    """
    base: Optional[Matroid] = None
    weights: dict[int, Fraction] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "w":
            weights[int(parts[1])] = Fraction(parts[2])
            continue
        if base is not None:
            raise ValueError("multiple matroid constructor records")
        if kind == "uniform":
            base = uniform(int(parts[1]), int(parts[2]))
        elif kind == "graphic":
            g, _ = parse_graph(read_file(parts[1]))
            base = graphic(g)
        elif kind == "dual":
            inner, _ = parse_matroid(read_file(parts[1]), read_file)
            base = dual(inner)
        elif kind == "directsum":
            m1, _ = parse_matroid(read_file(parts[1]), read_file)
            m2, _ = parse_matroid(read_file(parts[2]), read_file)
            base = direct_sum(m1, m2)
        else:
            raise ValueError(f"unrecognized record: {line!r}")
    if base is None:
        raise ValueError("missing matroid constructor record")
    for eid in weights:
        if eid not in base.ground:
            raise ValueError(f"weight for unknown element {eid}")
    return base, weights
