"""Multigraphs with loops and parallel edges: minors, blocks, enumeration, I/O.

Graphs are immutable: a vertex count plus a tuple of (edge-id, u, v) records.
Edge ids are stable under deletion and contraction so weight assignments can
follow a graph through reductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Optional, Sequence


class MultiGraph:
    """Labeled multigraph. Loops (u == v) and parallel edges are permitted."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        es = tuple((int(i), int(u), int(v)) for (i, u, v) in edges)
        seen = set()
        for (eid, u, v) in es:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid} endpoint out of range")
            if eid in seen:
                raise ValueError(f"duplicate edge id {eid}")
            seen.add(eid)
        self.n = n
        self.edges = es
        self._adj = None

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self.edges)

    def edge(self, eid: int) -> tuple[int, int, int]:
        for e in self.edges:
            if e[0] == eid:
                return e
        raise KeyError(f"unknown edge id {eid}")

    def has_edge(self, eid: int) -> bool:
        return any(e[0] == eid for e in self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for (_, a, b) in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def __eq__(self, other):
        return (isinstance(other, MultiGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, edges={list(self.edges)})"

    # -- connectivity ------------------------------------------------------

    def components(self, active: Optional[Iterable[int]] = None) -> tuple[int, list[int]]:
        """Component count and vertex labeling of (V, A) for an edge subset A."""
        act = set(self.edge_ids()) if active is None else set(active)
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (eid, u, v) in self.edges:
            if eid in act:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
        roots = [find(x) for x in range(self.n)]
        labels: dict[int, int] = {}
        out = []
        for r in roots:
            if r not in labels:
                labels[r] = len(labels)
            out.append(labels[r])
        return len(labels), out

    def component_count(self, active: Optional[Iterable[int]] = None) -> int:
        return self.components(active)[0]

    def cyclomatic(self, active: Optional[Iterable[int]] = None) -> int:
        """gamma(A) = k(A) - |V| + |A|."""
        act = tuple(self.edge_ids()) if active is None else tuple(active)
        return self.components(act)[0] - self.n + len(act)

    def classify_edge(self, eid: int) -> str:
        """'loop', 'bridge', or 'normal'."""
        (_, u, v) = self.edge(eid)
        if u == v:
            return "loop"
        rest = [e for e in self.edge_ids() if e != eid]
        if self.component_count(rest) > self.component_count():
            return "bridge"
        return "normal"

    # -- minors ------------------------------------------------------------

    def delete(self, eid: int) -> "MultiGraph":
        self.edge(eid)
        return MultiGraph(self.n, [e for e in self.edges if e[0] != eid])

    def contract(self, eid: int) -> "MultiGraph":
        """Identify the endpoints of eid; parallel edges may become loops."""
        (_, u, v) = self.edge(eid)
        if u == v:
            raise ValueError("cannot contract a loop")
        lo, hi = min(u, v), max(u, v)

        def remap(x):
            if x == hi:
                x = lo
            return x - 1 if x > hi else x

        return MultiGraph(self.n - 1,
                          [(i, remap(a), remap(b))
                           for (i, a, b) in self.edges if i != eid])

    def delete_vertex(self, v: int) -> "MultiGraph":
        def remap(x):
            return x - 1 if x > v else x
        return MultiGraph(self.n - 1,
                          [(i, remap(a), remap(b)) for (i, a, b) in self.edges
                           if a != v and b != v])

    # -- reduction-pair detection -----------------------------------------

    def find_parallel_pair(self) -> Optional[tuple[int, int]]:
        """Two distinct non-loop edges with the same endpoint set."""
        by_ends: dict[tuple[int, int], int] = {}
        for (eid, u, v) in self.edges:
            if u == v:
                continue
            key = (min(u, v), max(u, v))
            if key in by_ends:
                return (by_ends[key], eid)
            by_ends[key] = eid
        return None

    def find_series_pair_wide(self) -> Optional[tuple[int, int]]:
        """A two-edge cut {e1, e2}: e2 is a bridge of G minus e1."""
        ids = self.edge_ids()
        for i, e1 in enumerate(ids):
            if self.classify_edge(e1) != "normal":
                continue
            g1 = self.delete(e1)
            for e2 in ids[i + 1:]:
                (_, u, v) = self.edge(e2)
                if u == v:
                    continue
                if g1.classify_edge(e2) == "bridge":
                    return (e1, e2)
        return None

    # -- blocks ------------------------------------------------------------

    def blocks(self) -> "BlockDecomposition":
        """Maximal non-separable subgraphs via DFS lowpoints.

        Loops and isolated vertices form their own trivial (single-vertex)
        blocks; bridges form nontrivial two-vertex blocks.
        """
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        loops: list[tuple[int, int]] = []
        for (eid, u, v) in self.edges:
            if u == v:
                loops.append((eid, u))
            else:
                adj[u].append((eid, v))
                adj[v].append((eid, u))

        disc = [0] * self.n
        low = [0] * self.n
        timer = [1]
        stack: list[int] = []
        block_edge_sets: list[list[int]] = []

        def dfs(root: int):
            # Iterative DFS so deep paths don't hit the recursion limit.
            work = [(root, -1, iter(adj[root]))]
            disc[root] = low[root] = timer[0]
            timer[0] += 1
            while work:
                u, pe, it = work[-1]
                advanced = False
                for (eid, w) in it:
                    if eid == pe:
                        continue
                    if disc[w] == 0:
                        stack.append(eid)
                        disc[w] = low[w] = timer[0]
                        timer[0] += 1
                        work.append((w, eid, iter(adj[w])))
                        advanced = True
                        break
                    elif disc[w] < disc[u]:
                        stack.append(eid)
                        low[u] = min(low[u], disc[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    pu = work[-1][0]
                    low[pu] = min(low[pu], low[u])
                    if low[u] >= disc[pu]:
                        blk = []
                        while True:
                            eid = stack.pop()
                            blk.append(eid)
                            if eid == pe:
                                break
                        block_edge_sets.append(blk)

        for v in range(self.n):
            if disc[v] == 0:
                dfs(v)

        blocks: list[Block] = []
        for blk in block_edge_sets:
            verts = set()
            for eid in blk:
                (_, a, b) = self.edge(eid)
                verts.update((a, b))
            blocks.append(Block(frozenset(verts), frozenset(blk), trivial=False))
        for (eid, u) in loops:
            blocks.append(Block(frozenset([u]), frozenset([eid]), trivial=True))
        covered = set()
        for b in blocks:
            covered.update(b.vertices)
        for v in range(self.n):
            if v not in covered:
                blocks.append(Block(frozenset([v]), frozenset(), trivial=True))
        c = self.component_count()
        b_count = sum(1 for b in blocks if not b.trivial)
        return BlockDecomposition(tuple(blocks), c, b_count)

    def is_2connected(self) -> bool:
        """2-connected: connected, >= 3 vertices, no cut vertex, loopless.

        C_2 (two vertices joined by parallel edges) counts as 2-connected,
        matching the usual non-separable convention for multigraphs.
        """
        if any(u == v for (_, u, v) in self.edges):
            return False
        if self.component_count() != 1:
            return False
        if self.n < 2:
            return False
        if self.n == 2:
            return self.m >= 2
        for v in range(self.n):
            if self.delete_vertex(v).component_count() != 1:
                return False
        return True

    def is_nonseparable(self) -> bool:
        """Exactly one block. Includes K1, C1 (single loop), K2, K2^(m)."""
        dec = self.blocks()
        return len(dec.blocks) == 1

    def splitting_edge(self) -> Optional[int]:
        """An edge e with both G minus e and G/e 2-connected, if one exists."""
        for eid in self.edge_ids():
            if (self.delete(eid).is_2connected()
                    and self.contract(eid).is_2connected()):
                return eid
        return None

    # -- expansions --------------------------------------------------------

    def diamond_expand(self) -> tuple["MultiGraph", dict[int, tuple[int, ...]]]:
        """Replace every edge uv by two internally disjoint 2-paths.

        Returns the expanded graph and a map original-edge-id -> the 4 new
        edge ids that replace it.
        """
        n = self.n
        edges: list[tuple[int, int, int]] = []
        mapping: dict[int, tuple[int, ...]] = {}
        next_id = 0
        for (eid, u, v) in self.edges:
            x, y = n, n + 1
            n += 2
            ids = (next_id, next_id + 1, next_id + 2, next_id + 3)
            next_id += 4
            edges.extend([(ids[0], u, x), (ids[1], x, v),
                          (ids[2], u, y), (ids[3], y, v)])
            mapping[eid] = ids
        return MultiGraph(n, edges), mapping

    def double_edges(self) -> tuple["MultiGraph", dict[int, tuple[int, int]]]:
        """Replace every edge by two parallel copies."""
        edges: list[tuple[int, int, int]] = []
        mapping: dict[int, tuple[int, int]] = {}
        next_id = 0
        for (eid, u, v) in self.edges:
            ids = (next_id, next_id + 1)
            next_id += 2
            edges.extend([(ids[0], u, v), (ids[1], u, v)])
            mapping[eid] = ids
        return MultiGraph(self.n, edges), mapping


@dataclass(frozen=True)
class Block:
    vertices: frozenset
    edges: frozenset
    trivial: bool


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    c: int
    b: int


# ---------------------------------------------------------------------------
# Named constructions

def path_graph(k: int) -> MultiGraph:
    """Path with k edges (k+1 vertices)."""
    return MultiGraph(k + 1, [(i, i, i + 1) for i in range(k)])


def cycle_graph(k: int) -> MultiGraph:
    """Cycle C_k; C_1 is a single loop."""
    if k < 1:
        raise ValueError("cycle needs at least one edge")
    return MultiGraph(max(k, 1), [(i, i, (i + 1) % k) for i in range(k)])


def banana_graph(m: int) -> MultiGraph:
    """K2^(m): two vertices joined by m parallel edges."""
    return MultiGraph(2, [(i, 0, 1) for i in range(m)])


def complete_graph(k: int) -> MultiGraph:
    edges = [(i, u, v) for i, (u, v) in
             enumerate((u, v) for u in range(k) for v in range(u + 1, k))]
    return MultiGraph(k, edges)


# ---------------------------------------------------------------------------
# Isomorphism and enumeration of small graphs

def canonical_form(g: MultiGraph) -> tuple:
    """Canonical key invariant under vertex permutation (brute force).

    Only intended for small graphs (n <= ~7).
    """
    best = None
    counts: dict[tuple[int, int], int] = {}
    for (_, u, v) in g.edges:
        key = (min(u, v), max(u, v))
        counts[key] = counts.get(key, 0) + 1
    verts = range(g.n)
    for perm in permutations(verts):
        mapped = sorted(((min(perm[u], perm[v]), max(perm[u], perm[v])), c)
                        for (u, v), c in counts.items())
        key = (g.n, tuple(mapped))
        if best is None or key < best:
            best = key
    return best if best is not None else (g.n, ())


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


def enumerate_nonseparable(m: int) -> list[MultiGraph]:
    """All loopless non-separable multigraphs with exactly m edges, up to iso.

    2 <= m <= 5.  Non-separable with >= 2 edges and no loops means
    2-connected (in the multigraph sense), so we enumerate multisets of
    vertex pairs over n <= m vertices and filter.
    """
    if not (2 <= m <= 5):
        raise ValueError("edge count must be between 2 and 5")
    out: list[MultiGraph] = []
    seen: set[tuple] = set()
    for n in range(2, m + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for combo in combinations_with_replacement(pairs, m):
            used = set()
            for (u, v) in combo:
                used.update((u, v))
            if len(used) != n:
                continue
            g = MultiGraph(n, [(i, u, v) for i, (u, v) in enumerate(combo)])
            if not g.is_2connected():
                continue
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    out.sort(key=canonical_form)
    return out


# ---------------------------------------------------------------------------
# Text format

def parse_graph(text: str) -> tuple[MultiGraph, dict[int, Fraction]]:
    """Parse the graph text format.

    Lines: "graph <n>" header, then "edge <id> <u> <v> [<weight>]".
    Blank lines and "#" comments are ignored.  Returns the graph and the
    (possibly partial) weight map.
    """
    n = None
    edges: list[tuple[int, int, int]] = []
    weights: dict[int, Fraction] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if n is not None:
                raise ValueError("duplicate graph header")
            n = int(parts[1])
        elif parts[0] == "edge":
            if n is None:
                raise ValueError("edge record before graph header")
            eid, u, v = int(parts[1]), int(parts[2]), int(parts[3])
            edges.append((eid, u, v))
            if len(parts) > 4:
                weights[eid] = Fraction(parts[4])
        else:
            raise ValueError(f"unrecognized record: {line!r}")
    if n is None:
        raise ValueError("missing graph header")
    return MultiGraph(n, edges), weights


def format_graph(g: MultiGraph, weights: Optional[dict[int, Fraction]] = None) -> str:
    lines = [f"graph {g.n}"]
    for (eid, u, v) in g.edges:
        if weights is not None and eid in weights:
            lines.append(f"edge {eid} {u} {v} {weights[eid]}")
        else:
            lines.append(f"edge {eid} {u} {v}")
    return "\n".join(lines) + "\n"
