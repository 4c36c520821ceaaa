"""Immutable simple graphs with bitmask adjacency rows.

Vertices are dense 0-indexed integers.  Adjacency rows are Python ints used as
bitsets, so one representation covers both small graphs (the common case) and
anything larger; a configurable vertex cap keeps the exhaustive algorithms
from being fed absurd inputs.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterable, Iterator

_DEFAULT_MAX_N = 64
ISO_MAX_N = 10


def max_vertices() -> int:
    """Vertex cap enforced by graph builders; P4SPEC_MAX_N overrides it."""
    raw = os.environ.get("P4SPEC_MAX_N")
    if raw is None:
        return _DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"P4SPEC_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"P4SPEC_MAX_N must be positive, got {value}")
    return value


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs (u, v) with u < v in upper-triangle column-major order.

    This is the single source of truth for edge-mask bit positions; the graph
    enumerator, the graph6 codec and the theorem engine all share it:
    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    """
    return tuple((u, v) for v in range(n) for u in range(v))


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph.  Treat instances as immutable."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int], validate: bool = True):
        self.n = n
        self.adj = tuple(adj)
        if validate:
            if n < 0:
                raise ValueError(f"vertex count must be nonnegative, got {n}")
            if n > max_vertices():
                raise ValueError(f"{n} vertices exceeds the cap of {max_vertices()}"
                                 " (set P4SPEC_MAX_N to raise it)")
            if len(self.adj) != n:
                raise ValueError("adjacency row count does not match n")
            full = (1 << n) - 1
            for v, row in enumerate(self.adj):
                if row & ~full:
                    raise ValueError(f"adjacency row {v} has bits outside 0..{n - 1}")
                if row >> v & 1:
                    raise ValueError(f"self-loop at vertex {v}")
            for u in range(n):
                for v in range(u + 1, n):
                    if (self.adj[u] >> v & 1) != (self.adj[v] >> u & 1):
                        raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        """Neighborhood of v as a bitmask."""
        return self.adj[v]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                yield (u, v)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex count and an iterable of edges.

    Duplicate edges collapse silently; self-loops and out-of-range endpoints
    raise ValueError.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > max_vertices():
        raise ValueError(f"{n} vertices exceeds the cap of {max_vertices()}"
                         " (set P4SPEC_MAX_N to raise it)")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, validate=False)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, (~row & full & ~(1 << v) for v, row in enumerate(g.adj)),
                 validate=False)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H with H's vertices shifted up by g.n."""
    n = g.n + h.n
    if n > max_vertices():
        raise ValueError(f"union has {n} vertices, exceeding the cap of {max_vertices()}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, rows, validate=False)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n = g.n + h.n
    if n > max_vertices():
        raise ValueError(f"join has {n} vertices, exceeding the cap of {max_vertices()}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.adj]
    rows += [(row << g.n) | gmask for row in h.adj]
    return Graph(n, rows, validate=False)


def induced_subgraph(g: Graph, selection: int | Iterable[int]) -> Graph:
    """Subgraph induced by a vertex bitmask (or iterable), relabeled ascending."""
    mask = selection if isinstance(selection, int) else mask_of(selection)
    if mask & ~g.full_mask:
        raise ValueError("selection includes vertices outside the graph")
    kept = list(bits(mask))
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = g.adj[v] & mask
        rows.append(mask_of(index[w] for w in bits(row)))
    return Graph(len(kept), rows, validate=False)


def connected_components(g: Graph) -> list[int]:
    """Vertex bitmasks of the components, ordered by lowest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test, for test support on small graphs."""
    if g.n != h.n:
        return False
    n = g.n
    if n > ISO_MAX_N:
        raise ValueError(f"isomorphism search supports at most {ISO_MAX_N} vertices")
    if g.edge_count != h.edge_count or g.degree_sequence() != h.degree_sequence():
        return False
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    mapping = [-1] * n

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        gi_adj = g.adj[i]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[i]:
                continue
            ok = True
            for j in range(i):
                if (gi_adj >> j & 1) != (h.adj[w] >> mapping[j] & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = w
                if extend(i + 1, used | 1 << w):
                    return True
        return False

    return extend(0, 0)
