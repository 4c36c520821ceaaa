"""Graph constructors: standard families, spiders, the 5-vertex catalog,
midpoint extensions, cotrees and exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Graph, complement, disjoint_union, from_edge_list, join, \
    mask_of, max_vertices, pair_order
from .spectral import IntPolynomial


# =========================================================================
# standard graphs
# =========================================================================

def standard(kind: str, n: int) -> Graph:
    """path / cycle / complete / empty on n vertices."""
    if kind == "path":
        if n < 1:
            raise ValueError("a path needs at least 1 vertex")
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        if n < 1:
            raise ValueError("a complete graph needs at least 1 vertex")
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind == "empty":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        return from_edge_list(n, [])
    raise ValueError(f"unknown standard graph kind {kind!r}")


# =========================================================================
# spiders
# =========================================================================

def _with_head(frame_rows: list[int], k: int, head: Graph | None) -> Graph:
    """Attach an optional head, joined to the body block k..2k-1."""
    if head is None or head.n == 0:
        return Graph(2 * k, frame_rows, validate=False)
    n = 2 * k + head.n
    if n > max_vertices():
        raise ValueError(f"spider has {n} vertices, exceeding the cap of {max_vertices()}")
    body_m = ((1 << k) - 1) << k
    rows = list(frame_rows)
    head_bits = ((1 << head.n) - 1) << (2 * k)
    for c in range(k, 2 * k):
        rows[c] |= head_bits
    for v in range(head.n):
        rows.append((head.adj[v] << (2 * k)) | body_m)
    return Graph(n, rows, validate=False)


def thin_spider(k: int, head: Graph | None = None) -> Graph:
    """Thin spider: body clique 0..k-1, legs k..2k-1, head from 2k on.

    Leg k+i is adjacent to body vertex i only; the head joins the whole body
    and avoids the legs.  complement(thin_spider(k, H)) equals
    thick_spider(k, complement(H)) vertex for vertex.
    """
    if k < 2:
        raise ValueError("a spider needs k >= 2")
    body_m = (1 << k) - 1
    rows = [0] * (2 * k)
    for i in range(k):
        rows[i] = (body_m ^ (1 << i)) | (1 << (k + i))
        rows[k + i] = 1 << i
    if head is None or head.n == 0:
        return Graph(2 * k, rows, validate=False)
    # here the body is the low block, so swap into the helper's layout
    n = 2 * k + head.n
    if n > max_vertices():
        raise ValueError(f"spider has {n} vertices, exceeding the cap of {max_vertices()}")
    head_bits = ((1 << head.n) - 1) << (2 * k)
    for i in range(k):
        rows[i] |= head_bits
    for v in range(head.n):
        rows.append((head.adj[v] << (2 * k)) | body_m)
    return Graph(n, rows, validate=False)


def thick_spider(k: int, head: Graph | None = None) -> Graph:
    """Thick spider: legs 0..k-1, body clique k..2k-1, head from 2k on.

    Leg i is adjacent to every body vertex except k+i; the head joins the
    whole body and avoids the legs.
    """
    if k < 2:
        raise ValueError("a spider needs k >= 2")
    body_m = ((1 << k) - 1) << k
    rows = [0] * (2 * k)
    for i in range(k):
        rows[i] = body_m ^ (1 << (k + i))
        rows[k + i] = (body_m ^ (1 << (k + i))) | \
            (((1 << k) - 1) ^ (1 << i))
    return _with_head(rows, k, head)


# =========================================================================
# the 5-vertex catalog (plus P4)
# =========================================================================

FAMILY_IDS = ("P4", "F0", "F1", "F2", "F3", "F4", "F5", "F6")

_F3_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4))
_F5_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4), (2, 3))


def family(fid: str) -> Graph:
    """Member of the fixed catalog: P4 plus the seven 5-vertex graphs F0..F6.

    F0 is the 5-cycle, F1 the 5-path, F2 its complement (the house); F4 and
    F6 are the complements of F5 and F3.
    """
    if fid == "P4":
        return standard("path", 4)
    if fid == "F0":
        return standard("cycle", 5)
    if fid == "F1":
        return standard("path", 5)
    if fid == "F2":
        return complement(standard("path", 5))
    if fid == "F3":
        return from_edge_list(5, _F3_EDGES)
    if fid == "F5":
        return from_edge_list(5, _F5_EDGES)
    if fid == "F4":
        return complement(from_edge_list(5, _F5_EDGES))
    if fid == "F6":
        return complement(from_edge_list(5, _F3_EDGES))
    raise ValueError(f"unknown family id {fid!r}; expected one of {FAMILY_IDS}")


CASE_IV_KINDS = ("P4", "F3", "F4", "F5", "F6")

# Midpoints = vertices that sit in the middle of some induced P4 of the seed;
# every other seed vertex is an endpoint of one.  For the complements F4/F6
# the roles swap, which is why their sets are the complements of F5/F3's.
_MIDPOINTS = {
    "P4": (1, 2),
    "F3": (0, 1),
    "F5": (0, 1),
    "F4": (2, 3, 4),
    "F6": (2, 3, 4),
}


def case_iv_graph(kind: str, head: Graph | None = None) -> Graph:
    """A catalog seed with every head vertex attached to the seed's midpoints.

    The head keeps its internal edges and is joined to exactly the midpoint
    vertices of the seed, never to its endpoints.
    """
    if kind not in CASE_IV_KINDS:
        raise ValueError(f"unknown seed kind {kind!r}; expected one of {CASE_IV_KINDS}")
    seed = family(kind)
    if head is None:
        head = standard("empty", 0)
    n = seed.n + head.n
    if n > max_vertices():
        raise ValueError(f"graph has {n} vertices, exceeding the cap of {max_vertices()}")
    mids = mask_of(_MIDPOINTS[kind])
    rows = list(seed.adj)
    head_bits = ((1 << head.n) - 1) << seed.n
    for v in range(seed.n):
        if mids >> v & 1:
            rows[v] |= head_bits
    for v in range(head.n):
        rows.append((head.adj[v] << seed.n) | mids)
    return Graph(n, rows, validate=False)


def case_iv_polynomials(j: int) -> tuple[IntPolynomial, IntPolynomial]:
    """The degree-5 factor of the F3 midpoint extension with a j-vertex head,
    and its quartic cofactor after splitting off the root 1.

    Returns (quintic, quartic) with quintic = (x - 1) * quartic, an identity
    that is asserted.  The quartic is negative at 0 and positive at 1, so it
    has a root strictly inside (0, 1).
    """
    if j < 1:
        raise ValueError("head size j must be at least 1")
    quintic = IntPolynomial([2, -2, -(j * j + 5 * j + 6), j * j + 3 * j + 1,
                             2 * j + 4, 1])
    quartic = IntPolynomial([-2, 0, j * j + 5 * j + 6, 2 * j + 5, 1])
    assert IntPolynomial([-1, 1]) * quartic == quintic
    return quintic, quartic


# =========================================================================
# cotrees
# =========================================================================

@dataclass(frozen=True)
class Cotree:
    """Cotree expression: leaves are single vertices, internal nodes are
    disjoint unions or joins of at least two children."""

    op: str  # "leaf", "union" or "join"
    children: tuple["Cotree", ...] = ()

    def __post_init__(self):
        if self.op == "leaf":
            if self.children:
                raise ValueError("a leaf has no children")
        elif self.op in ("union", "join"):
            if len(self.children) < 2:
                raise ValueError(f"a {self.op} node needs at least two children")
        else:
            raise ValueError(f"unknown cotree op {self.op!r}")

    @property
    def leaf_count(self) -> int:
        if self.op == "leaf":
            return 1
        return sum(c.leaf_count for c in self.children)


def leaf() -> Cotree:
    return Cotree("leaf")


def union_node(*children: Cotree) -> Cotree:
    return Cotree("union", tuple(children))


def join_node(*children: Cotree) -> Cotree:
    return Cotree("join", tuple(children))


def build_cotree(tree: Cotree) -> Graph:
    """Evaluate a cotree to its graph.  The result is P4-free by construction,
    which is asserted for small results."""
    def build(t: Cotree) -> Graph:
        if t.op == "leaf":
            return standard("complete", 1)
        acc = build(t.children[0])
        for child in t.children[1:]:
            nxt = build(child)
            acc = disjoint_union(acc, nxt) if t.op == "union" else join(acc, nxt)
        return acc

    g = build(tree)
    if g.n <= 16:
        from .p4 import enumerate_p4
        assert not enumerate_p4(g), "cotree evaluation produced an induced P4"
    return g


# =========================================================================
# exhaustive enumeration
# =========================================================================

def mask_to_graph(n: int, mask: int) -> Graph:
    """Graph from an edge mask in pair_order bit positions."""
    pairs = pair_order(n)
    if mask < 0 or mask >> len(pairs):
        raise ValueError(f"edge mask out of range for n = {n}")
    rows = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        m ^= low
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, validate=False)


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for i, (u, v) in enumerate(pair_order(g.n)):
        if g.adj[u] >> v & 1:
            mask |= 1 << i
    return mask


def enumerate_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All labeled graphs on n vertices in edge-mask order.

    start/stop restrict to a mask interval, which is how scans shard.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > 8:
        raise ValueError("exhaustive enumeration is capped at n = 8")
    space = 1 << (n * (n - 1) // 2)
    if stop is None:
        stop = space
    if not (0 <= start <= stop <= space):
        raise ValueError("mask interval out of range")
    for mask in range(start, stop):
        yield mask_to_graph(n, mask)


def head_catalog() -> dict[str, Graph]:
    """Small named heads used throughout the test grids."""
    return {
        "K1": standard("complete", 1),
        "K2": standard("complete", 2),
        "E2": standard("empty", 2),
        "E3": standard("empty", 3),
        "P3": standard("path", 3),
        "K3": standard("complete", 3),
        "P4": standard("path", 4),
        "C5": standard("cycle", 5),
    }
