"""Induced-P4 structure: enumeration, recognition of P4-flavored classes.

A 4-set induces a P4 exactly when it spans 3 edges with in-set degrees
{1, 1, 2, 2}; the checks below all reduce to that test on bitmask rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, bits, complement, mask_of
from .spectral import ExactSpectrum, exact_spectrum


@lru_cache(maxsize=None)
def _quads(n: int) -> tuple[tuple[int, tuple[int, int, int, int]], ...]:
    return tuple((mask_of(q), q) for q in itertools.combinations(range(n), 4))


@lru_cache(maxsize=None)
def _subset_masks(n: int, q: int) -> tuple[int, ...]:
    return tuple(mask_of(s) for s in itertools.combinations(range(n), q))


def _is_p4_quad(adj: tuple[int, ...], qm: int, a: int, b: int, c: int, d: int) -> bool:
    da = (adj[a] & qm).bit_count()
    db = (adj[b] & qm).bit_count()
    dc = (adj[c] & qm).bit_count()
    dd = (adj[d] & qm).bit_count()
    # degree multiset {1,1,2,2} is the only one with sum 6 and product 4
    return da + db + dc + dd == 6 and da * db * dc * dd == 4


def enumerate_p4(g: Graph) -> list[tuple[tuple[int, int, int, int], int]]:
    """All induced P4s as (path, vertex mask), one entry per vertex set.

    The path is ordered a-b-c-d along the edges with a < d, so each P4 has a
    single canonical orientation.
    """
    adj = g.adj
    out = []
    for qm, (a, b, c, d) in _quads(g.n):
        if _is_p4_quad(adj, qm, a, b, c, d):
            ends = []
            for v in (a, b, c, d):
                if (adj[v] & qm).bit_count() == 1:
                    ends.append(v)
            a0 = min(ends)
            d0 = max(ends)
            b0 = (adj[a0] & qm).bit_length() - 1
            c0 = (qm ^ (1 << a0) ^ (1 << b0) ^ (1 << d0)).bit_length() - 1
            out.append(((a0, b0, c0, d0), qm))
    return out


def p4_count(g: Graph) -> int:
    return len(enumerate_p4(g))


# =========================================================================
# cographs
# =========================================================================

def is_cograph(g: Graph) -> bool:
    """True iff g has no induced P4.

    Uses the recursive characterization (every induced subgraph with at least
    two vertices is disconnected or has a disconnected complement) rather than
    scanning 4-sets; the two definitions agree and tests hold them together.
    """
    adj = g.adj

    def co_components(mask: int) -> list[int]:
        comps = []
        left = mask
        while left:
            v = left & -left
            comp = 0
            frontier = v
            while frontier:
                comp |= frontier
                nxt = 0
                for u in bits(frontier):
                    nxt |= ~adj[u] & mask & ~(1 << u)
                frontier = nxt & ~comp
            comps.append(comp)
            left &= ~comp
        return comps

    def components(mask: int) -> list[int]:
        comps = []
        left = mask
        while left:
            v = left & -left
            comp = 0
            frontier = v
            while frontier:
                comp |= frontier
                nxt = 0
                for u in bits(frontier):
                    nxt |= adj[u] & mask
                frontier = nxt & ~comp
            comps.append(comp)
            left &= ~comp
        return comps

    def check(mask: int) -> bool:
        if mask.bit_count() <= 3:
            return True  # a P4 needs 4 vertices
        comps = components(mask)
        if len(comps) > 1:
            return all(check(c) for c in comps)
        cocomps = co_components(mask)
        if len(cocomps) == 1:
            return False
        return all(check(c) for c in cocomps)

    return check(g.full_mask)


# =========================================================================
# (q, t) classes
# =========================================================================

def satisfies_q_t(g: Graph, q: int, t: int) -> bool:
    """True iff every q-subset of vertices induces at most t P4s.

    Vacuously true when q exceeds the vertex count.
    """
    if q < 4:
        raise ValueError("q must be at least 4")
    if t < 0:
        raise ValueError("t must be nonnegative")
    p4masks = [m for _, m in enumerate_p4(g)]
    if len(p4masks) <= t or q > g.n:
        return True
    for sm in _subset_masks(g.n, q):
        count = 0
        for m in p4masks:
            if m & ~sm == 0:
                count += 1
                if count > t:
                    return False
    return True


def is_p4_sparse(g: Graph) -> bool:
    """True iff no 5 vertices induce more than one P4."""
    return satisfies_q_t(g, 5, 1)


def is_p4_extendible(g: Graph) -> bool:
    """True iff every induced P4 has at most one extension vertex.

    A vertex x outside a P4 on vertex set W extends W when x lies on some
    induced P4 that shares vertices with W.  Reading "some vertices" as
    "exactly three" admits graphs (the net, for one) that break the
    exactly-one structure theorem, so the overlap is any nonempty one.
    """
    masks = [wm for _, wm in enumerate_p4(g)]
    for wm in masks:
        outside = 0
        for m in masks:
            if m & wm:
                outside |= m & ~wm
                if outside & (outside - 1):
                    return False
    return True


def is_p4_reducible(g: Graph) -> bool:
    """True iff g is both P4-sparse and P4-extendible."""
    return is_p4_sparse(g) and is_p4_extendible(g)


def is_p4_connected(g: Graph) -> bool:
    """True iff every vertex bipartition is crossed by some induced P4.

    Equivalent union-find form: the induced P4 vertex sets merge all of V into
    one class.  Graphs on fewer than two vertices are not p4-connected.
    """
    if g.n < 2:
        return False
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    covered = 0
    for _, wm in enumerate_p4(g):
        vs = list(bits(wm))
        covered |= wm
        r = find(vs[0])
        for v in vs[1:]:
            parent[find(v)] = r
    if covered != g.full_mask:
        return False
    root = find(0)
    return all(find(v) == root for v in range(1, g.n))


# =========================================================================
# spiders
# =========================================================================

@dataclass(frozen=True)
class SpiderSpec:
    """Spider partition: legs (stable set), body (clique), optional head."""

    kind: str  # "thin" or "thick"
    legs: tuple[int, ...]
    body: tuple[int, ...]
    head: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.legs)

    def verify(self, g: Graph) -> bool:
        """Check this partition actually witnesses a spider in g."""
        legs_m = mask_of(self.legs)
        body_m = mask_of(self.body)
        head_m = mask_of(self.head)
        if legs_m | body_m | head_m != g.full_mask:
            return False
        if legs_m & body_m or legs_m & head_m or body_m & head_m:
            return False
        k = len(self.legs)
        if k < 2 or len(self.body) != k:
            return False
        for c in self.body:
            if g.adj[c] & body_m != body_m ^ (1 << c):
                return False  # body must be a clique
        for r in self.head:
            if g.adj[r] & body_m != body_m or g.adj[r] & legs_m:
                return False  # head joins the body, avoids the legs
        partners = 0
        for s in self.legs:
            row = g.adj[s]
            if self.kind == "thin":
                inside = row & body_m
                if row != inside or inside.bit_count() != 1:
                    return False
            elif self.kind == "thick":
                missing = body_m & ~row
                if row & ~body_m or missing.bit_count() != 1:
                    return False
                inside = missing
            else:
                return False
            if partners & inside:
                return False  # the leg/body pairing must be a bijection
            partners |= inside
        return partners == body_m

    def to_dict(self) -> dict:
        return {"kind": self.kind, "legs": list(self.legs),
                "body": list(self.body), "head": list(self.head)}


def _thin_witness(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None:
    """Partition of g as a thin spider, if one exists.

    In a thin spider the legs are exactly the degree-1 vertices, so the
    candidate partition is forced and the check is linear in edges.
    """
    n = g.n
    if n < 4:
        return None
    legs_m = 0
    for v in range(n):
        if g.adj[v].bit_count() == 1:
            legs_m |= 1 << v
    k = legs_m.bit_count()
    if k < 2:
        return None
    body_m = 0
    for s in bits(legs_m):
        c = g.adj[s]  # single bit: the leg's unique neighbor
        if c & legs_m or c & body_m:
            return None
        body_m |= c
    head_m = g.full_mask & ~legs_m & ~body_m
    for c in bits(body_m):
        if g.adj[c] & body_m != body_m ^ (1 << c):
            return None
    for r in bits(head_m):
        if g.adj[r] & body_m != body_m:
            return None
    return (tuple(bits(legs_m)), tuple(bits(body_m)), tuple(bits(head_m)))


def recognize_spider(g: Graph) -> SpiderSpec | None:
    """Recognize g as a thin or thick spider, thin preferred (they coincide
    at k = 2).

    Thick recognition goes through the complement: the complement of a thin
    spider is a thick spider on the same partition with legs and body swapped.
    """
    w = _thin_witness(g)
    if w is not None:
        return SpiderSpec("thin", *w)
    w = _thin_witness(complement(g))
    if w is not None:
        legs, body, head = w
        return SpiderSpec("thick", legs=body, body=legs, head=head)
    return None


# =========================================================================
# classification report
# =========================================================================

@dataclass(frozen=True)
class ClassificationReport:
    n: int
    m: int
    p4_count: int
    is_cograph: bool
    is_p4_sparse: bool
    is_p4_extendible: bool
    is_p4_reducible: bool
    is_p4_connected: bool
    spider: SpiderSpec | None
    l_integral: bool
    spectrum: ExactSpectrum

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p4_count": self.p4_count,
            "is_cograph": self.is_cograph,
            "is_p4_sparse": self.is_p4_sparse,
            "is_p4_extendible": self.is_p4_extendible,
            "is_p4_reducible": self.is_p4_reducible,
            "is_p4_connected": self.is_p4_connected,
            "spider": self.spider.to_dict() if self.spider else None,
            "l_integral": self.l_integral,
            "spectrum": {
                "integer_roots": [[v, m] for v, m in self.spectrum.integer_roots],
                "residual": list(self.spectrum.residual.coeffs),
            },
        }


def classify(g: Graph) -> ClassificationReport:
    """Full structural and spectral classification of g."""
    p4s = enumerate_p4(g)
    cog = is_cograph(g)
    assert cog == (not p4s), "recursive and P4-free cograph checks disagree"
    sparse = is_p4_sparse(g)
    extendible = is_p4_extendible(g)
    spec = exact_spectrum(g)
    return ClassificationReport(
        n=g.n,
        m=g.edge_count,
        p4_count=len(p4s),
        is_cograph=cog,
        is_p4_sparse=sparse,
        is_p4_extendible=extendible,
        is_p4_reducible=sparse and extendible,
        is_p4_connected=is_p4_connected(g),
        spider=recognize_spider(g),
        l_integral=spec.is_integral,
        spectrum=spec,
    )
