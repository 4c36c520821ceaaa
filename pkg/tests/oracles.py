"""Independent reference implementations used to pin expected values.

Everything here favors obviousness over speed: Fraction arithmetic,
exhaustive searches over orderings and partitions, textbook formulas.
Tests compare the package's fast paths against these.
"""

import itertools
from fractions import Fraction

from p4spec.graphs import Graph


def laplacian_rows(g: Graph) -> list[list[int]]:
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        rows[u][u] = g.degree(u)
        for v in range(n):
            if u != v and g.has_edge(u, v):
                rows[u][v] = -1
    return rows


def bareiss_det(matrix) -> int:
    """Fraction-free Gaussian elimination determinant, exact over ints."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(val, prev)
                assert r == 0
                m[i][j] = q
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def char_poly_coeffs(matrix) -> list[int]:
    """det(xI - M) by Bareiss evaluation at n+1 points plus Lagrange
    interpolation over Fraction; ascending coefficients."""
    n = len(matrix)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - matrix[i][j] for j in range(n)]
                   for i in range(n)]
        ys.append(bareiss_det(shifted))
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            denom *= xi - xj
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
        scale = Fraction(ys[i]) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return out


def p4_paths(g: Graph) -> dict:
    """frozenset of 4 vertices -> path order (a, b, c, d), a < d, for every
    4-subset whose induced subgraph is a path, found by trying all orderings."""
    found = {}
    for quad in itertools.combinations(range(g.n), 4):
        for perm in itertools.permutations(quad):
            a, b, c, d = perm
            if a > d:
                continue
            edges = {frozenset(p) for p in
                     itertools.combinations(quad, 2) if g.has_edge(*p)}
            want = {frozenset((a, b)), frozenset((b, c)), frozenset((c, d))}
            if edges == want:
                found[frozenset(quad)] = perm
                break
    return found


def is_cograph(g: Graph) -> bool:
    return not p4_paths(g)


def satisfies_q_t(g: Graph, q: int, t: int) -> bool:
    sets = list(p4_paths(g))
    if q > g.n:
        return True
    for sub in itertools.combinations(range(g.n), q):
        picked = set(sub)
        inside = sum(1 for w in sets if w <= picked)
        if inside > t:
            return False
    return True


def is_p4_extendible(g: Graph) -> bool:
    sets = list(p4_paths(g))
    for w in sets:
        ext = set()
        for other in sets:
            if other & w:
                ext |= other - w
        if len(ext) > 1:
            return False
    return True


def spider_kinds(g: Graph) -> set:
    """All kinds under which g is a spider, by exhaustive partition and
    bijection search."""
    n = g.n
    verts = set(range(n))
    kinds = set()
    for k in range(2, n // 2 + 1):
        for s in itertools.combinations(range(n), k):
            s_set = set(s)
            rest = verts - s_set
            for c in itertools.combinations(sorted(rest), k):
                c_set = set(c)
                r_set = rest - c_set
                if any(g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                    continue
                if not all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2)):
                    continue
                if not all(g.has_edge(u, v) for u in c_set for v in r_set):
                    continue
                if any(g.has_edge(u, v) for u in s_set for v in r_set):
                    continue
                for perm in itertools.permutations(c):
                    thin = all(g.has_edge(s[i], perm[j]) == (i == j)
                               for i in range(k) for j in range(k))
                    thick = all(g.has_edge(s[i], perm[j]) == (i != j)
                                for i in range(k) for j in range(k))
                    if thin:
                        kinds.add("thin")
                    if thick:
                        kinds.add("thick")
    return kinds


def is_p4_connected(g: Graph) -> bool:
    """Definitional check: every bipartition into two nonempty sides is
    crossed by an induced P4."""
    n = g.n
    if n < 2:
        return False
    sets = [w for w in p4_paths(g)]
    for amask in range(1, 1 << (n - 1)):
        a = {v for v in range(n) if amask >> v & 1}
        b = set(range(n)) - a
        if not any(w & a and w & b for w in sets):
            return False
    return True
