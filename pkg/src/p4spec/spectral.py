"""Exact and numeric Laplacian spectra.

The exact path stays in arbitrary-precision integer arithmetic end to end:
characteristic polynomials come from the Faddeev-LeVerrier recurrence (every
division it performs is exact for integer matrices and is asserted so), and
integer eigenvalues are split off by synthetic division.  The numeric path is
a self-contained cyclic Jacobi eigensolver; no external linear algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graphs import Graph, bits, complement, disjoint_union


# =========================================================================
# integer polynomials, ascending coefficients
# =========================================================================

class IntPolynomial:
    """Polynomial with integer coefficients, stored ascending: coeffs[i] * x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = list(coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def __pow__(self, exp: int) -> "IntPolynomial":
        if exp < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __divmod__(self, den: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers; raises if a step is not exact."""
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        d = den.coeffs
        dd = len(d) - 1
        lead = d[-1]
        if len(num) - 1 < dd:
            return IntPolynomial([0]), IntPolynomial(num)
        q = [0] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if c == 0:
                continue
            if c % lead != 0:
                raise ValueError("division not exact over the integers")
            f = c // lead
            q[i - dd] = f
            for j, dj in enumerate(d):
                num[i - dd + j] -= f * dj
        return IntPolynomial(q), IntPolynomial(num[:dd] if dd else [0])

    def deflate(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by (x - root); returns (quotient, remainder)."""
        acc = 0
        out = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        return IntPolynomial(reversed(out)), rem

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def divides(den: IntPolynomial, num: IntPolynomial) -> bool:
    """True iff den divides num exactly over the integers."""
    if den.is_zero:
        return num.is_zero
    try:
        _, rem = divmod(num, den)
    except ValueError:
        return False
    return rem.is_zero


# =========================================================================
# integer matrices and the exact characteristic polynomial
# =========================================================================

class IntMatrix:
    """Square integer matrix, rows as tuples."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError("matrix is not square")

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"


def laplacian(g: Graph) -> IntMatrix:
    """Degree matrix minus adjacency matrix."""
    rows = []
    for v in range(g.n):
        adj = g.adj[v]
        row = [0] * g.n
        row[v] = adj.bit_count()
        for u in bits(adj):
            row[u] = -1
        rows.append(row)
    return IntMatrix(rows)


def char_poly(m: IntMatrix) -> IntPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence, exactly.

    The recurrence divides the trace of A*B_k by k at step k; for an integer
    matrix this is always exact, and we assert it rather than assume it.
    """
    n = m.n
    if n == 0:
        return IntPolynomial([1])
    a = [list(r) for r in m.rows]
    rng = range(n)
    c = [0] * (n + 1)
    c[n] = 1
    b = [row[:] for row in a]
    c[n - 1] = -sum(b[i][i] for i in rng)
    for k in range(2, n + 1):
        ck = c[n - k + 1]
        for i in rng:
            b[i][i] += ck
        nb = [[sum(ar[l] * b[l][j] for l in rng) for j in rng] for ar in a]
        b = nb
        t = sum(b[i][i] for i in rng)
        assert t % k == 0, "Faddeev-LeVerrier trace division must be exact"
        c[n - k] = -t // k
    return IntPolynomial(c)


# =========================================================================
# exact spectra
# =========================================================================

@dataclass(frozen=True)
class ExactSpectrum:
    """Integer eigenvalues with multiplicities plus the unfactored residual.

    integer_roots is sorted by eigenvalue, descending.  The residual is monic
    with no integer roots; degree 0 means the spectrum is fully integral.
    """

    integer_roots: tuple[tuple[int, int], ...]
    residual: IntPolynomial

    @property
    def is_integral(self) -> bool:
        return self.residual.degree == 0

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.integer_roots) + self.residual.degree

    def reconstruct(self) -> IntPolynomial:
        p = self.residual
        for root, mult in self.integer_roots:
            p = p * (IntPolynomial([-root, 1]) ** mult)
        return p

    def expanded(self) -> list[int]:
        """Integer eigenvalues repeated by multiplicity, descending."""
        out = []
        for root, mult in self.integer_roots:
            out.extend([root] * mult)
        return out


def extract_integer_roots(p: IntPolynomial, lo: int, hi: int) -> ExactSpectrum:
    """Split off every integer root of p in [lo, hi], with multiplicity."""
    if p.is_zero:
        raise ValueError("cannot extract roots of the zero polynomial")
    roots = []
    for r in range(lo, hi + 1):
        mult = 0
        while True:
            q, rem = p.deflate(r)
            if rem != 0:
                break
            p = q
            mult += 1
        if mult:
            roots.append((r, mult))
    roots.sort(key=lambda rm: -rm[0])
    return ExactSpectrum(tuple(roots), p)


def exact_spectrum(g: Graph) -> ExactSpectrum:
    """Exact Laplacian spectrum: integer eigenvalues plus residual factor.

    Integer roots are searched in [0, n].  That range is justified by the
    eigenvalue bound mu <= n; rather than assuming it we also assert, via the
    Gershgorin disc bound [0, 2*maxdeg], that the residual has no integer root
    above n.
    """
    p = char_poly(laplacian(g))
    spec = extract_integer_roots(p, 0, g.n)
    maxdeg = max((g.degree(v) for v in range(g.n)), default=0)
    for r in range(g.n + 1, 2 * maxdeg + 1):
        assert spec.residual(r) != 0, "Laplacian eigenvalue above n: bound violated"
    return spec


def is_l_integral(g: Graph) -> bool:
    """True iff every Laplacian eigenvalue of g is an integer."""
    return exact_spectrum(g).is_integral


# =========================================================================
# numeric spectra: cyclic Jacobi
# =========================================================================

_JACOBI_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


def _offdiag_norm(a: list[list[float]], n: int) -> float:
    s = 0.0
    for i in range(n):
        ai = a[i]
        for j in range(i + 1, n):
            s += ai[j] * ai[j]
    return math.sqrt(2.0 * s)


def jacobi_eigenvalues(sym: Sequence[Sequence[float]]) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps until the off-diagonal Frobenius norm drops below 1e-12, with a cap
    of 100 sweeps; raises ArithmeticError if the cap is hit.
    """
    n = len(sym)
    a = [[float(x) for x in row] for row in sym]
    for i, row in enumerate(a):
        if len(row) != n:
            raise ValueError("matrix is not square")
        for j in range(i):
            if abs(a[i][j] - a[j][i]) > 1e-9 * max(1.0, abs(a[i][j])):
                raise ValueError("matrix is not symmetric")
    if n <= 1:
        return [a[0][0]] if n else []
    for _ in range(_JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a, n) < _JACOBI_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip, aiq = a[i][p], a[i][q]
                    a[i][p] = a[p][i] = c * aip - s * aiq
                    a[i][q] = a[q][i] = s * aip + c * aiq
    else:
        raise ArithmeticError("Jacobi sweep cap reached without convergence")
    return sorted(a[i][i] for i in range(n))


def numeric_spectrum(g: Graph, tol: float = 1e-9) -> list[float]:
    """All Laplacian eigenvalues, ascending, each within tol of a true one."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if tol < _JACOBI_TOL:
        raise ValueError(f"tol below the solver resolution of {_JACOBI_TOL}")
    return jacobi_eigenvalues([[float(x) for x in row]
                               for row in laplacian(g).rows])


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                tol: float = 1e-12) -> float:
    """Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError("no sign change on the bracket")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (fhi > 0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2.0


# =========================================================================
# closed-form spider spectra
# =========================================================================

@dataclass(frozen=True)
class SurdEigenvalue:
    """The exact value (p + 2 + sign*sqrt(q)) / 2 with q a non-square."""

    p: int
    q: int
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        if self.q <= 0 or math.isqrt(self.q) ** 2 == self.q:
            raise ValueError(f"q = {self.q} must be a positive non-square")

    def value(self) -> float:
        return (self.p + 2 + self.sign * math.sqrt(self.q)) / 2.0

    def conjugate(self) -> "SurdEigenvalue":
        return SurdEigenvalue(self.p, self.q, -self.sign)

    def pair_quadratic(self) -> IntPolynomial:
        """Monic quadratic with this surd and its conjugate as roots."""
        a = self.p + 2
        num = a * a - self.q
        assert num % 4 == 0, "surd pair does not have an integer quadratic"
        return IntPolynomial([num // 4, -a, 1])

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.p + 2}{op}sqrt({self.q}))/2"


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Spectrum entries (value, multiplicity); values are ints or surd pairs."""

    entries: tuple[tuple[int | SurdEigenvalue, int], ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> list[float]:
        """All eigenvalues as floats, ascending, repeated by multiplicity."""
        out: list[float] = []
        for val, mult in self.entries:
            x = float(val) if isinstance(val, int) else val.value()
            out.extend([x] * mult)
        return sorted(out)

    def char_poly(self) -> IntPolynomial:
        """Expand to the monic integer polynomial with these roots.

        Surds must occur in conjugate pairs of equal multiplicity, which is
        what makes the product integral.
        """
        p = IntPolynomial([1])
        surds: dict[tuple[int, int], dict[int, int]] = {}
        for val, mult in self.entries:
            if isinstance(val, int):
                p = p * (IntPolynomial([-val, 1]) ** mult)
            else:
                surds.setdefault((val.p, val.q), {}).setdefault(val.sign, 0)
                surds[(val.p, val.q)][val.sign] += mult
        for (pp, qq), by_sign in surds.items():
            if by_sign.get(1, 0) != by_sign.get(-1, 0):
                raise ValueError("surd eigenvalues must pair up by conjugates")
            quad = SurdEigenvalue(pp, qq, 1).pair_quadratic()
            p = p * (quad ** by_sign[1])
        return p

    def __str__(self) -> str:
        parts = []
        for val, mult in self.entries:
            s = str(val)
            parts.append(s if mult == 1 else f"{s} x{mult}")
        return "{" + ", ".join(parts) + "}"


def thin_spider_closed_form(k: int, head_size: int) -> ClosedFormSpectrum:
    """Laplacian spectrum of a thin spider with an edgeless head, in closed form.

    k is the number of legs (= clique size), head_size the number of head
    vertices; the head must be edgeless for these formulas.  All surds stay
    exact: (p + 2 +- sqrt(q)) / 2 with p = k + head_size.
    """
    if k < 2:
        raise ValueError("a spider needs k >= 2")
    if head_size < 0:
        raise ValueError("head_size must be nonnegative")
    j = head_size
    p = k + j
    entries: list[tuple[int | SurdEigenvalue, int]] = []
    if j == 0:
        q = k * k + 4
        entries.append((SurdEigenvalue(k, q, 1), k - 1))
        entries.append((SurdEigenvalue(k, q, -1), k - 1))
        entries.append((2, 1))
        entries.append((0, 1))
    else:
        q1 = p * p + 4
        q2 = p * p + 4 - 4 * k
        entries.append((SurdEigenvalue(p, q1, 1), k - 1))
        entries.append((SurdEigenvalue(p, q1, -1), k - 1))
        if j >= 2:
            entries.append((k, j - 1))
        entries.append((SurdEigenvalue(p, q2, 1), 1))
        entries.append((SurdEigenvalue(p, q2, -1), 1))
        entries.append((0, 1))
    spec = ClosedFormSpectrum(tuple(entries))
    assert spec.total_multiplicity == 2 * k + j
    return spec


def quotient_matrix(k: int, j: int) -> IntMatrix:
    """3x3 quotient of the thin-spider Laplacian over (body, legs, head) parts.

    Valid for k >= 2 legs and j >= 1 edgeless head vertices.  The partition is
    equitable, so the quotient's characteristic polynomial divides the full
    Laplacian characteristic polynomial exactly.
    """
    if k < 2:
        raise ValueError("a spider needs k >= 2")
    if j < 1:
        raise ValueError("the quotient needs a nonempty head")
    m = IntMatrix([[j + 1, -1, -j],
                   [-1, 1, 0],
                   [-k, 0, k]])
    assert m.row_sums() == (0, 0, 0)
    return m


# =========================================================================
# spectral relations
# =========================================================================

def check_complement_relation(g: Graph, tol: float = 1e-8) -> bool:
    """Numeric check of the complement spectrum relation.

    With mu_1 <= ... <= mu_n the Laplacian eigenvalues of g, the complement's
    eigenvalues are 0 together with n - mu_n, ..., n - mu_2.
    """
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    mu = numeric_spectrum(g)
    expected = sorted([0.0] + [g.n - x for x in mu[1:]])
    actual = numeric_spectrum(complement(g))
    return all(abs(a - e) <= tol for a, e in zip(actual, expected))


def check_union_relation(g: Graph, h: Graph) -> bool:
    """Exact check: char poly of a disjoint union is the product of the parts'."""
    lhs = char_poly(laplacian(disjoint_union(g, h)))
    rhs = char_poly(laplacian(g)) * char_poly(laplacian(h))
    return lhs == rhs
