"""Gale duals, face counts of simplicial polytopes, and minimal embracing subsets
of planar multisets.

For n points in general position in R^d, an i-face of their convex hull is a
set I of i+1 points whose complement in the Gale dual (n points in R^{n-d-1})
embraces the origin.  So f_i is a count of embracing (n-i-1)-subsets, which
the depth module computes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .depth import DepthConfig, embrace_profile
from .errors import DegenerateError, InputError
from .exact_core import as_point, binomial, integer_direction


@dataclass(frozen=True)
class LegalMatrix:
    rows: tuple  # n rows of d Fractions, centroid at the origin
    shift: tuple  # the translation that was applied

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class GaleConfiguration:
    primal: LegalMatrix
    dual: tuple  # n rows of n-d-1 integers

    @property
    def dual_points(self) -> tuple:
        return self.dual


@dataclass(frozen=True)
class FVector:
    entries: tuple  # (f_-1, f_0, ..., f_{d-1})

    def __getitem__(self, i: int) -> int:
        return self.entries[i + 1]

    def euler_ok(self) -> bool:
        d = len(self.entries) - 1
        return sum((-1) ** i * self.entries[i + 1] for i in range(d)) == 1 - (-1) ** d


# ---------------------------------------------------------------- algebra


def _rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(map(Fraction, r)) for r in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def legalize(points: Sequence) -> LegalMatrix:
    """Translate the centroid to the origin and check that the points span R^d."""
    pts = [as_point(p) for p in points]
    if not pts:
        raise InputError("no points")
    n, d = len(pts), len(pts[0])
    if any(len(p) != d for p in pts):
        raise InputError("points of mixed dimension")
    if n <= d:
        raise InputError(f"need more than d={d} points")
    centroid = tuple(sum(p[i] for p in pts) / n for i in range(d))
    rows = tuple(tuple(p[i] - centroid[i] for i in range(d)) for p in pts)
    _, piv = _rref(rows)
    if len(piv) < d:
        raise InputError("rank-deficient: the points lie in a hyperplane")
    return LegalMatrix(rows, centroid)


def gale_dual(A: LegalMatrix) -> GaleConfiguration:
    """Integer basis B of the null space of (A, 1)^T, one row per point.

    Eliminating (A, 1)^T puts it in the form (I, R) after a column
    permutation; the null space is then spanned by (-R; I).
    """
    n, d = A.n, A.d
    M = [[row[i] for row in A.rows] for i in range(d)] + [[Fraction(1)] * n]
    R, pivots = _rref(M)
    if len(pivots) != d + 1:
        raise InputError("rank-deficient matrix")
    free = [c for c in range(n) if c not in pivots]
    columns = []
    for f in free:
        col = [Fraction(0)] * n
        col[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            col[pc] = -R[i][f]
        columns.append(col)
    int_cols = []
    for col in columns:
        scale = math.lcm(*(x.denominator for x in col))
        ints = [int(x * scale) for x in col]
        g = math.gcd(*ints)
        int_cols.append([x // g for x in ints])
    dual = tuple(tuple(col[i] for col in int_cols) for i in range(n))
    return GaleConfiguration(A, dual)


def check_orthogonal(G: GaleConfiguration) -> bool:
    A, B = G.primal.rows, G.dual
    m = len(B[0]) if B else 0
    for j in range(m):
        if sum(B[i][j] for i in range(len(B))) != 0:
            return False
        for c in range(G.primal.d):
            if sum(A[i][c] * B[i][j] for i in range(len(B))) != 0:
                return False
    _, piv = _rref([[B[i][j] for i in range(len(B))] for j in range(m)]) if m else (None, [])
    return len(piv) == m


# ------------------------------------------------------------- face counts


def f_vector(points: Sequence, config: DepthConfig = DepthConfig()) -> FVector:
    """(f_-1, ..., f_{d-1}) of the simplicial polytope spanned by general-position points."""
    A = legalize(points)
    n, d = A.n, A.d
    m = n - d - 1
    if m == 0:
        return FVector((1,) + tuple(binomial(d + 1, i + 1) for i in range(d)))
    G = gale_dual(A)
    zero = (0,) * m
    try:
        profile = embrace_profile(G.dual, zero, config)
    except DegenerateError as exc:
        raise DegenerateError(f"points are not in general position ({exc})") from None
    return FVector((1,) + tuple(profile[n - i - 1] for i in range(d)))


def facet_count(points: Sequence, config: DepthConfig = DepthConfig()) -> int:
    return f_vector(points, config).entries[-1]


# ------------------------------------------------- planar multisets (k = 3)


@dataclass(frozen=True)
class DirectedMultiset:
    """Distinct ray directions (primitive integer vectors) with multiplicities.

    l, r count points strictly left/right of the line through the origin and
    the direction; o is the multiplicity of the opposite direction.
    """

    directions: tuple
    multiplicity: tuple
    lcount: tuple
    rcount: tuple
    opposite: tuple

    @property
    def n(self) -> int:
        return sum(self.multiplicity)


def _primitive(v: tuple) -> tuple:
    x, y = integer_direction(v)
    g = math.gcd(x, y)
    return (x // g, y // g)


def project_to_circle(points: Sequence) -> DirectedMultiset:
    """Group planar points by their ray from the origin."""
    counts: dict[tuple, int] = {}
    order = []
    for p in points:
        q = as_point(p)
        if len(q) != 2:
            raise InputError("multisets are planar")
        if q == (0, 0):
            raise InputError("point at the origin")
        key = _primitive(q)
        if key not in counts:
            order.append(key)
            counts[key] = 0
        counts[key] += 1
    dirs = tuple(order)
    mult = tuple(counts[h] for h in dirs)
    ls, rs, os_ = [], [], []
    for h in dirs:
        l = r = 0
        for g, c in zip(dirs, mult):
            cross = h[0] * g[1] - h[1] * g[0]
            if cross > 0:
                l += c
            elif cross < 0:
                r += c
        ls.append(l)
        rs.append(r)
        os_.append(counts.get((-h[0], -h[1]), 0))
    return DirectedMultiset(dirs, mult, tuple(ls), tuple(rs), tuple(os_))


def _as_multiset(M) -> DirectedMultiset:
    return M if isinstance(M, DirectedMultiset) else project_to_circle(M)


def minimal_pairs(M) -> int:
    """Minimal embracing subsets of size two (antipodal pairs)."""
    M = _as_multiset(M)
    total = sum(m * o for m, o in zip(M.multiplicity, M.opposite))
    return total // 2


def proper_triangles(M) -> int:
    """Triples of points on three distinct rays."""
    M = _as_multiset(M)
    n = M.n
    total = sum(m * (n - m) * (n - 2 * m) for m in M.multiplicity)
    return total // 6


def minimal_triangles(M) -> int:
    """Minimal embracing subsets of size three."""
    M = _as_multiset(M)
    s = sum(m * l * r for m, l, r in zip(M.multiplicity, M.lcount, M.rcount))
    value = Fraction(s - proper_triangles(M), 2)
    assert value.denominator == 1
    return int(value)


def minimal_embracing_count(M) -> int:
    """Number of minimal subsets whose closed convex hull contains the origin."""
    M = _as_multiset(M)
    n = M.n
    total = Fraction(0)
    for m, l, r, o in zip(M.multiplicity, M.lcount, M.rcount, M.opposite):
        total += m * (l * r + o - Fraction((n - m) * (n - 2 * m), 6))
    total /= 2
    assert total.denominator == 1
    value = int(total)
    assert value == minimal_pairs(M) + minimal_triangles(M)
    return value
