"""Counting origin-embracing k-subsets and simplicial depth in R^d.

The count in R^d is reduced to a count in R^{d-2}: choose a generic 2-flat psi
through the origin, project along it, and correct for the sets that embrace
the origin only after projection.  Those are charged to the (d-1)-tuples
whose hull meets psi, each with the number of remaining points on either side
of the hyperplane through the origin and the tuple.  Base cases are d = 1
(points on a line) and d = 2 (a radial sweep).
"""
from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DegenerateError, FlatRetryExhausted, InputError
from .exact_core import as_point, binomial, det, halfplane_left_counts, integer_direction

MAX_FLAT_ATTEMPTS = 64
FLAT_RANGE = 2**16


@dataclass(frozen=True)
class DepthConfig:
    seed: int = 0
    max_attempts: int = MAX_FLAT_ATTEMPTS
    method: str = "auto"  # "fast" or "naive" for the d = 3 tuple counts; auto picks fast


@dataclass(frozen=True)
class EmbraceQuery:
    points: tuple
    query: tuple
    k: int

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.points)
        q = as_point(self.query)
        if not pts:
            raise InputError("no points")
        d = len(q)
        if d < 1 or any(len(p) != d for p in pts):
            raise InputError("all points must share the dimension of the query point")
        if not isinstance(self.k, int) or self.k < 0:
            raise InputError("k must be a non-negative integer")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "query", q)

    @property
    def d(self) -> int:
        return len(self.query)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ProjectionStep:
    flat_basis: tuple  # two integer d-vectors spanning psi
    projection_map: tuple  # (d-2) x d integer rows whose kernel is psi
    tuple_stats: tuple | None = None  # ((rho, l, r), ...) for tuples whose hull meets psi


class _Retry(Exception):
    """The sampled flat is not generic for this input."""


# ------------------------------------------------------------ preparation


def _directions(points: Sequence, w: Sequence) -> list[tuple]:
    """Integer direction vectors h - w; only directions matter for embracing."""
    out = []
    for p in points:
        v = tuple(a - b for a, b in zip(p, w))
        if all(c == 0 for c in v):
            raise DegenerateError("a point coincides with the query point")
        out.append(integer_direction(v))
    return out


def _null_space(rows: Sequence[Sequence[int]], d: int) -> list[tuple]:
    """Integer basis of {x : row . x = 0 for all rows}."""
    m = [[Fraction(c) for c in r] for r in rows]
    pivots = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(d) if c not in pivots):
        vec = [Fraction(0)] * d
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][free]
        basis.append(integer_direction(vec))
    return basis


def _sample_flat(rng: random.Random, d: int) -> tuple[tuple, tuple] | None:
    a = tuple(rng.randint(-FLAT_RANGE, FLAT_RANGE) for _ in range(d))
    b = tuple(rng.randint(-FLAT_RANGE, FLAT_RANGE) for _ in range(d))
    M = _null_space([a, b], d)
    if len(M) != d - 2:
        return None  # a and b dependent
    return (a, b), tuple(M)


def _project(M: Sequence[tuple], vecs: Sequence[tuple]) -> list[tuple]:
    return [tuple(sum(r[i] * v[i] for i in range(len(v))) for r in M) for v in vecs]


def _check_projection(proj: Sequence[tuple]) -> None:
    """Every (d-2)-subset of the projected points must be linearly independent."""
    e = len(proj[0]) if proj else 0
    if any(all(c == 0 for c in p) for p in proj):
        raise _Retry("a point lies in the flat")
    if e == 1:
        return
    if e == 2:
        seen = set()
        for v in proj:
            x, y = integer_direction(v)
            g = gcd(x, y)
            x, y = x // g, y // g
            if x < 0 or (x == 0 and y < 0):
                x, y = -x, -y
            if (x, y) in seen:
                raise _Retry("two projected points are parallel")
            seen.add((x, y))
        return
    for sub in combinations(proj, e):
        if det(sub) == 0:
            raise _Retry("projected points are linearly dependent")


def _origin_strictly_inside(vecs: Sequence[tuple]) -> bool:
    """True iff 0 is interior to the simplex spanned by e+1 points of R^e."""
    e = len(vecs[0])
    cols = list(vecs)
    signs = set()
    for i in range(e + 1):
        minor = [[cols[j][r] for j in range(e + 1) if j != i] for r in range(e)]
        c = det(minor) * (-1) ** i
        if c == 0:
            raise _Retry("a tuple meets the flat non-transversally")
        signs.add(c > 0)
        if len(signs) > 1:
            return False
    return True


def _crossing_tuples(proj: Sequence[tuple], d: int) -> Iterator[tuple]:
    for rho in combinations(range(len(proj)), d - 1):
        if _origin_strictly_inside([proj[i] for i in rho]):
            yield rho


# ------------------------------------------------------------ tuple counts


def _side_counts(vecs: Sequence[tuple], rho: Sequence[int]) -> tuple[int, int]:
    rows = [vecs[i] for i in rho]
    l = r = 0
    members = set(rho)
    for x, v in enumerate(vecs):
        if x in members:
            continue
        s = det(rows + [v])
        if s == 0:
            raise DegenerateError("d points span a hyperplane through the query point")
        if s > 0:
            l += 1
        else:
            r += 1
    return l, r


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _anchor_left_counts(vecs: Sequence[tuple], anchor: int) -> dict[int, int]:
    """For every x != anchor: number of y with det(anchor, x, y) > 0 (d = 3)."""
    a = vecs[anchor]
    axis = min(range(3), key=lambda i: abs(a[i]))
    e = [0, 0, 0]
    e[axis] = 1
    u = _cross3(a, e)
    v = _cross3(a, u)
    others = [i for i in range(len(vecs)) if i != anchor]
    planar = [(_dot(u, vecs[i]), _dot(v, vecs[i])) for i in others]
    if any(p == (0, 0) for p in planar):
        raise DegenerateError("two points collinear with the query point")
    try:
        left = halfplane_left_counts(planar)
    except DegenerateError:
        raise DegenerateError("three points coplanar with the query point") from None
    return dict(zip(others, left))


def _stats_d3_fast(vecs: Sequence[tuple], proj: Sequence[tuple]) -> list[tuple]:
    n = len(vecs)
    B = [i for i in range(n) if proj[i][0] > 0]
    W = [i for i in range(n) if proj[i][0] < 0]
    anchors, others = (B, W) if len(B) <= len(W) else (W, B)
    out = []
    for a in anchors:
        left = _anchor_left_counts(vecs, a)
        for x in others:
            l = left[x]
            rho = (a, x) if a < x else (x, a)
            if rho[0] != a:
                l = n - 2 - l  # det(x, a, y) = -det(a, x, y)
            out.append((rho, l, n - 2 - l))
    return out


def _stats_naive(vecs: Sequence[tuple], proj: Sequence[tuple], d: int) -> list[tuple]:
    out = []
    for rho in _crossing_tuples(proj, d):
        l, r = _side_counts(vecs, rho)
        out.append((rho, l, r))
    return out


def _tuple_stats(vecs, proj, d, method):
    if d == 3 and method != "naive":
        return _stats_d3_fast(vecs, proj)
    return _stats_naive(vecs, proj, d)


def tuple_halfspace_counts(points: Sequence, step: ProjectionStep, w=None,
                           method: str = "auto") -> list[tuple]:
    """[(rho, l(rho), r(rho))] over (d-1)-tuples whose convex hull meets the flat.

    ``w`` defaults to the origin.
    """
    pts = [as_point(p) for p in points]
    d = len(pts[0])
    w = as_point(w) if w is not None else (0,) * d
    vecs = _directions(pts, w)
    proj = _project(step.projection_map, vecs)
    try:
        _check_projection(proj)
        return _tuple_stats(vecs, proj, d, method)
    except _Retry as exc:
        raise DegenerateError(f"flat is not generic for this input: {exc}") from None


# -------------------------------------------------------------- recursion


def _profile(vecs: list[tuple], d: int, rng: random.Random, config: DepthConfig) -> list[int]:
    """[embr_0, ..., embr_n] for integer directions in R^d (origin as query)."""
    n = len(vecs)
    out = [0] * (n + 1)
    if d == 1:
        pos = sum(1 for v in vecs if v[0] > 0)
        neg = n - pos
        for k in range(2, n + 1):
            out[k] = binomial(n, k) - binomial(pos, k) - binomial(neg, k)
        return out
    if d == 2:
        left = halfplane_left_counts(vecs)
        for k in range(3, n + 1):
            out[k] = binomial(n, k) - sum(binomial(l, k - 1) for l in left)
        return out
    return _profile_checked(vecs, d, rng, config)


def embrace_profile(points: Sequence, w, config: DepthConfig = DepthConfig()) -> list[int]:
    """[embr_0, ..., embr_n]: k-subsets whose convex hull contains w, for every k."""
    pts = [as_point(p) for p in points]
    w = as_point(w)
    d = len(w)
    if d < 1 or any(len(p) != d for p in pts):
        raise InputError("dimension mismatch")
    vecs = _directions(pts, w)
    rng = random.Random(config.seed)
    return _profile(vecs, d, rng, config)


def _profile_checked(vecs, d, rng, config):
    # degeneracies found while counting at this level are input errors; those
    # found inside the projected subproblem only disqualify the flat
    for _ in range(config.max_attempts):
        sample = _sample_flat(rng, d)
        if sample is None:
            continue
        _, M = sample
        proj = _project(M, vecs)
        try:
            _check_projection(proj)
            stats = _tuple_stats(vecs, proj, d, config.method)
        except _Retry:
            continue
        try:
            base = _profile(proj, d - 2, rng, config)
        except (_Retry, DegenerateError):
            continue
        return _combine(base, stats, len(vecs), d)
    raise FlatRetryExhausted(
        f"no generic 2-flat found in {config.max_attempts} attempts (input may be degenerate)")


def _combine(base: list[int], stats: list[tuple], n: int, d: int) -> list[int]:
    hist: dict[int, int] = {}
    for _, l, _r in stats:
        hist[l] = hist.get(l, 0) + 1
    m = n - d + 1
    out = [0] * (n + 1)
    for k in range(d + 1, n + 1):
        t = k - d + 1
        corr = sum(c * (binomial(l, t) + binomial(m - l, t)) for l, c in hist.items())
        assert corr % 2 == 0
        out[k] = base[k] - corr // 2
    return out


def embrace_count(q: EmbraceQuery, config: DepthConfig = DepthConfig()) -> int:
    """Number of k-subsets of the points whose convex hull contains the query point."""
    if q.k > q.n or q.k <= q.d:
        # still validate general position cheaply for the trivial range
        _directions(q.points, q.query)
        return 0
    return embrace_profile(q.points, q.query, config)[q.k]


def simplicial_depth(points: Sequence, w, config: DepthConfig = DepthConfig()) -> int:
    """Number of (d+1)-subsets whose simplex contains w."""
    q = EmbraceQuery(tuple(points), tuple(w), len(tuple(w)) + 1)
    return embrace_count(q, config)


def choose_generic_flat(points: Sequence, d: int | None = None, seed: int = 0, w=None,
                        with_stats: bool = True, max_attempts: int = MAX_FLAT_ATTEMPTS,
                        method: str = "auto") -> ProjectionStep:
    """First seeded 2-flat through w that is generic for the points."""
    pts = [as_point(p) for p in points]
    if d is None:
        d = len(pts[0])
    if d < 3:
        raise InputError("a projection flat is only needed for d >= 3")
    w = as_point(w) if w is not None else (0,) * d
    vecs = _directions(pts, w)
    rng = random.Random(seed)
    for _ in range(max_attempts):
        sample = _sample_flat(rng, d)
        if sample is None:
            continue
        basis, M = sample
        proj = _project(M, vecs)
        try:
            _check_projection(proj)
            stats = _tuple_stats(vecs, proj, d, method) if with_stats else None
        except _Retry:
            continue
        return ProjectionStep(basis, M, tuple(stats) if stats is not None else None)
    raise FlatRetryExhausted(f"no generic 2-flat found in {max_attempts} attempts")


# ------------------------------------------------------- frequency vectors


def frequency_vector_d(points: Sequence, w) -> tuple:
    """F_i = number of (d-1)-tuples rho with |l(rho) - r(rho)| = i."""
    pts = [as_point(p) for p in points]
    w = as_point(w)
    d = len(w)
    n = len(pts)
    if d < 2:
        raise InputError("frequency vectors need d >= 2")
    if n < d - 1:
        raise InputError("need at least d-1 points")
    vecs = _directions(pts, w)
    m = n - d + 1
    F = [0] * (m + 1)
    if d == 2:
        for l in halfplane_left_counts(vecs):
            F[abs(2 * l - m)] += 1
        return tuple(F)
    if d == 3:
        for a in range(n):
            left = _anchor_left_counts(vecs, a)
            for x, l in left.items():
                if x > a:
                    F[abs(2 * l - m)] += 1
        return tuple(F)
    for rho in combinations(range(n), d - 1):
        l, r = _side_counts(vecs, rho)
        F[abs(l - r)] += 1
    return tuple(F)
