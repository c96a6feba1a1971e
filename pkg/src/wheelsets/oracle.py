"""Brute-force reference counts.  Intentionally naive and independent of the
formula modules: they only share the 2D turn predicate and parsing."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .errors import BoundExceeded, DegenerateError, InputError
from .exact_core import as_point, orient2d

GRAPH_BOUND = 10  # max number of points for the generic isomorphism search
STRUCTURED_BOUND = 12
EMBRACE_BOUND = 16
FACET_BOUND = 14

GRAPH_CLASSES = (
    "embracing_triangles",
    "spanning_cycles",
    "spanning_paths",
    "matchings",
    "spanning_trees",
    "triangulations",
    "convex_partitions",
)


def _int_points(points: Sequence) -> list[tuple]:
    pts = [as_point(p) for p in points]
    dens = [c.denominator for p in pts for c in p]
    s = math.lcm(*dens) if dens else 1
    return [tuple(int(c * s) for c in p) for p in pts]


# ------------------------------------------------------------ linear algebra


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; None if singular."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / pv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def strictly_embraces(simplex: Sequence[tuple], w: tuple) -> bool:
    """True iff w has all-positive barycentric coordinates in the (d+1)-point simplex."""
    d = len(w)
    matrix = [[Fraction(1)] * (d + 1)] + [[p[i] for p in simplex] for i in range(d)]
    lam = _solve(matrix, [Fraction(1)] + list(w))
    if lam is None:
        raise DegenerateError("singular barycentric system")
    if any(x == 0 for x in lam):
        raise DegenerateError("query point on a simplex boundary")
    return all(x > 0 for x in lam)


# ------------------------------------------------------------------ embrace


def embracing_simplices(points: Sequence, w) -> set[frozenset]:
    pts = [as_point(p) for p in points]
    w = as_point(w)
    d = len(w)
    return {frozenset(c) for c in combinations(range(len(pts)), d + 1)
            if strictly_embraces([pts[i] for i in c], w)}


def oracle_embrace(points: Sequence, w, k: int, bound: int = EMBRACE_BOUND) -> int:
    """Number of k-subsets whose convex hull contains w, by enumeration."""
    if len(points) > bound:
        raise BoundExceeded(f"{len(points)} points exceeds oracle bound {bound}")
    d = len(as_point(w))
    simplices = embracing_simplices(points, w)
    if k < d + 1:
        return 0
    if k == d + 1:
        return len(simplices)
    return sum(1 for A in combinations(range(len(points)), k)
               if any(frozenset(s) in simplices for s in combinations(A, d + 1)))


def oracle_embrace_profile(points: Sequence, w, bound: int = EMBRACE_BOUND) -> list[int]:
    """[embr_0, ..., embr_n] by enumeration."""
    n = len(points)
    if n > bound:
        raise BoundExceeded(f"{n} points exceeds oracle bound {bound}")
    d = len(as_point(w))
    simplices = embracing_simplices(points, w)
    out = [0] * (n + 1)
    for k in range(d + 1, n + 1):
        if k == d + 1:
            out[k] = len(simplices)
            continue
        out[k] = sum(1 for A in combinations(range(n), k)
                     if any(frozenset(s) in simplices for s in combinations(A, d + 1)))
    return out


def oracle_triangle_family(hull_points: Sequence, w) -> set[frozenset]:
    return embracing_simplices(hull_points, w)


# ------------------------------------------------------------------ facets


def oracle_facets(points: Sequence, bound: int = FACET_BOUND) -> list[tuple]:
    """All d-subsets with every other point strictly on one side of their hyperplane."""
    pts = [as_point(p) for p in points]
    n = len(pts)
    if n > bound:
        raise BoundExceeded(f"{n} points exceeds oracle bound {bound}")
    d = len(pts[0])
    facets = []
    for c in combinations(range(n), d):
        base = pts[c[0]]
        rows = [[pts[i][t] - base[t] for t in range(d)] for i in c[1:]]
        sides = set()
        for q in range(n):
            if q in c:
                continue
            m = rows + [[pts[q][t] - base[t] for t in range(d)]]
            s = _det_sign_naive(m)
            if s == 0:
                raise DegenerateError("d+1 points on a common hyperplane")
            sides.add(s)
        if len(sides) <= 1:
            facets.append(c)
    return facets


def _det_sign_naive(m: list[list[Fraction]]) -> int:
    a = [list(map(Fraction, r)) for r in m]
    n = len(a)
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        if a[col][col] < 0:
            sign = -sign
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return sign


def oracle_f_vector(points: Sequence) -> tuple:
    """(f_-1, f_0, ..., f_{d-1}) of a simplicial polytope from its facets."""
    d = len(as_point(points[0]))
    facets = oracle_facets(points)
    faces = [set() for _ in range(d)]
    for F in facets:
        for size in range(1, d + 1):
            faces[size - 1].update(combinations(F, size))
    return (1,) + tuple(len(f) for f in faces)


# ----------------------------------------------------------- planar graphs


class _Segments:
    """All segments between points with pairwise crossing bitmasks."""

    def __init__(self, int_points: Sequence[tuple]):
        self.pts = list(int_points)
        n = len(self.pts)
        self.edges = list(combinations(range(n), 2))
        self.index = {e: i for i, e in enumerate(self.edges)}
        m = len(self.edges)
        cross = [0] * m
        for a in range(m):
            for b in range(a + 1, m):
                if self._cross(self.edges[a], self.edges[b]):
                    cross[a] |= 1 << b
                    cross[b] |= 1 << a
        self.cross = cross

    def _cross(self, e, f) -> bool:
        if len({*e, *f}) < 4:
            return False
        p, q = self.pts[e[0]], self.pts[e[1]]
        r, s = self.pts[f[0]], self.pts[f[1]]
        o1, o2 = orient2d(p, q, r), orient2d(p, q, s)
        o3, o4 = orient2d(r, s, p), orient2d(r, s, q)
        if 0 in (o1, o2, o3, o4):
            raise DegenerateError("collinear points")
        return o1 != o2 and o3 != o4

    def edge(self, u, v) -> int:
        return self.index[(u, v) if u < v else (v, u)]


def _check_points(points, bound):
    pts = _int_points(points)
    if len(pts) > bound:
        raise BoundExceeded(f"{len(pts)} points exceeds oracle bound {bound}")
    for a, b, c in combinations(pts, 3):
        if orient2d(a, b, c) == 0:
            raise DegenerateError("three collinear points")
    return pts


def count_matchings(points: Sequence) -> int:
    segs = _Segments(_check_points(points, STRUCTURED_BOUND))
    n = len(segs.pts)

    def rec(used: int, chosen: int) -> int:
        v = next((i for i in range(n) if not used >> i & 1), None)
        if v is None:
            return 1
        total = rec(used | 1 << v, chosen)
        for u in range(v + 1, n):
            if used >> u & 1:
                continue
            e = segs.edge(v, u)
            if segs.cross[e] & chosen:
                continue
            total += rec(used | 1 << v | 1 << u, chosen | 1 << e)
        return total

    return rec(0, 0)


def count_spanning_trees(points: Sequence) -> int:
    segs = _Segments(_check_points(points, STRUCTURED_BOUND))
    n = len(segs.pts)
    m = len(segs.edges)
    need = n - 1

    def rec(i: int, chosen: int, comp: tuple, size: int) -> int:
        if size == need:
            return 1
        if i == m or m - i < need - size:
            return 0
        total = rec(i + 1, chosen, comp, size)
        u, v = segs.edges[i]
        cu, cv = comp[u], comp[v]
        if cu != cv and not segs.cross[i] & chosen:
            merged = tuple(cu if c == cv else c for c in comp)
            total += rec(i + 1, chosen | 1 << i, merged, size + 1)
        return total

    return rec(0, 0, tuple(range(n)), 0)


def _hamiltonian(points: Sequence, closed: bool) -> int:
    segs = _Segments(_check_points(points, STRUCTURED_BOUND))
    n = len(segs.pts)
    if closed and n < 3:
        return 0
    if n == 1:
        return 1
    full = (1 << n) - 1

    def rec(v: int, visited: int, chosen: int, start: int) -> int:
        if visited == full:
            if not closed:
                return 1
            e = segs.edge(v, start)
            return 0 if segs.cross[e] & chosen else 1
        total = 0
        for u in range(n):
            if visited >> u & 1:
                continue
            e = segs.edge(v, u)
            if segs.cross[e] & chosen:
                continue
            total += rec(u, visited | 1 << u, chosen | 1 << e, start)
        return total

    if closed:
        return rec(0, 1, 0, 0) // 2
    return sum(rec(s, 1 << s, 0, s) for s in range(n)) // 2


def count_spanning_cycles(points: Sequence) -> int:
    return _hamiltonian(points, closed=True)


def count_spanning_paths(points: Sequence) -> int:
    return _hamiltonian(points, closed=False)


def count_triangulations(points: Sequence) -> int:
    """Number of maximal crossing-free edge sets."""
    segs = _Segments(_check_points(points, STRUCTURED_BOUND))
    m = len(segs.edges)
    forced = 0
    free = []
    for i in range(m):
        if segs.cross[i] == 0:
            forced |= 1 << i
        else:
            free.append(i)
    pos = {e: t for t, e in enumerate(free)}
    # deadline[t]: free edges whose last crossing partner is free[t]
    deadline = [0] * len(free)
    for e in free:
        last = max(pos[f] for f in range(m) if segs.cross[e] >> f & 1)
        deadline[last] |= 1 << e

    def rec(t: int, chosen: int, uncovered: int) -> int:
        if t == len(free):
            return 1 if uncovered == 0 else 0
        e = free[t]
        total = 0
        options = []
        if segs.cross[e] & chosen:
            options.append((chosen, uncovered))
        else:
            options.append((chosen | 1 << e, uncovered & ~segs.cross[e]))
            if any(pos[f] > t for f in range(m) if segs.cross[e] >> f & 1):
                options.append((chosen, uncovered | 1 << e))
        for ch, unc in options:
            if unc & deadline[t]:
                continue
            total += rec(t + 1, ch, unc)
        return total

    return rec(0, forced, 0)


def _hulls_disjoint(pts, A: Sequence[int], B: Sequence[int]) -> bool:
    for a, b in combinations(A, 2):
        for c, d in combinations(B, 2):
            p, q, r, s = pts[a], pts[b], pts[c], pts[d]
            if orient2d(p, q, r) != orient2d(p, q, s) and orient2d(r, s, p) != orient2d(r, s, q):
                return False
    for X, Y in ((A, B), (B, A)):
        for a, b, c in combinations(X, 3):
            o = orient2d(pts[a], pts[b], pts[c])
            for y in Y:
                q = pts[y]
                if orient2d(pts[a], pts[b], q) == o and orient2d(pts[b], pts[c], q) == o \
                        and orient2d(pts[c], pts[a], q) == o:
                    return False
    return True


def count_convex_partitions(points: Sequence) -> int:
    pts = _check_points(points, STRUCTURED_BOUND)
    n = len(pts)

    def rec(i: int, blocks: list[list[int]]) -> int:
        if i == n:
            return 1
        total = 0
        for b in range(len(blocks)):
            grown = blocks[b] + [i]
            if all(_hulls_disjoint(pts, grown, blocks[c]) for c in range(len(blocks)) if c != b):
                total += rec(i + 1, blocks[:b] + [grown] + blocks[b + 1:])
        if all(_hulls_disjoint(pts, [i], blk) for blk in blocks):
            total += rec(i + 1, blocks + [[i]])
        return total

    return rec(0, [])


def count_embracing_triangles(hull_points: Sequence, w) -> int:
    pts = _int_points(list(hull_points) + [w])
    wq = pts[-1]
    total = 0
    for a, b, c in combinations(pts[:-1], 3):
        o = orient2d(a, b, c)
        s = (orient2d(a, b, wq), orient2d(b, c, wq), orient2d(c, a, wq))
        if 0 in s or o == 0:
            raise DegenerateError("collinear triple")
        total += all(x == o for x in s)
    return total


def count_embeddings(points: Sequence, graphs: Iterable[nx.Graph],
                     required_edge: tuple | None = None, bound: int = GRAPH_BOUND) -> int:
    """Crossing-free straight-line graphs on ``points`` isomorphic to one of ``graphs``.

    Each abstract graph must have exactly len(points) vertices (isolated ones included).
    """
    segs = _Segments(_check_points(points, bound))
    n = len(segs.pts)
    graphs = list(graphs)
    for g in graphs:
        if g.number_of_nodes() != n:
            raise InputError(f"graph has {g.number_of_nodes()} vertices, point set has {n}")
    by_size: dict[int, list] = {}
    for g in graphs:
        by_size.setdefault(g.number_of_edges(), []).append(
            (g, sorted(d for _, d in g.degree())))
    req = None if required_edge is None else segs.edge(*required_edge)
    m = len(segs.edges)
    total = 0

    def matches(chosen: int, targets) -> bool:
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(segs.edges[i] for i in range(m) if chosen >> i & 1)
        degs = sorted(d for _, d in h.degree())
        return any(degs == dg and nx.is_isomorphic(h, g) for g, dg in targets)

    for size, targets in by_size.items():
        def rec(i: int, chosen: int, k: int) -> int:
            if k == size:
                return 1 if matches(chosen, targets) else 0
            if m - i < size - k:
                return 0
            found = 0
            if i != req:
                found += rec(i + 1, chosen, k)
            if not segs.cross[i] & chosen:
                found += rec(i + 1, chosen | 1 << i, k + 1)
            return found

        if req is not None:
            if size == 0:
                continue
        total += rec(0, 0, 0)
    return total


def oracle_graph_count(class_id, points: Sequence, extra_index: int | None = None) -> int:
    """Count crossing-free structures of a built-in class, or of an explicit graph set.

    ``embracing_triangles`` needs ``extra_index`` (the point w).
    """
    if not isinstance(class_id, str):
        return count_embeddings(points, class_id)
    if class_id == "embracing_triangles":
        if extra_index is None:
            raise InputError("embracing_triangles needs the index of w")
        H = [p for i, p in enumerate(points) if i != extra_index % len(points)]
        return count_embracing_triangles(H, points[extra_index])
    funcs = {
        "spanning_cycles": count_spanning_cycles,
        "spanning_paths": count_spanning_paths,
        "matchings": count_matchings,
        "spanning_trees": count_spanning_trees,
        "triangulations": count_triangulations,
        "convex_partitions": count_convex_partitions,
    }
    try:
        return funcs[class_id](points)
    except KeyError:
        raise InputError(f"unknown graph class {class_id!r}") from None


# ------------------------------------------------------------ crossing stats


def oracle_crossing_stats(points: Sequence) -> tuple[int, int]:
    """(convex 4-subsets, non-convex 4-subsets) by testing every 4-subset."""
    pts = _int_points(points)
    convex = concave = 0
    for quad in combinations(pts, 4):
        inside = False
        for i in range(4):
            q = quad[i]
            a, b, c = (quad[j] for j in range(4) if j != i)
            o = orient2d(a, b, c)
            if o == 0:
                raise DegenerateError("collinear triple")
            s = (orient2d(a, b, q), orient2d(b, c, q), orient2d(c, a, q))
            if 0 in s:
                raise DegenerateError("collinear triple")
            if all(x == o for x in s):
                inside = True
        if inside:
            concave += 1
        else:
            convex += 1
    return convex, concave


# ------------------------------------------------------ minimal embracing


def _origin_in_closed_hull(vecs: Sequence[tuple]) -> bool:
    for i, v in enumerate(vecs):
        ok = True
        for j, u in enumerate(vecs):
            if i == j:
                continue
            c = v[0] * u[1] - v[1] * u[0]
            if c > 0 or (c == 0 and v[0] * u[0] + v[1] * u[1] > 0):
                continue
            ok = False
            break
        if ok:
            return False
    return True


def oracle_minimal_embracing(points: Sequence) -> int:
    """Minimal subsets (of a planar multiset) whose closed hull contains the origin."""
    vecs = _int_points(points)
    if any(v == (0, 0) for v in vecs):
        raise InputError("point at the origin")
    n = len(vecs)
    count = 0
    for size in (2, 3):
        for A in combinations(range(n), size):
            sub = [vecs[i] for i in A]
            if not _origin_in_closed_hull(sub):
                continue
            if any(_origin_in_closed_hull([vecs[i] for i in B])
                   for r in range(1, size) for B in combinations(A, r)):
                continue
            count += 1
    return count


from .fixtures import FIXTURE_NAMES, Fixture, fixture  # noqa: E402  re-exported
