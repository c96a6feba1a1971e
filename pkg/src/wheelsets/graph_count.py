"""Counting crossing-free structures on conowheel sets from the frequency vector.

Every built-in class is described by its mutation increments ``delta[i]``
(the change in count when w crosses a segment h1h2 with i points of H on one
side and j = n-2-i on the other), an offset ``c_n`` and the count on a set in
convex position.  From those::

    lam[l]   = c_n + sum_{t=l}^{n-2} delta[t]         (lambda_{l, n-1-l})
    gamma    = anchor + 1/2 sum_l lam[l]
    count(P) = gamma - 1/2 sum_h lam[l(h)]
             = sum_k F_k * Lam[k],  Lam[k] = gamma/n - 1/2 lam[(n-1+k)/2]

The module also holds the planar embracing-set counts, the reconstruction of
the frequency vector and the order type from embracing data, and the
convex/non-convex 4-subset statistics.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache
import math
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    BoundExceeded,
    InconsistentProfile,
    InputError,
    NeedsWheelError,
    NotRealizableError,
)
from .exact_core import as_point, binomial, catalan, halfplane_left_counts, motzkin, orient2d, ternary
from .wheel import (
    ConoWheelSet,
    _scaled_int_points,
    canonical_necklace,
    check_general_position,
    convex_necklace,
    enumerate_frequency_vectors,
    frequency_vector,
    p_con,
    sym_frequency_vector,
    unit_circle_point,
    validate_frequency_vector,
)

BUILTIN_CLASSES = (
    "embracing_triangles",
    "spanning_cycles",
    "spanning_paths",
    "matchings",
    "spanning_trees",
    "triangulations",
    "convex_partitions",
)
CUSTOM_BOUND = 9
CONVEX_TRIANGULATION_CONVENTION = "convex-position: polygon triangulation count C_{n-1}"


@dataclass(frozen=True)
class GraphClassTable:
    class_id: str
    n: int
    deltas: tuple  # deltas[i] = delta_{i, n-2-i}
    lambdas: tuple  # lambdas[l] = lambda_{l, n-1-l}
    gamma: Fraction
    lambda_cap: tuple  # Lambda_0 .. Lambda_{n-1}; zero where k has the wrong parity
    c_n: int
    anchor_convex: Union[int, Fraction]

    def delta(self, i: int, j: int) -> int:
        if i + j != self.n - 2 or i < 0 or j < 0:
            raise InputError(f"delta_{{{i},{j}}} needs i + j = n - 2 = {self.n - 2}")
        return self.deltas[i]

    def lam(self, l: int, r: int) -> int:
        if l + r != self.n - 1 or l < 0 or r < 0:
            raise InputError(f"lambda_{{{l},{r}}} needs l + r = n - 1 = {self.n - 1}")
        return self.lambdas[l]


# ------------------------------------------------------------ delta tables


def _spanning_tree_delta(i: int, j: int) -> int:
    def s1(m):
        return sum(ternary(k + 1) * ternary(m - k + 1) for k in range(m + 1))

    def s2(m):
        return sum(ternary(k + 1) * ternary(m - k + 2) for k in range(m + 1))

    return 2 * s2(j) * s1(i) - 2 * s2(i) * s1(j)


def _builtin_spec(class_id: str, n: int) -> tuple[Callable[[int, int], int], int, Union[int, Fraction]]:
    """(delta, c_n, anchor) for a built-in class."""
    if class_id == "embracing_triangles":
        return (lambda i, j: j - i), binomial(n - 1, 2), 0
    if class_id == "spanning_cycles":
        def delta(i, j):
            if i == 0 and j > 0:
                return n - 1
            if j == 0 and i > 0:
                return -(n - 1)
            return 0
        return delta, 0, (1 if n >= 2 else 0)
    if class_id == "spanning_paths":
        def delta(i, j):
            v = (n - 1) * 2 ** (n - 2) if n >= 2 else 0
            if i == 0 and j > 0:
                return v
            if j == 0 and i > 0:
                return -v
            return 0
        anchor = (n + 1) * Fraction(2) ** (n - 2)
        return delta, 0, int(anchor) if anchor.denominator == 1 else anchor
    if class_id == "matchings":
        return (lambda i, j: motzkin(i) * motzkin(j + 1) - motzkin(i + 1) * motzkin(j)), motzkin(n - 1), motzkin(n + 1)
    if class_id == "spanning_trees":
        return _spanning_tree_delta, 0, ternary(n + 1)
    if class_id == "triangulations":
        # anchored so that the formula is the wheel-set formula; convex position is special-cased
        return (lambda i, j: catalan(i) * catalan(j + 1) - catalan(i + 1) * catalan(j)), catalan(n - 1), 0
    if class_id == "convex_partitions":
        return (lambda i, j: 0), 0, catalan(n + 1)
    raise InputError(f"unknown graph class {class_id!r}")


def _assemble(class_id: str, n: int, delta: Callable[[int, int], int], c_n: int, anchor) -> GraphClassTable:
    deltas = tuple(0 if i == n - 2 - i else delta(i, n - 2 - i) for i in range(max(n - 1, 0)))
    lambdas = [0] * n
    acc = c_n
    lambdas[n - 1] = acc
    for l in range(n - 2, -1, -1):
        acc += deltas[l]
        lambdas[l] = acc
    gamma = anchor + Fraction(sum(lambdas), 2)
    cap = []
    for k in range(n):
        if (n - 1 + k) % 2:
            cap.append(Fraction(0))
        else:
            cap.append(gamma / n - Fraction(lambdas[(n - 1 + k) // 2], 2))
    return GraphClassTable(class_id, n, deltas, tuple(lambdas), gamma, tuple(cap), c_n, anchor)


@lru_cache(maxsize=256)
def _builtin_table(class_id: str, n: int) -> GraphClassTable:
    delta, c_n, anchor = _builtin_spec(class_id, n)
    return _assemble(class_id, n, delta, c_n, anchor)


def build_class_table(class_id: str, n: int, graphs: Iterable | None = None) -> GraphClassTable:
    """Table for a built-in class, or for ``class_id="custom"`` from explicit abstract graphs."""
    if not isinstance(n, int) or n < 1:
        raise InputError("n must be a positive integer")
    if class_id == "custom":
        if graphs is None:
            raise InputError("a custom class needs its graphs")
        return custom_class_table(list(graphs), n)
    if class_id not in BUILTIN_CLASSES:
        raise InputError(f"unknown graph class {class_id!r}")
    return _builtin_table(class_id, n)


# ------------------------------------------------------------ counting


@dataclass(frozen=True)
class CountResult:
    value: int
    via_lambda: Fraction  # gamma - 1/2 sum_h lambda
    via_frequency: Fraction  # sum_k F_k Lambda_k
    convention: str | None = None


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise AssertionError(f"non-integral count {x}")
    return int(x)


def _lr_pairs(source) -> tuple[tuple, list[tuple[int, int]]]:
    """(F, [(l, r)]) from a ConoWheelSet or a frequency vector.

    For a bare frequency vector a representative (l, r) with l >= r is used
    for every entry; lambda is symmetric so this does not matter.
    """
    if isinstance(source, ConoWheelSet):
        return frequency_vector(source), list(zip(source.lcount, source.rcount))
    F = tuple(int(x) for x in source)
    rep = validate_frequency_vector(F)
    if not rep:
        raise InputError(f"invalid frequency vector, violates {','.join(rep.violations)}")
    n = len(F)
    pairs = []
    for k, f in enumerate(F):
        pairs += [((n - 1 + k) // 2, (n - 1 - k) // 2)] * f
    return F, pairs


def count_detailed(class_id, source, *, table: GraphClassTable | None = None,
                   strict: bool = False) -> CountResult:
    F, pairs = _lr_pairs(source)
    n = len(F)
    if table is None:
        table = build_class_table(class_id, n)
    elif table.n != n:
        raise InputError(f"table is for n={table.n}, input has n={n}")
    via_lambda = table.gamma - Fraction(sum(table.lambdas[l] for l, _ in pairs), 2)
    via_freq = sum((f * table.lambda_cap[k] for k, f in enumerate(F)), Fraction(0))
    if via_lambda != via_freq:
        raise AssertionError("the two evaluation forms disagree")
    if table.class_id == "triangulations" and F[n - 1] != 0:
        if strict:
            raise NeedsWheelError("triangulation formula is only defined with w interior")
        return CountResult(catalan(n - 1), via_lambda, via_freq, CONVEX_TRIANGULATION_CONVENTION)
    return CountResult(_as_int(via_lambda), via_lambda, via_freq)


def count(class_id, source, *, table: GraphClassTable | None = None, strict: bool = False) -> int:
    """Number of crossing-free structures of the class on a conowheel set.

    ``source`` is a ConoWheelSet or a frequency vector.  Triangulations of a
    set in convex position return C_{n-1} (or raise with ``strict=True``).
    """
    return count_detailed(class_id, source, table=table, strict=strict).value


# ---------------------------------------------------------- custom classes


def _mutation_pair(i: int, j: int) -> tuple[list, list]:
    """Point lists of P and P' (w last) for a mutation with i points left and j right of h1h2."""
    h1, h2 = (Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))
    left = [unit_circle_point(math.radians(100 + 70 * (t + 1) / (i + 1))) for t in range(i)]
    right = [unit_circle_point(math.radians(10 + 70 * (t + 1) / (j + 1))) for t in range(j)]
    eps = Fraction(1, 1000)
    base = [h1, h2] + left + right
    return base + [(-eps, Fraction(0))], base + [(eps, Fraction(0))]


def custom_class_delta(graphs: Sequence, i: int, j: int, bound: int = CUSTOM_BOUND) -> int:
    """Mutation increment delta_{i,j} of an explicit graph family, by enumeration.

    ``graphs`` are networkx graphs on n+1 = i+j+3 vertices.
    """
    from .oracle import count_embeddings

    if i < 0 or j < 0:
        raise InputError("i and j must be non-negative")
    n = i + j + 2
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds custom-class bound {bound}")
    if i == j:
        return 0
    P, P2 = _mutation_pair(i, j)
    before = count_embeddings(P, graphs, required_edge=(0, 1), bound=bound + 1)
    after = count_embeddings(P2, graphs, required_edge=(0, 1), bound=bound + 1)
    return after - before


def custom_class_table(graphs: Sequence, n: int, bound: int = CUSTOM_BOUND) -> GraphClassTable:
    from .oracle import count_embeddings

    if n > bound:
        raise BoundExceeded(f"n={n} exceeds custom-class bound {bound}")
    memo: dict[tuple[int, int], int] = {}

    def delta(i, j):
        if i > j:
            return -delta(j, i)
        if (i, j) not in memo:
            memo[(i, j)] = custom_class_delta(graphs, i, j, bound)
        return memo[(i, j)]

    anchor = count_embeddings(p_con(n).points, graphs, bound=bound + 1)
    return _assemble("custom", n, delta, 0, anchor)


# -------------------------------------------------------- embracing sets


@dataclass(frozen=True)
class EmbraceProfile:
    n: int
    counts: tuple  # embr_3 .. embr_n

    def embr(self, k: int) -> int:
        if 3 <= k <= self.n:
            return self.counts[k - 3]
        if 0 <= k <= self.n:
            return 0
        raise InputError(f"k={k} out of range for n={self.n}")


@dataclass(frozen=True)
class TriangleFamily:
    n: int
    triples: frozenset  # frozensets of three indices into H (0-based)

    def __len__(self) -> int:
        return len(self.triples)


def embrace_counts_2d(P: ConoWheelSet) -> EmbraceProfile:
    n = P.n
    counts = tuple(binomial(n, k) - sum(binomial(l, k - 1) for l in P.lcount) for k in range(3, n + 1))
    return EmbraceProfile(n, counts)


def frequency_from_embrace(E: EmbraceProfile) -> tuple:
    """Recover the frequency vector from the embracing-set counts embr_3..embr_n."""
    n = E.n
    if n < 1 or len(E.counts) != max(n - 2, 0):
        raise InconsistentProfile("profile length does not match n")
    # e[i] = sum_h binom(l(h), i) = sum_j L_j binom(j, i), i = 1..n-1
    e = [0] * n
    for i in range(1, n):
        embr = 0 if i + 1 == 2 else E.counts[i + 1 - 3]
        e[i] = binomial(n, i + 1) - embr
    L = [0] * n
    for i in range(n - 1, 0, -1):
        L[i] = e[i] - sum(binomial(j, i) * L[j] for j in range(i + 1, n))
        if L[i] < 0:
            raise InconsistentProfile(f"negative multiplicity for left count {i}")
    L[0] = n - sum(L[1:])
    if L[0] < 0:
        raise InconsistentProfile("multiplicities exceed n")
    F = [0] * n
    for j, c in enumerate(L):
        F[abs(2 * j - (n - 1))] += c
    F = tuple(F)
    if not validate_frequency_vector(F):
        raise InconsistentProfile(f"recovered vector {F} is not a frequency vector")
    return F


def _is_embracing(a, b, c, w) -> bool:
    o = orient2d(a, b, c)
    return orient2d(a, b, w) == o and orient2d(b, c, w) == o and orient2d(c, a, w) == o


def triangle_family(P: ConoWheelSet) -> TriangleFamily:
    pts = _scaled_int_points(list(P.points))
    H, w = pts[:-1], pts[-1]
    n = len(H)
    triples = frozenset(
        frozenset((a, b, c))
        for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)
        if _is_embracing(H[a], H[b], H[c], w)
    )
    return TriangleFamily(n, triples)


class _SignedPairs:
    """Union-find over pair variables s(x, y) in {+1, -1} with parity links."""

    def __init__(self):
        self.parent: dict = {}
        self.parity: dict = {}  # s(node) = parity * s(parent)
        self.value: dict = {}  # root -> fixed sign

    def _key(self, x, y):
        return (x, y) if x < y else (y, x)

    def find(self, k):
        if k not in self.parent:
            self.parent[k], self.parity[k] = k, 1
        p = 1
        root = k
        path = []
        while self.parent[root] != root:
            path.append(root)
            p *= self.parity[root]
            root = self.parent[root]
        # path compression
        acc = p
        for node in path:
            par = self.parity[node]
            self.parent[node], self.parity[node] = root, acc
            acc *= par
        return root, p

    def link(self, x1, y1, x2, y2, rel: int) -> None:
        """Record s(x1, y1) = rel * s(x2, y2) (arguments in any order)."""
        rel *= self._orient(x1, y1) * self._orient(x2, y2)
        r1, p1 = self.find(self._key(x1, y1))
        r2, p2 = self.find(self._key(x2, y2))
        if r1 == r2:
            if p1 != rel * p2:
                raise NotRealizableError("contradictory pair orientations")
            return
        # s(r1) = p1 s(k1) = p1 rel s(k2) = p1 rel p2 s(r2)
        par = p1 * rel * p2
        v1, v2 = self.value.pop(r1, None), self.value.get(r2)
        if v1 is not None and v2 is not None and v1 != par * v2:
            raise NotRealizableError("contradictory pair orientations")
        self.parent[r1], self.parity[r1] = r2, par
        if v1 is not None and v2 is None:
            self.value[r2] = par * v1

    @staticmethod
    def _orient(x, y) -> int:
        return 1 if x < y else -1

    def set(self, x, y, s: int) -> None:
        r, p = self.find(self._key(x, y))
        s *= self._orient(x, y)
        want = p * s
        have = self.value.get(r)
        if have is not None and have != want:
            raise NotRealizableError("contradictory pair orientations")
        self.value[r] = want

    def get(self, x, y):
        r, p = self.find(self._key(x, y))
        v = self.value.get(r)
        return None if v is None else v * p * self._orient(x, y)


def order_type_from_triangles(T: TriangleFamily) -> str:
    """Canonical necklace (reflections identified) of the order type generating T."""
    n = T.n
    triples = {frozenset(t) for t in T.triples}
    if any(len(t) != 3 or not all(0 <= x < n for x in t) for t in triples):
        raise InputError("triples must be 3-sets of indices in range")
    if not triples:
        return canonical_necklace(convex_necklace(n))

    S = _SignedPairs()
    for t in triples:
        x, y, z = sorted(t)
        # embracing with x<y<z means s(x,y) = s(y,z) = s(z,x)
        S.link(x, y, y, z, 1)
        S.link(x, y, z, x, 1)
    a, b, c = sorted(min(triples, key=sorted))
    S.set(a, b, 1)  # seed orientation, w.l.o.g. up to reflection
    for v, u1, u2 in ((a, b, c), (b, c, a), (c, a, b)):
        for t in triples:
            if v not in t or u1 in t or u2 in t:
                continue
            p, q = sorted(t - {v})
            ccw = frozenset((v, u1, q)) in triples or frozenset((v, p, u2)) in triples
            S.set(v, p, 1 if ccw else -1)

    # ~ classes: identical memberships; pairs inside a class are ordered by index
    member: dict[int, set] = {x: set() for x in range(n)}
    for t in triples:
        for x in t:
            member[x].add(t - {x})
    cls = {}
    for x in range(n):
        key = frozenset(member[x])
        cls.setdefault(key, []).append(x)
    for group in cls.values():
        for i, x in enumerate(group):
            for y in group[i + 1:]:
                if S.get(x, y) is None:
                    S.set(x, y, 1)

    sign = {}
    for x in range(n):
        for y in range(x + 1, n):
            s = S.get(x, y)
            if s is None:
                raise NotRealizableError(f"orientation of pair ({x}, {y}) undetermined")
            sign[(x, y)], sign[(y, x)] = s, -s

    ref = 0
    sigma = {ref: 1}
    for x in range(1, n):
        sigma[x] = sign[(ref, x)]

    def cmp(x, y):
        if x == y:
            return 0
        return -sigma[x] * sigma[y] * sign[(x, y)]

    half = sorted(range(n), key=cmp_to_key(cmp))
    for i in range(n):
        for j in range(i + 1, n):
            if cmp(half[i], half[j]) >= 0:
                raise NotRealizableError("pair orientations admit no radial order")
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                emb = sign[(x, y)] == sign[(y, z)] == sign[(z, x)]
                if emb != (frozenset((x, y, z)) in triples):
                    raise NotRealizableError("triangle family is not realizable")
    first = "".join("1" if sigma[x] > 0 else "0" for x in half)
    second = first.translate(str.maketrans("01", "10"))
    return canonical_necklace(first + second)


# ---------------------------------------------------------- crossing stats


def crossing_stats(points: Sequence) -> tuple[int, int]:
    """(convex 4-subsets, non-convex 4-subsets) of a planar general-position set.

    Each non-convex 4-subset is a point inside the triangle of the other three,
    so the second number sums, over every point p, the triangles of the other
    points embracing p.  Those come from left counts around p in O(N log N).
    """
    pts = _scaled_int_points([as_point(p) for p in points])
    N = len(pts)
    check_general_position(pts)
    concave = 0
    for i, p in enumerate(pts):
        vecs = [(q[0] - p[0], q[1] - p[1]) for j, q in enumerate(pts) if j != i]
        left = halfplane_left_counts(vecs)
        concave += binomial(N - 1, 3) - sum(binomial(l, 2) for l in left)
    return binomial(N, 4) - concave, concave


def local_frequency_multiset(points: Sequence) -> list[tuple]:
    """Sorted list of every point's frequency vector against the rest."""
    from .wheel import local_frequency_vector

    pts = [as_point(p) for p in points]
    return sorted(local_frequency_vector(p, pts[:i] + pts[i + 1:]) for i, p in enumerate(pts))


# ---------------------------------------------------------- maximization


@dataclass(frozen=True)
class SymMaxReport:
    delta_condition: bool  # delta_{i,j} >= 0 for all i < j
    maximized: bool  # F_sym attains the maximum over all frequency vectors
    maximum: int = field(default=0)

    def __bool__(self) -> bool:
        return self.maximized


def check_sym_maximizer(class_id: str, n: int) -> SymMaxReport:
    table = build_class_table(class_id, n)
    cond = all(table.deltas[i] >= 0 for i in range(n - 1) if i < n - 2 - i)
    values = {F: count(class_id, F, table=table) for F in enumerate_frequency_vectors(n)}
    best = max(values.values())
    return SymMaxReport(cond, values[sym_frequency_vector(n)] >= best, best)
