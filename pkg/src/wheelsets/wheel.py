"""Planar conowheel sets H + {w}: frequency vectors, necklaces and realizations.

A necklace is stored as a string of ``'0'``/``'1'`` of length 2n; ``'1'`` is a
black bead (a point of H met by the positive ray of a line rotating about w),
``'0'`` a white bead (met by the negative ray).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BoundExceeded, DegenerateError, InputError, NotConowheelError
from .exact_core import (
    as_point,
    halfplane_left_counts,
    integer_direction,
    orient2d,
    radial_key,
    totient,
)

ENUMERATION_BOUND = 16


@dataclass(frozen=True)
class ConoWheelSet:
    hull_points: tuple
    extra_point: tuple
    lcount: tuple = field(repr=False)
    rcount: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.hull_points)

    @property
    def points(self) -> tuple:
        """All n+1 points, H first and w last."""
        return self.hull_points + (self.extra_point,)

    @property
    def is_convex_position(self) -> bool:
        return any(l == 0 or r == 0 for l, r in zip(self.lcount, self.rcount))


@dataclass(frozen=True)
class FrequencyReport:
    valid: bool
    violations: tuple  # subset of ("i", "ii", "iii", "iv")

    def __bool__(self) -> bool:
        return self.valid


# ------------------------------------------------------------- construction


def _scaled_int_points(points: Sequence[tuple]) -> list[tuple]:
    """Multiply every coordinate by one common positive denominator."""
    dens = [c.denominator for p in points for c in p if isinstance(c, Fraction)]
    s = math.lcm(*dens) if dens else 1
    return [tuple(int(c * s) for c in p) for p in points]


def check_general_position(int_points: Sequence[tuple]) -> None:
    """Raise DegenerateError if three points are collinear (or two coincide); O(N^2)."""
    n = len(int_points)
    for i in range(n):
        xi, yi = int_points[i]
        seen = set()
        for j in range(n):
            if j == i:
                continue
            dx, dy = int_points[j][0] - xi, int_points[j][1] - yi
            if dx == 0 and dy == 0:
                raise DegenerateError("repeated point")
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                raise DegenerateError("three collinear points")
            seen.add((dx, dy))


def _hull_vertex_set(int_points: Sequence[tuple]) -> set[int]:
    order = sorted(range(len(int_points)), key=lambda i: int_points[i])

    def chain(idx):
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and orient2d(int_points[out[-2]], int_points[out[-1]], int_points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return set(lower[:-1] + upper[:-1]) if len(order) > 2 else set(order)


def _stats_around(center: tuple, others: Sequence[tuple]) -> list[int]:
    """Left counts of the directed lines center -> h, over the other points."""
    vecs = [(p[0] - center[0], p[1] - center[1]) for p in others]
    return halfplane_left_counts(vecs)


def build_conowheel(points: Sequence, extra_index: int) -> ConoWheelSet:
    """Validate a planar point set as a conowheel set with w = points[extra_index]."""
    pts = [as_point(p) for p in points]
    if len(pts) < 2:
        raise InputError("a conowheel set needs at least 2 points")
    if any(len(p) != 2 for p in pts):
        raise InputError("conowheel sets are planar")
    if not -len(pts) <= extra_index < len(pts):
        raise InputError("extra_index out of range")
    extra_index %= len(pts)
    ints = _scaled_int_points(pts)
    check_general_position(ints)
    hull = _hull_vertex_set(ints)
    for i in range(len(pts)):
        if i != extra_index and i not in hull:
            raise NotConowheelError(f"point {i} of H is not extreme")
    w = ints[extra_index]
    h_int = [p for i, p in enumerate(ints) if i != extra_index]
    left = _stats_around(w, h_int)
    n = len(h_int)
    H = tuple(p for i, p in enumerate(pts) if i != extra_index)
    return ConoWheelSet(H, pts[extra_index], tuple(left), tuple(n - 1 - l for l in left))


def conowheel_from(hull_points: Sequence, extra_point) -> ConoWheelSet:
    return build_conowheel(list(hull_points) + [extra_point], len(hull_points))


# --------------------------------------------------------- frequency vectors


def frequency_vector(P: ConoWheelSet) -> tuple:
    F = [0] * P.n
    for l, r in zip(P.lcount, P.rcount):
        F[abs(l - r)] += 1
    return tuple(F)


def local_frequency_vector(center, others: Sequence) -> tuple:
    """Frequency vector of ``center`` against an arbitrary general-position set."""
    c = as_point(center)
    ints = _scaled_int_points([c] + [as_point(p) for p in others])
    left = _stats_around(ints[0], ints[1:])
    m = len(left)
    F = [0] * m
    for l in left:
        F[abs(2 * l - (m - 1))] += 1
    return tuple(F)


def validate_frequency_vector(F: Sequence[int]) -> FrequencyReport:
    """Check the four characterizing conditions of a frequency vector."""
    n = len(F)
    bad = []
    if n == 0 or any((not isinstance(x, int)) or x < 0 for x in F):
        return FrequencyReport(False, ("i",))
    if sum(F) != n:
        bad.append("i")
    if any(F[k] != 0 for k in range(n) if k % 2 == n % 2):
        bad.append("ii")
    if any(F[k] % 2 for k in range(1, n)):
        bad.append("iii")
    if any(F[k] != 0 and F[k - 2] == 0 for k in range(2, n)):
        bad.append("iv")
    return FrequencyReport(not bad, tuple(bad))


def enumerate_frequency_vectors(n: int) -> list[tuple]:
    """All valid frequency vectors of length n, sorted lexicographically."""
    if n < 1:
        raise InputError("n must be >= 1")
    out = []
    first = 0 if n % 2 else 1  # smallest index of the allowed parity

    def rec(k, remaining, acc):
        if remaining == 0:
            F = [0] * n
            for idx, v in acc:
                F[idx] = v
            out.append(tuple(F))
            return
        if k >= n:
            return
        low = 1 if k == 0 else 2
        step = 2
        for v in range(low, remaining + 1, step):
            rec(k + 2, remaining - v, acc + [(k, v)])

    rec(first, n, [])
    result = sorted(out)
    assert all(validate_frequency_vector(F) for F in result)
    return result


def count_frequency_vectors(n: int) -> int:
    if n < 1:
        raise InputError("n must be >= 1")
    return 2 ** (-(-n // 2) - 1)


def sym_frequency_vector(n: int) -> tuple:
    """Frequency vector of the symmetric wheel set (center of a regular n-gon)."""
    F = [0] * n
    F[0 if n % 2 else 1] = n
    return tuple(F)


# ------------------------------------------------------- rational placements


def unit_circle_point(theta: float, max_denominator: int = 10**6) -> tuple:
    """Rational point exactly on the unit circle, near angle theta (radians).

    Uses the tangent half-angle map; the float only picks the rational
    parameter, the returned point is exact.
    """
    theta = math.remainder(theta, 2 * math.pi)
    flip = abs(theta) > math.pi / 2
    if flip:
        theta = math.remainder(theta - math.pi, 2 * math.pi)
    t = Fraction(math.tan(theta / 2)).limit_denominator(max_denominator)
    x = (1 - t * t) / (1 + t * t)
    y = 2 * t / (1 + t * t)
    return (-x, -y) if flip else (x, y)


def _half_turn_directions(n: int) -> list[tuple]:
    """n rational unit vectors at increasing angles in [0, pi)."""
    dirs = [unit_circle_point(math.pi * i / n) for i in range(n)]
    keys = radial_key([integer_direction(d) for d in dirs])
    assert all(keys[i] < keys[i + 1] for i in range(n - 1)) and keys[-1][0] == 0
    return dirs


def _jump_sequence(F: Sequence[int]) -> list[int]:
    """A sequence with steps of +-2 from -kmax-1 to kmax+1 jumping over +-k F_k times."""
    n = len(F)
    kmax = max(k for k in range(n) if F[k])
    seq = [-kmax - 1]
    while seq[-1] < kmax + 1:
        crossed = seq[-1] + 1
        seq.append(seq[-1] + 2)
        k = abs(crossed)
        # extra back-and-forth pairs on the positive pass (or at 0)
        if crossed > 0 or (crossed == 0):
            extra = (F[k] - 1) // 2 if k == 0 else (F[k] - 2) // 2
            for _ in range(extra):
                seq.append(seq[-1] - 2)
                seq.append(seq[-1] + 2)
    assert len(seq) == n + 1
    return seq


def realize_frequency_vector(F: Sequence[int]) -> ConoWheelSet:
    """Conowheel set with w at the origin and H on the unit circle whose frequency vector is F."""
    F = tuple(int(x) for x in F)
    rep = validate_frequency_vector(F)
    if not rep:
        raise InputError(f"invalid frequency vector, violates {','.join(rep.violations)}")
    n = len(F)
    seq = _jump_sequence(F)
    dirs = _half_turn_directions(n)
    H = []
    for i, d in enumerate(dirs):
        if seq[i + 1] > seq[i]:
            H.append((-d[0], -d[1]))  # back of the line
        else:
            H.append(d)
    return conowheel_from(H, (Fraction(0), Fraction(0)))


# ---------------------------------------------------------------- necklaces


def necklace_of(P: ConoWheelSet) -> str:
    ints = _scaled_int_points(list(P.hull_points) + [P.extra_point])
    w = ints[-1]
    vecs = []
    colors = []
    for h in ints[:-1]:
        v = (h[0] - w[0], h[1] - w[1])
        vecs += [v, (-v[0], -v[1])]
        colors += ["1", "0"]
    keys = radial_key(vecs)
    order = sorted(range(len(vecs)), key=keys.__getitem__)
    return "".join(colors[i] for i in order)


def _check_necklace(N: str) -> int:
    if not N or len(N) % 2 or set(N) - {"0", "1"}:
        raise InputError("a necklace is a 0/1 string of even length")
    n = len(N) // 2
    if any(N[i] == N[i + n] for i in range(n)):
        raise InputError("necklace is not self-dual (opposite beads must differ)")
    return n


def canonical_necklace(N: str, identify_reflection: bool = True) -> str:
    _check_necklace(N)
    cands = [N]
    if identify_reflection:
        cands.append(N[::-1])
    best = None
    for s in cands:
        doubled = s + s
        for r in range(len(s)):
            rot = doubled[r:r + len(s)]
            if best is None or rot < best:
                best = rot
    return best


def realize_necklace(N: str) -> ConoWheelSet:
    """Place w at the origin and a point at every black bead of 2n near-equally spaced directions."""
    n = _check_necklace(N)
    dirs = _half_turn_directions(n)
    H = []
    for i in range(n):
        d = dirs[i]
        H.append(d if N[i] == "1" else (-d[0], -d[1]))
    return conowheel_from(H, (Fraction(0), Fraction(0)))


def is_convex_necklace(N: str) -> bool:
    n = _check_necklace(N)
    return "1" * n in N + N


def convex_necklace(n: int) -> str:
    return "0" * n + "1" * n


# -------------------------------------------------------------- order types


def _odd_divisor_sum(n: int) -> int:
    return sum(totient(k) * 2 ** (n // k) for k in range(1, n + 1, 2) if n % k == 0)


def count_order_types(n: int, identify_reflection: bool = True) -> int:
    if n < 1:
        raise InputError("n must be >= 1")
    s = _odd_divisor_sum(n)
    if not identify_reflection:
        value = Fraction(s, 2 * n)
    else:
        e = (n - 3) // 2
        value = Fraction(s, 4 * n) + (Fraction(1, 2 ** -e) if e < 0 else 2**e)
    assert value.denominator == 1
    return int(value)


def enumerate_order_types(n: int, identify_reflection: bool = True,
                          bound: int = ENUMERATION_BOUND) -> list[str]:
    """Sorted canonical necklaces of all conowheel order types on n+1 points."""
    if n < 1:
        raise InputError("n must be >= 1")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds enumeration bound {bound}")
    seen = set()
    flip = str.maketrans("01", "10")
    for bits in range(2 ** (n - 1)):  # first bead black w.l.o.g. (rotation by n complements)
        half = "1" + format(bits, f"0{n - 1}b") if n > 1 else "1"
        N = half + half.translate(flip)
        seen.add(canonical_necklace(N, identify_reflection))
    return sorted(seen)


# ------------------------------------------------------- reference sets P_*


def p_con(n: int) -> ConoWheelSet:
    """n+1 points on a regular (n+1)-gon; w is the last vertex."""
    pts = [unit_circle_point(math.pi / 2 + 2 * math.pi * i / (n + 1)) for i in range(n + 1)]
    return conowheel_from(pts[:-1], pts[-1])


def p_bar(n: int) -> ConoWheelSet:
    """Regular n-gon with w just inside one edge."""
    if n < 3:
        raise InputError("a barely-in wheel set needs n >= 3")
    H = [unit_circle_point(math.pi / 2 + 2 * math.pi * i / n) for i in range(n)]
    a, b = H[0], H[1]
    eps = Fraction(1, 100 * n * n)
    w = ((1 - eps) * (a[0] + b[0]) / 2, (1 - eps) * (a[1] + b[1]) / 2)
    return conowheel_from(H, w)


def p_sym(n: int) -> ConoWheelSet:
    """Regular n-gon with w at the center (odd n); realized from its frequency vector for even n."""
    if n % 2 == 0:
        return realize_frequency_vector(sym_frequency_vector(n))
    H = [unit_circle_point(math.pi / 2 + 2 * math.pi * i / n) for i in range(n)]
    return conowheel_from(H, (Fraction(0), Fraction(0)))
