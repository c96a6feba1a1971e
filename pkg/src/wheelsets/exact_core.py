"""Exact scalars, orientation predicates, radial ordering and number sequences.

Coordinates are :class:`fractions.Fraction` (or plain ``int``); counts are
Python ``int``.  Nothing in here touches floating point.
"""
from __future__ import annotations

import enum
import math
import threading
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DegenerateError, InputError

Number = Union[int, Fraction]
Point = tuple  # tuple of Number; dimension is len()

__all__ = [
    "Fraction",
    "as_point",
    "as_rational",
    "binomial",
    "catalan",
    "det",
    "det_sign",
    "halfplane_left_counts",
    "integer_direction",
    "motzkin",
    "orient",
    "orient2d",
    "radial_compare",
    "radial_key",
    "RadialOrder",
    "sequence_value",
    "ternary",
    "totient",
]


def as_rational(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    if isinstance(value, float):
        raise InputError("floating-point coordinates are not accepted; use p/q")
    raise InputError(f"unsupported coordinate type {type(value).__name__}")


def as_point(coords: Iterable) -> tuple:
    return tuple(as_rational(c) for c in coords)


def integer_direction(p: Sequence[Number]) -> tuple:
    """Positive integer multiple of ``p`` (same ray from the origin)."""
    dens = [c.denominator for c in p if isinstance(c, Fraction)]
    scale = reduce(math.lcm, dens, 1)
    return tuple(int(c * scale) for c in p)


# ---------------------------------------------------------------- determinants


def _det_small(m: Sequence[Sequence[Number]]) -> Number:
    d = len(m)
    if d == 1:
        return m[0][0]
    if d == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if d == 3:
        (a, b, c), (e, f, g), (h, i, j) = m
        return a * (f * j - g * i) - b * (e * j - g * h) + c * (e * i - f * h)
    # d == 4: cofactor expansion along the first row
    total = 0
    for col in range(4):
        minor = [row[:col] + row[col + 1:] for row in m[1:]]
        term = m[0][col] * _det_small(minor)
        total = total + term if col % 2 == 0 else total - term
    return total


def _bareiss(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    d = len(m)
    sign = 1
    prev = 1
    for k in range(d - 1):
        if m[k][k] == 0:
            for r in range(k + 1, d):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, d):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, d):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[d - 1][d - 1]


def det(rows: Sequence[Sequence[Number]]) -> Number:
    """Exact determinant of a square matrix.

    Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
    """
    d = len(rows)
    if d == 0:
        return 1
    if any(len(r) != d for r in rows):
        raise InputError("determinant of a non-square matrix")
    if d <= 4:
        return _det_small(rows)
    scales = []
    int_rows = []
    for r in rows:
        s = reduce(math.lcm, (c.denominator for c in r if isinstance(c, Fraction)), 1)
        scales.append(s)
        int_rows.append([int(c * s) for c in r])
    value = _bareiss(int_rows)
    denom = math.prod(scales)
    return Fraction(value, denom) if denom != 1 else value


def det_sign(rows: Sequence[Sequence[Number]]) -> int:
    v = det(rows)
    return (v > 0) - (v < 0)


def orient(q: Sequence[Number], simplex: Sequence[Sequence[Number]]) -> int:
    """Sign of det(p_1 - q, ..., p_d - q) for a sequence of d points in R^d."""
    d = len(q)
    if d < 1:
        raise InputError("points must have dimension >= 1")
    if len(simplex) != d:
        raise InputError(f"need exactly {d} simplex points in dimension {d}, got {len(simplex)}")
    for p in simplex:
        if len(p) != d:
            raise InputError("dimension mismatch between query and simplex points")
    return det_sign([[p[i] - q[i] for i in range(d)] for p in simplex])


def orient2d(a, b, c) -> int:
    """Sign of the turn a -> b -> c (+1 counterclockwise)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


# ------------------------------------------------------------- radial ordering


class RadialOrder(enum.Enum):
    BEFORE = -1
    AFTER = 1
    SAME_RAY = "collinear-same-ray"
    OPPOSITE_RAY = "collinear-opposite-ray"


def _half(x, y) -> int:
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def radial_compare(w, a, b) -> RadialOrder:
    """Counterclockwise order of a and b around w, starting at the +x direction."""
    if len(w) != 2 or len(a) != 2 or len(b) != 2:
        raise InputError("radial_compare is planar")
    ax, ay = a[0] - w[0], a[1] - w[1]
    bx, by = b[0] - w[0], b[1] - w[1]
    if (ax == 0 and ay == 0) or (bx == 0 and by == 0):
        raise InputError("radial_compare: point coincides with the center")
    cross = ax * by - ay * bx
    if cross == 0:
        if ax * bx + ay * by > 0:
            return RadialOrder.SAME_RAY
        return RadialOrder.OPPOSITE_RAY
    ha, hb = _half(ax, ay), _half(bx, by)
    if ha != hb:
        return RadialOrder.BEFORE if ha < hb else RadialOrder.AFTER
    return RadialOrder.BEFORE if cross > 0 else RadialOrder.AFTER


def radial_key(vectors: Sequence[tuple]) -> list:
    """Exact sort keys for integer 2D vectors by counterclockwise angle from +x.

    Keys are tuples of ints.  Two vectors on the same ray get equal keys; the
    slope component is ``floor(-x * M / y)`` with ``M`` larger than the square
    of every |y|, which separates any two distinct slopes.
    """
    ymax = max((abs(v[1]) for v in vectors), default=1)
    big = 1 << (2 * max(ymax.bit_length(), 1) + 1)
    keys = []
    for x, y in vectors:
        if x == 0 and y == 0:
            raise DegenerateError("zero vector in radial sort")
        h = _half(x, y)
        if h:
            x, y = -x, -y
        if y == 0:
            keys.append((h, 0, 0))
        else:
            keys.append((h, 1, (-x * big) // y))
    return keys


def halfplane_left_counts(vectors: Sequence[tuple]) -> list[int]:
    """For each integer vector v_i, the number of v_j with cross(v_i, v_j) > 0.

    Runs in O(m log m) by radial sort and a rotating two-pointer sweep.
    Raises DegenerateError if two vectors are parallel or antiparallel.
    """
    m = len(vectors)
    if m == 0:
        return []
    keys = radial_key(vectors)
    order = sorted(range(m), key=keys.__getitem__)
    for t in range(m - 1):
        if keys[order[t]] == keys[order[t + 1]]:
            raise DegenerateError("two vectors on the same ray")
    res = [0] * m
    j = 1
    for idx in range(m):
        i = order[idx]
        xi, yi = vectors[i]
        if j < idx + 1:
            j = idx + 1
        while j < idx + m:
            xj, yj = vectors[order[j % m]]
            c = xi * yj - yi * xj
            if c > 0:
                j += 1
                continue
            if c == 0:
                raise DegenerateError("two vectors on opposite rays")
            break
        res[i] = j - idx - 1
    return res


# ------------------------------------------------------------------ sequences


class _Cache:
    """Memo tables grown under a lock; reads of filled entries are lock-free."""

    def __init__(self):
        self.lock = threading.Lock()
        self.catalan = [1]
        self.motzkin = [1, 1]
        self.totient: dict[int, int] = {}


_CACHE = _Cache()


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; 0 when k < 0 or k > n (including n < 0)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(k: int) -> int:
    if k < 0:
        raise InputError("catalan index must be >= 0")
    table = _CACHE.catalan
    if k >= len(table):
        with _CACHE.lock:
            while len(table) <= k:
                i = len(table)
                table.append(math.comb(2 * i, i) // (i + 1))
    return table[k]


def motzkin(k: int) -> int:
    if k < 0:
        raise InputError("motzkin index must be >= 0")
    table = _CACHE.motzkin
    if k >= len(table):
        with _CACHE.lock:
            while len(table) <= k:
                i = len(table)
                # (i+2) M_i = (2i+1) M_{i-1} + (3i-3) M_{i-2}, shifted to index i
                table.append(((2 * i + 1) * table[i - 1] + (3 * i - 3) * table[i - 2]) // (i + 2))
    return table[k]


def ternary(k: int) -> int:
    """T_k = binom(3(k-1), k-1) / (2k-1): crossing-free spanning trees on k convex points."""
    if k < 1:
        raise InputError("ternary index must be >= 1")
    return math.comb(3 * (k - 1), k - 1) // (2 * k - 1)


def totient(k: int) -> int:
    if k < 1:
        raise InputError("totient index must be >= 1")
    cached = _CACHE.totient.get(k)
    if cached is not None:
        return cached
    result, m, p = k, k, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    with _CACHE.lock:
        _CACHE.totient[k] = result
    return result


def sequence_value(kind: str, *indices: int) -> int:
    if any(i < 0 for i in indices):
        raise InputError("sequence indices must be >= 0")
    if kind == "binomial":
        return binomial(*indices)
    funcs = {"catalan": catalan, "motzkin": motzkin, "ternary": ternary, "totient": totient}
    try:
        func = funcs[kind]
    except KeyError:
        raise InputError(f"unknown sequence {kind!r}") from None
    (index,) = indices
    return func(index)
