import math
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from wheelsets.errors import DegenerateError, InputError
from wheelsets.exact_core import (
    RadialOrder,
    as_rational,
    binomial,
    catalan,
    det,
    det_sign,
    halfplane_left_counts,
    integer_direction,
    motzkin,
    orient,
    orient2d,
    radial_compare,
    radial_key,
    sequence_value,
    ternary,
    totient,
)

ints = st.integers(-50, 50)
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Fraction((-1) ** inv)
        for r, c in enumerate(perm):
            term *= m[r][c]
        total += term
    return total


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(fracs, min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
def test_det_matches_permutation_expansion(m):
    assert det(m) == leibniz_det(m)
    assert det_sign(m) == (leibniz_det(m) > 0) - (leibniz_det(m) < 0)


def test_as_rational_parsing():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(7) == 7
    with pytest.raises(InputError):
        as_rational(0.5)
    with pytest.raises(InputError):
        as_rational("1/0")
    with pytest.raises(InputError):
        as_rational("abc")


@given(st.lists(fracs, min_size=1, max_size=5))
def test_integer_direction_is_positive_multiple(v):
    assume(any(v))
    u = integer_direction(v)
    assert all(isinstance(c, int) for c in u)
    ratios = {Fraction(a) / b for a, b in zip(u, v) if b != 0}
    assert len(ratios) == 1 and ratios.pop() > 0
    assert all(a == 0 for a, b in zip(u, v) if b == 0)


@given(ints, ints, ints, ints, ints, ints)
def test_orient2d_antisymmetry_and_orient_agreement(ax, ay, bx, by, cx, cy):
    a, b, c = (ax, ay), (bx, by), (cx, cy)
    assert orient2d(a, b, c) == -orient2d(b, a, c) == orient2d(b, c, a)
    assert orient(a, [b, c]) == orient2d(a, b, c)


def test_orient_rejects_bad_shapes():
    with pytest.raises(InputError):
        orient((0, 0), [(1, 0)])
    with pytest.raises(InputError):
        orient((0, 0), [(1, 0), (1, 0, 0)])


def _angle(v):
    return math.atan2(v[1], v[0]) % (2 * math.pi)


small_vec = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(lambda v: v != (0, 0))


@given(small_vec, small_vec)
def test_radial_compare_agrees_with_angles(a, b):
    r = radial_compare((0, 0), a, b)
    cross = a[0] * b[1] - a[1] * b[0]
    if cross == 0:
        assert r in (RadialOrder.SAME_RAY, RadialOrder.OPPOSITE_RAY)
        return
    assert r == (RadialOrder.BEFORE if _angle(a) < _angle(b) else RadialOrder.AFTER)


@given(st.lists(small_vec, min_size=1, max_size=20))
def test_radial_key_order_and_ties(vs):
    keys = radial_key(vs)
    for i in range(len(vs)):
        for j in range(len(vs)):
            r = radial_compare((0, 0), vs[i], vs[j])
            if r == RadialOrder.SAME_RAY:
                assert keys[i] == keys[j]
            elif r == RadialOrder.BEFORE:
                assert keys[i] < keys[j]
            elif r == RadialOrder.AFTER:
                assert keys[i] > keys[j]


@given(st.lists(small_vec, min_size=1, max_size=25, unique=True))
def test_halfplane_left_counts_brute_force(vs):
    prims = set()
    for x, y in vs:
        g = math.gcd(x, y)
        prims.add((x // g, y // g) if (y > 0 or (y == 0 and x > 0)) else (-x // g, -y // g))
    assume(len(prims) == len(vs))
    brute = [sum(1 for u in vs if v[0] * u[1] - v[1] * u[0] > 0) for v in vs]
    assert halfplane_left_counts(vs) == brute


def test_halfplane_left_counts_rejects_parallel():
    with pytest.raises(DegenerateError):
        halfplane_left_counts([(1, 0), (0, 1), (-2, 0)])
    with pytest.raises(DegenerateError):
        halfplane_left_counts([(1, 1), (2, 2)])


def test_sequences_against_recurrences():
    cat = [1]
    mot = [1, 1]
    for k in range(1, 30):
        cat.append(sum(cat[i] * cat[k - 1 - i] for i in range(k)))
    for k in range(2, 30):
        mot.append(mot[k - 1] + sum(mot[i] * mot[k - 2 - i] for i in range(k - 1)))
    assert [catalan(k) for k in range(30)] == cat
    assert [motzkin(k) for k in range(30)] == mot
    assert [ternary(k) for k in range(1, 7)] == [1, 1, 3, 12, 55, 273]
    assert [totient(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert binomial(5, 7) == 0 and binomial(-1, 0) == 0 and binomial(10, 3) == 120
    assert sequence_value("catalan", 5) == 42
    assert sequence_value("binomial", 6, 2) == 15
    with pytest.raises(InputError):
        sequence_value("fibonacci", 3)
    with pytest.raises(InputError):
        sequence_value("catalan", -1)
