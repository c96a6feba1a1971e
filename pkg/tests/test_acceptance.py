"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that is printed immediately (visible with
``-s``) and repeated in the terminal summary.
"""
import random
import time
from itertools import combinations

import pytest

from conftest import general_position_sample, record
from wheelsets.depth import DepthConfig, EmbraceQuery, embrace_count, frequency_vector_d, simplicial_depth
from wheelsets.exact_core import catalan, det_sign, motzkin
from wheelsets.fixtures import fixture
from wheelsets.gale import f_vector, facet_count, minimal_embracing_count
from wheelsets.graph_count import (
    BUILTIN_CLASSES,
    build_class_table,
    check_sym_maximizer,
    count,
    crossing_stats,
    embrace_counts_2d,
    frequency_from_embrace,
    local_frequency_multiset,
    order_type_from_triangles,
    triangle_family,
)
from wheelsets.oracle import (
    oracle_embrace,
    oracle_embrace_profile,
    oracle_f_vector,
    oracle_facets,
    oracle_graph_count,
    oracle_minimal_embracing,
)
from wheelsets.wheel import (
    canonical_necklace,
    count_frequency_vectors,
    count_order_types,
    enumerate_frequency_vectors,
    enumerate_order_types,
    frequency_vector,
    p_bar,
    p_con,
    p_sym,
    realize_frequency_vector,
    realize_necklace,
)

WITH_REFLECTION = (1, 1, 2, 2, 4, 5, 9, 12, 23, 34, 63, 102)
WITHOUT_REFLECTION = (1, 1, 2, 2, 4, 6, 10, 16, 30, 52, 94, 172)
FREQUENCY_VECTORS = (1, 1, 2, 2, 4, 4, 8, 8, 16, 16, 32, 32)


def _check(criterion: int, failures: list, detail: str) -> None:
    ok = not failures
    record(criterion, ok, detail if ok else f"{detail}; first failures: {failures[:3]}")
    assert ok, failures[:5]


def test_criterion_01_enumeration_counts():
    failures = []
    for n in range(1, 13):
        got = (count_order_types(n, True), count_order_types(n, False), count_frequency_vectors(n))
        want = (WITH_REFLECTION[n - 1], WITHOUT_REFLECTION[n - 1], FREQUENCY_VECTORS[n - 1])
        lists = (len(enumerate_order_types(n, True)), len(enumerate_order_types(n, False)),
                 len(enumerate_frequency_vectors(n)))
        if got != want or lists != want:
            failures.append((n, got, lists, want))
    _check(1, failures, "order types and frequency vectors for n = 1..12")


def test_criterion_02_reference_frequency_vectors():
    got = (frequency_vector(p_con(7)), frequency_vector(p_bar(7)), frequency_vector(p_sym(7)))
    want = ((1, 0, 2, 0, 2, 0, 2), (1, 0, 2, 0, 4, 0, 0), (7, 0, 0, 0, 0, 0, 0))
    _check(2, [] if got == want else [(got, want)], "convex, barely-in and symmetric sets at n = 7")


@pytest.mark.slow
def test_criterion_03_formula_matches_oracle():
    failures = []
    checked = 0
    for n in range(1, 9):
        for F in enumerate_frequency_vectors(n):
            P = realize_frequency_vector(F)
            for cls in BUILTIN_CLASSES:
                if cls == "triangulations" and F[n - 1] != 0:
                    continue
                expected = oracle_graph_count(cls, list(P.points), extra_index=n)
                got = count(cls, P)
                checked += 1
                if got != expected:
                    failures.append((cls, F, got, expected))
    _check(3, failures, f"{checked} (class, frequency vector) pairs with n <= 8")


def test_criterion_04_closed_forms():
    failures = []
    for n in range(1, 11):
        for F in enumerate_frequency_vectors(n):
            if F[n - 1] == 0:
                if count("spanning_cycles", F) != n:
                    failures.append(("cycles", F))
                if count("spanning_paths", F) != n * 2 ** (n - 1):
                    failures.append(("paths", F))
            if count("convex_partitions", F) != catalan(n + 1):
                failures.append(("partitions", F))
        if count("matchings", frequency_vector(p_con(n))) != motzkin(n + 1):
            failures.append(("matchings", n))
    _check(4, failures, "cycles, paths, convex partitions and convex matchings for n <= 10")


def test_criterion_05_reconstruction_round_trip():
    failures = []
    for n in range(1, 13):
        for F in enumerate_frequency_vectors(n):
            if frequency_from_embrace(embrace_counts_2d(realize_frequency_vector(F))) != F:
                failures.append(F)
    n_types = 0
    for n in range(1, 10):
        for N in enumerate_order_types(n):
            n_types += 1
            if order_type_from_triangles(triangle_family(realize_necklace(N))) != canonical_necklace(N):
                failures.append(N)
    _check(5, failures, f"all frequency vectors n <= 12 and {n_types} order types n <= 9")


@pytest.mark.slow
def test_criterion_06_simplicial_depth():
    rng = random.Random(6)
    failures = []
    for d, n in ((2, 12), (3, 12), (4, 11), (5, 10)):
        for trial in range(100):
            pts, w = general_position_sample(rng, n, d)
            got = simplicial_depth(pts, w, DepthConfig(seed=trial))
            if got != oracle_embrace(pts, w, d + 1):
                failures.append(("depth", d, n, trial))
    for d in range(1, 6):
        n = (14, 12, 11, 10, 9)[d - 1]
        for trial in range(20):
            pts, w = general_position_sample(rng, n, d)
            profile = oracle_embrace_profile(pts, w)
            got = [embrace_count(EmbraceQuery(tuple(pts), w, k)) for k in range(n + 1)]
            if got != profile:
                failures.append(("profile", d, trial))
    fx = fixture("appendix_c_pair")
    depths = tuple(simplicial_depth(fx.point_sets[s], fx.extra_points[s]) for s in ("H", "H_prime"))
    freqs = tuple(frequency_vector_d(fx.point_sets[s], fx.extra_points[s]) for s in ("H", "H_prime"))
    if depths != (6, 4) or freqs != ((0, 12, 0, 9, 0, 0),) * 2:
        failures.append(("fixture", depths, freqs))
    _check(6, failures, "400 depth queries, 100 full profiles, and the lifted fixture pair")


@pytest.mark.slow
def test_criterion_07_depth_performance():
    rng = random.Random(7)
    big = [tuple(rng.randint(-10**9, 10**9) for _ in range(3)) for _ in range(2000)]
    start = time.perf_counter()
    simplicial_depth(big, (0, 0, 0), DepthConfig(method="fast"))
    elapsed = time.perf_counter() - start
    small = [tuple(rng.randint(-10**9, 10**9) for _ in range(3)) for _ in range(200)]
    fast = simplicial_depth(small, (0, 0, 0), DepthConfig(method="fast"))
    naive = simplicial_depth(small, (0, 0, 0), DepthConfig(method="naive"))
    failures = []
    if elapsed >= 120:
        failures.append(("time", round(elapsed, 1)))
    if fast != naive:
        failures.append(("fast != naive", fast, naive))
    _check(7, failures, f"d = 3, n = 2000 in {elapsed:.1f} s; fast and naive agree at n = 200")


def _affinely_general(points) -> bool:
    d = len(points[0])
    for c in combinations(points, d + 1):
        rows = [[x - y for x, y in zip(p, c[0])] for p in c[1:]]
        if det_sign(rows) == 0:
            return False
    return True


@pytest.mark.slow
def test_criterion_08_gale_face_counts():
    rng = random.Random(8)
    failures = []
    checked = 0
    for d in range(1, 7):
        for k in (2, 3, 4):
            n = d + k
            for trial in range(50):
                while True:
                    pts = [tuple(rng.randint(-1000, 1000) for _ in range(d)) for _ in range(n)]
                    if _affinely_general(pts):
                        break
                fv = f_vector(pts, DepthConfig(seed=trial))
                checked += 1
                if fv.entries != oracle_f_vector(pts) or facet_count(pts) != len(oracle_facets(pts)):
                    failures.append((d, k, trial))
                if not fv.euler_ok():
                    failures.append(("euler", d, k, trial))
    _check(8, failures, f"{checked} primal sets, d = 1..6, n - d in (2, 3, 4)")


def _random_direction_multiset(rng: random.Random) -> list[tuple]:
    pool = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 3), (-3, 2), (5, -2)]
    pool += [(-x, -y) for x, y in pool]
    pts: list[tuple] = []
    limit = rng.randint(2, 10)
    while len(pts) < limit:
        v = rng.choice(pool)
        for _ in range(min(rng.randint(1, 3), limit - len(pts))):
            s = rng.randint(1, 5)
            pts.append((v[0] * s, v[1] * s))
    # never exceed three points per ray
    by_ray: dict = {}
    kept = []
    for p in pts:
        key = minimal_embracing_key(p)
        if by_ray.get(key, 0) < 3:
            by_ray[key] = by_ray.get(key, 0) + 1
            kept.append(p)
    return kept


def minimal_embracing_key(p):
    from math import gcd

    g = gcd(*p)
    return (p[0] // g, p[1] // g)


def test_criterion_09_minimal_embracing():
    rng = random.Random(9)
    failures = []
    with_antipodal = 0
    for trial in range(200):
        pts = _random_direction_multiset(rng)
        keys = {minimal_embracing_key(p) for p in pts}
        with_antipodal += any((-a, -b) in keys for a, b in keys)
        got, want = minimal_embracing_count(pts), oracle_minimal_embracing(pts)
        if got != want:
            failures.append((pts, got, want))
    if with_antipodal == 0:
        failures.append("no antipodal configurations sampled")
    _check(9, failures, f"200 multisets, {with_antipodal} with antipodal rays")


@pytest.mark.slow
def test_criterion_10_symmetric_maximizer():
    failures = []
    classes = ("embracing_triangles", "matchings", "spanning_trees")
    for cls in classes:
        for n in range(1, 13):
            report = check_sym_maximizer(cls, n)
            if not report.maximized:
                failures.append(("max", cls, n))
        for n in range(1, 21):
            t = build_class_table(cls, n)
            if any(t.delta(i, n - 2 - i) < 0 for i in range(n - 1) if i < n - 2 - i):
                failures.append(("delta", cls, n))
    _check(10, failures, "maximizer for n <= 12, increments non-negative for n <= 20")


def test_criterion_11_mutation_pair():
    fx = fixture("appendix_b_pair")
    sets = {s: list(fx.point_sets[s]) + [fx.extra_points[s]] for s in ("P", "P_prime")}
    tri = {s: oracle_graph_count("triangulations", pts) for s, pts in sets.items()}
    local = {s: local_frequency_multiset(pts) for s, pts in sets.items()}
    stats = {s: crossing_stats(pts) for s, pts in sets.items()}
    failures = []
    if abs(tri["P"] - tri["P_prime"]) != 1:
        failures.append(("triangulations", tri))
    if local["P"] != local["P_prime"]:
        failures.append(("local frequency multisets", local))
    if stats["P"] != stats["P_prime"]:
        failures.append(("crossing stats", stats))
    _check(11, failures, f"triangulations {tri['P']} vs {tri['P_prime']}, crossing stats {stats['P']}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
