import math
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from wheelsets.errors import (
    BoundExceeded,
    DegenerateError,
    InconsistentProfile,
    InputError,
    NeedsWheelError,
    NotConowheelError,
    NotRealizableError,
)
from wheelsets.exact_core import binomial, catalan
from wheelsets.graph_count import (
    BUILTIN_CLASSES,
    CONVEX_TRIANGULATION_CONVENTION,
    EmbraceProfile,
    TriangleFamily,
    build_class_table,
    check_sym_maximizer,
    count,
    count_detailed,
    crossing_stats,
    custom_class_delta,
    custom_class_table,
    embrace_counts_2d,
    frequency_from_embrace,
    order_type_from_triangles,
    triangle_family,
)
from wheelsets.oracle import (
    count_embeddings,
    oracle_crossing_stats,
    oracle_embrace_profile,
    oracle_graph_count,
    oracle_triangle_family,
)
from wheelsets.wheel import (
    canonical_necklace,
    conowheel_from,
    enumerate_frequency_vectors,
    enumerate_order_types,
    necklace_of,
    p_con,
    realize_frequency_vector,
    realize_necklace,
    unit_circle_point,
)


@st.composite
def conowheel_sets(draw, max_n=7):
    degrees = draw(st.lists(st.integers(0, 359), min_size=3, max_size=max_n, unique=True))
    H = [unit_circle_point(math.radians(a)) for a in degrees]
    w = (draw(st.fractions(-1, 1, max_denominator=9)), draw(st.fractions(-1, 1, max_denominator=9)))
    try:
        return conowheel_from(H, w)
    except (DegenerateError, NotConowheelError):
        assume(False)


@pytest.mark.parametrize("cls", BUILTIN_CLASSES)
@pytest.mark.parametrize("n", range(1, 16))
def test_table_consistency(cls, n):
    t = build_class_table(cls, n)
    for l in range(n):
        assert t.lam(l, n - 1 - l) == t.c_n + sum(t.deltas[l:n - 1])
    for F in enumerate_frequency_vectors(n):
        r = count_detailed(cls, F, strict=False)
        assert r.via_lambda == r.via_frequency
        assert r.value >= 0


def test_table_validation():
    t = build_class_table("matchings", 6)
    with pytest.raises(InputError):
        t.delta(1, 1)
    with pytest.raises(InputError):
        t.lam(2, 2)
    with pytest.raises(InputError):
        build_class_table("perfect_matchings", 4)
    with pytest.raises(InputError):
        build_class_table("custom", 4)
    with pytest.raises(InputError):
        count("matchings", (0, 3, 0))


@settings(max_examples=25, deadline=None)
@given(conowheel_sets())
def test_counts_match_oracle_on_arbitrary_sets(P):
    pts = list(P.points)
    for cls in BUILTIN_CLASSES:
        if cls == "triangulations" and P.is_convex_position:
            continue
        assert count(cls, P) == oracle_graph_count(cls, pts, extra_index=P.n), cls


def test_convex_triangulations_convention():
    P = p_con(6)
    r = count_detailed("triangulations", P)
    assert r.value == catalan(5) == oracle_graph_count("triangulations", list(P.points))
    assert r.convention == CONVEX_TRIANGULATION_CONVENTION
    with pytest.raises(NeedsWheelError):
        count("triangulations", P, strict=True)


def _matching_graphs(v):
    graphs = []
    for k in range(v // 2 + 1):
        g = nx.empty_graph(v)
        g.add_edges_from((2 * i, 2 * i + 1) for i in range(k))
        graphs.append(g)
    return graphs


@pytest.mark.parametrize("n", [3, 4, 5])
def test_custom_tables_reproduce_builtin_classes(n):
    for cls, graphs in (("spanning_paths", [nx.path_graph(n + 1)]),
                        ("spanning_cycles", [nx.cycle_graph(n + 1)]),
                        ("matchings", _matching_graphs(n + 1))):
        t, b = custom_class_table(graphs, n), build_class_table(cls, n)
        assert t.deltas == b.deltas, cls
        # the additive constant in lambda is free; only the counts must agree
        for F in enumerate_frequency_vectors(n):
            assert count(cls, F, table=t) == count(cls, F), (cls, F)


def test_custom_class_counts_match_embeddings():
    n = 5
    star = nx.star_graph(n)  # one center joined to every other point
    table = build_class_table("custom", n, graphs=[star])
    for F in enumerate_frequency_vectors(n):
        P = realize_frequency_vector(F)
        assert count("custom", P, table=table) == count_embeddings(list(P.points), [star])


def _concave_quads_with_edge(points):
    from itertools import combinations

    others = range(2, len(points))
    return sum(oracle_crossing_stats([points[0], points[1]] + [points[i] for i in pair])[1]
               for pair in combinations(others, 2))


@pytest.mark.parametrize("i,j", [(0, 2), (2, 0), (0, 3), (1, 2)])
def test_custom_delta_k4(i, j):
    # a plane K4 is a non-convex 4-subset; delta counts those through h1h2 gained by the mutation
    from wheelsets.graph_count import _mutation_pair

    k4 = nx.complete_graph(4)
    k4.add_nodes_from(range(4, i + j + 3))
    P, P2 = _mutation_pair(i, j)
    assert custom_class_delta([k4], i, j) == _concave_quads_with_edge(P2) - _concave_quads_with_edge(P)


def test_custom_delta_small_cases():
    assert custom_class_delta([nx.cycle_graph(5)], 1, 1) == 0
    with pytest.raises(BoundExceeded):
        custom_class_delta([nx.path_graph(12)], 5, 5)


@pytest.mark.parametrize("n", range(1, 11))
def test_embrace_round_trip_and_oracle(n):
    for F in enumerate_frequency_vectors(n):
        P = realize_frequency_vector(F)
        E = embrace_counts_2d(P)
        if n <= 8:
            assert list(E.counts) == oracle_embrace_profile(P.hull_points, P.extra_point)[3:]
        assert frequency_from_embrace(E) == F


def test_inconsistent_profile():
    E = embrace_counts_2d(realize_frequency_vector((1, 0, 2, 0, 2)))
    bad = EmbraceProfile(E.n, (E.counts[0] + 1,) + E.counts[1:])
    with pytest.raises(InconsistentProfile):
        frequency_from_embrace(bad)
    with pytest.raises(InconsistentProfile):
        frequency_from_embrace(EmbraceProfile(5, (0, 0)))


@pytest.mark.parametrize("n", range(3, 9))
def test_order_type_from_shuffled_triangles(n):
    rng = random.Random(n)
    for N in enumerate_order_types(n):
        P = realize_necklace(N)
        T = triangle_family(P)
        assert set(T.triples) == oracle_triangle_family(P.hull_points, P.extra_point)
        perm = list(range(n))
        rng.shuffle(perm)
        shuffled = TriangleFamily(n, tuple(frozenset(perm[i] for i in t) for t in T.triples))
        assert order_type_from_triangles(shuffled) == canonical_necklace(necklace_of(P))


def test_order_type_rejects_non_realizable():
    with pytest.raises(NotRealizableError):
        # every triangle of 5 points cannot embrace the same point
        order_type_from_triangles(TriangleFamily(5, tuple(
            frozenset(t) for t in [(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 4),
                                   (0, 3, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])))
    with pytest.raises(InputError):
        order_type_from_triangles(TriangleFamily(4, (frozenset((0, 1, 7)),)))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-40, 40), st.integers(-40, 40)), min_size=4, max_size=11, unique=True))
def test_crossing_stats_match_oracle(pts):
    try:
        got = crossing_stats(pts)
    except DegenerateError:
        assume(False)
    assert got == oracle_crossing_stats(pts)
    assert sum(got) == binomial(len(pts), 4)


@pytest.mark.parametrize("cls", ["embracing_triangles", "matchings", "spanning_trees"])
def test_symmetric_vector_maximizes(cls):
    for n in range(1, 10):
        report = check_sym_maximizer(cls, n)
        assert report and report.delta_condition


def test_single_point_paths():
    assert build_class_table("spanning_paths", 1).anchor_convex == Fraction(1)
    assert count("spanning_paths", (1,)) == 1
