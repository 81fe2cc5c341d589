from collections import Counter

from hypothesis import given, strategies as st

from adjminors import (
    AdjacentMinor,
    MinorSet,
    build_gamma,
    classify,
    component_summaries,
    components,
    free_minors,
    gamma_dot,
    has_4cycle,
    is_chessboard,
)
from adjminors.census import gamma_cycle_sets, iter_minor_sets

from conftest import CYCLE8_CELLS


def test_build_gamma_is_4cycle(cycle4_set):
    g = build_gamma(cycle4_set)
    assert g.vertex_count == 4 and g.edge_count == 4
    assert all(len(ns) == 2 for ns in g.adjacency().values())
    assert len(components(g)) == 1


def test_build_gamma_isolated():
    g = build_gamma(MinorSet.of(2, 2, [(1, 1)]))
    assert g.vertex_count == 1 and g.edge_count == 0
    g = build_gamma(MinorSet.of(5, 5, [(1, 1), (3, 3)]))
    assert g.vertex_count == 2 and g.edge_count == 0


def test_component_summaries(cycle4_set):
    assert [(c.vertices, c.edges, c.cycle_rank) for c in component_summaries(build_gamma(cycle4_set))] == [(4, 4, 1)]
    path3 = MinorSet.of(5, 5, [(1, 1), (2, 2), (3, 3)])
    assert [(c.vertices, c.edges, c.cycle_rank) for c in component_summaries(build_gamma(path3))] == [(3, 2, 0)]
    two = MinorSet.of(5, 5, [(1, 1), (3, 3)])
    assert [(c.vertices, c.edges) for c in component_summaries(build_gamma(two))] == [(1, 0), (1, 0)]


def test_has_4cycle(cycle4_set, cycle8_set):
    assert has_4cycle(build_gamma(cycle4_set))
    assert not has_4cycle(build_gamma(MinorSet.of(5, 5, [(1, 1), (2, 2), (3, 3)])))
    assert not has_4cycle(build_gamma(cycle8_set))


def test_free_minors_single():
    out = free_minors(MinorSet.of(2, 2, [(1, 1)]))
    assert out == [(AdjacentMinor(1, 1), "both")]


def test_free_minors_pair():
    out = free_minors(MinorSet.of(4, 4, [(1, 1), (2, 2)]))
    # the shared variable x_2_2 sits on both main diagonals
    assert out == [(AdjacentMinor(1, 1), "anti"), (AdjacentMinor(2, 2), "anti")]


def test_free_minors_8cycle(cycle8_set):
    out = free_minors(cycle8_set)
    assert {(m.a, m.b) for m, _ in out} == {(2, 4), (4, 4), (4, 2), (2, 2)}
    # brute-force oracle: a diagonal pair is free iff no other minor uses it
    for m in cycle8_set:
        others = [n for n in cycle8_set if n != m]
        used_elsewhere = {v for n in others for v in n.variables()}
        main_free = not (set(m.main_diagonal()) & used_elsewhere)
        anti_free = not (set(m.anti_diagonal()) & used_elsewhere)
        listed = {f for n, f in out if n == m}
        if main_free and anti_free:
            assert listed == {"both"}
        elif main_free:
            assert listed == {"main"}
        elif anti_free:
            assert listed == {"anti"}
        else:
            assert not listed


def test_classify(cycle4_set, cycle8_set):
    cls = classify(cycle4_set)
    assert not cls.prime and not cls.realizable and cls.has_4cycle
    assert cls.violated_condition() == "the companion graph contains a 4-cycle"
    cls = classify(MinorSet.of(4, 4, [(1, 1), (2, 2)]))
    assert cls.prime and cls.realizable
    cls = classify(cycle8_set)
    assert cls.prime and cls.realizable and cls.max_component_cycle_rank == 1
    cls = classify(MinorSet.of(2, 3, [(1, 1), (1, 2)]))
    assert not cls.chessboard and not cls.prime
    assert classify(MinorSet.of(2, 2, [])).realizable


def test_gamma_dot(cycle4_set):
    dot = gamma_dot(build_gamma(cycle4_set))
    assert dot.startswith("graph gamma {")
    assert '"[1,2|2,3]";' in dot
    assert '"[1,2|2,3]" -- "[2,3|1,2]";' in dot
    assert dot.count("--") == 4


def test_chessboard_edges_are_diagonal_neighbors():
    # over the census of 4x4 cell boards: for chessboard sets the companion
    # edges are exactly the |da| = |db| = 1 pairs, and no triangles appear
    for s in iter_minor_sets(3, 3, 4, chessboard_only=True):
        g = build_gamma(s)
        expected = {
            (u, v)
            for i, u in enumerate(s.minors)
            for v in s.minors[i + 1:]
            if abs(u.a - v.a) == 1 and abs(u.b - v.b) == 1
        }
        assert set(g.edges) == expected
        adj = g.adjacency()
        for u, v in g.edges:
            assert not set(adj[u]) & set(adj[v]), "triangle in a chessboard companion graph"


def test_realizable_implies_prime():
    for s in iter_minor_sets(3, 3, 4):
        cls = classify(s)
        if cls.realizable:
            assert cls.prime
        if cls.prime:
            assert cls.chessboard and not cls.has_4cycle


def test_gamma_commutes_with_transposition():
    for s in iter_minor_sets(2, 3, 3):
        g = build_gamma(s)
        gt = build_gamma(s.transposed())
        mapped = {tuple(sorted((u.transposed(), v.transposed()))) for u, v in g.edges}
        assert mapped == set(gt.edges)


def test_cycle_configurations_free_minor_counts():
    # companion-graph cycles on 6x6 cell boards (7x7 grids): the two-free-minor
    # guarantee holds for every cycle of length >= 8; length-4 cycles never
    # have one (each minor shares a variable of both diagonals with its
    # neighbours), which is why they are excluded from the prime case
    sets = gamma_cycle_sets(6, 6)
    lengths = Counter(len(s) for s in sets)
    assert lengths[4] > 0 and lengths[8] > 0 and lengths[10] > 0
    for s in sets:
        assert is_chessboard(s)
        summaries = component_summaries(build_gamma(s))
        assert len(summaries) == 1 and summaries[0].cycle_rank == 1
        free_count = len(free_minors(s))
        if len(s) >= 8:
            assert free_count >= 2
        else:
            assert free_count == 0
