import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from forestdec.errors import UnknownVertex
from forestdec.satmatch import (
    Bipartition,
    OddCycle,
    TwoSatInstance,
    UndirectedGraph,
    bipartition,
    clause_satisfied,
    matching_covering,
    maximum_matching,
    solve_2sat,
)

X, Y = 0, 1

PETERSEN = UndirectedGraph.of(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


def is_matching(g: UndirectedGraph, chosen) -> bool:
    return naive.is_matching(g.edges, chosen)


def test_two_sat_forces_y():
    phi = solve_2sat(TwoSatInstance.of(2, [((X, True), (Y, True)), ((X, False), (Y, True))]))
    assert phi is not None and phi[Y] is True


def test_two_sat_contradiction():
    assert solve_2sat(TwoSatInstance.of(1, [((X, True), (X, True)), ((X, False), (X, False))])) is None


def test_two_sat_empty_is_all_false():
    assert solve_2sat(TwoSatInstance.of(3, [])) == [False, False, False]


def test_single_edge_bipartition():
    result = bipartition(UndirectedGraph.of(2, [(0, 1)]))
    assert result == Bipartition(frozenset({0}), frozenset({1}))


def test_triangle_has_odd_cycle():
    g = UndirectedGraph.of(3, [(0, 1), (1, 2), (2, 0)])
    result = bipartition(g)
    assert isinstance(result, OddCycle)
    assert len(result.edges) == 3


def test_four_cycle_alternates():
    result = bipartition(UndirectedGraph.of(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert result == Bipartition(frozenset({0, 2}), frozenset({1, 3}))


def test_parallel_edges_are_even():
    assert isinstance(bipartition(UndirectedGraph.of(2, [(0, 1), (0, 1)])), Bipartition)


def test_matching_examples():
    assert len(maximum_matching(UndirectedGraph.of(4, [(0, 1), (1, 2), (2, 3)]))) == 2
    assert len(maximum_matching(UndirectedGraph.of(3, [(0, 1), (1, 2), (2, 0)]))) == 1


def test_petersen_matching():
    assert naive.maximum_matching_size(PETERSEN.edges) == 5
    m = maximum_matching(PETERSEN)
    assert len(m) == 5 and is_matching(PETERSEN, m)


def test_matching_covering_examples():
    assert matching_covering(UndirectedGraph.of(2, [(0, 1)]), {0}) == {0}
    assert matching_covering(UndirectedGraph.of(3, [(0, 1), (1, 2)]), {0, 2}) is None
    assert matching_covering(UndirectedGraph.of(3, [(0, 1), (1, 2), (2, 0)]), {0, 1, 2}) is None
    with pytest.raises(UnknownVertex):
        matching_covering(UndirectedGraph.of(2, [(0, 1)]), {4})


def test_covering_needs_edges_outside_the_required_set():
    # the required node 0 can only be matched through node 1, whose other neighbours are optional
    g = UndirectedGraph.of(4, [(0, 1), (1, 2), (2, 3)])
    m = matching_covering(g, {0, 3})
    assert m == {0, 2}


@st.composite
def two_sat_instances(draw, max_vars: int = 10):
    n = draw(st.integers(1, max_vars))
    lit = st.tuples(st.integers(0, n - 1), st.booleans())
    return TwoSatInstance.of(n, draw(st.lists(st.tuples(lit, lit), max_size=3 * n)))


@st.composite
def graphs(draw, max_nodes: int = 8, max_edges: int = 10):
    n = draw(st.integers(2, max_nodes))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return UndirectedGraph.of(n, draw(st.lists(pair, max_size=max_edges)))


@given(two_sat_instances())
@settings(max_examples=200, deadline=None)
def test_two_sat_against_brute_force(inst):
    phi = solve_2sat(inst)
    models = naive.two_sat_models(inst.variable_count, inst.clauses)
    assert (phi is not None) == (models > 0)
    if phi is not None:
        assert all(clause_satisfied(c, phi) for c in inst.clauses)


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_bipartition_certificates(g):
    result = bipartition(g)
    if isinstance(result, Bipartition):
        assert result.side_a | result.side_b == frozenset(range(g.node_count))
        assert not result.side_a & result.side_b
        for u, v in g.edges:
            assert (u in result.side_a) != (v in result.side_a)
    else:
        assert len(result.edges) % 2 == 1
        walk = result.nodes
        for i, e in enumerate(result.edges):
            assert set(g.edges[e]) == {walk[i], walk[(i + 1) % len(walk)]}


@given(graphs(max_edges=12))
@settings(max_examples=200, deadline=None)
def test_maximum_matching_against_brute_force(g):
    m = maximum_matching(g)
    assert is_matching(g, m)
    assert len(m) == naive.maximum_matching_size(g.edges)


@given(graphs(max_nodes=10, max_edges=12), st.data())
@settings(max_examples=200, deadline=None)
def test_matching_covering_against_brute_force(g, data):
    required = data.draw(st.sets(st.integers(0, g.node_count - 1)))
    m = matching_covering(g, required)
    assert (m is not None) == naive.has_matching_covering(g.edges, required)
    if m is not None:
        assert is_matching(g, m)
        assert required <= {v for e in m for v in g.edges[e]}


def test_complete_graphs():
    for n in range(2, 8):
        g = UndirectedGraph.of(n, list(itertools.combinations(range(n), 2)))
        assert len(maximum_matching(g)) == n // 2
