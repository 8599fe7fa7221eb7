import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import worked_bogd_example
from forestdec.digraph import (
    SegmentKind,
    build_digraph,
    connected_components,
    degrees,
    random_digraph,
    segment_decomposition,
)
from forestdec.errors import LoopArc, OutOfRange, PreconditionViolated, UnknownVertex


@st.composite
def digraphs(draw, max_vertices: int = 8, max_arcs: int = 16):
    n = draw(st.integers(2, max_vertices))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return build_digraph(n, draw(st.lists(pairs, max_size=max_arcs)))


def test_single_arc_degrees():
    d = build_digraph(2, [(0, 1)])
    assert d.arc_count == 1
    assert degrees(d, 0) == (0, 1)
    assert degrees(d, 1) == (1, 0)


def test_digon_keeps_two_arc_ids():
    d = build_digraph(2, [(0, 1), (1, 0)])
    assert d.arc_count == 2
    assert (d.tails[0], d.heads[0]) == (0, 1)
    assert (d.tails[1], d.heads[1]) == (1, 0)
    assert degrees(d, 0) == (1, 1)


def test_parallel_arcs_are_distinct():
    d = build_digraph(2, [(0, 1), (0, 1)])
    assert d.out_arcs(0) == (0, 1)
    assert degrees(d, 1) == (2, 0)


def test_loop_rejected():
    with pytest.raises(LoopArc):
        build_digraph(1, [(0, 0)])


def test_endpoint_out_of_range():
    with pytest.raises(OutOfRange):
        build_digraph(2, [(0, 2)])


def test_out_star_and_isolated_vertex():
    d = build_digraph(5, [(0, 1), (0, 2), (0, 3)])
    assert degrees(d, 0) == (0, 3)
    assert degrees(d, 4) == (0, 0)


def test_unknown_vertex():
    with pytest.raises(UnknownVertex):
        degrees(build_digraph(2, [(0, 1)]), 5)


def test_components():
    assert connected_components(build_digraph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert connected_components(build_digraph(0, [])) == []
    assert connected_components(build_digraph(3, [(0, 1), (1, 2), (2, 0)])) == [[0, 1, 2]]


def test_random_digraph_respects_parallel_cap():
    rng = random.Random(3)
    d = random_digraph(rng, 3, 12, max_parallel=2)
    assert max(Counter(d.arc_list()).values()) <= 2
    with pytest.raises(PreconditionViolated):
        random_digraph(rng, 3, 13, max_parallel=2)


def test_segment_of_a_path():
    d = build_digraph(3, [(0, 1), (1, 2)])
    (seg,) = segment_decomposition(d, set(), {0, 2})
    assert seg.kind is SegmentKind.PATH
    assert seg.arcs == (0, 1)
    assert seg.endpoints == (0, 2)


def test_lollipop_segments():
    # triangle 0-1-2 hanging at vertex 0, pendant path 0-3-4
    d = build_digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (4, 3)])
    segs = segment_decomposition(d, {0}, {4})
    kinds = sorted(s.kind.value for s in segs)
    assert kinds == ["cycle-at-big", "path"]
    cycle = next(s for s in segs if s.kind is SegmentKind.CYCLE_AT_BIG)
    assert cycle.vertices[0] == cycle.vertices[-1] == 0
    assert set(cycle.arcs) == {0, 1, 2}
    assert cycle.end_arcs == (0, 2)


def test_segment_preconditions():
    with pytest.raises(PreconditionViolated):
        segment_decomposition(build_digraph(4, [(0, 1), (0, 2), (0, 3)]), set(), {1, 2, 3})
    with pytest.raises(PreconditionViolated):
        segment_decomposition(build_digraph(3, [(0, 1), (1, 2), (2, 0)]), set(), set())


def test_worked_example_has_eight_segments():
    d, segments, names = worked_bogd_example()
    attach = {names[v] for v in ("v1", "v2", "v3", "v4", "v5")}
    big = {v for v in attach if d.degree(v) >= 3}
    found = segment_decomposition(d, big, attach - big)
    assert len(found) == 8
    expected = []
    offset = 0
    for arcs in segments.values():
        expected.append(frozenset(range(offset, offset + len(arcs))))
        offset += len(arcs)
    assert sorted(map(sorted, (frozenset(s.arcs) for s in found))) == sorted(map(sorted, expected))


def test_segments_are_emitted_from_the_smaller_attachment():
    d, _, _ = worked_bogd_example()
    attach = set(range(5))
    big = {v for v in attach if d.degree(v) >= 3}
    for seg in segment_decomposition(d, big, attach - big):
        assert seg.vertices[0] <= seg.vertices[-1]


@given(digraphs())
@settings(max_examples=150, deadline=None)
def test_degree_sums(d):
    assert sum(d.out_degree(v) for v in d.vertices) == d.arc_count
    assert sum(d.in_degree(v) for v in d.vertices) == d.arc_count


@given(digraphs(max_vertices=10, max_arcs=14), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_segments_partition_the_arcs(d, rnd):
    # choose attachments so that every interior vertex has degree 2 and every component is anchored
    attach = {v for v in d.vertices if d.degree(v) not in (0, 2)}
    for comp in connected_components(d):
        if not any(v in attach for v in comp) and any(d.degree(v) for v in comp):
            attach.add(rnd.choice([v for v in comp if d.degree(v)]))
    big = {v for v in attach if d.degree(v) >= 3}
    segs = segment_decomposition(d, big, attach - big)
    arcs = [a for s in segs for a in s.arcs]
    assert sorted(arcs) == list(range(d.arc_count))
    rebuilt = Counter((d.tails[a], d.heads[a]) for s in segs for a in s.arcs)
    assert rebuilt == Counter(d.arc_list())
    for s in segs:
        assert all(d.degree(v) == 2 for v in s.vertices[1:-1])
