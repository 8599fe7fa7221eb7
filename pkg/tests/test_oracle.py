import json
import os
import subprocess
import sys

from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from forestdec.digraph import build_digraph
from forestdec.forests import INF, Decomposition, Family, Part, ProblemSpec, verify_decomposition
from forestdec.gadgets import k_variable_gadget, short_k_in_forcer
from forestdec.oracle import (
    BudgetExceeded,
    Outcome,
    SearchBudget,
    bfs_arc_order,
    oracle_decide,
    oracle_enumerate,
)
from test_digraph import digraphs

LF, OG = Family.LINEAR_FOREST, Family.OUT_GALAXY
specs = st.builds(
    ProblemSpec,
    st.sampled_from([LF, OG]),
    st.sampled_from([1, 2, 3, INF]),
    st.sampled_from([1, 2, 3, INF]),
)


def naive_labellings(d, spec, fixed=None):
    return naive.all_labellings(d.arc_list(), spec.family.value, spec.first, spec.second, fixed)


def test_triangle_with_matching():
    d = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    result = oracle_decide(d, ProblemSpec(LF, INF, 1))
    assert result.outcome is Outcome.YES
    assert verify_decomposition(d, result.decomposition, ProblemSpec(LF, INF, 1))


def test_degree_four_refuted():
    d = build_digraph(5, [(0, 1), (0, 2), (3, 0), (4, 0)])
    assert oracle_decide(d, ProblemSpec(LF, 2, 1)).outcome is Outcome.NO


def test_in_star_of_three():
    d = build_digraph(4, [(1, 0), (2, 0), (3, 0)])
    assert oracle_decide(d, ProblemSpec(OG, INF, INF)).outcome is Outcome.NO


def test_single_arc_two_decompositions():
    d = build_digraph(2, [(0, 1)])
    found = oracle_enumerate(d, ProblemSpec(LF, 1, 1))
    assert [x.labels for x in found] == [(Part.FIRST,), (Part.SECOND,)]


def test_digon_splits():
    d = build_digraph(2, [(0, 1), (1, 0)])
    found = oracle_enumerate(d, ProblemSpec(LF, 2, 1))
    assert [x.labels for x in found] == [(Part.FIRST, Part.SECOND), (Part.SECOND, Part.FIRST)]


def test_short_forcer_arc_always_in_matching():
    g = short_k_in_forcer(3)
    found = oracle_enumerate(g.digraph, g.spec)
    assert found
    assert all(dec[g.arcs["a"]] is Part.SECOND for dec in found)


def test_empty_digraph():
    d = build_digraph(3, [])
    result = oracle_decide(d, ProblemSpec(LF, 1, 1))
    assert result.outcome is Outcome.YES and result.decomposition == Decomposition(())


def test_node_budget_reported():
    g = k_variable_gadget(3)
    result = oracle_decide(g.digraph, g.spec, SearchBudget(max_nodes=10))
    assert result.outcome is Outcome.BUDGET_EXCEEDED
    assert result.nodes == 10
    full = oracle_decide(g.digraph, g.spec)
    assert full.outcome is Outcome.YES


def test_enumeration_budget_keeps_partial_results():
    d = build_digraph(6, [(0, 1), (2, 3), (4, 5)])
    out = oracle_enumerate(d, ProblemSpec(LF, 1, 1), SearchBudget(max_nodes=4))
    assert isinstance(out, BudgetExceeded)
    assert all(verify_decomposition(d, x, ProblemSpec(LF, 1, 1)) for x in out.partial)


def test_deadline_budget():
    g = k_variable_gadget(4)
    result = oracle_decide(g.digraph, g.spec, SearchBudget(deadline_seconds=30.0))
    assert result.outcome is Outcome.YES


@given(digraphs(max_vertices=5, max_arcs=9), specs)
@settings(max_examples=300, deadline=None)
def test_matches_naive_enumeration(d, spec):
    expected = naive_labellings(d, spec)
    found = oracle_enumerate(d, spec)
    assert [tuple(int(p) for p in x.labels) for x in found] == expected
    result = oracle_decide(d, spec)
    assert (result.outcome is Outcome.YES) == bool(expected)


@given(digraphs(max_vertices=5, max_arcs=9), specs)
@settings(max_examples=300, deadline=None)
def test_witness_is_least_in_search_order(d, spec):
    order = bfs_arc_order(d)
    expected = naive_labellings(d, spec)
    result = oracle_decide(d, spec)
    if not expected:
        assert result.outcome is Outcome.NO
        return
    least = min(expected, key=lambda labels: [labels[a] for a in order])
    assert tuple(int(p) for p in result.decomposition.labels) == least


@given(digraphs(max_vertices=5, max_arcs=9), specs, st.data())
@settings(max_examples=200, deadline=None)
def test_constraint_respected(d, spec, data):
    keys = data.draw(st.lists(st.integers(0, max(0, d.arc_count - 1)), unique=True, max_size=min(3, d.arc_count)))
    constraint = {a: data.draw(st.sampled_from([Part.FIRST, Part.SECOND])) for a in keys}
    found = oracle_enumerate(d, spec, constraint=constraint)
    assert all(x.extends(constraint) for x in found)
    expected = naive_labellings(d, spec, {a: int(p) for a, p in constraint.items()})
    assert len(found) == len(expected)


@given(digraphs(max_vertices=6, max_arcs=10), st.sampled_from([LF, OG]), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=150, deadline=None)
def test_monotone_in_bounds(d, family, k, l):
    base = oracle_decide(d, ProblemSpec(family, k, l)).outcome is Outcome.YES
    if base:
        assert oracle_decide(d, ProblemSpec(family, k + 1, l)).outcome is Outcome.YES
        assert oracle_decide(d, ProblemSpec(family, k, l + 1)).outcome is Outcome.YES
        assert oracle_decide(d, ProblemSpec(family, INF, INF)).outcome is Outcome.YES


PROBE = """
import json
from forestdec.gadgets import k_variable_gadget, kl_minus2_in_forcer
from forestdec.oracle import JIT_ENABLED, SearchBudget, oracle_decide, oracle_enumerate
g = kl_minus2_in_forcer(4, 3)
found = oracle_enumerate(g.digraph, g.spec)
v = k_variable_gadget(3)
r = oracle_decide(v.digraph, v.spec, SearchBudget(max_nodes=5000))
print(json.dumps({"jit": JIT_ENABLED, "count": len(found), "first": [int(p) for p in found[0].labels],
                  "nodes": r.nodes, "witness": [int(p) for p in r.decomposition.labels]}))
"""


def test_compiled_and_interpreted_kernels_agree():
    runs = {}
    for mode in ("0", "1"):
        env = dict(os.environ, FORESTDEC_JIT=mode)
        out = subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True, text=True, check=True)
        runs[mode] = json.loads(out.stdout)
    assert runs["0"]["jit"] is False
    interpreted, compiled = runs["0"], runs["1"]
    for key in ("count", "first", "nodes", "witness"):
        assert interpreted[key] == compiled[key]
