"""Polynomial solvers for (inf,inf)- and (k,1)-bounded out-galaxy factorization."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..digraph import ArcId, Digraph, VertexId, connected_components, segment_decomposition, walk_component
from ..forests import INF, Bound, Decomposition, Family, Part, ProblemSpec, Verdict, check_bound, decomposition_violation
from ..satmatch import OddCycle, UndirectedGraph, bipartition, matching_covering
from .bdlfd import solve_bdlfd_11
from .paths import (
    EndarcConstraint,
    OrientedCycle,
    OrientedPath,
    XSet,
    build_xgadget,
    compute_xset,
    cycle_k1_galaxy,
    path_k1_galaxy_constrained,
    xset,
)


def _certified(d: Digraph, labels: list[Part | None], spec: ProblemSpec) -> Verdict:
    dec = Decomposition(tuple(labels))  # type: ignore[arg-type]
    problem = decomposition_violation(d, dec, spec)
    if problem is not None:
        raise AssertionError(f"solver built an invalid certificate: {problem}")
    return Verdict(dec)


def conflict_graph(d: Digraph) -> UndirectedGraph:
    """One node per arc; two arcs conflict when they meet at a vertex that is not the tail of both."""
    edges: set[tuple[int, int]] = set()
    for v in d.vertices:
        inc = d.incident_arcs(v)
        for i, a in enumerate(inc):
            for b in inc[i + 1 :]:
                if not (d.tails[a] == v and d.tails[b] == v):
                    edges.add((a, b))
    return UndirectedGraph.of(d.arc_count, sorted(edges))


def solve_bogd_inf_inf(d: Digraph) -> Verdict:
    """Two out-galaxies of unbounded size: a 2-colouring of the conflict graph."""
    split = bipartition(conflict_graph(d))
    if isinstance(split, OddCycle):
        return Verdict.no(f"arcs {list(split.nodes)} form an odd cycle of pairwise conflicts")
    labels: list[Part | None] = [Part.FIRST if a in split.side_a else Part.SECOND for a in range(d.arc_count)]
    return _certified(d, labels, ProblemSpec(Family.OUT_GALAXY, INF, INF))


@dataclass
class MatchingModel:
    """Matching instance built from a digraph with every big vertex in B0 or B1."""

    k: int
    node_count: int = 0
    edges: list[tuple[int, int]] = field(default_factory=list)
    required: set[int] = field(default_factory=set)
    node_names: list[tuple] = field(default_factory=list)
    segment_edges: list[tuple[int, int]] = field(default_factory=list)
    segment_xsets: list[XSet] = field(default_factory=list)

    def node(self, name: tuple) -> int:
        self.node_names.append(name)
        self.node_count += 1
        return self.node_count - 1

    def graph(self) -> UndirectedGraph:
        return UndirectedGraph.of(self.node_count, self.edges)


def _xset_of(forward: tuple[bool, ...], k: int) -> XSet:
    if len(forward) == 1:
        return xset((), (1, 2))
    return compute_xset(OrientedPath(forward), k)


def build_matching_model(
    d: Digraph, k: int, segments, b0: set[VertexId], b1: set[VertexId], tiny: set[VertexId]
) -> MatchingModel:
    model = MatchingModel(k)
    shared: dict[VertexId, int] = {}
    per_arc: dict[tuple[VertexId, ArcId], int] = {}
    for v in sorted(b0 | tiny):
        shared[v] = model.node(("vertex", v))
        if v in b0 and d.out_degree(v) == k + 1:
            model.required.add(shared[v])
    for b in sorted(b1):
        for a in d.incident_arcs(b):
            u = model.node(("u", b, a))
            per_arc[(b, a)] = u
            if d.heads[a] == b:
                model.required.add(u)
            else:
                z = model.node(("z", b, a))
                model.required.add(z)
                model.edges.append((u, z))

    def attach(v: VertexId, a: ArcId) -> int:
        return shared[v] if v in shared else per_arc[(v, a)]

    for index, seg in enumerate(segments):
        x = _xset_of(seg.forward_flags(d), k)
        gadget = build_xgadget(x)
        local = {gadget.v1: attach(seg.vertices[0], seg.arcs[0]), gadget.v2: attach(seg.vertices[-1], seg.arcs[-1])}
        for extra in gadget.extra_nodes:
            local[extra] = model.node(("gadget", index, extra))
        first_edge = len(model.edges)
        for u, v in gadget.graph.edges:
            model.edges.append((local[u], local[v]))
        model.required.update(local[z] for z in gadget.required)
        model.segment_edges.append((first_edge + gadget.e1, first_edge + gadget.e2))
        model.segment_xsets.append(x)
    return model


def solve_bogd_k1(d: Digraph, k: Bound) -> Verdict:
    """(k,1)-factorization via a matching that covers a required node set.

    Part FIRST holds the k-bounded out-galaxy, part SECOND the matching.
    """
    k = check_bound(k)
    if d.arc_count == 0:
        return Verdict(Decomposition(()))
    if k == INF:
        k = max(1, d.max_degree)
    k = int(k)
    spec = ProblemSpec(Family.OUT_GALAXY, k, 1)
    if k == 1:
        verdict = solve_bdlfd_11(d)
        if verdict.is_yes:
            return _certified(d, list(verdict.decomposition.labels), spec)  # type: ignore[union-attr]
        return verdict

    big = {v for v in d.vertices if d.degree(v) >= 3}
    tiny = {v for v in d.vertices if d.degree(v) == 1}
    for v in sorted(big):
        if d.in_degree(v) >= 2:
            return Verdict.no(f"vertex {v} of degree {d.degree(v)} has in-degree {d.in_degree(v)}")
        if d.degree(v) > k + 1:
            return Verdict.no(f"vertex {v} has degree {d.degree(v)} > k + 1 = {k + 1}")
    b0 = {v for v in big if d.in_degree(v) == 0}
    b1 = big - b0

    labels: list[Part | None] = [None] * d.arc_count
    attached: list[ArcId] = []
    for comp in connected_components(d):
        if any(v in big or v in tiny for v in comp):
            attached.extend(a for v in comp for a in d.out_arcs(v))
            continue
        arcs, walk, cyclic = walk_component(d, comp[0])
        if not arcs:
            continue
        forward = tuple(d.tails[a] == walk[i] for i, a in enumerate(arcs))
        local = cycle_k1_galaxy(OrientedCycle(forward), k)
        if local is None:
            return Verdict.no(f"component of vertex {comp[0]} is an odd circuit")
        for a, part in zip(arcs, local.labels):
            labels[a] = part

    sub, back = d.arc_subgraph(attached)
    segments = segment_decomposition(sub, big, tiny)
    model = build_matching_model(sub, k, segments, b0, b1, tiny)
    matching = matching_covering(model.graph(), model.required)
    if matching is None:
        return Verdict.no("the matching graph has no matching covering the required nodes")

    for seg, (e1, e2) in zip(segments, model.segment_edges):
        arcs = [back[a] for a in seg.arcs]
        first_in, last_in = e1 in matching, e2 in matching
        if len(arcs) == 1:
            labels[arcs[0]] = Part.SECOND if first_in else Part.FIRST
            continue
        local = path_k1_galaxy_constrained(
            OrientedPath(seg.forward_flags(sub)), k, EndarcConstraint(first_in, last_in)
        )
        if local is None:
            raise AssertionError("matching trace outside the segment's X-set")
        for a, part in zip(arcs, local.labels):
            labels[a] = part
    return _certified(d, labels, spec)
