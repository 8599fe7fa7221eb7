"""Polynomial solvers for (1,1)- and (2,1)-bounded linear forest decomposition."""

from __future__ import annotations

from collections import defaultdict

from ..digraph import ArcId, Digraph, SegmentKind, connected_components, segment_decomposition, walk_component
from ..forests import Decomposition, Family, Part, ProblemSpec, Verdict, decomposition_violation
from ..satmatch import TwoSatInstance, solve_2sat
from .paths import (
    EndarcConstraint,
    OrientedCycle,
    OrientedPath,
    cycle_21,
    path_21_free,
    path_21_isolated_endarcs,
)

SPEC_11 = ProblemSpec(Family.LINEAR_FOREST, 1, 1)
SPEC_21 = ProblemSpec(Family.LINEAR_FOREST, 2, 1)


def _certified(d: Digraph, labels: list[Part | None], spec: ProblemSpec) -> Verdict:
    dec = Decomposition(tuple(labels))  # type: ignore[arg-type]
    problem = decomposition_violation(d, dec, spec)
    if problem is not None:
        raise AssertionError(f"solver built an invalid certificate: {problem}")
    return Verdict(dec)


def solve_bdlfd_11(d: Digraph) -> Verdict:
    """Two directed matchings, i.e. a proper 2-edge-colouring of the underlying graph."""
    for v in d.vertices:
        if d.degree(v) > 2:
            return Verdict.no(f"vertex {v} has degree {d.degree(v)} > 2")
    labels: list[Part | None] = [None] * d.arc_count
    for comp in connected_components(d):
        arcs, _, cyclic = walk_component(d, comp[0])
        if cyclic and len(arcs) % 2 == 1:
            return Verdict.no(f"odd cycle of length {len(arcs)} through vertex {comp[0]}")
        for i, a in enumerate(arcs):
            labels[a] = Part.FIRST if i % 2 == 0 else Part.SECOND
    return _certified(d, labels, SPEC_11)


def solve_bdlfd_21(d: Digraph) -> Verdict:
    """(2,1)-decomposition via a 2-SAT instance over arcs at degree-3 vertices.

    Part FIRST is the 2-bounded linear forest, part SECOND the matching.
    """
    for v in d.vertices:
        if d.degree(v) >= 4:
            return Verdict.no(f"degree >= 4 at vertex {v}")
    big = [v for v in d.vertices if d.degree(v) == 3]
    for v in big:
        if max(d.in_degree(v), d.out_degree(v)) == 3:
            return Verdict.no(f"vertex {v} has all three arcs in the same direction")
    tiny = [v for v in d.vertices if d.degree(v) == 1]
    big_set = set(big)
    labels: list[Part | None] = [None] * d.arc_count

    attached_arcs: list[ArcId] = []
    for comp in connected_components(d):
        if any(v in big_set for v in comp):
            attached_arcs.extend(a for v in comp for a in d.out_arcs(v))
            continue
        arcs, walk, cyclic = walk_component(d, comp[0])
        if not arcs:
            continue
        forward = tuple(d.tails[a] == walk[i] for i, a in enumerate(arcs))
        if cyclic:
            local = cycle_21(OrientedCycle(forward)).labels
        else:
            local = path_21_free(OrientedPath(forward))[0].labels
        for a, part in zip(arcs, local):
            labels[a] = part

    sub, back = d.arc_subgraph(attached_arcs)
    segments = segment_decomposition(sub, big, tiny)

    clauses: list[tuple[tuple[int, bool], tuple[int, bool]]] = []
    # variable index = arc id; x_a true means a lies in the matching part
    for v in big:
        inc = d.incident_arcs(v)
        majority_out = d.out_degree(v) == 2
        same = [a for a in inc if (d.tails[a] == v) == majority_out]
        odd = [a for a in inc if (d.tails[a] == v) != majority_out]
        a1, (a2, a3) = odd[0], same
        clauses.append(((a1, False), (a1, False)))
        clauses.append(((a2, False), (a3, False)))
        clauses.append(((a2, True), (a3, True)))

    plans: list[tuple[list[ArcId], OrientedPath | None, str]] = []
    for seg in segments:
        arcs = [back[a] for a in seg.arcs]
        forward = seg.forward_flags(sub)
        start_big = seg.vertices[0] in big_set
        end_big = seg.vertices[-1] in big_set
        if seg.kind is SegmentKind.CYCLE_AT_BIG or (start_big and end_big):
            if len(arcs) == 1:
                clauses.append(((arcs[0], True), (arcs[0], True)))
                plans.append((arcs, None, "single"))
                continue
            path = OrientedPath(forward)
            a1, a2 = arcs[0], arcs[-1]
            for first_in in (False, True):
                for last_in in (False, True):
                    if path_21_isolated_endarcs(path, EndarcConstraint(first_in, last_in)) is None:
                        clauses.append(((a1, not first_in), (a2, not last_in)))
            plans.append((arcs, path, "both"))
        else:
            where = "start" if start_big else "end"
            plans.append((arcs, OrientedPath(forward), where))

    by_pair: dict[tuple[int, int], list[ArcId]] = defaultdict(list)
    for a in attached_arcs:
        by_pair[(d.tails[a], d.heads[a])].append(a)
    for (u, w), forward_arcs in sorted(by_pair.items()):
        if u < w:
            for a in forward_arcs:
                for b in by_pair.get((w, u), ()):
                    clauses.append(((a, True), (b, True)))
                    clauses.append(((a, False), (b, False)))

    assignment = solve_2sat(TwoSatInstance.of(d.arc_count, clauses))
    if assignment is None:
        return Verdict.no("the 2-SAT formula of the degree-3 structure is unsatisfiable")

    def part_of(a: ArcId) -> Part:
        return Part.SECOND if assignment[a] else Part.FIRST

    for arcs, path, mode in plans:
        if mode == "single" or path is None:
            labels[arcs[0]] = part_of(arcs[0])
            continue
        if mode == "both":
            constraint = EndarcConstraint(assignment[arcs[0]], assignment[arcs[-1]])
            local = path_21_isolated_endarcs(path, constraint)
            if local is None:
                raise AssertionError("2-SAT assignment admits no segment decomposition")
            for a, part in zip(arcs, local.labels):
                labels[a] = part
            continue
        anchor = arcs[0] if mode == "start" else arcs[-1]
        with_matching, isolated = path_21_free(path, at_start=(mode == "start"))
        local = with_matching if assignment[anchor] else isolated
        for a, part in zip(arcs, local.labels):
            labels[a] = part
    return _certified(d, labels, SPEC_21)
