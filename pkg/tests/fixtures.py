"""Example digraphs and source instances shared by several test modules."""

from __future__ import annotations

from forestdec.digraph import Digraph, build_digraph
from forestdec.gadgets import CnfInstance

# --- the worked (3,1)-out-galaxy example: five attachment vertices, eight segments

ATTACH = {"v1": 0, "v2": 1, "v3": 2, "v4": 3, "v5": 4}


def worked_bogd_example() -> tuple[Digraph, dict[str, list[tuple[str, str]]], dict[str, int]]:
    """The digraph, its segments as named arc lists, and the vertex numbering."""
    segments = {
        "P1": [("p1a", "v1"), ("p1a", "p1b"), ("p1b", "v2")],
        "P2": [("v2", "p2a"), ("v3", "p2a")],
        "P3": [("v2", "p31"), ("p32", "p31"), ("p32", "p33"), ("p33", "p34"), ("p35", "p34"), ("p35", "p36"), ("v3", "p36")],
        "P4": [("v2", "p41"), ("p41", "p42"), ("p43", "p42"), ("p43", "p44"), ("p45", "p44"), ("v5", "p45")],
        "P5": [("v4", "p51"), ("p51", "p52"), ("v3", "p52")],
        "P6": [("v5", "v3")],
        "P7": [("v4", "p7a"), ("v5", "p7a")],
        "P8": [("v4", "p8a"), ("v4", "p8c"), ("p8b", "p8a"), ("p8b", "p8c")],
    }
    names = dict(ATTACH)
    for arcs in segments.values():
        for t, h in arcs:
            for v in (t, h):
                names.setdefault(v, len(names))
    arc_list = [(names[t], names[h]) for arcs in segments.values() for t, h in arcs]
    return build_digraph(len(names), arc_list), segments, names


# --- the four-vertex 2-diregular digraph with a marked hamiltonian cycle

HAM_EXAMPLE_ARCS = [(0, 2), (2, 1), (1, 3), (3, 0), (0, 1), (1, 0), (3, 2), (2, 3)]
HAM_EXAMPLE_CYCLE = (0, 1, 2, 3)  # x -> u -> y -> v -> x with x, y, u, v = 0, 1, 2, 3


def ham_example() -> Digraph:
    return build_digraph(4, HAM_EXAMPLE_ARCS)


# --- SAT sources

# seven clauses on seven variables, one per line of the Fano plane; no
# assignment leaves every line with both a true and a false point
FANO = CnfInstance.from_signed(7, [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]])

# an unsatisfiable instance in which every literal occurs exactly twice,
# found by an annealing search over random instances
UNSAT_3B2 = CnfInstance.from_signed(
    18,
    [
        [-7, -4, -9], [-2, -15, -10], [6, -10, 11], [-18, -3, 7], [-14, 16, -12], [-5, -7, -18],
        [-15, 10, 6], [-11, 15, -2], [-12, -6, -16], [9, 17, 14], [9, 8, -17], [13, 2, -11],
        [-3, 12, 18], [3, 12, 7], [-1, -9, 8], [17, 5, -14], [15, 11, 10], [-6, 13, 1],
        [4, -13, 1], [5, -17, -8], [-8, 4, -1], [16, 14, -4], [-5, 3, 18], [2, -16, -13],
    ],
)
