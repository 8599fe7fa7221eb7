"""Test-only brute-force shadows of the production algorithms.

Nothing here imports the code under test except plain data types, so the
tests compare two independent implementations.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

MAX_NAIVE_ARCS = 20


def _components(arcs: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Arc indices grouped by weakly connected component."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for t, h in arcs:
        parent[find(t)] = find(h)
    groups: dict[int, list[int]] = {}
    for i, (t, _) in enumerate(arcs):
        groups.setdefault(find(t), []).append(i)
    return list(groups.values())


def is_path_forest(arcs: Sequence[tuple[int, int]], bound: float) -> bool:
    """Each component is a directed path with at most ``bound`` arcs."""
    for comp in _components(arcs):
        sub = [arcs[i] for i in comp]
        outs = [t for t, _ in sub]
        ins = [h for _, h in sub]
        if len(set(outs)) != len(outs) or len(set(ins)) != len(ins):
            return False
        vertices = set(outs) | set(ins)
        # a connected subgraph with in/out degree <= 1 is a path iff it has |V|-1 arcs
        if len(sub) != len(vertices) - 1 or len(sub) > bound:
            return False
    return True


def is_star_forest(arcs: Sequence[tuple[int, int]], bound: float) -> bool:
    """Each component is an out-star with at most ``bound`` arcs."""
    for comp in _components(arcs):
        sub = [arcs[i] for i in comp]
        if len({t for t, _ in sub}) != 1:
            return False
        heads = [h for _, h in sub]
        if len(set(heads)) != len(heads) or len(sub) > bound or sub[0][0] in heads:
            return False
    return True


def shape_ok(family: str, arcs: Sequence[tuple[int, int]], bound: float) -> bool:
    return is_path_forest(arcs, bound) if family == "linear-forest" else is_star_forest(arcs, bound)


def labelling_ok(arcs: Sequence[tuple[int, int]], labels: Sequence[int], family: str, first: float, second: float) -> bool:
    part0 = [arc for arc, p in zip(arcs, labels) if p == 0]
    part1 = [arc for arc, p in zip(arcs, labels) if p == 1]
    return shape_ok(family, part0, first) and shape_ok(family, part1, second)


def all_labellings(
    arcs: Sequence[tuple[int, int]], family: str, first: float, second: float, fixed: dict[int, int] | None = None
) -> list[tuple[int, ...]]:
    """Every valid labelling, in lexicographic order of the label tuple."""
    if len(arcs) > MAX_NAIVE_ARCS:
        raise ValueError(f"naive enumeration is limited to {MAX_NAIVE_ARCS} arcs")
    fixed = fixed or {}
    out = []
    for labels in itertools.product((0, 1), repeat=len(arcs)):
        if any(labels[a] != p for a, p in fixed.items()):
            continue
        if labelling_ok(arcs, labels, family, first, second):
            out.append(labels)
    return out


def decomposable(arcs: Sequence[tuple[int, int]], family: str, first: float, second: float) -> bool:
    if len(arcs) > MAX_NAIVE_ARCS:
        raise ValueError(f"naive search is limited to {MAX_NAIVE_ARCS} arcs")
    return any(
        labelling_ok(arcs, labels, family, first, second) for labels in itertools.product((0, 1), repeat=len(arcs))
    )


def satisfying_assignments(variable_count: int, clauses: Iterable[Iterable[int]]) -> list[tuple[bool, ...]]:
    """Brute-force models of a CNF with DIMACS-style signed literals."""
    clause_list = [list(c) for c in clauses]
    return [
        phi
        for phi in itertools.product((False, True), repeat=variable_count)
        if all(any(phi[abs(x) - 1] == (x > 0) for x in c) for c in clause_list)
    ]


def me_assignments(variable_count: int, clauses: Iterable[Iterable[int]], k: int) -> list[tuple[bool, ...]]:
    """Assignments giving each clause at least ``k`` true and ``k`` false variables."""
    clause_list = [[abs(x) - 1 for x in c] for c in clauses]
    out = []
    for phi in itertools.product((False, True), repeat=variable_count):
        if all(k <= sum(phi[v] for v in c) <= len(c) - k for c in clause_list):
            out.append(phi)
    return out


def hamiltonian_cycles(n: int, arcs: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Hamiltonian cycles as tuples of arc indices starting at vertex 0."""
    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, pair in enumerate(arcs):
        by_pair.setdefault(pair, []).append(i)
    cycles = []
    for rest in itertools.permutations(range(1, n)):
        order = (0, *rest)
        choices = [by_pair.get((order[i], order[(i + 1) % n]), []) for i in range(n)]
        cycles.extend(itertools.product(*choices))
    return cycles


def is_matching(edges: Sequence[tuple[int, int]], chosen: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in chosen:
        u, v = edges[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def matchings(edges: Sequence[tuple[int, int]]) -> list[frozenset[int]]:
    out = []
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(range(len(edges)), r):
            if is_matching(edges, subset):
                out.append(frozenset(subset))
    return out


def maximum_matching_size(edges: Sequence[tuple[int, int]]) -> int:
    return max(len(m) for m in matchings(edges))


def has_matching_covering(edges: Sequence[tuple[int, int]], required: Iterable[int]) -> bool:
    need = set(required)
    return any(need <= {v for e in m for v in edges[e]} for m in matchings(edges))


def two_sat_models(variable_count: int, clauses: Sequence[tuple[tuple[int, bool], tuple[int, bool]]]) -> int:
    """Number of assignments satisfying every two-literal clause."""
    count = 0
    for phi in itertools.product((False, True), repeat=variable_count):
        if all(phi[a] == pa or phi[b] == pb for (a, pa), (b, pb) in clauses):
            count += 1
    return count
