"""Polynomial engines: 2-SAT, bipartiteness, maximum matching, Z-covering matching."""

from __future__ import annotations

from collections import deque
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

from .errors import PreconditionViolated, UnknownVertex

Literal: TypeAlias = tuple[int, bool]
Clause: TypeAlias = tuple[Literal, Literal]


@dataclass(frozen=True)
class TwoSatInstance:
    variable_count: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for var, _ in clause:
                if not 0 <= var < self.variable_count:
                    raise PreconditionViolated(f"variable {var} out of range")

    @classmethod
    def of(cls, variable_count: int, clauses: Iterable[Clause]) -> TwoSatInstance:
        return cls(variable_count, tuple((tuple(c[0]), tuple(c[1])) for c in clauses))  # type: ignore[misc]


def _literal_node(lit: Literal) -> int:
    var, positive = lit
    return 2 * var + (1 if positive else 0)


def _tarjan(adj: Sequence[Sequence[int]]) -> list[int]:
    """Component index per node; indices follow completion order (sinks first)."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    comp_count = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp


def solve_2sat(inst: TwoSatInstance) -> list[bool] | None:
    """A satisfying assignment, or ``None`` if the instance is unsatisfiable.

    Unconstrained variables come out false: negative literal nodes are
    explored first, so they finish first in Tarjan's order.
    """
    n = inst.variable_count
    adj: list[list[int]] = [[] for _ in range(2 * n)]
    for x, y in inst.clauses:
        nx, ny = _literal_node(x), _literal_node(y)
        adj[nx ^ 1].append(ny)
        adj[ny ^ 1].append(nx)
    comp = _tarjan(adj)
    assignment = []
    for var in range(n):
        pos, neg = comp[2 * var + 1], comp[2 * var]
        if pos == neg:
            return None
        assignment.append(pos < neg)
    return assignment


def clause_satisfied(clause: Clause, assignment: Sequence[bool]) -> bool:
    return any(assignment[var] == positive for var, positive in clause)


@dataclass(frozen=True)
class UndirectedGraph:
    """Multigraph on nodes ``0 .. n-1``; edges are identified by index."""

    node_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise UnknownVertex(f"edge ({u}, {v}) leaves the node range")
            if u == v:
                raise PreconditionViolated(f"self-loop at node {u}")

    @classmethod
    def of(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> UndirectedGraph:
        return cls(node_count, tuple((int(u), int(v)) for u, v in edges))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per node, ``(neighbour, edge index)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.node_count)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class OddCycle:
    """Closed walk ``nodes[0], .., nodes[-1], nodes[0]`` using ``edges`` in order."""

    nodes: tuple[int, ...]
    edges: tuple[int, ...]


def bipartition(g: UndirectedGraph) -> Bipartition | OddCycle:
    adj = g.adjacency()
    color = [-1] * g.node_count
    parent = [-1] * g.node_count
    parent_edge = [-1] * g.node_count
    depth = [0] * g.node_count
    for root in range(g.node_count):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, e in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w], parent_edge[w], depth[w] = u, e, depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u] and e != parent_edge[u]:
                    return _odd_cycle(u, w, e, parent, parent_edge, depth)
    side_a = frozenset(v for v in range(g.node_count) if color[v] == 0)
    side_b = frozenset(v for v in range(g.node_count) if color[v] == 1)
    return Bipartition(side_a, side_b)


def _odd_cycle(u: int, w: int, e: int, parent: list[int], parent_edge: list[int], depth: list[int]) -> OddCycle:
    left_nodes, left_edges = [u], []
    right_nodes, right_edges = [w], []
    a, b = u, w
    while depth[a] > depth[b]:
        left_edges.append(parent_edge[a])
        a = parent[a]
        left_nodes.append(a)
    while depth[b] > depth[a]:
        right_edges.append(parent_edge[b])
        b = parent[b]
        right_nodes.append(b)
    while a != b:
        left_edges.append(parent_edge[a])
        a = parent[a]
        left_nodes.append(a)
        right_edges.append(parent_edge[b])
        b = parent[b]
        right_nodes.append(b)
    # walk: lca .. u, then edge e to w, then w .. back to just before lca
    nodes = left_nodes[::-1] + right_nodes[:-1]
    edges = left_edges[::-1] + [e] + right_edges
    return OddCycle(tuple(nodes), tuple(edges))


def maximum_matching(g: UndirectedGraph) -> set[int]:
    """Maximum-cardinality matching as a set of edge indices (Edmonds' blossom).

    Parallel edges are collapsed to the lowest-index representative.
    Augmenting paths are searched from every free node in increasing order,
    so the output is deterministic.
    """
    n = g.node_count
    rep: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges):
        key = (min(u, v), max(u, v))
        rep.setdefault(key, e)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(rep):
        adj[u].append(v)
        adj[v].append(u)
    mate = [-1] * n

    # greedy warm start keeps the blossom phase short on sparse graphs
    for u in range(n):
        if mate[u] == -1:
            for v in adj[u]:
                if mate[v] == -1:
                    mate[u], mate[v] = v, u
                    break

    for root in range(n):
        if mate[root] == -1:
            _augment_from(root, adj, mate)

    return {rep[(min(u, mate[u]), max(u, mate[u]))] for u in range(n) if mate[u] > u}


def _augment_from(root: int, adj: list[list[int]], mate: list[int]) -> bool:
    n = len(adj)
    base = list(range(n))
    parent = [-1] * n
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to], mate[pv] = pv, to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def matching_covering(g: UndirectedGraph, required: Collection[int]) -> set[int] | None:
    """A matching of ``g`` saturating every node of ``required``, or ``None``.

    Reduction to perfect matching on two copies of ``g`` in which every
    optional node is joined to its twin: optional nodes left free by a
    covering matching pair up with their twins.
    """
    n = g.node_count
    z = set(required)
    for v in z:
        if not 0 <= v < n:
            raise UnknownVertex(f"node {v} not in graph")
    m = len(g.edges)
    doubled = list(g.edges) + [(u + n, v + n) for u, v in g.edges]
    doubled += [(v, v + n) for v in range(n) if v not in z]
    found = maximum_matching(UndirectedGraph.of(2 * n, doubled))
    if len(found) * 2 != 2 * n:
        return None
    return {e for e in found if e < m}
