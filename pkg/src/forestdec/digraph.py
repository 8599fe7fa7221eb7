"""Immutable multi-digraph with explicit arc identities.

Vertices are ``0 .. n-1``.  Arcs are numbered in insertion order, so two
parallel arcs (or the two arcs of a digon) stay distinguishable.  Loops are
rejected because neither linear forests nor out-galaxies can contain them.
"""

from __future__ import annotations

import enum
import random
from collections import deque
from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import TypeAlias

from .errors import LoopArc, OutOfRange, PreconditionViolated, UnknownArc, UnknownVertex

VertexId: TypeAlias = int
ArcId: TypeAlias = int


@dataclass(frozen=True)
class Digraph:
    """A finite digraph whose arcs are identified by their index.

    ``tails[a]`` and ``heads[a]`` give the endpoints of arc ``a``.
    Construct through :func:`build_digraph` to get validation.
    """

    vertex_count: int
    tails: tuple[VertexId, ...]
    heads: tuple[VertexId, ...]

    @property
    def arc_count(self) -> int:
        return len(self.tails)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def arcs(self) -> Iterator[tuple[ArcId, VertexId, VertexId]]:
        """Yield ``(arc, tail, head)`` triples in arc-id order."""
        return iter(zip(range(self.arc_count), self.tails, self.heads))

    def arc_list(self) -> list[tuple[VertexId, VertexId]]:
        return list(zip(self.tails, self.heads))

    def tail(self, a: ArcId) -> VertexId:
        self._check_arc(a)
        return self.tails[a]

    def head(self, a: ArcId) -> VertexId:
        self._check_arc(a)
        return self.heads[a]

    def other_end(self, a: ArcId, v: VertexId) -> VertexId:
        return self.heads[a] if self.tails[a] == v else self.tails[a]

    @cached_property
    def _out(self) -> tuple[tuple[ArcId, ...], ...]:
        lists: list[list[ArcId]] = [[] for _ in range(self.vertex_count)]
        for a, t in enumerate(self.tails):
            lists[t].append(a)
        return tuple(tuple(x) for x in lists)

    @cached_property
    def _in(self) -> tuple[tuple[ArcId, ...], ...]:
        lists: list[list[ArcId]] = [[] for _ in range(self.vertex_count)]
        for a, h in enumerate(self.heads):
            lists[h].append(a)
        return tuple(tuple(x) for x in lists)

    @cached_property
    def _incident(self) -> tuple[tuple[ArcId, ...], ...]:
        return tuple(
            tuple(sorted(self._out[v] + self._in[v])) for v in range(self.vertex_count)
        )

    def out_arcs(self, v: VertexId) -> tuple[ArcId, ...]:
        self._check_vertex(v)
        return self._out[v]

    def in_arcs(self, v: VertexId) -> tuple[ArcId, ...]:
        self._check_vertex(v)
        return self._in[v]

    def incident_arcs(self, v: VertexId) -> tuple[ArcId, ...]:
        """Arcs touching ``v`` in increasing id order."""
        self._check_vertex(v)
        return self._incident[v]

    def in_degree(self, v: VertexId) -> int:
        return len(self.in_arcs(v))

    def out_degree(self, v: VertexId) -> int:
        return len(self.out_arcs(v))

    def degree(self, v: VertexId) -> int:
        """Degree in the underlying multigraph."""
        return len(self.incident_arcs(v))

    @cached_property
    def max_degree(self) -> int:
        return max((len(x) for x in self._incident), default=0)

    def arc_subgraph(self, arcs: Iterable[ArcId]) -> tuple[Digraph, list[ArcId]]:
        """Spanning subdigraph on ``arcs``; returns it with new-to-old arc ids."""
        chosen = sorted(set(arcs))
        for a in chosen:
            self._check_arc(a)
        sub = Digraph(
            self.vertex_count,
            tuple(self.tails[a] for a in chosen),
            tuple(self.heads[a] for a in chosen),
        )
        return sub, chosen

    def reversed(self) -> Digraph:
        return Digraph(self.vertex_count, self.heads, self.tails)

    def _check_vertex(self, v: VertexId) -> None:
        if not 0 <= v < self.vertex_count:
            raise UnknownVertex(f"vertex {v} not in digraph with {self.vertex_count} vertices")

    def _check_arc(self, a: ArcId) -> None:
        if not 0 <= a < self.arc_count:
            raise UnknownArc(f"arc {a} not in digraph with {self.arc_count} arcs")


def build_digraph(vertex_count: int, arc_list: Iterable[tuple[int, int]]) -> Digraph:
    """Validate and build a digraph; arc ids follow ``arc_list`` order."""
    if vertex_count < 0:
        raise OutOfRange("vertex count must be non-negative")
    tails: list[int] = []
    heads: list[int] = []
    for index, (t, h) in enumerate(arc_list):
        if not (0 <= t < vertex_count and 0 <= h < vertex_count):
            raise OutOfRange(f"arc {index} = ({t}, {h}) has an endpoint outside 0..{vertex_count - 1}")
        if t == h:
            raise LoopArc(f"arc {index} is a loop at vertex {t}")
        tails.append(int(t))
        heads.append(int(h))
    return Digraph(vertex_count, tuple(tails), tuple(heads))


def random_digraph(rng: random.Random, vertex_count: int, arc_count: int, max_parallel: int = 2) -> Digraph:
    """Loopless digraph with ``arc_count`` arcs drawn uniformly among ordered pairs.

    A pair is redrawn once it already carries ``max_parallel`` arcs, so the
    request must fit in ``n (n - 1) max_parallel`` slots.
    """
    slots = vertex_count * (vertex_count - 1) * max_parallel
    if arc_count > slots:
        raise PreconditionViolated(f"{arc_count} arcs do not fit in {slots} slots")
    used: dict[tuple[int, int], int] = {}
    arcs: list[tuple[int, int]] = []
    while len(arcs) < arc_count:
        t, h = rng.sample(range(vertex_count), 2)
        if used.get((t, h), 0) < max_parallel:
            used[(t, h)] = used.get((t, h), 0) + 1
            arcs.append((t, h))
    return build_digraph(vertex_count, arcs)


def degrees(d: Digraph, v: VertexId) -> tuple[int, int]:
    """``(in_degree, out_degree)`` of ``v``, counting parallel arcs."""
    return d.in_degree(v), d.out_degree(v)


def connected_components(d: Digraph) -> list[list[VertexId]]:
    """Components of the underlying graph, each sorted, ordered by least vertex."""
    seen = [False] * d.vertex_count
    result: list[list[VertexId]] = []
    for start in d.vertices:
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for a in d.incident_arcs(v):
                w = d.other_end(a, v)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        result.append(sorted(comp))
    return result


class SegmentKind(enum.Enum):
    PATH = "path"
    CYCLE_AT_BIG = "cycle-at-big"


@dataclass(frozen=True)
class Segment:
    """A maximal walk between attachment vertices through degree-2 vertices.

    ``vertices`` has one more entry than ``arcs``; for a cycle segment the
    first and last entries coincide.  Read as a vertex sequence it is the
    associated path, with the attachment vertex split into two ends.
    """

    kind: SegmentKind
    arcs: tuple[ArcId, ...]
    vertices: tuple[VertexId, ...]

    @property
    def endpoints(self) -> tuple[VertexId, ...]:
        if self.kind is SegmentKind.CYCLE_AT_BIG:
            return (self.vertices[0],)
        return (self.vertices[0], self.vertices[-1])

    @property
    def end_arcs(self) -> tuple[ArcId, ArcId]:
        return self.arcs[0], self.arcs[-1]

    def forward_flags(self, d: Digraph) -> tuple[bool, ...]:
        """For each arc, whether it points along the walk direction."""
        return tuple(d.tails[a] == self.vertices[i] for i, a in enumerate(self.arcs))


def segment_decomposition(
    d: Digraph, big: Collection[VertexId], tiny: Collection[VertexId]
) -> list[Segment]:
    """Split the arcs of ``d`` into segments between attachment vertices.

    Attachment vertices are ``big | tiny``.  Every other vertex must have
    degree 2 (or 0), and every component with an arc must contain an
    attachment vertex.  Segments are emitted from the smaller attachment
    vertex, ties broken by the smaller first arc.
    """
    attach = set(big) | set(tiny)
    for v in attach:
        d._check_vertex(v)
    for v in d.vertices:
        if v not in attach and d.degree(v) not in (0, 2):
            raise PreconditionViolated(f"interior vertex {v} has degree {d.degree(v)}")
    used = [False] * d.arc_count
    segments: list[Segment] = []
    for s in sorted(attach):
        for first in d.incident_arcs(s):
            if used[first]:
                continue
            arcs = [first]
            walk = [s]
            used[first] = True
            prev_arc, cur = first, d.other_end(first, s)
            walk.append(cur)
            while cur not in attach:
                a, b = d.incident_arcs(cur)
                nxt = b if a == prev_arc else a
                used[nxt] = True
                arcs.append(nxt)
                cur = d.other_end(nxt, cur)
                walk.append(cur)
                prev_arc = nxt
            kind = SegmentKind.CYCLE_AT_BIG if cur == s else SegmentKind.PATH
            segments.append(Segment(kind, tuple(arcs), tuple(walk)))
    if not all(used):
        stray = used.index(False)
        raise PreconditionViolated(f"arc {stray} lies in a component without attachment vertices")
    return segments


def walk_component(d: Digraph, start: VertexId) -> tuple[list[ArcId], list[VertexId], bool]:
    """Trace the component of ``start`` in a digraph of maximum degree 2.

    Returns ``(arcs, vertices, is_cycle)`` with arcs in walk order.  A path
    walk starts at its smaller end vertex and lists every vertex; a cycle
    walk starts at its least vertex and does not repeat it at the end.
    """
    comp_vertices = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for a in d.incident_arcs(v):
            w = d.other_end(a, v)
            if w not in seen:
                seen.add(w)
                comp_vertices.append(w)
                queue.append(w)
    ends = sorted(v for v in comp_vertices if d.degree(v) == 1)
    origin = ends[0] if ends else min(comp_vertices)
    arcs: list[ArcId] = []
    walk = [origin]
    if d.degree(origin) == 0:
        return arcs, walk, False
    prev = -1
    cur = origin
    while True:
        options = [a for a in d.incident_arcs(cur) if a != prev]
        if not options:
            break
        nxt = options[0]
        arcs.append(nxt)
        cur = d.other_end(nxt, cur)
        prev = nxt
        if cur == origin:
            return arcs, walk, True
        walk.append(cur)
    return arcs, walk, False
