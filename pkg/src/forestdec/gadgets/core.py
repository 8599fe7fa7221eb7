"""Gadget type and the builder used to assemble gadgets from smaller ones."""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field

from ..digraph import ArcId, Digraph, VertexId, build_digraph
from ..errors import BadParameter
from ..forests import Decomposition, Part, ProblemSpec, decomposition_violation


@dataclass(frozen=True)
class Gadget:
    """A digraph with named interface vertices, arcs and vertex sets.

    ``witnesses`` maps a name to a decomposition of ``digraph`` that is valid
    for ``spec``; each constructor documents which witnesses it provides.
    """

    name: str
    digraph: Digraph
    spec: ProblemSpec
    arcs: Mapping[str, ArcId] = field(default_factory=dict)
    vertices: Mapping[str, VertexId] = field(default_factory=dict)
    vertex_sets: Mapping[str, tuple[VertexId, ...]] = field(default_factory=dict)
    witnesses: Mapping[str, Decomposition] = field(default_factory=dict)
    vertex_names: tuple[str, ...] = ()

    def witness(self, name: str) -> Decomposition:
        try:
            return self.witnesses[name]
        except KeyError:
            raise BadParameter(f"{self.name} has no witness {name!r}; known: {sorted(self.witnesses)}") from None

    def interface(self) -> dict[str, dict]:
        """JSON-ready description of every interface element."""
        return {
            "arcs": {k: {"id": a, "tail": self.digraph.tails[a], "head": self.digraph.heads[a]} for k, a in self.arcs.items()},
            "vertices": dict(self.vertices),
            "vertex_sets": {k: list(v) for k, v in self.vertex_sets.items()},
        }


@dataclass
class Embedding:
    """Where a sub-gadget landed inside a host builder."""

    vertex_map: list[VertexId]
    arc_map: list[ArcId]

    def vertex(self, v: VertexId) -> VertexId:
        return self.vertex_map[v]

    def arc(self, a: ArcId) -> ArcId:
        return self.arc_map[a]


class Builder:
    """Accumulates vertices, arcs and one label per arc.

    Sub-gadgets are copied in with :meth:`embed`; vertices listed in ``glue``
    are identified with existing host vertices instead of being copied.
    """

    def __init__(self) -> None:
        self.names: list[str] = []
        self.tails: list[VertexId] = []
        self.heads: list[VertexId] = []
        self.labels: list[Part] = []

    @property
    def vertex_count(self) -> int:
        return len(self.names)

    def vertex(self, name: str) -> VertexId:
        self.names.append(name)
        return len(self.names) - 1

    def arc(self, tail: VertexId, head: VertexId, part: Part) -> ArcId:
        self.tails.append(tail)
        self.heads.append(head)
        self.labels.append(part)
        return len(self.tails) - 1

    def embed(
        self,
        g: Gadget,
        witness: str,
        glue: Mapping[VertexId, VertexId] | None = None,
        prefix: str = "",
        swap: bool = False,
    ) -> Embedding:
        glue = glue or {}
        vertex_map = []
        for v in g.digraph.vertices:
            if v in glue:
                vertex_map.append(glue[v])
            else:
                local = g.vertex_names[v] if g.vertex_names else str(v)
                vertex_map.append(self.vertex(f"{prefix}{local}"))
        labels = g.witness(witness).labels
        arc_map = []
        for a, t, h in g.digraph.arcs():
            part = labels[a].other if swap else labels[a]
            arc_map.append(self.arc(vertex_map[t], vertex_map[h], part))
        return Embedding(vertex_map, arc_map)

    def digraph(self) -> Digraph:
        return build_digraph(self.vertex_count, zip(self.tails, self.heads))

    def decomposition(self) -> Decomposition:
        return Decomposition(tuple(self.labels))


@dataclass
class Assembly:
    """Result of one run of a gadget recipe: the builder plus named handles."""

    builder: Builder
    arcs: dict[str, ArcId] = field(default_factory=dict)
    vertices: dict[str, VertexId] = field(default_factory=dict)
    vertex_sets: dict[str, tuple[VertexId, ...]] = field(default_factory=dict)


def assemble(
    name: str,
    spec: ProblemSpec,
    recipe: Callable[[str], Assembly],
    witness_names: Sequence[str],
) -> Gadget:
    """Run ``recipe`` once per witness and merge the runs into one gadget.

    Every run must build the same digraph; only the arc labels may differ.
    Each witness is verified against ``spec`` before the gadget is returned.
    """
    runs = {w: recipe(w) for w in witness_names}
    first = runs[witness_names[0]]
    d = first.builder.digraph()
    witnesses: dict[str, Decomposition] = {}
    for w, run in runs.items():
        if run.builder.digraph() != d or run.arcs != first.arcs or run.vertices != first.vertices:
            raise AssertionError(f"{name}: recipe is not witness-independent")
        dec = run.builder.decomposition()
        problem = decomposition_violation(d, dec, spec)
        if problem is not None:
            raise AssertionError(f"{name}: witness {w!r} is invalid: {problem}")
        witnesses[w] = dec
    return Gadget(
        name=name,
        digraph=d,
        spec=spec,
        arcs=first.arcs,
        vertices=first.vertices,
        vertex_sets=first.vertex_sets,
        witnesses=witnesses,
        vertex_names=tuple(first.builder.names),
    )
