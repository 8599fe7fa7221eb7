"""Reductions from SAT variants and hamiltonicity to decomposition problems.

Each ``reduce_*`` function returns a :class:`ReductionOutput` whose back map
records where every gadget copy landed, so certificates can be translated in
both directions by :func:`assignment_to_decomposition` and
:func:`decomposition_to_assignment`.

Vertices are numbered canonically: variable gadgets by variable index, then
clause gadgets by clause index, each copied depth-first.  Clause gadgets are
glued onto vertices that already exist in the variable gadgets.
"""

from __future__ import annotations

import enum
import random
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cache

from ..digraph import ArcId, Digraph, VertexId, build_digraph
from ..errors import BadParameter, InvalidDecomposition, NotDiregular, UnsatisfiedPrecondition
from ..forests import (
    INF,
    Bound,
    Decomposition,
    Family,
    Part,
    ProblemSpec,
    check_bound,
    decomposition_violation,
    format_bound,
)
from .cnf import (
    CnfInstance,
    check_me_assignment,
    meksat_problem,
    require,
    three_b2_problem,
    width_problem,
)
from .core import Builder, Gadget
from .galaxy import kl_alpha_clause_gadget_bogd, q_variable_gadget_bogd
from .linear import k_clause_gadget, k_variable_gadget, kl_clause_gadget_dlf, klt_variable_gadget, subset_name

FIRST, SECOND = Part.FIRST, Part.SECOND


class ReductionKind(enum.Enum):
    THREE_B2_SAT = "3b2sat"
    ME1_SAT = "me1sat"
    HAMILTONICITY = "hamiltonicity"
    MEK_SAT = "meksat"
    WIDE_SAT = "widesat"


@dataclass(frozen=True)
class GadgetCopy:
    """One gadget copied into the reduced digraph.

    ``ports`` are the global ids of the gadget's interface arcs in slot
    order; ``swap`` records that the copy's parts are exchanged relative to
    the gadget's own witnesses.
    """

    gadget: Gadget
    arc_map: tuple[ArcId, ...]
    vertex_map: tuple[VertexId, ...]
    ports: tuple[ArcId, ...]
    swap: bool = False

    def apply(self, labels: list[Part | None], witness: str) -> None:
        local = self.gadget.witness(witness).labels
        for a, part in zip(self.arc_map, local):
            labels[a] = part.other if self.swap else part


@dataclass(frozen=True)
class Identification:
    """Vertex shared by the gadget of ``variable`` and the gadget of ``clause``."""

    variable: int
    clause: int
    vertex: VertexId


@dataclass(frozen=True)
class HamiltonianCycle:
    """Arc ids of a source digraph, in cycle order."""

    arcs: tuple[ArcId, ...]


@dataclass(frozen=True)
class BackMap:
    """Everything needed to translate certificates across a reduction.

    ``slots[x]`` lists, per port of the variable gadget of ``x``, the clause
    it serves.  ``clause_ports[c]`` lists the arcs of clause ``c`` that meet
    its literals, in literal order.  The hamiltonicity reduction uses
    ``arc_images`` (source arc to reduced arc) and ``widget_first`` (widget
    arcs that join the unbounded part under the forward map) instead.
    """

    variable_copies: tuple[GadgetCopy | None, ...] = ()
    clause_copies: tuple[GadgetCopy | None, ...] = ()
    slots: tuple[tuple[int, ...], ...] = ()
    clause_ports: tuple[tuple[ArcId, ...], ...] = ()
    identifications: tuple[Identification, ...] = ()
    designated_vertex: VertexId | None = None
    arc_images: tuple[ArcId, ...] = ()
    widget_first: tuple[ArcId, ...] = ()
    widget_second: tuple[ArcId, ...] = ()


@dataclass(frozen=True)
class ReductionOutput:
    kind: ReductionKind
    instance: Digraph
    spec: ProblemSpec
    source: CnfInstance | Digraph
    back_map: BackMap
    vertex_names: tuple[str, ...] = field(default=(), compare=False)

    def back_map_json(self) -> dict:
        """Plain-data summary of the back map for writing next to the instance."""
        bm = self.back_map

        def copy_json(c: GadgetCopy | None) -> dict | None:
            if c is None:
                return None
            return {"gadget": c.gadget.name, "ports": list(c.ports), "arcs": list(c.arc_map), "swap": c.swap}

        out: dict = {"reduction": self.kind.value, "spec": _spec_json(self.spec)}
        if self.kind is ReductionKind.HAMILTONICITY:
            out["designated_vertex"] = bm.designated_vertex
            out["arc_images"] = list(bm.arc_images)
            out["widget_first"] = list(bm.widget_first)
            out["widget_second"] = list(bm.widget_second)
            return out
        out["variables"] = [
            {"variable": x + 1, "gadget": copy_json(c), "slots": list(bm.slots[x])} for x, c in enumerate(bm.variable_copies)
        ]
        out["clauses"] = [
            {"clause": i, "gadget": copy_json(c), "ports": list(bm.clause_ports[i])} for i, c in enumerate(bm.clause_copies)
        ]
        out["identifications"] = [
            {"variable": r.variable + 1, "clause": r.clause, "vertex": r.vertex} for r in bm.identifications
        ]
        return out


def _spec_json(spec: ProblemSpec) -> dict:
    def enc(b: Bound) -> int | str:
        return "inf" if b == INF else int(b)

    return {"family": spec.family.value, "k": enc(spec.first), "l": enc(spec.second)}


def _copy(b: Builder, g: Gadget, port_names: Sequence[str], glue: dict[VertexId, VertexId], prefix: str, swap: bool = False) -> GadgetCopy:
    first_witness = next(iter(g.witnesses))
    e = b.embed(g, first_witness, glue, prefix=prefix, swap=swap)
    ports = tuple(e.arc(g.arcs[p]) for p in port_names)
    return GadgetCopy(g, tuple(e.arc_map), tuple(e.vertex_map), ports, swap)


def _variable_slots(inst: CnfInstance) -> list[list[int]]:
    return [[c for c, _ in inst.occurrences(x)] for x in range(inst.variable_count)]


# --- (3,B2)-SAT to (k,1)-decomposition -------------------------------------------------


def reduce_3b2sat_to_bdlfd(inst: CnfInstance, k: int) -> ReductionOutput:
    """(k,1)-decomposition instance that is positive iff ``inst`` is satisfiable."""
    if k < 3:
        raise BadParameter(f"this reduction needs k >= 3, got {k}")
    require(three_b2_problem(inst))
    var_gadget, clause_gadget = k_variable_gadget(k), k_clause_gadget(k)
    b = Builder()
    heads: dict[tuple[int, int], VertexId] = {}
    variable_copies, slots = [], []
    for x in range(inst.variable_count):
        occ = inst.occurrences(x)
        pos = [c for c, p in occ if p]
        neg = [c for c, p in occ if not p]
        order = (pos[0], neg[0], pos[1], neg[1])
        copy = _copy(b, var_gadget, ["a1", "a2", "a3", "a4"], {}, f"x{x + 1}.")
        for i, c in enumerate(order):
            heads[(x, c)] = copy.vertex_map[var_gadget.vertices[f"z{i + 1}"]]
        variable_copies.append(copy)
        slots.append(order)
    clause_copies, idents = [], []
    for ci, clause in enumerate(inst.clauses):
        glue = {clause_gadget.vertices[f"y{j + 1}"]: heads[(v, ci)] for j, (v, _) in enumerate(clause)}
        clause_copies.append(_copy(b, clause_gadget, ["b1", "b2", "b3"], glue, f"C{ci}."))
        idents += [Identification(v, ci, heads[(v, ci)]) for v, _ in clause]
    bm = BackMap(
        variable_copies=tuple(variable_copies),
        clause_copies=tuple(clause_copies),
        slots=tuple(slots),
        clause_ports=tuple(c.ports for c in clause_copies),
        identifications=tuple(idents),
    )
    spec = ProblemSpec(Family.LINEAR_FOREST, k, 1)
    return ReductionOutput(ReductionKind.THREE_B2_SAT, b.digraph(), spec, inst, bm, tuple(b.names))


# --- ME-1-SAT to (k,l)-decomposition ----------------------------------------------------


def reduce_me1sat_to_bdlfd(inst: CnfInstance, k: int, l: int) -> ReductionOutput:
    """(k,l)-decomposition instance that is positive iff ``inst`` is ME-1 satisfiable.

    Variable gadgets need the first bound to be the larger one; for ``k < l``
    they are built for ``(l, k)`` and copied with their parts exchanged.
    """
    if min(k, l) < 2:
        raise BadParameter(f"this reduction needs min(k, l) >= 2, got k={k}, l={l}")
    require(meksat_problem(inst, 1))
    swap = k < l
    big, small = max(k, l), min(k, l)
    clause_gadget = kl_clause_gadget_dlf(k, l)
    b = Builder()
    heads: dict[tuple[int, int], VertexId] = {}
    variable_copies: list[GadgetCopy | None] = []
    slots = _variable_slots(inst)
    for x in range(inst.variable_count):
        q = len(slots[x])
        if q == 0:
            variable_copies.append(None)
            continue
        g = _cached_klt(big, small, q)
        copy = _copy(b, g, [f"a{i + 1}" for i in range(q)], {}, f"x{x + 1}.", swap=swap)
        for i, c in enumerate(slots[x]):
            heads[(x, c)] = copy.vertex_map[g.vertices[f"head{i + 1}"]]
        variable_copies.append(copy)
    clause_copies, idents = [], []
    for ci, clause in enumerate(inst.clauses):
        glue = {clause_gadget.vertices[f"t{j + 1}"]: heads[(v, ci)] for j, (v, _) in enumerate(clause)}
        clause_copies.append(_copy(b, clause_gadget, ["a1", "a2", "a3"], glue, f"C{ci}."))
        idents += [Identification(v, ci, heads[(v, ci)]) for v, _ in clause]
    bm = BackMap(
        variable_copies=tuple(variable_copies),
        clause_copies=tuple(clause_copies),
        slots=tuple(tuple(s) for s in slots),
        clause_ports=tuple(c.ports for c in clause_copies),
        identifications=tuple(idents),
    )
    spec = ProblemSpec(Family.LINEAR_FOREST, k, l)
    return ReductionOutput(ReductionKind.ME1_SAT, b.digraph(), spec, inst, bm, tuple(b.names))


@cache
def _cached_klt(k: int, l: int, t: int) -> Gadget:
    return klt_variable_gadget(k, l, t)


# --- hamiltonicity to (inf,k)-decomposition ---------------------------------------------


def is_2diregular(d: Digraph) -> bool:
    return all(d.in_degree(v) == 2 and d.out_degree(v) == 2 for v in d.vertices)


def reduce_hamiltonicity_to_bdlfd(source: Digraph, k: int) -> ReductionOutput:
    """(inf,k)-decomposition instance that is positive iff ``source`` is hamiltonian.

    Each source vertex ``v`` splits into ``v+`` (tails) and ``v-`` (heads);
    every vertex except the designated vertex 0 gets a widget from ``v-`` to
    ``v+``.  Reduced arc ``a`` is the image of source arc ``a``.
    """
    if k < 1:
        raise BadParameter(f"this reduction needs k >= 1, got {k}")
    if source.vertex_count == 0 or not is_2diregular(source):
        bad = next((v for v in source.vertices if (source.in_degree(v), source.out_degree(v)) != (2, 2)), None)
        raise NotDiregular("empty digraph" if bad is None else f"vertex {bad} has in/out degree {source.in_degree(bad)}/{source.out_degree(bad)}")
    x = 0
    b = Builder()
    plus = [b.vertex(f"{v}+") for v in source.vertices]
    minus = [b.vertex(f"{v}-") for v in source.vertices]
    images = tuple(b.arc(plus[t], minus[h], SECOND) for _, t, h in source.arcs())
    first: list[ArcId] = []
    second: list[ArcId] = []
    for v in source.vertices:
        if v == x:
            continue
        if k == 1:
            first.append(b.arc(minus[v], plus[v], FIRST))
            continue
        main = [minus[v]] + [b.vertex(f"{v}.{i}") for i in range(2, k + 1)]
        side = [b.vertex(f"{v}.{i}'") for i in range(2, k + 1)]
        for i in range(1, k):
            second.append(b.arc(main[i - 1], main[i], SECOND))
            first.append(b.arc(main[i - 1], side[i - 1], FIRST))
            first.append(b.arc(side[i - 1], main[i], FIRST))
        first.append(b.arc(main[-1], plus[v], FIRST))
    bm = BackMap(designated_vertex=x, arc_images=images, widget_first=tuple(first), widget_second=tuple(second))
    spec = ProblemSpec(Family.LINEAR_FOREST, INF, k)
    return ReductionOutput(ReductionKind.HAMILTONICITY, b.digraph(), spec, source, bm, tuple(b.names))


def hamiltonian_cycle_problem(d: Digraph, cycle: HamiltonianCycle) -> str | None:
    arcs = cycle.arcs
    if len(arcs) != d.vertex_count or d.vertex_count == 0:
        return f"a hamiltonian cycle has {d.vertex_count} arcs, got {len(arcs)}"
    for a in arcs:
        if not 0 <= a < d.arc_count:
            return f"arc {a} is not in the digraph"
    for i, a in enumerate(arcs):
        nxt = arcs[(i + 1) % len(arcs)]
        if d.heads[a] != d.tails[nxt]:
            return f"arcs {a} and {nxt} are not consecutive"
    if len({d.tails[a] for a in arcs}) != d.vertex_count:
        return "the cycle repeats a vertex"
    return None


# --- ME-(k-1)-SAT to (k,k)-factorization ------------------------------------------------


def reduce_meksat_to_bogd_kk(inst: CnfInstance, k: int) -> ReductionOutput:
    """(k,k)-factorization instance that is positive iff ``inst`` is ME-(k-1) satisfiable.

    Each clause becomes an out-star whose leaves are the sinks of the
    variable gadgets of its variables.
    """
    if k < 2:
        raise BadParameter(f"this reduction needs k >= 2, got {k}")
    require(meksat_problem(inst, k - 1))
    b = Builder()
    heads: dict[tuple[int, int], VertexId] = {}
    slots = _variable_slots(inst)
    variable_copies = _galaxy_variables(b, inst, slots, heads)
    ports, idents = [], []
    for ci, clause in enumerate(inst.clauses):
        root = b.vertex(f"C{ci}.root")
        ports.append(tuple(b.arc(root, heads[(v, ci)], FIRST) for v, _ in clause))
        idents += [Identification(v, ci, heads[(v, ci)]) for v, _ in clause]
    bm = BackMap(
        variable_copies=tuple(variable_copies),
        clause_copies=tuple(None for _ in inst.clauses),
        slots=tuple(tuple(s) for s in slots),
        clause_ports=tuple(ports),
        identifications=tuple(idents),
    )
    spec = ProblemSpec(Family.OUT_GALAXY, k, k)
    return ReductionOutput(ReductionKind.MEK_SAT, b.digraph(), spec, inst, bm, tuple(b.names))


def _galaxy_variables(
    b: Builder, inst: CnfInstance, slots: list[list[int]], heads: dict[tuple[int, int], VertexId]
) -> list[GadgetCopy | None]:
    copies: list[GadgetCopy | None] = []
    for x in range(inst.variable_count):
        q = len(slots[x])
        if q == 0:
            copies.append(None)
            continue
        g = _cached_qvar(q)
        copy = _copy(b, g, [f"s{i + 1}" for i in range(q)], {}, f"x{x + 1}.")
        for i, c in enumerate(slots[x]):
            heads[(x, c)] = copy.vertex_map[g.vertex_sets["S"][i]]
        copies.append(copy)
    return copies


@cache
def _cached_qvar(q: int) -> Gadget:
    return q_variable_gadget_bogd(q)


# --- (l+1)-SAT to (k,l)-factorization ---------------------------------------------------


def _clause_layout(clause: Sequence[tuple[int, bool]]) -> list[int]:
    """1-based gadget sink position of each literal: positives first, then negatives."""
    positives = [j for j, (_, p) in enumerate(clause) if p]
    negatives = [j for j, (_, p) in enumerate(clause) if not p]
    position = [0] * len(clause)
    for rank, j in enumerate(positives + negatives):
        position[j] = rank + 1
    return position


def reduce_lplus1sat_to_bogd_kl(inst: CnfInstance, k: Bound, l: int) -> ReductionOutput:
    """(k,l)-factorization instance, ``k > l``, positive iff ``inst`` is satisfiable.

    Every clause must have exactly ``l + 1`` literals.
    """
    k = check_bound(k)
    if l < 2 or not (k == INF or k >= l + 1):
        raise BadParameter(f"this reduction needs l >= 2 and k >= l + 1 or k = inf, got k={format_bound(k)}, l={l}")
    require(width_problem(inst, l + 1))
    b = Builder()
    heads: dict[tuple[int, int], VertexId] = {}
    slots = _variable_slots(inst)
    variable_copies = _galaxy_variables(b, inst, slots, heads)
    clause_copies, ports, idents = [], [], []
    for ci, clause in enumerate(inst.clauses):
        alpha1 = sum(1 for _, p in clause if p)
        g = _cached_clause(k, l, alpha1, l + 1 - alpha1)
        sinks = g.vertex_sets["S1"] + g.vertex_sets["S2"]
        layout = _clause_layout(clause)
        glue = {sinks[layout[j] - 1]: heads[(v, ci)] for j, (v, _) in enumerate(clause)}
        copy = _copy(b, g, [f"s{layout[j]}" for j in range(len(clause))], glue, f"C{ci}.")
        clause_copies.append(copy)
        ports.append(copy.ports)
        idents += [Identification(v, ci, heads[(v, ci)]) for v, _ in clause]
    bm = BackMap(
        variable_copies=tuple(variable_copies),
        clause_copies=tuple(clause_copies),
        slots=tuple(tuple(s) for s in slots),
        clause_ports=tuple(ports),
        identifications=tuple(idents),
    )
    spec = ProblemSpec(Family.OUT_GALAXY, k, l)
    return ReductionOutput(ReductionKind.WIDE_SAT, b.digraph(), spec, inst, bm, tuple(b.names))


@cache
def _cached_clause(k: Bound, l: int, alpha1: int, alpha2: int) -> Gadget:
    return kl_alpha_clause_gadget_bogd(k, l, alpha1, alpha2)


# --- certificate translation ------------------------------------------------------------


def source_problem(red: ReductionOutput, certificate: Sequence[bool] | HamiltonianCycle) -> str | None:
    """Why ``certificate`` fails the source semantics of ``red``, or ``None``."""
    if red.kind is ReductionKind.HAMILTONICITY:
        if not isinstance(certificate, HamiltonianCycle):
            return "the hamiltonicity reduction needs a HamiltonianCycle"
        assert isinstance(red.source, Digraph)
        return hamiltonian_cycle_problem(red.source, certificate)
    if isinstance(certificate, HamiltonianCycle):
        return "a CNF reduction needs a truth assignment"
    inst = red.source
    assert isinstance(inst, CnfInstance)
    if len(certificate) != inst.variable_count:
        return f"assignment has {len(certificate)} values for {inst.variable_count} variables"
    phi = [bool(x) for x in certificate]
    if red.kind is ReductionKind.ME1_SAT:
        return None if check_me_assignment(inst, 1, phi) else "some clause lacks a true or a false variable"
    if red.kind is ReductionKind.MEK_SAT:
        need = int(red.spec.first) - 1
        return None if check_me_assignment(inst, need, phi) else f"some clause has fewer than {need} true or false variables"
    bad = inst.first_unsatisfied(phi)
    return None if bad is None else f"clause {bad} is not satisfied"


def assignment_to_decomposition(red: ReductionOutput, certificate: Sequence[bool] | HamiltonianCycle) -> Decomposition:
    """Decomposition of ``red.instance`` built from a source certificate.

    CNF reductions take a truth assignment; the hamiltonicity reduction takes
    a :class:`HamiltonianCycle` of the source digraph.
    """
    problem = source_problem(red, certificate)
    if problem is not None:
        raise UnsatisfiedPrecondition(problem)
    labels: list[Part | None] = [None] * red.instance.arc_count
    bm = red.back_map
    if isinstance(certificate, HamiltonianCycle):
        for a in bm.widget_first:
            labels[a] = FIRST
        for a in bm.widget_second:
            labels[a] = SECOND
        on_cycle = set(certificate.arcs)
        for a, image in enumerate(bm.arc_images):
            labels[image] = FIRST if a in on_cycle else SECOND
        return _finish(red, labels)

    phi = [bool(x) for x in certificate]
    inst = red.source
    assert isinstance(inst, CnfInstance)
    for x, copy in enumerate(bm.variable_copies):
        if copy is None:
            continue
        if red.kind is ReductionKind.THREE_B2_SAT:
            copy.apply(labels, "a1-a3" if phi[x] else "a2-a4")
        elif red.kind is ReductionKind.ME1_SAT:
            # true puts the ports in FIRST; a swapped copy reaches FIRST through its local SECOND
            copy.apply(labels, "first" if phi[x] != copy.swap else "second")
        elif red.kind is ReductionKind.MEK_SAT:
            copy.apply(labels, "first" if phi[x] else "second")
        else:
            copy.apply(labels, "second" if phi[x] else "first")
    for ci, clause in enumerate(inst.clauses):
        copy = bm.clause_copies[ci]
        if red.kind is ReductionKind.THREE_B2_SAT:
            assert copy is not None
            copy.apply(labels, subset_name(j + 1 for j, (v, p) in enumerate(clause) if phi[v] == p))
        elif red.kind is ReductionKind.ME1_SAT:
            assert copy is not None
            copy.apply(labels, subset_name(j + 1 for j, (v, _) in enumerate(clause) if not phi[v]))
        elif red.kind is ReductionKind.MEK_SAT:
            for (v, _), a in zip(clause, bm.clause_ports[ci]):
                labels[a] = SECOND if phi[v] else FIRST
        else:
            assert copy is not None
            layout = _clause_layout(clause)
            copy.apply(labels, subset_name(layout[j] for j, (v, _) in enumerate(clause) if phi[v]))
    return _finish(red, labels)


def _finish(red: ReductionOutput, labels: list[Part | None]) -> Decomposition:
    if any(p is None for p in labels):
        raise AssertionError("forward map left an arc unlabelled")
    dec = Decomposition(tuple(labels))  # type: ignore[arg-type]
    problem = decomposition_violation(red.instance, dec, red.spec)
    if problem is not None:
        raise AssertionError(f"forward map built an invalid decomposition: {problem}")
    return dec


def decomposition_to_assignment(red: ReductionOutput, dec: Decomposition) -> list[bool] | HamiltonianCycle:
    """Source certificate read off a valid decomposition of ``red.instance``."""
    problem = decomposition_violation(red.instance, dec, red.spec)
    if problem is not None:
        raise InvalidDecomposition(problem)
    bm = red.back_map
    result: list[bool] | HamiltonianCycle
    if red.kind is ReductionKind.HAMILTONICITY:
        assert isinstance(red.source, Digraph)
        result = _trace_cycle(red.source, [a for a, image in enumerate(bm.arc_images) if dec[image] is FIRST])
    else:
        phi = []
        for copy in bm.variable_copies:
            if copy is None:
                phi.append(False)
                continue
            parts = [dec[a] for a in copy.ports]
            if red.kind is ReductionKind.THREE_B2_SAT:
                in_matching = {i for i, p in enumerate(parts) if p is SECOND}
                phi.append(in_matching <= {0, 2})
            elif red.kind in (ReductionKind.ME1_SAT, ReductionKind.MEK_SAT):
                phi.append(parts[0] is FIRST)
            else:
                phi.append(parts[0] is SECOND)
        result = phi
    problem = source_problem(red, result)
    if problem is not None:
        raise AssertionError(f"backward map produced an invalid certificate: {problem}")
    return result


def _trace_cycle(d: Digraph, arcs: list[ArcId]) -> HamiltonianCycle:
    out: dict[VertexId, ArcId] = {}
    for a in arcs:
        out.setdefault(d.tails[a], a)
    order: list[ArcId] = []
    v = 0
    for _ in range(d.vertex_count):
        if v not in out:
            break
        a = out[v]
        order.append(a)
        v = d.heads[a]
    return HamiltonianCycle(tuple(order))


# --- source instance generators ---------------------------------------------------------


def generate_2diregular(n: int, seed: int) -> Digraph:
    """Union of two random fixed-point-free permutations on ``n`` vertices.

    The second permutation also avoids the first one pointwise when a few
    hundred random draws find such a pair, so parallel arcs are rare.
    """
    if n < 3:
        raise BadParameter(f"a loopless 2-diregular digraph generator needs n >= 3, got {n}")
    rng = random.Random(seed)

    def derangement(avoid: list[int] | None) -> list[int] | None:
        for _ in range(400):
            p = list(range(n))
            rng.shuffle(p)
            if all(p[i] != i for i in range(n)) and (avoid is None or all(p[i] != avoid[i] for i in range(n))):
                return p
        return None

    first = derangement(None)
    assert first is not None
    second = derangement(first) or derangement(None)
    assert second is not None
    arcs = [(v, perm[v]) for v in range(n) for perm in (first, second)]
    return build_digraph(n, arcs)
