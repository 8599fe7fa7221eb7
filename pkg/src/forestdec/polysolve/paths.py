"""Constrained decompositions of oriented paths and cycles.

An oriented path on vertices ``v0 .. vL`` is stored as ``L`` flags, flag
``i`` telling whether arc ``i`` points from ``v_i`` to ``v_{i+1}``.  An
oriented cycle is stored the same way with arc ``r-1`` joining ``v_{r-1}``
and ``v0``.  Returned decompositions label arcs in this index order.

Part FIRST is always the part with the larger bound (2 or k) and part
SECOND the matching part.  Endarc constraints name which endarcs must lie
in the matching part.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

from ..digraph import Digraph, build_digraph, walk_component
from ..errors import BadParameter, NotACycle, NotAPath, PreconditionViolated, UnsupportedXSet
from ..forests import Bound, Decomposition, Family, INF, Part, ProblemSpec, check_bound, verify_decomposition
from ..satmatch import UndirectedGraph

F, S = Part.FIRST, Part.SECOND

SPEC_21 = ProblemSpec(Family.LINEAR_FOREST, 2, 1)


@dataclass(frozen=True)
class OrientedPath:
    forward: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.forward)

    def to_digraph(self) -> Digraph:
        return build_digraph(
            len(self.forward) + 1,
            [(i, i + 1) if f else (i + 1, i) for i, f in enumerate(self.forward)],
        )

    def reversed(self) -> OrientedPath:
        return OrientedPath(tuple(not f for f in reversed(self.forward)))

    @classmethod
    def from_digraph(cls, d: Digraph) -> tuple[OrientedPath, list[int]]:
        """Read a digraph whose underlying graph is a path (isolated vertices ignored).

        Returns the path and, per path position, the original arc id.
        """
        _require_max_degree_2(d, NotAPath)
        starts = [v for v in d.vertices if d.degree(v) > 0]
        if not starts:
            raise NotAPath("digraph has no arcs")
        arcs, walk, cyclic = walk_component(d, starts[0])
        if cyclic or len(arcs) != d.arc_count:
            raise NotAPath("underlying graph is not a single path")
        return cls(tuple(d.tails[a] == walk[i] for i, a in enumerate(arcs))), arcs


@dataclass(frozen=True)
class OrientedCycle:
    forward: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.forward) < 2:
            raise NotACycle("a cycle needs at least two arcs")

    def __len__(self) -> int:
        return len(self.forward)

    def to_digraph(self) -> Digraph:
        r = len(self.forward)
        return build_digraph(
            r, [(i, (i + 1) % r) if f else ((i + 1) % r, i) for i, f in enumerate(self.forward)]
        )

    @property
    def is_circuit(self) -> bool:
        return all(self.forward) or not any(self.forward)

    @classmethod
    def from_digraph(cls, d: Digraph) -> tuple[OrientedCycle, list[int]]:
        _require_max_degree_2(d, NotACycle)
        starts = [v for v in d.vertices if d.degree(v) > 0]
        if not starts:
            raise NotACycle("digraph has no arcs")
        arcs, walk, cyclic = walk_component(d, starts[0])
        if not cyclic or len(arcs) != d.arc_count:
            raise NotACycle("underlying graph is not a single cycle")
        return cls(tuple(d.tails[a] == walk[i] for i, a in enumerate(arcs))), arcs


def _require_max_degree_2(d: Digraph, error: type[Exception]) -> None:
    if d.max_degree > 2:
        raise error("a vertex has degree above 2")


@dataclass(frozen=True)
class EndarcConstraint:
    """Which endarcs (first, last) are required in the matching part."""

    first: bool = False
    last: bool = False

    @classmethod
    def of(cls, indices: Iterable[int]) -> EndarcConstraint:
        chosen = set(indices)
        if not chosen <= {1, 2}:
            raise BadParameter(f"endarc indices must be 1 or 2, got {sorted(chosen)}")
        return cls(1 in chosen, 2 in chosen)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, flag in ((1, self.first), (2, self.last)) if flag)


XSet: TypeAlias = frozenset[tuple[int, ...]]
ALL_SUBSETS: tuple[tuple[int, ...], ...] = ((), (1,), (2,), (1, 2))


def _require_length(p: OrientedPath, minimum: int) -> None:
    if len(p) < minimum:
        raise PreconditionViolated(f"path must have at least {minimum} arcs, got {len(p)}")


def _window_ok(
    forward: Sequence[bool], labels: Sequence[Part], spec: ProblemSpec
) -> bool:
    return verify_decomposition(OrientedPath(tuple(forward)).to_digraph(), Decomposition(tuple(labels)), spec)


def _brute_window(
    forward: Sequence[bool], first: bool, last: bool, spec: ProblemSpec
) -> list[Part] | None:
    """Exhaustive search over a short standalone window with endarc constraints."""
    for combo in itertools.product((F, S), repeat=len(forward)):
        if (combo[0] is S) != first or (combo[-1] is S) != last:
            continue
        if _window_ok(forward, combo, spec):
            return list(combo)
    return None


def _alternating_fill(width: int, pair_at_start: bool) -> list[Part]:
    """FIRST on even offsets, or FIRST on offset 0 plus every odd offset."""
    if pair_at_start:
        return [F if i == 0 or i % 2 == 1 else S for i in range(width)]
    return [F if i % 2 == 0 else S for i in range(width)]


def _finish(
    forward: Sequence[bool], labels: list[Part | None], spec: ProblemSpec
) -> Decomposition:
    dec = Decomposition(tuple(labels))  # type: ignore[arg-type]
    if not _window_ok(forward, dec.labels, spec):
        raise AssertionError("path construction produced an invalid decomposition")
    return dec


def path_21_constrained(p: OrientedPath, c: EndarcConstraint) -> Decomposition | None:
    """(2,1)-decomposition whose matching part meets the endarcs exactly as ``c`` says."""
    _require_length(p, 2)
    fw = p.forward
    labels: list[Part | None] = [None] * len(fw)
    lo, hi = 0, len(fw) - 1
    need_lo, need_hi = c.first, c.last
    while hi - lo + 1 >= 3:
        if need_lo:
            labels[lo] = S
            lo += 1
            need_lo = False
        elif need_hi:
            labels[hi] = S
            hi -= 1
            need_hi = False
        elif fw[lo] == fw[lo + 1]:
            labels[lo : hi + 1] = _alternating_fill(hi - lo + 1, pair_at_start=(hi - lo + 1) % 2 == 0)
            return _finish(fw, labels, SPEC_21)
        else:
            labels[lo] = F
            lo += 1
            need_lo = True
    tail = _brute_window(fw[lo : hi + 1], need_lo, need_hi, SPEC_21)
    if tail is None:
        return None
    labels[lo : hi + 1] = tail
    return _finish(fw, labels, SPEC_21)


def _isolated_ok(labels: Sequence[Part], c: EndarcConstraint) -> bool:
    if not c.first and not (labels[0] is F and labels[1] is S):
        return False
    if not c.last and not (labels[-1] is F and labels[-2] is S):
        return False
    return True


def path_21_isolated_endarcs(p: OrientedPath, c: EndarcConstraint) -> Decomposition | None:
    """Like :func:`path_21_constrained`, and every endarc outside the
    constraint must be alone in its component of the FIRST part."""
    _require_length(p, 2)
    fw = p.forward
    if len(fw) <= 3:
        for combo in itertools.product((F, S), repeat=len(fw)):
            if (combo[0] is S) != c.first or (combo[-1] is S) != c.last:
                continue
            if _isolated_ok(combo, c) and _window_ok(fw, combo, SPEC_21):
                return Decomposition(combo)
        return None
    labels: list[Part | None] = [None] * len(fw)
    lo, hi = 0, len(fw) - 1
    if not c.first:
        labels[0] = F
        lo = 1
    if not c.last:
        labels[-1] = F
        hi -= 1
    inner = path_21_constrained(OrientedPath(fw[lo : hi + 1]), EndarcConstraint(True, True))
    if inner is None:
        return None
    labels[lo : hi + 1] = inner.labels
    return _finish(fw, labels, SPEC_21)


def path_21_free(p: OrientedPath, at_start: bool = True) -> tuple[Decomposition, Decomposition]:
    """Two (2,1)-decompositions: the chosen endarc in the matching part, and
    the same endarc alone in the FIRST part."""
    _require_length(p, 1)
    width = len(p)
    with_matching = [S if i % 2 == 0 else F for i in range(width)]
    isolated = [F if i % 2 == 0 else S for i in range(width)]
    if not at_start:
        with_matching.reverse()
        isolated.reverse()
    return (
        _finish(p.forward, list(with_matching), SPEC_21),
        _finish(p.forward, list(isolated), SPEC_21),
    )


def _rotated(labels_from_anchor: list[Part], anchor: int) -> list[Part]:
    r = len(labels_from_anchor)
    out: list[Part] = [F] * r
    for offset, part in enumerate(labels_from_anchor):
        out[(anchor + offset) % r] = part
    return out


def _finish_cycle(c: OrientedCycle, labels: list[Part], spec: ProblemSpec) -> Decomposition:
    dec = Decomposition(tuple(labels))
    if not verify_decomposition(c.to_digraph(), dec, spec):
        raise AssertionError("cycle construction produced an invalid decomposition")
    return dec


def cycle_21(c: OrientedCycle) -> Decomposition:
    """A (2,1)-decomposition of any oriented cycle."""
    r = len(c)
    fw = c.forward
    if r % 2 == 0:
        return _finish_cycle(c, [F if i % 2 == 0 else S for i in range(r)], SPEC_21)
    # a vertex with one in-arc and one out-arc exists because r is odd
    anchor = next(j for j in range(r) if fw[j - 1] == fw[j])
    pattern = _alternating_fill(r, pair_at_start=True)
    return _finish_cycle(c, _rotated(pattern, (anchor - 1) % r), SPEC_21)


def _galaxy_spec(k: Bound) -> ProblemSpec:
    return ProblemSpec(Family.OUT_GALAXY, k, 1)


def _require_k_at_least_2(k: Bound) -> Bound:
    k = check_bound(k)
    if k < 2:
        raise BadParameter("this routine needs k >= 2; the k = 1 case is a 2-edge-colouring")
    return k


def cycle_k1_galaxy(c: OrientedCycle, k: Bound) -> Decomposition | None:
    """(k,1)-out-galaxy factorization of an oriented cycle; None for odd circuits."""
    k = _require_k_at_least_2(k)
    r = len(c)
    fw = c.forward
    spec = _galaxy_spec(k)
    if r % 2 == 0:
        return _finish_cycle(c, [F if i % 2 == 0 else S for i in range(r)], spec)
    if c.is_circuit:
        return None
    # source vertex v_j: arc j-1 points backward into v_{j-1}, arc j forward
    source = next(j for j in range(r) if not fw[j - 1] and fw[j])
    labels_from_source = [F if i % 2 == 0 or i == r - 1 else S for i in range(r)]
    return _finish_cycle(c, _rotated(labels_from_source, source), spec)


def path_k1_galaxy_constrained(p: OrientedPath, k: Bound, c: EndarcConstraint) -> Decomposition | None:
    """(k,1)-factorization whose matching part meets the endarcs exactly as ``c`` says."""
    k = _require_k_at_least_2(k)
    _require_length(p, 2)
    spec = _galaxy_spec(k)
    fw = p.forward
    labels: list[Part | None] = [None] * len(fw)
    lo, hi = 0, len(fw) - 1
    need_lo, need_hi = c.first, c.last
    while hi - lo + 1 >= 3:
        if need_lo:
            labels[lo] = S
            lo += 1
            need_lo = False
        elif need_hi:
            labels[hi] = S
            hi -= 1
            need_hi = False
        elif not (not fw[lo] and fw[lo + 1]):
            labels[lo] = F
            lo += 1
            need_lo = True
        else:
            labels[lo : hi + 1] = _alternating_fill(hi - lo + 1, pair_at_start=(hi - lo + 1) % 2 == 0)
            return _finish(fw, labels, spec)
    tail = _brute_window(fw[lo : hi + 1], need_lo, need_hi, spec)
    if tail is None:
        return None
    labels[lo : hi + 1] = tail
    return _finish(fw, labels, spec)


def compute_xset(p: OrientedPath, k: Bound) -> XSet:
    """Endarc patterns ``I`` for which a constrained factorization exists."""
    return frozenset(
        subset for subset in ALL_SUBSETS
        if path_k1_galaxy_constrained(p, k, EndarcConstraint.of(subset)) is not None
    )


def xset(*members: Iterable[int]) -> XSet:
    return frozenset(tuple(sorted(m)) for m in members)


@dataclass(frozen=True)
class XGadget:
    """Matching gadget; nodes 0 and 1 are the two attachment nodes."""

    graph: UndirectedGraph
    v1: int
    v2: int
    e1: int
    e2: int
    required: frozenset[int]

    @property
    def extra_nodes(self) -> range:
        return range(2, self.graph.node_count)


_EMPTY, _ONE, _TWO, _BOTH = (), (1,), (2,), (1, 2)


def build_xgadget(x: XSet) -> XGadget:
    """Gadget whose Z-covering matchings trace exactly ``x`` on (e1, e2)."""
    members = frozenset(x)
    v1, v2 = 0, 1
    if members == {_EMPTY, _BOTH}:
        # v1 - z1 - z2 - v2, both z required
        return XGadget(UndirectedGraph.of(4, [(v1, 2), (3, v2), (2, 3)]), v1, v2, 0, 1, frozenset({2, 3}))
    if members == {_ONE, _TWO}:
        return XGadget(UndirectedGraph.of(3, [(v1, 2), (v2, 2)]), v1, v2, 0, 1, frozenset({2}))
    if members == {_EMPTY, _ONE, _TWO}:
        return XGadget(UndirectedGraph.of(3, [(v1, 2), (v2, 2)]), v1, v2, 0, 1, frozenset())
    if members == {_EMPTY, _ONE, _BOTH}:
        # z = 2 required, w = 3
        return XGadget(UndirectedGraph.of(4, [(v1, 2), (v2, 3), (3, 2)]), v1, v2, 0, 1, frozenset({2}))
    if members == {_EMPTY, _TWO, _BOTH}:
        return XGadget(UndirectedGraph.of(4, [(v1, 3), (v2, 2), (3, 2)]), v1, v2, 0, 1, frozenset({2}))
    if members == {_ONE, _TWO, _BOTH}:
        # z1 = 2, z2 = 3 required, shared w = 4
        return XGadget(
            UndirectedGraph.of(5, [(v1, 2), (v2, 3), (2, 4), (3, 4)]), v1, v2, 0, 1, frozenset({2, 3})
        )
    if members == {_EMPTY, _ONE, _TWO, _BOTH}:
        return XGadget(UndirectedGraph.of(4, [(v1, 2), (v2, 3)]), v1, v2, 0, 1, frozenset())
    raise UnsupportedXSet(f"X-set {sorted(members)} contains neither {{(), (1, 2)}} nor {{(1,), (2,)}}")


__all__ = [
    "ALL_SUBSETS",
    "EndarcConstraint",
    "OrientedCycle",
    "OrientedPath",
    "XGadget",
    "XSet",
    "build_xgadget",
    "compute_xset",
    "cycle_21",
    "cycle_k1_galaxy",
    "path_21_constrained",
    "path_21_free",
    "path_21_isolated_endarcs",
    "path_k1_galaxy_constrained",
    "xset",
]
