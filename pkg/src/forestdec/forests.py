"""Decomposition model and the verifiers every solver is checked against."""

from __future__ import annotations

import enum
import math
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .digraph import ArcId, Digraph
from .errors import BadParameter, IncompleteLabeling, UnknownArc

Bound = int | float
INF: float = math.inf


def check_bound(value: Bound) -> Bound:
    if value == INF:
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise BadParameter(f"bound must be a positive integer or inf, got {value!r}")
    return value


def parse_bound(text: str | int) -> Bound:
    if isinstance(text, int):
        return check_bound(text)
    token = text.strip().lower()
    if token in ("inf", "infinity", "∞"):
        return INF
    try:
        return check_bound(int(token))
    except ValueError as exc:
        raise BadParameter(f"cannot parse bound {text!r}") from exc


def format_bound(value: Bound) -> str:
    return "inf" if value == INF else str(int(value))


class Family(enum.Enum):
    LINEAR_FOREST = "linear-forest"
    OUT_GALAXY = "out-galaxy"


class Part(enum.IntEnum):
    FIRST = 0
    SECOND = 1

    @property
    def other(self) -> Part:
        return Part(1 - self)


@dataclass(frozen=True)
class ProblemSpec:
    """A family plus the bound of each of the two parts."""

    family: Family
    first: Bound
    second: Bound

    def __post_init__(self) -> None:
        check_bound(self.first)
        check_bound(self.second)

    def bound(self, part: Part) -> Bound:
        return self.first if part is Part.FIRST else self.second

    def swapped(self) -> ProblemSpec:
        return ProblemSpec(self.family, self.second, self.first)

    def __str__(self) -> str:
        return f"({format_bound(self.first)},{format_bound(self.second)})-{self.family.value}"


@dataclass(frozen=True)
class Decomposition:
    """Total labelling of arc ids ``0 .. m-1`` by :class:`Part`."""

    labels: tuple[Part, ...]

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> Decomposition:
        return cls(tuple(Part(int(x)) for x in labels))

    @classmethod
    def from_first(cls, arc_count: int, first: Iterable[ArcId]) -> Decomposition:
        chosen = set(first)
        return cls(tuple(Part.FIRST if a in chosen else Part.SECOND for a in range(arc_count)))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, a: ArcId) -> Part:
        return self.labels[a]

    def arcs_in(self, part: Part) -> list[ArcId]:
        return [a for a, p in enumerate(self.labels) if p is part]

    def swapped(self) -> Decomposition:
        return Decomposition(tuple(p.other for p in self.labels))

    def extends(self, constraint: Mapping[ArcId, Part]) -> bool:
        return all(self.labels[a] is Part(p) for a, p in constraint.items())


@dataclass(frozen=True)
class Verdict:
    """Answer of a polynomial solver: a certificate, or a reason for No."""

    decomposition: Decomposition | None
    reason: str | None = None

    @property
    def is_yes(self) -> bool:
        return self.decomposition is not None

    @classmethod
    def no(cls, reason: str) -> Verdict:
        return cls(None, reason)


def _checked(d: Digraph, arcs: Iterable[ArcId]) -> list[ArcId]:
    result = list(arcs)
    for a in result:
        if not 0 <= a < d.arc_count:
            raise UnknownArc(f"arc {a} not in digraph")
    return result


def _dlf_violation(d: Digraph, arcs: list[ArcId], k: Bound) -> str | None:
    out_deg = Counter(d.tails[a] for a in arcs)
    in_deg = Counter(d.heads[a] for a in arcs)
    for v, c in out_deg.items():
        if c > 1:
            return f"vertex {v} has out-degree {c}"
    for v, c in in_deg.items():
        if c > 1:
            return f"vertex {v} has in-degree {c}"
    succ = {d.tails[a]: a for a in arcs}
    visited = 0
    for a in arcs:
        start = d.tails[a]
        if start in in_deg:
            continue
        length = 0
        cur = start
        component = []
        while cur in succ:
            b = succ[cur]
            component.append(b)
            length += 1
            cur = d.heads[b]
        visited += length
        if length > k:
            return f"path through arcs {component} has length {length} > {format_bound(k)}"
    if visited != len(arcs):
        return "part contains a directed cycle"
    return None


def _galaxy_violation(d: Digraph, arcs: list[ArcId], k: Bound) -> str | None:
    out_deg = Counter(d.tails[a] for a in arcs)
    in_deg = Counter(d.heads[a] for a in arcs)
    for v, c in in_deg.items():
        if c > 1:
            return f"vertex {v} has in-degree {c}"
        if out_deg.get(v, 0):
            return f"vertex {v} has both an in-arc and an out-arc"
    for v, c in out_deg.items():
        if c > k:
            return f"star rooted at {v} has {c} arcs > {format_bound(k)}"
    return None


def is_bounded_dlf(d: Digraph, arcs: Iterable[ArcId], k: Bound) -> bool:
    """Whether ``arcs`` form directed paths of length at most ``k``."""
    return _dlf_violation(d, _checked(d, arcs), k) is None


def is_bounded_out_galaxy(d: Digraph, arcs: Iterable[ArcId], k: Bound) -> bool:
    """Whether ``arcs`` form vertex-disjoint out-stars with at most ``k`` arcs each."""
    return _galaxy_violation(d, _checked(d, arcs), k) is None


def family_violation(d: Digraph, arcs: Iterable[ArcId], family: Family, k: Bound) -> str | None:
    """Human-readable description of the first violation, or ``None``."""
    checked = _checked(d, arcs)
    if family is Family.LINEAR_FOREST:
        return _dlf_violation(d, checked, k)
    return _galaxy_violation(d, checked, k)


def decomposition_violation(d: Digraph, dec: Decomposition, spec: ProblemSpec) -> str | None:
    if len(dec) != d.arc_count:
        raise IncompleteLabeling(f"decomposition labels {len(dec)} arcs, digraph has {d.arc_count}")
    for part in Part:
        problem = family_violation(d, dec.arcs_in(part), spec.family, spec.bound(part))
        if problem is not None:
            return f"part {part.name.lower()}: {problem}"
    return None


def verify_decomposition(d: Digraph, dec: Decomposition, spec: ProblemSpec) -> bool:
    return decomposition_violation(d, dec, spec) is None


def path_length_through(d: Digraph, dec: Decomposition, a: ArcId) -> int:
    """Number of arcs from the start of ``a``'s path in its part up to ``a``.

    Assumes the part containing ``a`` is a linear forest.
    """
    part = dec[a]
    pred = {d.heads[b]: b for b in dec.arcs_in(part)}
    length = 1
    cur = d.tails[a]
    while cur in pred:
        length += 1
        cur = d.tails[pred[cur]]
        if length > d.arc_count:
            raise BadParameter("part is not a linear forest")
    return length
