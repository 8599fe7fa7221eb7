"""Exact decision and enumeration for any two-part bounded decomposition."""

from __future__ import annotations

import enum
import time
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from ..digraph import ArcId, Digraph
from ..forests import INF, Decomposition, Family, Part, ProblemSpec, verify_decomposition
from . import _kernel

_CHUNK_NODES = 1_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits; ``None`` means unlimited."""

    max_nodes: int | None = None
    deadline_seconds: float | None = None


UNLIMITED = SearchBudget()


class Outcome(enum.Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleResult:
    outcome: Outcome
    decomposition: Decomposition | None
    nodes: int


@dataclass(frozen=True)
class BudgetExceeded:
    """Enumeration stopped early; ``partial`` holds what was found so far."""

    nodes: int
    partial: tuple[Decomposition, ...] = ()


def bfs_arc_order(d: Digraph) -> list[ArcId]:
    """Arcs in BFS order per component, rooted at the least vertex."""
    seen = [False] * d.vertex_count
    placed = [False] * d.arc_count
    order: list[ArcId] = []
    for root in d.vertices:
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for a in d.incident_arcs(v):
                if not placed[a]:
                    placed[a] = True
                    order.append(a)
                w = d.other_end(a, v)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _obviously_impossible(d: Digraph, family: Family) -> bool:
    for v in d.vertices:
        if d.in_degree(v) > 2:
            return True
        if family is Family.LINEAR_FOREST and d.out_degree(v) > 2:
            return True
    return False


class _Search:
    """Owns the kernel arrays for one (digraph, spec, constraint) triple."""

    def __init__(self, d: Digraph, spec: ProblemSpec, constraint: Mapping[ArcId, Part] | None) -> None:
        n, m = d.vertex_count, d.arc_count
        self.digraph = d
        self.spec = spec
        cap = m + 1
        words = _kernel.words_for(m)
        self.words = words

        def enc(bound: float) -> int:
            return cap if bound == INF else int(min(bound, cap))

        inc_ptr = [0]
        inc_arc: list[int] = []
        for v in d.vertices:
            inc_arc.extend(d.incident_arcs(v))
            inc_ptr.append(len(inc_arc))
        preset = [-1] * m
        for a, p in (constraint or {}).items():
            d._check_arc(a)
            preset[a] = int(p)
        fields = {
            "bnd": [enc(spec.first), enc(spec.second)],
            "tail": list(d.tails),
            "head": list(d.heads),
            "inc_ptr": inc_ptr,
            "inc_arc": inc_arc,
            "order": bfs_arc_order(d),
            "label": [-1] * m,
            "indeg": [0] * (2 * n),
            "outdeg": [0] * (2 * n),
            "oth": list(range(n)) * 2,
            "plen": [0] * (2 * n),
            "pin": [-1] * (2 * n),
            "pout": [-1] * (2 * n),
            "trail": [0] * (7 * m),
            "queue": [0] * (4 * m + n + 8),
            "dec": [0] * (4 * m),
            "st": [0] * 6,
            "preset": preset,
            "reason": [0] * (m * words),
            "conf": [0] * words,
            "cset": [0] * ((m + 2) * words),
        }
        if _kernel.JIT_ENABLED:
            self.a = {k: np.asarray(v, dtype=np.int64) for k, v in fields.items()}
        else:
            self.a = fields
        self.n = n
        self.started = time.monotonic()
        self.fam = _kernel.LINEAR_FOREST if spec.family is Family.LINEAR_FOREST else _kernel.OUT_GALAXY
        self.dead = _obviously_impossible(d, spec.family)
        if not self.dead:
            self.dead = not self._seed()

    def _seed(self) -> bool:
        a = self.a
        return bool(
            _kernel.seed(
                self.n, self.fam, a["bnd"], a["tail"], a["head"], a["inc_ptr"], a["inc_arc"],
                a["label"], a["indeg"], a["outdeg"], a["oth"], a["plen"], a["pin"], a["pout"],
                a["trail"], a["queue"], a["st"], a["reason"], self.words, a["conf"], a["preset"],
            )
        )

    @property
    def nodes(self) -> int:
        return int(self.a["st"][2])

    def step(self, budget: SearchBudget) -> int:
        """Run until the next solution, exhaustion, or budget exhaustion."""
        if self.dead:
            return _kernel.EXHAUSTED
        a = self.a
        while True:
            limit = -1 if budget.max_nodes is None else budget.max_nodes
            if budget.deadline_seconds is not None:
                chunk_end = self.nodes + _CHUNK_NODES
                limit = chunk_end if limit < 0 else min(limit, chunk_end)
            status = int(
                _kernel.search(
                    self.n, self.fam, a["bnd"], a["tail"], a["head"], a["inc_ptr"], a["inc_arc"],
                    a["order"], a["label"], a["indeg"], a["outdeg"], a["oth"], a["plen"],
                    a["pin"], a["pout"], a["trail"], a["queue"], a["dec"], a["st"],
                    a["reason"], self.words, a["conf"], a["cset"], limit,
                )
            )
            if status != _kernel.BUDGET:
                return status
            if budget.max_nodes is not None and self.nodes >= budget.max_nodes:
                return status
            if budget.deadline_seconds is not None and time.monotonic() - self.started >= budget.deadline_seconds:
                return status

    def current(self) -> Decomposition:
        dec = Decomposition.from_labels(int(x) for x in self.a["label"])
        if not verify_decomposition(self.digraph, dec, self.spec):
            raise AssertionError("oracle produced an invalid decomposition")
        return dec


def oracle_decide(
    d: Digraph,
    spec: ProblemSpec,
    budget: SearchBudget = UNLIMITED,
    constraint: Mapping[ArcId, Part] | None = None,
) -> OracleResult:
    """Decide whether ``d`` has a decomposition of type ``spec``.

    The witness is the first complete labelling met by the search, which
    tries part FIRST before SECOND along a BFS order of the arcs.
    """
    search = _Search(d, spec, constraint)
    status = search.step(budget)
    if status == _kernel.SOLUTION:
        return OracleResult(Outcome.YES, search.current(), search.nodes)
    if status == _kernel.EXHAUSTED:
        return OracleResult(Outcome.NO, None, search.nodes)
    return OracleResult(Outcome.BUDGET_EXCEEDED, None, search.nodes)


def oracle_enumerate(
    d: Digraph,
    spec: ProblemSpec,
    budget: SearchBudget = UNLIMITED,
    constraint: Mapping[ArcId, Part] | None = None,
) -> list[Decomposition] | BudgetExceeded:
    """All decompositions extending ``constraint``, sorted by label tuple.

    The node budget applies to the whole enumeration.
    """
    search = _Search(d, spec, constraint)
    found: list[Decomposition] = []
    while True:
        status = search.step(budget)
        if status == _kernel.SOLUTION:
            found.append(search.current())
        elif status == _kernel.EXHAUSTED:
            return sorted(found, key=lambda x: x.labels)
        else:
            return BudgetExceeded(search.nodes, tuple(found))
