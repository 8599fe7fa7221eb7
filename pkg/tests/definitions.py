"""Definitional checks for forcers and gadgets, shared by the unit and acceptance suites.

Each ``check_*`` function returns a list of human-readable violations; an
empty list means the gadget meets its definition.  Universal clauses are
checked over a full oracle enumeration; existential clauses are checked both
against the gadget's stored witnesses and against the enumeration.  A budget
overrun is reported as a violation, never skipped.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable

from forestdec.digraph import Digraph
from forestdec.forests import INF, Decomposition, Family, Part, ProblemSpec, verify_decomposition
from forestdec.gadgets import Gadget, subset_name
from forestdec.oracle import BudgetExceeded, Outcome, SearchBudget, oracle_decide, oracle_enumerate

F, S = Part.FIRST, Part.SECOND
BUDGET = SearchBudget(max_nodes=10_000_000)


def back_length(d: Digraph, dec: Decomposition, arc: int) -> int:
    """Arcs on the path of ``arc``'s part that ends with ``arc``."""
    part = dec[arc]
    length, current = 1, arc
    while True:
        tail = d.tails[current]
        previous = [b for b in d.in_arcs(tail) if dec[b] is part]
        if not previous:
            return length
        current = previous[0]
        length += 1


def is_sink_leaf(d: Digraph, v: int) -> bool:
    return d.out_degree(v) == 0 and d.in_degree(v) == 1


def all_decompositions(g: Gadget, spec: ProblemSpec | None = None) -> list[Decomposition] | str:
    found = oracle_enumerate(g.digraph, spec or g.spec, budget=BUDGET)
    if isinstance(found, BudgetExceeded):
        return f"{g.name}: enumeration exceeded {BUDGET.max_nodes} nodes"
    return found


def exists(g: Gadget, constraint: dict[int, Part], spec: ProblemSpec | None = None) -> bool | str:
    result = oracle_decide(g.digraph, spec or g.spec, BUDGET, constraint=constraint)
    if result.outcome is Outcome.BUDGET_EXCEEDED:
        return f"{g.name}: constrained search exceeded {BUDGET.max_nodes} nodes"
    return result.outcome is Outcome.YES


def _universal(g: Gadget, label: str, holds: Callable[[Decomposition], bool], spec: ProblemSpec | None = None) -> list[str]:
    decs = all_decompositions(g, spec)
    if isinstance(decs, str):
        return [decs]
    if not decs:
        return [f"{g.name}: no decomposition at all"]
    bad = [d for d in decs if not holds(d)]
    return [f"{g.name}: {label} fails for {len(bad)} of {len(decs)} decompositions"] if bad else []


def _existential(g: Gadget, label: str, holds: Callable[[Decomposition], bool], spec: ProblemSpec | None = None) -> list[str]:
    decs = all_decompositions(g, spec)
    if isinstance(decs, str):
        return [decs]
    return [] if any(holds(d) for d in decs) else [f"{g.name}: no decomposition with {label}"]


def _witnesses_verify(g: Gadget) -> list[str]:
    return [f"{g.name}: witness {w} does not verify" for w, dec in g.witnesses.items() if not verify_decomposition(g.digraph, dec, g.spec)]


# --- forcers


def check_short_in_forcer(g: Gadget) -> list[str]:
    d, a, tip = g.digraph, g.arcs["a"], g.vertices["tip"]
    out = [] if d.heads[a] == tip and is_sink_leaf(d, tip) else [f"{g.name}: tip is not a leaf head of a"]
    out += _universal(g, "a in the matching part", lambda dec: dec[a] is S)
    return out


def check_long_in_forcer(g: Gadget, alpha: int) -> list[str]:
    d, tip = g.digraph, g.vertices["tip"]
    if not is_sink_leaf(d, tip):
        return [f"{g.name}: tip has degree {d.degree(tip)}"]
    (last,) = d.in_arcs(tip)

    def ending(dec: Decomposition) -> int:
        return back_length(d, dec, last) if dec[last] is F else 0

    out = _universal(g, f"tip ends a path of length {alpha}", lambda dec: ending(dec) >= alpha)
    out += _existential(g, f"tip not ending a path of length {alpha + 1}", lambda dec: ending(dec) <= alpha)
    return out


def check_minus2_in_forcer(g: Gadget, k: int, l: int) -> list[str]:
    d, a = g.digraph, g.arcs["a"]
    z = d.heads[a]
    out = [] if d.degree(z) == 1 else [f"{g.name}: a is not the only arc at its head"]
    bound = {F: k, S: l}
    out += _universal(g, "a ends a path of length bound-2", lambda dec: back_length(d, dec, a) >= bound[dec[a]] - 2)
    for part in (F, S):
        out += _existential(
            g,
            f"a in {part.name} ending a path shorter than {bound[part] - 1}",
            lambda dec, part=part: dec[a] is part and back_length(d, dec, a) < bound[part] - 1,
        )
    return out


def check_out_forcer(g: Gadget, expected: Part) -> list[str]:
    d, a, x = g.digraph, g.arcs["a"], g.vertices["origin"]
    out = [] if d.tails[a] == x and d.in_degree(x) == 0 and d.out_degree(x) == 1 else [f"{g.name}: bad origin"]
    out += _universal(g, f"a in {expected.name}", lambda dec: dec[a] is expected)
    return out


def check_k2_alpha_in_forcer(g: Gadget, alpha: int) -> list[str]:
    d, a = g.digraph, g.arcs["a"]
    out = [] if d.degree(d.heads[a]) == 1 else [f"{g.name}: head of a has other arcs"]
    out += _universal(g, f"a in FIRST ending a path of length >= {alpha}", lambda dec: dec[a] is F and back_length(d, dec, a) >= alpha)
    out += _existential(g, f"a on no FIRST path of length {alpha + 1}", lambda dec: dec[a] is S or back_length(d, dec, a) <= alpha)
    return out


# --- linear forest gadgets


def _pendants(g: Gadget, names: Iterable[str]) -> list[int]:
    return [g.arcs[n] for n in names]


def check_k_variable_gadget(g: Gadget) -> list[str]:
    d = g.digraph
    arcs = _pendants(g, ["a1", "a2", "a3", "a4"])
    out = [f"{g.name}: head of a{i + 1} not a leaf" for i, a in enumerate(arcs) if not is_sink_leaf(d, d.heads[a])]
    # a matching set inside neither {a1,a3} nor {a2,a4} contains two cyclically adjacent pendants
    for i in range(4):
        pair = {arcs[i]: S, arcs[(i + 1) % 4]: S}
        found = exists(g, pair)
        if found is not False:
            out.append(found if isinstance(found, str) else f"{g.name}: a{i + 1}, a{(i + 1) % 4 + 1} both matched")
    for name, chosen in (("a1-a3", {0, 2}), ("a2-a4", {1, 3})):
        dec = g.witness(name)
        if {i for i, a in enumerate(arcs) if dec[a] is S} != chosen:
            out.append(f"{g.name}: witness {name} matches the wrong pendants")
    return out + _witnesses_verify(g)


def check_k_clause_gadget(g: Gadget) -> list[str]:
    d = g.digraph
    arcs = _pendants(g, ["b1", "b2", "b3"])
    out = [f"{g.name}: head of b{i + 1} not a leaf" for i, a in enumerate(arcs) if not is_sink_leaf(d, d.heads[a])]
    found = exists(g, {a: S for a in arcs})
    if found is not False:
        out.append(found if isinstance(found, str) else f"{g.name}: all of b1..b3 matched")
    for mask in range(1, 8):
        chosen = {i + 1 for i in range(3) if mask >> i & 1}
        dec = g.witness(subset_name(chosen))
        if {i + 1 for i, a in enumerate(arcs) if dec[a] is F} != chosen:
            out.append(f"{g.name}: witness {subset_name(chosen)} has the wrong FIRST set")
    return out + _witnesses_verify(g)


def check_kl_clause_gadget(g: Gadget) -> list[str]:
    d = g.digraph
    arcs = _pendants(g, ["a1", "a2", "a3"])
    out = [f"{g.name}: a{i + 1} not alone at t{i + 1}" for i, a in enumerate(arcs) if d.degree(g.vertices[f"t{i + 1}"]) != 1]

    def first_set(dec: Decomposition) -> frozenset[int]:
        return frozenset(i + 1 for i, a in enumerate(arcs) if dec[a] is F)

    out += _universal(g, "a1..a3 split between both parts", lambda dec: 0 < len(first_set(dec)) < 3)
    for mask in range(1, 7):
        chosen = frozenset(i + 1 for i in range(3) if mask >> i & 1)
        out += _existential(g, f"FIRST set {sorted(chosen)}", lambda dec, chosen=chosen: first_set(dec) == chosen)
        if first_set(g.witness(subset_name(chosen))) != chosen:
            out.append(f"{g.name}: witness {subset_name(chosen)} has the wrong FIRST set")
    return out + _witnesses_verify(g)


def check_klt_variable_gadget(g: Gadget, t: int) -> list[str]:
    d = g.digraph
    k, l = g.spec.first, g.spec.second
    arcs = _pendants(g, [f"a{i + 1}" for i in range(t)])
    out = [f"{g.name}: a{i + 1} not alone at its head" for i, a in enumerate(arcs) if d.degree(d.heads[a]) != 1]
    bound = {F: k, S: l}

    def uniform(dec: Decomposition) -> bool:
        return len({dec[a] for a in arcs}) == 1

    def full_paths(dec: Decomposition) -> bool:
        return all(back_length(d, dec, a) >= bound[dec[a]] for a in arcs)

    out += _universal(g, "pendants share a part", uniform)
    out += _universal(g, "pendants end full-length paths", full_paths)
    for part in (F, S):
        out += _existential(g, f"all pendants in {part.name}", lambda dec, part=part: all(dec[a] is part for a in arcs))
    return out + _witnesses_verify(g)


# --- out-galaxy gadgets


def check_q_variable_gadget(g: Gadget) -> list[str]:
    d = g.digraph
    sinks = g.vertex_sets["S"]
    out = [f"{g.name}: {v} is not a leaf sink" for v in sinks if not is_sink_leaf(d, v)]
    entering = [d.in_arcs(v)[0] for v in sinks]
    unbounded = ProblemSpec(Family.OUT_GALAXY, INF, INF)
    out += _universal(g, "arcs into S share a part", lambda dec: len({dec[a] for a in entering}) == 1, unbounded)
    two_two = ProblemSpec(Family.OUT_GALAXY, 2, 2)
    if not any(verify_decomposition(d, dec, two_two) for dec in g.witnesses.values()):
        out.append(f"{g.name}: no (2,2) witness")
    if oracle_decide(d, two_two).outcome is not Outcome.YES:
        out.append(f"{g.name}: oracle finds no (2,2)-factorization")
    return out


def check_clause_gadget_bogd(g: Gadget) -> list[str]:
    d = g.digraph
    s1, s2 = g.vertex_sets["S1"], g.vertex_sets["S2"]
    sinks = list(s1) + list(s2)
    out = [f"{g.name}: {v} is not a leaf sink" for v in sinks if not is_sink_leaf(d, v)]
    entering = [d.in_arcs(v)[0] for v in sinks]
    s2_positions = frozenset(range(len(s1) + 1, len(sinks) + 1))

    def first_positions(dec: Decomposition) -> frozenset[int]:
        return frozenset(i + 1 for i, a in enumerate(entering) if dec[a] is F)

    out += _universal(g, "FIRST never meets the sinks exactly in S2", lambda dec: first_positions(dec) != s2_positions)
    for mask in range(1 << len(sinks)):
        chosen = frozenset(i + 1 for i in range(len(sinks)) if mask >> i & 1)
        if chosen == s2_positions:
            continue
        found = exists(g, {a: (F if i + 1 in chosen else S) for i, a in enumerate(entering)})
        if found is not True:
            out.append(found if isinstance(found, str) else f"{g.name}: no factorization for S0 = {sorted(chosen)}")
        if first_positions(g.witness(subset_name(chosen))) != chosen:
            out.append(f"{g.name}: witness {subset_name(chosen)} is wrong")
    return out + _witnesses_verify(g)
