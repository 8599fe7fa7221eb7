"""Variable and clause gadgets for bounded linear forest decomposition."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from ..errors import BadParameter
from ..forests import Family, Part, ProblemSpec
from .core import Assembly, Builder, Gadget, assemble
from .forcers import k2_alpha_in_forcer, long_k_alpha_in_forcer, minus2_in_forcer

FIRST, SECOND = Part.FIRST, Part.SECOND


def subset_name(members: Iterable[int]) -> str:
    """Canonical witness name for a set of 1-based interface positions."""
    return "S=" + ",".join(str(i) for i in sorted(members))


def nonempty_subsets(size: int, proper: bool) -> list[frozenset[int]]:
    top = size - 1 if proper else size
    return [frozenset(c) for r in range(1, top + 1) for c in combinations(range(1, size + 1), r)]


def _part(in_first: bool) -> Part:
    return FIRST if in_first else SECOND


def k_variable_gadget(k: int) -> Gadget:
    """Twelve-cycle gadget for (k,1)-decomposition with pendant arcs ``a1..a4``.

    Witness ``"a1-a3"`` has exactly ``a1, a3`` in the matching part and
    ``"a2-a4"`` exactly ``a2, a4``.
    """
    if k < 3:
        raise BadParameter(f"k-variable gadget needs k >= 3, got {k}")
    forcer = long_k_alpha_in_forcer(k, k - 2)
    matching_arcs = {
        "a1-a3": {1, 5, 7, 11, 12, 14, 17, 19},
        "a2-a4": {2, 4, 8, 10, 13, 15, 16, 18},
    }

    def recipe(w: str) -> Assembly:
        b = Builder()
        cycle = [b.vertex(f"v{i + 1}") for i in range(12)]
        zs = [b.vertex(f"z{i + 1}") for i in range(4)]
        ys = [b.vertex(f"y{i + 1}") for i in range(4)]
        chosen = matching_arcs[w]

        def part(arc_index: int) -> Part:
            return SECOND if arc_index in chosen else FIRST

        for i in range(12):
            b.arc(cycle[i], cycle[(i + 1) % 12], part(i))
        pendants = [b.arc(ys[i], zs[i], part(12 + i)) for i in range(4)]
        for i in range(4):
            b.arc(ys[i], cycle[3 * i], part(16 + i))
        for i in range(4):
            b.embed(forcer, "default", {forcer.vertices["tip"]: ys[i]}, prefix=f"long[y{i + 1}].")
        return Assembly(
            b,
            arcs={f"a{i + 1}": pendants[i] for i in range(4)},
            vertices={f"z{i + 1}": zs[i] for i in range(4)},
        )

    return assemble(f"k-variable-gadget(k={k})", ProblemSpec(Family.LINEAR_FOREST, k, 1), recipe, list(matching_arcs))


def k_clause_gadget(k: int) -> Gadget:
    """Clause gadget for (k,1)-decomposition with pendant arcs ``b1..b3``.

    For every nonempty ``S`` of positions the witness ``subset_name(S)`` puts
    exactly the arcs ``b_i, i in S`` in the k-bounded part.
    """
    if k < 3:
        raise BadParameter(f"k-clause gadget needs k >= 3, got {k}")
    forcer = long_k_alpha_in_forcer(k, k - 3) if k >= 4 else None
    subsets = nonempty_subsets(3, proper=False)

    def recipe(w: str) -> Assembly:
        s = next(x for x in subsets if subset_name(x) == w)
        b = Builder()
        v = [b.vertex(f"v{i + 1}") for i in range(7)]
        y = [b.vertex(f"y{i + 1}") for i in range(3)]
        left = 1 in s
        b.arc(v[0], v[1], _part(not left))
        b.arc(v[2], v[1], _part(left))
        b.arc(v[2], v[3], _part(not left))
        b.arc(v[3], v[4], FIRST)
        b.arc(v[4], v[5], _part(2 not in s))
        b.arc(v[5], v[6], _part(s not in ({3}, {1, 3})))
        b1 = b.arc(v[0], y[0], _part(left))
        b2 = b.arc(v[4], y[1], _part(2 in s))
        b3 = b.arc(v[6], y[2], _part(3 in s))
        if forcer is not None:
            b.embed(forcer, "default", {forcer.vertices["tip"]: v[2]}, prefix="long[v3].")
        return Assembly(
            b,
            arcs={"b1": b1, "b2": b2, "b3": b3},
            vertices={f"y{i + 1}": y[i] for i in range(3)},
        )

    return assemble(
        f"k-clause-gadget(k={k})",
        ProblemSpec(Family.LINEAR_FOREST, k, 1),
        recipe,
        [subset_name(s) for s in subsets],
    )


def _klt_wide(k: int, l: int, t: int) -> Gadget:
    forcer = minus2_in_forcer(k, l)
    forcer_witness = {FIRST: "first", SECOND: "second"}

    def recipe(w: str) -> Assembly:
        p = FIRST if w == "first" else SECOND
        q = p.other
        b = Builder()
        u = [b.vertex(f"u{i}") for i in range(2 * t + 1)]
        pendant_heads = [b.vertex(f"v{i}") for i in range(1, 2 * t)]
        w1, w2 = b.vertex("w1"), b.vertex("w2")
        for i in range(2 * t):
            b.arc(u[i], u[i + 1], p if i % 2 == 0 else q)
        pendants = [b.arc(u[i], pendant_heads[i - 1], p if i % 2 == 1 else q) for i in range(1, 2 * t)]
        b.arc(u[2 * t], w1, p)
        b.arc(u[2 * t], w2, q)
        tip = forcer.vertices["tip"]
        b.embed(forcer, "first", {tip: u[0]}, prefix="forcer[u0,1].")
        b.embed(forcer, "second", {tip: u[0]}, prefix="forcer[u0,2].")
        for i in range(1, 2 * t):
            part = q if i % 2 == 1 else p
            b.embed(forcer, forcer_witness[part], {tip: u[i]}, prefix=f"forcer[u{i}].")
        return Assembly(
            b,
            arcs={f"a{i + 1}": pendants[2 * i] for i in range(t)},
            vertices={f"head{i + 1}": pendant_heads[2 * i] for i in range(t)},
        )

    return assemble(f"klt-variable-gadget(k={k},l={l},t={t})", ProblemSpec(Family.LINEAR_FOREST, k, l), recipe, ["first", "second"])


def _k2t(k: int, t: int) -> Gadget:
    small = k2_alpha_in_forcer(k, k - 2) if k >= 3 else None
    large = k2_alpha_in_forcer(k, k - 1) if k >= 3 else None

    def recipe(w: str) -> Assembly:
        # marked arcs follow the pattern of the witness; the rest take the other part
        marked_part = FIRST if w == "first" else SECOND
        other = marked_part.other
        b = Builder()
        v: dict[tuple[int, int], int] = {}
        for i in range(1, t + 1):
            for j in range(1, 8):
                if i == t and j in (6, 7):
                    continue
                v[(i, j)] = b.vertex(f"v{i}^{j}")
        hub = b.vertex("w")
        pendants = []
        for i in range(1, t + 1):
            b.arc(v[(i, 2)], v[(i, 1)], other)
            b.arc(v[(i, 2)], v[(i, 3)], marked_part)
            b.arc(v[(i, 4)], v[(i, 3)], other)
            pendants.append(b.arc(v[(i, 4)], v[(i, 5)], marked_part))
        for i in range(1, t):
            b.arc(v[(i, 1)], v[(i, 6)], other)
            b.arc(v[(i, 7)], v[(i, 6)], marked_part)
            b.arc(v[(i, 6)], v[(i + 1, 1)], marked_part)
        b.arc(hub, v[(1, 1)], marked_part)
        double_in = [hub] + [v[(i, 4)] for i in range(1, t + 1)]
        names = ["w"] + [f"v{i}^4" for i in range(1, t + 1)]
        if k == 2:
            for host, name in zip(double_in, names):
                first_tail, second_tail = b.vertex(f"in[{name},1]"), b.vertex(f"in[{name},2]")
                b.arc(first_tail, host, marked_part)
                b.arc(second_tail, host, other)
        else:
            assert small is not None and large is not None
            tip = small.vertices["tip"]
            for i in range(1, t + 1):
                b.embed(small, "default", {tip: v[(i, 2)]}, prefix=f"forcer[v{i}^2].")
            for i in range(1, t):
                b.embed(small, "default", {tip: v[(i, 7)]}, prefix=f"forcer[v{i}^7].")
            for host, name in zip(double_in, names):
                b.embed(large, "default", {large.vertices["tip"]: host}, prefix=f"forcer[{name}].")
                b.arc(b.vertex(f"in[{name}]"), host, SECOND)
        return Assembly(
            b,
            arcs={f"a{i + 1}": pendants[i] for i in range(t)},
            vertices={f"head{i + 1}": v[(i + 1, 5)] for i in range(t)},
        )

    return assemble(f"klt-variable-gadget(k={k},l=2,t={t})", ProblemSpec(Family.LINEAR_FOREST, k, 2), recipe, ["first", "second"])


def klt_variable_gadget(k: int, l: int, t: int) -> Gadget:
    """Variable gadget for (k,l)-decomposition with ``t`` pendant arcs ``a1..at``.

    In every decomposition all pendant arcs share a part.  Witness
    ``"first"`` puts them all in FIRST, ``"second"`` all in SECOND.
    """
    if not (k >= l >= 2 and t >= 1):
        raise BadParameter(f"(k,l,t)-variable gadget needs k >= l >= 2 and t >= 1, got k={k}, l={l}, t={t}")
    return _k2t(k, t) if l == 2 else _klt_wide(k, l, t)


def _triangle_clause(k: int, l: int) -> Gadget:
    def recipe(w: str) -> Assembly:
        z = next(s for s in nonempty_subsets(3, proper=True) if subset_name(s) == w)
        b = Builder()
        y = [b.vertex(f"y{i + 1}") for i in range(3)]
        t = [b.vertex(f"t{i + 1}") for i in range(3)]
        for i in range(3):
            # the arc entering y_{i+1} from the triangle avoids the part of a_{i+1}
            b.arc(y[i], y[(i + 1) % 3], _part((i + 1) % 3 + 1 not in z))
        arcs = [b.arc(t[i], y[i], _part(i + 1 in z)) for i in range(3)]
        return Assembly(
            b,
            arcs={f"a{i + 1}": arcs[i] for i in range(3)},
            vertices={f"t{i + 1}": t[i] for i in range(3)},
        )

    names = [subset_name(s) for s in nonempty_subsets(3, proper=True)]
    return assemble(f"kl-clause-gadget(k={k},l={l})", ProblemSpec(Family.LINEAR_FOREST, k, l), recipe, names)


def _narrow_clause(k: int, l: int) -> Gadget:
    big_bound = max(k, l)
    big = FIRST if k >= l else SECOND
    forcer = k2_alpha_in_forcer(big_bound, big_bound - 2) if big_bound >= 3 else None

    def recipe(w: str) -> Assembly:
        z = next(s for s in nonempty_subsets(3, proper=True) if subset_name(s) == w)
        in_big = z if big is FIRST else frozenset({1, 2, 3}) - z
        p = big if 3 in in_big else big.other
        if p is big:
            j = min({1, 2} - in_big)
        else:
            j = min(in_big & {1, 2})
        j_other = 3 - j
        b = Builder()
        t = [b.vertex(f"t{i + 1}") for i in range(3)]
        v = [b.vertex(f"v{i + 1}") for i in range(5)]
        a_part = {j: p.other, j_other: big if j_other in in_big else big.other}
        a1 = b.arc(v[0], t[0], a_part[1])
        a2 = b.arc(v[1], t[1], a_part[2])
        a3 = b.arc(t[2], v[2], p)
        b.arc(v[3], v[0], p if j == 1 else p.other)
        b.arc(v[3], v[1], p if j == 2 else p.other)
        b.arc(v[4], v[2], p.other)
        b.arc(v[4], v[3], p)
        if forcer is not None:
            b.embed(forcer, "default", {forcer.vertices["tip"]: v[4]}, prefix="forcer[v5].", swap=big is SECOND)
        return Assembly(
            b,
            arcs={"a1": a1, "a2": a2, "a3": a3},
            vertices={f"t{i + 1}": t[i] for i in range(3)},
        )

    names = [subset_name(s) for s in nonempty_subsets(3, proper=True)]
    return assemble(f"kl-clause-gadget(k={k},l={l})", ProblemSpec(Family.LINEAR_FOREST, k, l), recipe, names)


def kl_clause_gadget_dlf(k: int, l: int) -> Gadget:
    """Clause gadget for (k,l)-decomposition with arcs ``a1..a3`` at ``t1..t3``.

    Every decomposition splits ``a1..a3`` between both parts.  For every
    nonempty proper ``Z`` the witness ``subset_name(Z)`` puts exactly
    ``a_i, i in Z`` in FIRST.
    """
    if min(k, l) < 2:
        raise BadParameter(f"(k,l)-clause gadget needs min(k, l) >= 2, got k={k}, l={l}")
    return _triangle_clause(k, l) if min(k, l) >= 3 else _narrow_clause(k, l)
