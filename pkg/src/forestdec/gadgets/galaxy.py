"""Variable and clause gadgets for bounded out-galaxy factorization."""

from __future__ import annotations

from itertools import combinations

from ..errors import BadParameter
from ..forests import INF, Bound, Family, Part, ProblemSpec, check_bound, format_bound
from .core import Assembly, Builder, Gadget, assemble
from .linear import subset_name

FIRST, SECOND = Part.FIRST, Part.SECOND


def q_variable_gadget_bogd(q: int) -> Gadget:
    """Path ``u1..u_2q`` with a pendant arc ``u_2i -> v_i``; ``S = {v_1..v_q}``.

    In every factorization into two out-galaxies the arcs entering ``S``
    share a part.  Witness ``"first"`` puts them in FIRST, ``"second"`` in
    SECOND; both are (2,2)-factorizations.  Arc ``s_i`` enters ``v_i``.
    """
    if q < 1:
        raise BadParameter(f"q-variable gadget needs q >= 1, got {q}")

    def recipe(w: str) -> Assembly:
        in_s = FIRST if w == "first" else SECOND
        b = Builder()
        u = [b.vertex(f"u{i + 1}") for i in range(2 * q)]
        v = [b.vertex(f"v{i + 1}") for i in range(q)]
        for i in range(2 * q - 1):
            # arcs leaving u_{2j} go with the S-arcs, arcs leaving u_{2j-1} go against them
            b.arc(u[i], u[i + 1], in_s if i % 2 == 1 else in_s.other)
        s_arcs = [b.arc(u[2 * i + 1], v[i], in_s) for i in range(q)]
        return Assembly(
            b,
            arcs={f"s{i + 1}": s_arcs[i] for i in range(q)},
            vertex_sets={"S": tuple(v)},
        )

    return assemble(f"q-variable-gadget(q={q})", ProblemSpec(Family.OUT_GALAXY, 2, 2), recipe, ["first", "second"])


def clause_subset_witnesses(alpha1: int, alpha2: int) -> list[frozenset[int]]:
    """Admissible ``S0`` sets, as 1-based positions in ``S1`` followed by ``S2``."""
    total = alpha1 + alpha2
    s2 = frozenset(range(alpha1 + 1, total + 1))
    return [frozenset(c) for r in range(total + 1) for c in combinations(range(1, total + 1), r) if frozenset(c) != s2]


def kl_alpha_clause_gadget_bogd(k: Bound, l: int, alpha1: int, alpha2: int) -> Gadget:
    """Root ``r`` with ``alpha1`` pendants and ``alpha2`` two-arc chains.

    Sinks ``S1`` (pendant heads) and ``S2`` (chain ends) are listed in that
    order; position ``i`` refers to the i-th sink of ``S1`` then ``S2``.  The
    arcs entering the sinks are never split as exactly ``S2`` in FIRST.  For
    every other set ``S0`` the witness ``subset_name(S0)`` puts exactly the
    arcs entering ``S0`` in FIRST.  Arc ``s_i`` enters sink ``i``.
    """
    k = check_bound(k)
    if l < 2 or not (k == INF or k >= l + 1):
        raise BadParameter(f"clause gadget needs l >= 2 and k >= l + 1 or k = inf, got k={format_bound(k)}, l={l}")
    if alpha1 < 0 or alpha2 < 0 or alpha1 + alpha2 != l + 1:
        raise BadParameter(f"alpha1 + alpha2 must equal l + 1 = {l + 1}, got {alpha1} + {alpha2}")
    subsets = clause_subset_witnesses(alpha1, alpha2)

    def recipe(w: str) -> Assembly:
        s0 = next(s for s in subsets if subset_name(s) == w)
        b = Builder()
        r = b.vertex("r")
        s1 = [b.vertex(f"s{i + 1}") for i in range(alpha1)]
        s2 = [b.vertex(f"s'{i + 1}") for i in range(alpha2)]
        mids = [b.vertex(f"u{i + 1}") for i in range(alpha2)]
        entering = [b.arc(r, s1[i], FIRST if i + 1 in s0 else SECOND) for i in range(alpha1)]
        for i in range(alpha2):
            chosen = alpha1 + i + 1 in s0
            b.arc(r, mids[i], SECOND if chosen else FIRST)
            entering.append(b.arc(mids[i], s2[i], FIRST if chosen else SECOND))
        return Assembly(
            b,
            arcs={f"s{i + 1}": a for i, a in enumerate(entering)},
            vertices={"r": r},
            vertex_sets={"S1": tuple(s1), "S2": tuple(s2)},
        )

    return assemble(
        f"kl-alpha-clause-gadget(k={format_bound(k)},l={l},alpha1={alpha1},alpha2={alpha2})",
        ProblemSpec(Family.OUT_GALAXY, k, l),
        recipe,
        [subset_name(s) for s in subsets],
    )
