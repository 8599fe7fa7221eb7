"""Forcers: small digraphs whose special arc is pinned to one part or path length.

Every constructor returns a :class:`Gadget` whose witnesses are verified
decompositions; the docstring of each constructor names them.
"""

from __future__ import annotations

from ..errors import BadParameter
from ..forests import Family, Part, ProblemSpec
from .core import Assembly, Builder, Gadget, assemble

FIRST, SECOND = Part.FIRST, Part.SECOND


def _lf(k: int, l: int) -> ProblemSpec:
    return ProblemSpec(Family.LINEAR_FOREST, k, l)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParameter(message)


def build_binary_tree_orientation(depth: int, toward_tip: bool) -> Gadget:
    """Complete binary tree with heap numbering; vertex 0 is the tip.

    With ``toward_tip`` every arc points from child to parent, otherwise
    from parent to child.  Witness ``"alternating"`` puts the arc at every
    first child in FIRST and at every second child in SECOND, so both parts
    are linear forests whose paths have exactly ``depth`` arcs.
    """
    _require(depth >= 0, f"depth must be >= 0, got {depth}")
    size = 2 ** (depth + 1) - 1

    def recipe(_: str) -> Assembly:
        b = Builder()
        for i in range(size):
            b.vertex("tip" if i == 0 else f"n{i}")
        for child in range(1, size):
            parent = (child - 1) // 2
            part = FIRST if child % 2 == 1 else SECOND
            if toward_tip:
                b.arc(child, parent, part)
            else:
                b.arc(parent, child, part)
        return Assembly(b, vertices={"tip": 0})

    bound = max(depth, 1)
    direction = "toward-tip" if toward_tip else "from-root"
    return assemble(f"binary-tree(depth={depth},{direction})", _lf(bound, bound), recipe, ["alternating"])


def short_k_in_forcer(k: int) -> Gadget:
    """Arc ``a`` lands in the matching part of every (k,1)-decomposition.

    Witness ``"default"``.
    """
    _require(k >= 2, f"short k-in-forcer needs k >= 2, got {k}")

    def recipe(_: str) -> Assembly:
        b = Builder()
        v1, v2, v3, v4, z = (b.vertex(n) for n in ("v1", "v2", "v3", "v4", "z"))
        b.arc(v1, v2, FIRST)
        b.arc(v2, v3, SECOND)
        b.arc(v2, v4, FIRST)
        a = b.arc(v1, z, SECOND)
        return Assembly(b, arcs={"a": a}, vertices={"tip": z})

    return assemble(f"short-k-in-forcer(k={k})", _lf(k, 1), recipe, ["default"])


def long_k_alpha_in_forcer(k: int, alpha: int) -> Gadget:
    """The tip ends a path of exactly ``alpha`` arcs in the k-bounded part.

    Witness ``"default"``; arc ``"last"`` is the arc entering the tip.
    """
    _require(k > alpha >= 1, f"long forcer needs k > alpha >= 1, got k={k}, alpha={alpha}")
    short = short_k_in_forcer(k)

    def recipe(_: str) -> Assembly:
        b = Builder()
        path = [b.vertex(f"v{i + 1}") for i in range(alpha + 1)]
        last = -1
        for i in range(alpha):
            last = b.arc(path[i], path[i + 1], FIRST)
        for i in range(alpha):
            b.embed(short, "default", {short.vertices["tip"]: path[i]}, prefix=f"short[v{i + 1}].")
        return Assembly(b, arcs={"last": last}, vertices={"tip": path[-1]})

    return assemble(f"long-k-alpha-in-forcer(k={k},alpha={alpha})", _lf(k, 1), recipe, ["default"])


def kk_minus2_in_forcer(k: int) -> Gadget:
    """Arc ``a = xz`` ends a path of k-2 arcs in whichever part holds it.

    Witnesses ``"first"`` and ``"second"`` put ``a`` in that part with its
    path exactly k-2 arcs long.
    """
    _require(k >= 3, f"(k,k,-2)-in-forcer needs k >= 3, got {k}")
    tree = build_binary_tree_orientation(k - 3, toward_tip=True)

    def recipe(w: str) -> Assembly:
        b = Builder()
        e = b.embed(tree, "alternating", prefix="tree.")
        x = e.vertex(tree.vertices["tip"])
        b.names[x] = "x"
        z = b.vertex("z")
        a = b.arc(x, z, FIRST if w == "first" else SECOND)
        return Assembly(b, arcs={"a": a}, vertices={"tip": z, "x": x})

    return assemble(f"kk-minus2-in-forcer(k={k})", _lf(k, k), recipe, ["first", "second"])


def long_kl_out_forcer(k: int, l: int) -> Gadget:
    """Arc ``a`` leaving the origin lies in the k-bounded part. Witness ``"default"``."""
    _require(k > l >= 3, f"long out-forcer needs k > l >= 3, got k={k}, l={l}")
    tree = build_binary_tree_orientation(l, toward_tip=False)

    def recipe(_: str) -> Assembly:
        b = Builder()
        x = b.vertex("x")
        e = b.embed(tree, "alternating", prefix="tree.")
        y = e.vertex(tree.vertices["tip"])
        b.names[y] = "y"
        a = b.arc(x, y, FIRST)
        return Assembly(b, arcs={"a": a}, vertices={"origin": x, "y": y})

    return assemble(f"long-kl-out-forcer(k={k},l={l})", _lf(k, l), recipe, ["default"])


def short_kl_out_forcer(k: int, l: int) -> Gadget:
    """Arc ``a`` leaving the origin lies in the l-bounded part. Witness ``"default"``.

    Built from an arc-reversed long out-forcer whose old origin receives the
    new arc ``a``; the fresh origin makes it one vertex larger.
    """
    long = long_kl_out_forcer(k, l)
    d = long.digraph
    labels = long.witness("default").labels

    def recipe(_: str) -> Assembly:
        b = Builder()
        for v in d.vertices:
            b.vertex(f"rev.{long.vertex_names[v]}")
        for arc, t, h in d.arcs():
            b.arc(h, t, labels[arc])
        y = long.vertices["origin"]
        x = b.vertex("x")
        a = b.arc(x, y, SECOND)
        return Assembly(b, arcs={"a": a}, vertices={"origin": x, "y": y})

    return assemble(f"short-kl-out-forcer(k={k},l={l})", _lf(k, l), recipe, ["default"])


def kl_minus2_in_forcer(k: int, l: int) -> Gadget:
    """Arc ``a = xz`` ends a path of k-2 arcs in FIRST or l-2 arcs in SECOND.

    Witnesses ``"first"`` and ``"second"`` place ``a`` accordingly, with
    path length exactly k-2 or l-2.
    """
    _require(k > l >= 3, f"(k,l,-2)-in-forcer needs k > l >= 3, got k={k}, l={l}")
    short = short_kl_out_forcer(k, l)
    long = long_kl_out_forcer(k, l)

    def recipe(w: str) -> Assembly:
        b = Builder()
        us = [b.vertex(f"u{i + 1}") for i in range(k - 3)]
        vs = [b.vertex(f"v{i + 1}") for i in range(l - 3)]
        x, z = b.vertex("x"), b.vertex("z")
        for i in range(len(us) - 1):
            b.arc(us[i], us[i + 1], FIRST)
        for i in range(len(vs) - 1):
            b.arc(vs[i], vs[i + 1], SECOND)
        b.arc(us[-1], x, FIRST)
        if vs:
            b.arc(vs[-1], x, SECOND)
        a = b.arc(x, z, FIRST if w == "first" else SECOND)
        for i, u in enumerate(us):
            b.embed(short, "default", {short.vertices["origin"]: u}, prefix=f"short[u{i + 1}].")
        for i, v in enumerate(vs):
            b.embed(long, "default", {long.vertices["origin"]: v}, prefix=f"long[v{i + 1}].")
        return Assembly(b, arcs={"a": a}, vertices={"tip": z, "x": x})

    return assemble(f"kl-minus2-in-forcer(k={k},l={l})", _lf(k, l), recipe, ["first", "second"])


def minus2_in_forcer(k: int, l: int) -> Gadget:
    """The (k,l,-2)-in-forcer for any ``k >= l >= 3``."""
    _require(k >= l >= 3, f"(k,l,-2)-in-forcer needs k >= l >= 3, got k={k}, l={l}")
    return kk_minus2_in_forcer(k) if k == l else kl_minus2_in_forcer(k, l)


def k2_alpha_in_forcer(k: int, alpha: int) -> Gadget:
    """Arc ``a`` ends a path of at least ``alpha`` arcs in the k-bounded part.

    Witness ``"default"`` makes that path exactly ``alpha`` arcs long.  The
    head of ``a`` is the ``"tip"``; attaching the forcer to a vertex means
    identifying the tip with it.
    """
    _require(k >= 3 and 1 <= alpha <= k, f"(k,2,alpha)-in-forcer needs k >= 3 and 1 <= alpha <= k, got k={k}, alpha={alpha}")

    def recipe(_: str) -> Assembly:
        b = Builder()
        spine = [b.vertex(f"v{i + 1}") for i in range(alpha + 1)]
        a = -1
        for i in range(1, alpha + 1):
            u, w, x1, x2, y1, y2 = (b.vertex(f"{n}{i}") for n in ("u", "w", "x1_", "x2_", "y1_", "y2_"))
            arc = b.arc(spine[i], spine[i - 1], FIRST)
            if i == 1:
                a = arc
            b.arc(u, x1, FIRST)
            b.arc(u, x2, SECOND)
            b.arc(w, u, FIRST)
            b.arc(spine[i], u, SECOND)
            b.arc(y1, w, FIRST)
            b.arc(y2, w, SECOND)
        return Assembly(b, arcs={"a": a}, vertices={"tip": spine[0]})

    return assemble(f"k2-alpha-in-forcer(k={k},alpha={alpha})", _lf(k, 2), recipe, ["default"])
