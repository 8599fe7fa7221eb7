"""Backtracking kernel for two-part arc labelling.

The search assigns arcs in a fixed order, tries part 0 before part 1, and
after every assignment forces each arc that has a single feasible part
left (forward checking).  Failures are handled by conflict-directed
backjumping: every assigned arc carries the set of decision levels that
implied it, a dead arc yields the union of its blockers' sets, and the
search jumps straight to the deepest level in that union.  Skipped levels
provably contain no solution, so the first solution and the enumeration
order are the same as with plain chronological backtracking.

All state lives in flat integer arrays so the same source runs under
``numba.njit`` or as plain Python.  Set ``FORESTDEC_JIT=0`` to force the
interpreted path (useful for debugging and for the speed comparison in
``benchmarks/``).

Array layout (``n`` vertices, ``m`` arcs, parts ``p`` in {0, 1}, ``W``
words per level set, ``BITS`` levels per word):

* ``indeg[p*n+v]``, ``outdeg[p*n+v]``: degree of ``v`` inside part ``p``.
* ``pin[p*n+v]``: the arc entering ``v`` in part ``p`` (or -1);
  ``pout[p*n+v]``: the arc leaving ``v`` in part ``p`` (linear forests only).
* ``oth[p*n+v]``: for a path end ``v``, the opposite end of its path.
* ``plen[p*n+v]``: for a path end ``v``, the number of arcs of its path.
* ``trail[7*t : 7*t+7]``: arc, path ends ``s``/``e`` and their old values.
* ``dec[4*d : 4*d+4]``: decision arc, trail height, branch, scan position
  of decision level ``d+1``.
* ``reason[a*W : a*W+W]``: decision levels that forced arc ``a``.
* ``cset[L*W : L*W+W]``: levels blamed so far for failures below level ``L``.
* ``conf[0:W]``: the conflict set of the latest failure.
* ``st``: trail height, decision depth, nodes, pending mode, -, queue tail.
"""

from __future__ import annotations

import os

try:  # pragma: no cover - exercised implicitly by the import
    import numba as _numba
except ImportError:  # pragma: no cover
    _numba = None

JIT_ENABLED: bool = _numba is not None and os.environ.get("FORESTDEC_JIT", "1") != "0"

SOLUTION = 1
EXHAUSTED = 2
BUDGET = 3

LINEAR_FOREST = 0
OUT_GALAXY = 1

# 62 bits per word keeps every mask positive in both int64 and Python ints
BITS = 62

_DESCEND = 0
_AFTER_SOLUTION = 1


def words_for(arc_count: int) -> int:
    return (arc_count + 1) // BITS + 1


def _jit(fn):
    if JIT_ENABLED:
        return _numba.njit(cache=True)(fn)
    return fn


@_jit
def feasible(a, p, n, fam, bnd, tail, head, indeg, outdeg, oth, plen):
    u = tail[a]
    v = head[a]
    iu = p * n + u
    iv = p * n + v
    if fam == LINEAR_FOREST:
        if outdeg[iu] != 0 or indeg[iv] != 0:
            return False
        if oth[iu] == v:
            return False
        return plen[iu] + plen[iv] + 1 <= bnd[p]
    if indeg[iv] != 0 or outdeg[iv] != 0 or indeg[iu] != 0:
        return False
    return outdeg[iu] < bnd[p]


@_jit
def or_reason(dst, off, reason, a, W):
    base = a * W
    for w in range(W):
        dst[off + w] |= reason[base + w]


@_jit
def blame(b, p, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, reason, W, dst, off):
    """OR into ``dst[off:off+W]`` the levels behind part ``p`` being infeasible for ``b``."""
    u = tail[b]
    v = head[b]
    iu = p * n + u
    iv = p * n + v
    if fam == LINEAR_FOREST:
        if outdeg[iu] != 0:
            or_reason(dst, off, reason, pout[iu], W)
            return
        if indeg[iv] != 0:
            or_reason(dst, off, reason, pin[iv], W)
            return
        # the path ending at u and the path starting at v (one path if they would close a cycle)
        x = u
        while pin[p * n + x] != -1:
            a = pin[p * n + x]
            or_reason(dst, off, reason, a, W)
            x = tail[a]
        if oth[iu] == v:
            return
        x = v
        while pout[p * n + x] != -1:
            a = pout[p * n + x]
            or_reason(dst, off, reason, a, W)
            x = head[a]
        return
    if indeg[iv] != 0:
        or_reason(dst, off, reason, pin[iv], W)
        return
    if outdeg[iv] != 0:
        for idx in range(inc_ptr[v], inc_ptr[v + 1]):
            a = inc_arc[idx]
            if label[a] == p and tail[a] == v:
                or_reason(dst, off, reason, a, W)
                return
    if indeg[iu] != 0:
        or_reason(dst, off, reason, pin[iu], W)
        return
    for idx in range(inc_ptr[u], inc_ptr[u + 1]):
        a = inc_arc[idx]
        if label[a] == p and tail[a] == u:
            or_reason(dst, off, reason, a, W)


@_jit
def assign(a, p, n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st):
    u = tail[a]
    v = head[a]
    iu = p * n + u
    iv = p * n + v
    label[a] = p
    outdeg[iu] += 1
    indeg[iv] += 1
    pin[iv] = a
    base = 7 * st[0]
    trail[base] = a
    q = st[5]
    queue[q] = u
    queue[q + 1] = v
    q += 2
    if fam == LINEAR_FOREST:
        pout[iu] = a
        s = oth[iu]
        e = oth[iv]
        i_s = p * n + s
        i_e = p * n + e
        length = plen[iu] + plen[iv] + 1
        trail[base + 1] = s
        trail[base + 2] = e
        trail[base + 3] = oth[i_s]
        trail[base + 4] = oth[i_e]
        trail[base + 5] = plen[i_s]
        trail[base + 6] = plen[i_e]
        oth[i_s] = e
        oth[i_e] = s
        plen[i_s] = length
        plen[i_e] = length
        queue[q] = s
        queue[q + 1] = e
        q += 2
    st[5] = q
    st[0] += 1


@_jit
def undo(t, n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail):
    base = 7 * t
    a = trail[base]
    p = label[a]
    if fam == LINEAR_FOREST:
        i_s = p * n + trail[base + 1]
        i_e = p * n + trail[base + 2]
        plen[i_e] = trail[base + 6]
        plen[i_s] = trail[base + 5]
        oth[i_e] = trail[base + 4]
        oth[i_s] = trail[base + 3]
        pout[p * n + tail[a]] = -1
    pin[p * n + head[a]] = -1
    outdeg[p * n + tail[a]] -= 1
    indeg[p * n + head[a]] -= 1
    label[a] = -1


@_jit
def propagate(n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st, reason, W, conf):
    """Force every arc with a single feasible part.

    On a dead arc, ``conf`` receives the levels blamed for both parts and
    the result is False.
    """
    qh = 0
    while qh < st[5]:
        w = queue[qh]
        qh += 1
        for idx in range(inc_ptr[w], inc_ptr[w + 1]):
            b = inc_arc[idx]
            if label[b] != -1:
                continue
            f0 = feasible(b, 0, n, fam, bnd, tail, head, indeg, outdeg, oth, plen)
            f1 = feasible(b, 1, n, fam, bnd, tail, head, indeg, outdeg, oth, plen)
            if f0 and f1:
                continue
            if f0 or f1:
                forced = 0 if f0 else 1
                base = b * W
                for k in range(W):
                    reason[base + k] = 0
                blame(b, 1 - forced, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, reason, W, reason, base)
                assign(b, forced, n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st)
            else:
                for k in range(W):
                    conf[k] = 0
                blame(b, 0, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, reason, W, conf, 0)
                blame(b, 1, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, reason, W, conf, 0)
                st[5] = 0
                return False
    st[5] = 0
    return True


@_jit
def seed(n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st, reason, W, conf, preset):
    """Apply the fixed labels in ``preset`` (-1 = free) and propagate.

    Preset arcs carry no decision level, so any conflict they cause ends
    the whole search.
    """
    m = len(tail)
    for a in range(m):
        p = preset[a]
        if p < 0:
            continue
        if label[a] != -1:
            if label[a] != p:
                return False
            continue
        if not feasible(a, p, n, fam, bnd, tail, head, indeg, outdeg, oth, plen):
            return False
        assign(a, p, n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st)
        if not propagate(n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st, reason, W, conf):
            return False
    for v in range(n):
        queue[st[5]] = v
        st[5] += 1
        if not propagate(n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st, reason, W, conf):
            return False
    return True


@_jit
def try_branch(d, p, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, dec, st, reason, W, conf):
    """Put the decision arc of level ``d+1`` in part ``p``; on failure ``conf`` holds the blame."""
    a = dec[4 * d]
    level = d + 1
    st[2] += 1
    if not feasible(a, p, n, fam, bnd, tail, head, indeg, outdeg, oth, plen):
        for k in range(W):
            conf[k] = 0
        blame(a, p, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, reason, W, conf, 0)
        conf[level // BITS] |= 1 << (level % BITS)
        return False
    base = a * W
    for k in range(W):
        reason[base + k] = 0
    reason[base + level // BITS] = 1 << (level % BITS)
    assign(a, p, n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st)
    return propagate(n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, st, reason, W, conf)


@_jit
def deepest(conf, W):
    """Highest level in ``conf``, or 0 if it is empty."""
    for w in range(W - 1, -1, -1):
        x = conf[w]
        if x != 0:
            b = BITS - 1
            while (x >> b) & 1 == 0:
                b -= 1
            return w * BITS + b
    return 0


@_jit
def search(n, fam, bnd, tail, head, inc_ptr, inc_arc, order, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, dec, st, reason, W, conf, cset, max_nodes):
    """Advance the search to the next complete labelling.

    Returns SOLUTION (labels hold it; call again for the next one),
    EXHAUSTED, or BUDGET once ``st[2]`` reaches ``max_nodes`` (negative =
    unlimited).  After BUDGET the search can be resumed with a larger limit.
    """
    m = len(tail)
    failed = False
    if st[3] == _AFTER_SOLUTION:
        # every open level may lead to further solutions: blame all of them
        depth = st[1]
        for k in range(W):
            conf[k] = 0
        for level in range(1, depth + 1):
            base = level * W
            for k in range(W):
                cset[base + k] |= conf[k]
            conf[level // BITS] |= 1 << (level % BITS)
        failed = True
    st[3] = _DESCEND
    while True:
        if failed:
            resumed = False
            while True:
                h = deepest(conf, W)
                if h == 0:
                    break
                d = h - 1
                height = dec[4 * d + 1]
                while st[0] > height:
                    st[0] -= 1
                    undo(st[0], n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail)
                st[1] = h
                conf[h // BITS] &= ~(1 << (h % BITS))
                base = h * W
                for k in range(W):
                    cset[base + k] |= conf[k]
                if dec[4 * d + 2] == 0:
                    dec[4 * d + 2] = 1
                    if try_branch(d, 1, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, dec, st, reason, W, conf):
                        resumed = True
                        break
                    while st[0] > height:
                        st[0] -= 1
                        undo(st[0], n, fam, tail, head, label, indeg, outdeg, oth, plen, pin, pout, trail)
                else:
                    # both branches failed: the level's accumulated blame moves down
                    for k in range(W):
                        conf[k] = cset[base + k]
                    st[1] = h - 1
            if not resumed:
                st[1] = 0
                st[3] = _AFTER_SOLUTION
                return EXHAUSTED
            failed = False
        pos = dec[4 * (st[1] - 1) + 3] + 1 if st[1] > 0 else 0
        while pos < m and label[order[pos]] != -1:
            pos += 1
        if pos == m:
            st[3] = _AFTER_SOLUTION
            return SOLUTION
        if max_nodes >= 0 and st[2] >= max_nodes:
            return BUDGET
        d = st[1]
        dec[4 * d] = order[pos]
        dec[4 * d + 1] = st[0]
        dec[4 * d + 2] = 0
        dec[4 * d + 3] = pos
        base = (d + 1) * W
        for k in range(W):
            cset[base + k] = 0
        st[1] += 1
        if not try_branch(d, 0, n, fam, bnd, tail, head, inc_ptr, inc_arc, label, indeg, outdeg, oth, plen, pin, pout, trail, queue, dec, st, reason, W, conf):
            failed = True
