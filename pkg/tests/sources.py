"""Seeded families of tiny source instances for the reduction round-trips."""

from __future__ import annotations

import itertools
import random

from fixtures import FANO
from forestdec.digraph import Digraph, build_digraph, connected_components
from forestdec.gadgets import CnfInstance

import naive

# every 3-subset of five variables: any split of five values leaves a monochromatic triple
ALL_TRIPLES_OF_FIVE = CnfInstance.from_signed(5, [list(c) for c in itertools.combinations(range(1, 6), 3)])

# every sign pattern on three variables, so each assignment falsifies one clause
ALL_SIGN_PATTERNS = CnfInstance.from_signed(
    3, [[a, 2 * b, 3 * c] for a in (1, -1) for b in (1, -1) for c in (1, -1)]
)


def random_3b2(rng: random.Random, n: int) -> CnfInstance:
    """Deal the four occurrences of each variable into clauses of three distinct variables."""
    while True:
        literals = [v * s for v in range(1, n + 1) for s in (1, -1) for _ in range(2)]
        rng.shuffle(literals)
        clauses = [literals[i : i + 3] for i in range(0, len(literals), 3)]
        if all(len({abs(x) for x in c}) == 3 for c in clauses):
            return CnfInstance.from_signed(n, clauses)


def three_b2_sources(count: int, seed: int = 0) -> list[CnfInstance]:
    rng = random.Random(seed)
    return [random_3b2(rng, 3 if i % 3 else 6) for i in range(count)]


def positive_clauses(rng: random.Random, n: int, clauses: int, width: int) -> CnfInstance:
    return CnfInstance.from_signed(n, [sorted(rng.sample(range(1, n + 1), width)) for _ in range(clauses)])


def me_sources(count: int, width: int = 3, seed: int = 0) -> list[CnfInstance]:
    """Random positive instances, plus two ME-unsatisfiable ones when ``width`` is 3."""
    rng = random.Random(seed)
    out = []
    if width == 3:
        out += [FANO, ALL_TRIPLES_OF_FIVE]
    while len(out) < count:
        n = rng.randint(width, width + 3)
        out.append(positive_clauses(rng, n, rng.randint(1, 4), width))
    return out


def wide_sources(count: int, width: int = 3, seed: int = 0) -> list[CnfInstance]:
    rng = random.Random(seed)
    out = [ALL_SIGN_PATTERNS] if width == 3 else []
    while len(out) < count:
        n = rng.randint(width, width + 2)
        clauses = []
        for _ in range(rng.randint(1, 5)):
            vs = rng.sample(range(1, n + 1), width)
            clauses.append([v if rng.random() < 0.5 else -v for v in vs])
        out.append(CnfInstance.from_signed(n, clauses))
    return out


def two_diregular_digraphs(n: int) -> list[Digraph]:
    """Every connected loopless 2-diregular digraph on ``n`` vertices, up to arc order.

    Such a digraph is the union of two fixed-point-free permutations.
    """
    derangements = [p for p in itertools.permutations(range(n)) if all(p[i] != i for i in range(n))]
    seen: set[tuple[tuple[int, int], ...]] = set()
    out = []
    for p, q in itertools.combinations_with_replacement(derangements, 2):
        arcs = tuple(sorted([(v, p[v]) for v in range(n)] + [(v, q[v]) for v in range(n)]))
        if arcs in seen:
            continue
        seen.add(arcs)
        d = build_digraph(n, arcs)
        if len(connected_components(d)) == 1:
            out.append(d)
    return out


def hamiltonicity_sources(count: int) -> tuple[list[Digraph], list[Digraph]]:
    """(hamiltonian, non-hamiltonian) digraphs with at most five vertices, ``count`` in total."""
    ham_by_size: list[list[Digraph]] = []
    non: list[Digraph] = []
    for n in (3, 4, 5):
        ham_by_size.append([])
        for d in two_diregular_digraphs(n):
            (ham_by_size[-1] if naive.hamiltonian_cycles(n, d.arc_list()) else non).append(d)
    non = non[: count // 2]
    # take hamiltonian digraphs round-robin over the sizes
    interleaved = [d for group in itertools.zip_longest(*ham_by_size) for d in group if d is not None]
    return interleaved[: count - len(non)], non
