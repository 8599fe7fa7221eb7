"""Seeded benchmark suites producing CSV rows."""

from __future__ import annotations

import csv
import io
import random
import time
from collections.abc import Iterator
from dataclasses import asdict, dataclass

from ..digraph import random_digraph
from ..forests import INF, Family, ProblemSpec, verify_decomposition
from ..oracle import Outcome, SearchBudget, oracle_decide
from ..polysolve import solve, solve_bogd_k1

AGREEMENT_SPECS = (
    ProblemSpec(Family.LINEAR_FOREST, 1, 1),
    ProblemSpec(Family.LINEAR_FOREST, 2, 1),
    ProblemSpec(Family.OUT_GALAXY, INF, INF),
    ProblemSpec(Family.OUT_GALAXY, 1, 1),
    ProblemSpec(Family.OUT_GALAXY, 2, 1),
    ProblemSpec(Family.OUT_GALAXY, 3, 1),
)
SUITES = ("agreement", "scaling", "empty")


@dataclass
class BenchRow:
    suite: str
    index: int
    seed: int
    n: int
    m: int
    spec: str
    verdict: str
    reference: str
    agree: str
    seconds: float
    nodes: str


def _verdict(is_yes: bool) -> str:
    return "yes" if is_yes else "no"


def agreement_rows(seed: int, count: int, max_n: int, max_m: int, budget: SearchBudget) -> Iterator[BenchRow]:
    """Each polynomial solver against the oracle on ``count`` random digraphs."""
    rng = random.Random(seed)
    for index in range(count):
        n = rng.randint(2, max(2, max_n))
        m = rng.randint(0, min(max_m, 2 * n * (n - 1)))
        d = random_digraph(rng, n, m)
        for spec in AGREEMENT_SPECS:
            start = time.perf_counter()
            verdict = solve(d, spec)
            seconds = time.perf_counter() - start
            result = oracle_decide(d, spec, budget)
            if result.outcome is Outcome.BUDGET_EXCEEDED:
                reference, agree = "budget-exceeded", "unknown"
            else:
                reference = _verdict(result.outcome is Outcome.YES)
                certified = verdict.decomposition is None or verify_decomposition(d, verdict.decomposition, spec)
                agree = "yes" if certified and reference == _verdict(verdict.is_yes) else "no"
            yield BenchRow("agreement", index, seed, n, m, str(spec), _verdict(verdict.is_yes), reference, agree, round(seconds, 6), str(result.nodes))


def scaling_rows(seed: int, count: int, max_n: int) -> Iterator[BenchRow]:
    """The (2,1) out-galaxy solver on instances doubling in size up to ``max_n``."""
    rng = random.Random(seed)
    spec = ProblemSpec(Family.OUT_GALAXY, 2, 1)
    n, index = 8, 0
    while n <= max_n and index < count:
        d = random_digraph(rng, n, n)
        start = time.perf_counter()
        verdict = solve_bogd_k1(d, 2)
        seconds = time.perf_counter() - start
        yield BenchRow("scaling", index, seed, n, d.arc_count, str(spec), _verdict(verdict.is_yes), "", "", round(seconds, 6), "")
        n *= 2
        index += 1


def run_suite(suite: str, seed: int, count: int, max_n: int, max_m: int, budget: SearchBudget) -> list[BenchRow]:
    if suite == "agreement":
        return list(agreement_rows(seed, count, max_n, max_m, budget))
    if suite == "scaling":
        return list(scaling_rows(seed, count, max_n))
    return []


def to_csv(rows: list[BenchRow]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=[f for f in BenchRow.__dataclass_fields__], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return out.getvalue()
