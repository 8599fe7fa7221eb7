"""CNF instances, DIMACS input/output, and validators for the source problems."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

from ..errors import InvalidSource, ParseError, PreconditionViolated

Literal: TypeAlias = tuple[int, bool]
Assignment: TypeAlias = Sequence[bool]


@dataclass(frozen=True)
class CnfInstance:
    """Variables ``0 .. variable_count-1``; a literal is ``(variable, positive)``."""

    variable_count: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self) -> None:
        if self.variable_count < 0:
            raise PreconditionViolated("variable count must be non-negative")
        for index, clause in enumerate(self.clauses):
            if not clause:
                raise PreconditionViolated(f"clause {index} is empty")
            seen = set()
            for var, _ in clause:
                if not 0 <= var < self.variable_count:
                    raise PreconditionViolated(f"clause {index} uses variable {var} outside 0..{self.variable_count - 1}")
                if var in seen:
                    raise PreconditionViolated(f"clause {index} repeats variable {var}")
                seen.add(var)

    @classmethod
    def of(cls, variable_count: int, clauses: Iterable[Iterable[Literal]]) -> CnfInstance:
        return cls(variable_count, tuple(tuple((int(v), bool(p)) for v, p in c) for c in clauses))

    @classmethod
    def from_signed(cls, variable_count: int, clauses: Iterable[Iterable[int]]) -> CnfInstance:
        """Build from DIMACS-style signed 1-based literals."""
        return cls.of(variable_count, ([(abs(x) - 1, x > 0) for x in c] for c in clauses))

    def signed(self) -> list[list[int]]:
        return [[(v + 1) if p else -(v + 1) for v, p in c] for c in self.clauses]

    def occurrences(self, var: int) -> list[tuple[int, bool]]:
        """``(clause index, polarity)`` for each occurrence of ``var``, in clause order."""
        return [(i, p) for i, c in enumerate(self.clauses) for v, p in c if v == var]

    def is_satisfied_by(self, phi: Assignment) -> bool:
        self._check_assignment(phi)
        return all(any(phi[v] == p for v, p in c) for c in self.clauses)

    def first_unsatisfied(self, phi: Assignment) -> int | None:
        self._check_assignment(phi)
        for i, c in enumerate(self.clauses):
            if not any(phi[v] == p for v, p in c):
                return i
        return None

    def _check_assignment(self, phi: Assignment) -> None:
        if len(phi) != self.variable_count:
            raise PreconditionViolated(f"assignment has {len(phi)} values for {self.variable_count} variables")


def parse_dimacs(text: str) -> CnfInstance:
    """Parse ``p cnf <vars> <clauses>`` followed by 0-terminated clauses."""
    header: tuple[int, int] | None = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"line {line_no}: bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"line {line_no}: bad problem line {line!r}") from None
            continue
        if header is None:
            raise ParseError(f"line {line_no}: clause before the problem line")
        for token in line.split():
            try:
                x = int(token)
            except ValueError:
                raise ParseError(f"line {line_no}: bad literal {token!r}") from None
            if x == 0:
                clauses.append(current)
                current = []
            else:
                if abs(x) > header[0]:
                    raise ParseError(f"line {line_no}: literal {x} exceeds {header[0]} variables")
                current.append(x)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfInstance.from_signed(header[0], clauses)
    except PreconditionViolated as exc:
        raise ParseError(str(exc)) from None


def emit_dimacs(inst: CnfInstance) -> str:
    lines = [f"p cnf {inst.variable_count} {len(inst.clauses)}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in inst.signed()]
    return "\n".join(lines) + "\n"


def three_b2_problem(inst: CnfInstance) -> str | None:
    """Why ``inst`` is not a (3,B2)-SAT instance, or ``None`` if it is."""
    for i, c in enumerate(inst.clauses):
        if len(c) != 3:
            return f"clause {i} has {len(c)} literals, expected 3"
    counts = Counter(lit for c in inst.clauses for lit in c)
    for var in range(inst.variable_count):
        for positive in (True, False):
            n = counts[(var, positive)]
            if n != 2:
                sign = "" if positive else "-"
                where = [i for i, c in enumerate(inst.clauses) if (var, positive) in c]
                at = f" (clauses {where})" if where else ""
                return f"literal {sign}{var + 1} occurs {n} times, expected 2{at}"
    return None


def validate_3b2sat(inst: CnfInstance) -> bool:
    """Every clause has three literals and every literal occurs exactly twice."""
    return three_b2_problem(inst) is None


def meksat_problem(inst: CnfInstance, k: int) -> str | None:
    if k < 1:
        raise PreconditionViolated(f"ME-k-SAT needs k >= 1, got {k}")
    for i, c in enumerate(inst.clauses):
        if len(c) != 2 * k + 1:
            return f"clause {i} has {len(c)} literals, expected {2 * k + 1}"
        if not all(p for _, p in c):
            return f"clause {i} contains a negated literal"
    return None


def validate_meksat(inst: CnfInstance, k: int) -> bool:
    """Every clause consists of exactly 2k+1 positive literals."""
    return meksat_problem(inst, k) is None


def check_me_assignment(inst: CnfInstance, k: int, phi: Assignment) -> bool:
    """Every clause has at least ``k`` true and at least ``k`` false variables."""
    inst._check_assignment(phi)
    for c in inst.clauses:
        true_count = sum(1 for v, _ in c if phi[v])
        if true_count < k or len(c) - true_count < k:
            return False
    return True


def width_problem(inst: CnfInstance, width: int) -> str | None:
    for i, c in enumerate(inst.clauses):
        if len(c) != width:
            return f"clause {i} has {len(c)} literals, expected {width}"
    return None


def require(problem: str | None) -> None:
    if problem is not None:
        raise InvalidSource(problem)
