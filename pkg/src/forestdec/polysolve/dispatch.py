"""Route a problem type to its polynomial solver, swapping bounds when needed."""

from __future__ import annotations

from ..digraph import Digraph
from ..errors import UnsupportedSpec
from ..forests import INF, Family, ProblemSpec, Verdict
from .bdlfd import solve_bdlfd_11, solve_bdlfd_21
from .bogd import solve_bogd_inf_inf, solve_bogd_k1


def is_polynomial(spec: ProblemSpec) -> bool:
    """True for linear forests with k + l <= 3 and out-galaxies with a bound of 1 or both unbounded."""
    if spec.family is Family.LINEAR_FOREST:
        return spec.first + spec.second <= 3
    return min(spec.first, spec.second) == 1 or spec.first == spec.second == INF


def _solve_ordered(d: Digraph, spec: ProblemSpec) -> Verdict:
    # caller guarantees first >= second
    if spec.family is Family.LINEAR_FOREST:
        return solve_bdlfd_11(d) if spec.first == 1 else solve_bdlfd_21(d)
    if spec.second == 1:
        return solve_bogd_k1(d, spec.first)
    return solve_bogd_inf_inf(d)


def solve(d: Digraph, spec: ProblemSpec) -> Verdict:
    """Decide ``spec`` on ``d`` with the matching polynomial solver.

    Raises :class:`UnsupportedSpec` outside the polynomial region; use the
    exact oracle there.
    """
    if not is_polynomial(spec):
        raise UnsupportedSpec(f"{spec} has no polynomial solver; run the exact oracle instead")
    if spec.first >= spec.second:
        return _solve_ordered(d, spec)
    verdict = _solve_ordered(d, spec.swapped())
    if verdict.decomposition is None:
        return verdict
    return Verdict(verdict.decomposition.swapped(), verdict.reason)
