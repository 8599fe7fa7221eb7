"""Compare the compiled oracle kernel with the interpreted fallback.

The kernel mode is fixed at import time, so each mode runs in its own
subprocess.  The workload enumerates three gadgets and runs a budgeted
search on the (4,3) linear-forest image of the Fano instance of
monotone not-all-equal 3-SAT.  Both modes solve the same workload and must report
identical node counts and verdicts; only the wall time may differ.  The
compiled run does one warm-up pass first so compilation is not timed.

    python3 benchmarks/bench_oracle_kernel.py [--budget 200000] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
from forestdec.gadgets import CnfInstance, k_clause_gadget, kl_minus2_in_forcer, klt_variable_gadget, reduce_me1sat_to_bdlfd
from forestdec.oracle import JIT_ENABLED, SearchBudget, oracle_decide, oracle_enumerate

# seven clauses on seven variables, one per line of the Fano plane
FANO = CnfInstance.from_signed(7, [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]])

budget, repeat = (int(x) for x in sys.argv[1:3])

def workload():
    nodes, answers = 0, []
    for g in (kl_minus2_in_forcer(4, 3), klt_variable_gadget(2, 2, 2), k_clause_gadget(4)):
        found = oracle_enumerate(g.digraph, g.spec)
        answers.append(len(found))
    red = reduce_me1sat_to_bdlfd(FANO, 4, 3)
    r = oracle_decide(red.instance, red.spec, SearchBudget(max_nodes=budget))
    nodes += r.nodes
    answers.append(r.outcome.value)
    return nodes, answers

if JIT_ENABLED:
    workload()
times = []
for _ in range(repeat):
    start = time.perf_counter()
    nodes, answers = workload()
    times.append(time.perf_counter() - start)
print(json.dumps({"jit": JIT_ENABLED, "best_seconds": min(times), "nodes": nodes, "answers": answers}))
"""


def run(mode: str, budget: int, repeat: int) -> dict:
    env = dict(os.environ, FORESTDEC_JIT=mode)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(budget), str(repeat)],
        env=env,
        check=True,
        capture_output=True,
        text=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=200_000, help="node budget of the search on the Fano instance")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    started = time.perf_counter()
    compiled = run("1", args.budget, args.repeat)
    interpreted = run("0", args.budget, args.repeat)
    if not compiled["jit"]:
        print("numba is unavailable; both runs used the interpreted kernel", file=sys.stderr)
    same = compiled["nodes"] == interpreted["nodes"] and compiled["answers"] == interpreted["answers"]
    print("mode,best_seconds,nodes")
    print(f"jit,{compiled['best_seconds']:.4f},{compiled['nodes']}")
    print(f"python,{interpreted['best_seconds']:.4f},{interpreted['nodes']}")
    print(f"speedup,{interpreted['best_seconds'] / compiled['best_seconds']:.1f}x")
    print(f"identical_search,{same}")
    print(f"total_wall_seconds,{time.perf_counter() - started:.1f}", file=sys.stderr)
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
