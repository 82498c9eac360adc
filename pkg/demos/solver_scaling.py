"""
Polynomial-time evaluation of DUP grids
=======================================

Compare the path/cycle solver with brute force on small grids, then time it
on long chains where brute force is hopeless.
"""

import json
import random
import time
from pathlib import Path

from holantcsp import eval_dup_grid, holant_bruteforce
from holantcsp import sampling as smp
from holantcsp import serialize as J

rng = random.Random(7)
for _ in range(5):
    g = smp.random_dup_grid(rng, 12)
    value, trace = eval_dup_grid(g)
    print(f"{len(g.edges):>2} edges  solver {str(value):<28} brute {holant_bruteforce(g)}"
          f"  steps {len(trace)}")

###############################################################################
# Each trace step says which case fired.
value, trace = eval_dup_grid(J.grid_from_json(
    json.loads((Path(__file__).parent / "data" / "star.json").read_text())))
for s in trace.steps:
    print(f"  {s.case}  nodes={s.nodes}  factor={s.factor}  {s.note}")
print("star value:", value)

###############################################################################
# A chain of Implies links capped by [1, 1] counts the monotone bit strings,
# so its value is the chain length.
for n in (10, 100, 1000, 10_000, 50_000):
    g = smp.chain_grid(n)
    t0 = time.perf_counter()
    value, _ = eval_dup_grid(g)
    print(f"chain {n:>6}: value {value}  {time.perf_counter() - t0:.3f}s")
