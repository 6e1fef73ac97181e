"""Exhaustive sweeps over small graphs.

Paths are conjectured to maximize the average range among connected graphs of
the same order (and among bipartite ones in strong mode).  Nothing here proves
anything, but a counterexample would show up as a violation with its graph.
"""

import sys

from lipwalk import avg_range_bruteforce
from lipwalk.harness import ALL_CHECKS, connected_graph_classes

n = int(sys.argv[1]) if len(sys.argv) > 1 else 5

print(f"the five largest averages among connected graphs on {n} vertices")
ranked = sorted(connected_graph_classes(n), key=lambda g: avg_range_bruteforce(g).average, reverse=True)
for g in ranked[:5]:
    avg = avg_range_bruteforce(g).average
    print(f"  {avg!s:<12} ~{float(avg):.4f}  edges={g.sorted_edges()}")

print()
for name, check in ALL_CHECKS.items():
    if name == "kc_monotonicity" and n < 4:
        continue
    result = check(n)
    print(result.summary())
    for v in result.violations:
        print("   ", v.as_dict())
