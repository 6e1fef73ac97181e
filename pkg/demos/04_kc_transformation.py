"""The KC-transformation pulls one side of the graph from b over to a.

When the part between a and b has an automorphism swapping them, the average
range cannot grow.  Repeating the move turns a path into ever bushier trees.
"""

from lipwalk import avg_range_bruteforce, make_path
from lipwalk.errors import TransformNotApplicableError
from lipwalk.graphs import kc_applicable, kc_transform, make_cycle, side_vertices, swap_automorphism_exists

g = make_path(7)
print("P_7:", g.sorted_edges(), "avg", avg_range_bruteforce(g).average)
print("side sets for (a, b) = (2, 4):", sorted(side_vertices(g, 2, 4)), sorted(side_vertices(g, 4, 2)))

step = 0
while True:
    pairs = [(a, b) for a in range(g.n) for b in range(g.n)
             if a != b and kc_applicable(g, a, b) and swap_automorphism_exists(g, a, b)]
    if not pairs:
        break
    a, b = pairs[0]
    h = kc_transform(g, a, b)
    before, after = avg_range_bruteforce(g).average, avg_range_bruteforce(h).average
    step += 1
    print(f"step {step}: ({a} -> {b})  {before} >= {after}   degrees {sorted(h.degree(v) for v in range(h.n))}")
    assert before >= after
    g = h

try:
    kc_transform(make_cycle(4), 0, 2)
except TransformNotApplicableError as exc:
    print("on C_4:", exc)
