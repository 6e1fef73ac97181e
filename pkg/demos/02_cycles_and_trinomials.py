"""Cycles: counting 1-Lipschitz mappings through trinomial coefficients.

Mappings of C_n are closed walks of length n with steps in {-1, 0, 1}, so their
number is the central trinomial coefficient.  The average range has a closed
form too, and grows like sqrt(pi n / 3).
"""

import math

from lipwalk import avg_range_bruteforce, make_cycle
from lipwalk.closed_forms import avg1_cycle, count1_cycle
from lipwalk.combinatorics import central_trinomial, motzkin, trinomial_row

print("rows of the irregular trinomial triangle")
for n in range(6):
    print("  ", " ".join(f"{x:>3}" for x in trinomial_row(n)))

print("\ncycle counts and averages, formula vs enumeration")
for n in range(3, 10):
    r = avg_range_bruteforce(make_cycle(n))
    assert (r.mapping_count, r.average) == (count1_cycle(n), avg1_cycle(n))
    print(f"  C_{n:<2} mappings={r.mapping_count:<6} avg={r.average}")

print("\nMotzkin numbers M(n, 0):", [motzkin(n, 0) for n in range(12)])

print("\ngrowth of avg_1(C_n)")
for n in (10, 100, 1000):
    a = float(avg1_cycle(n))
    print(f"  n={n:<5} avg ~{a:.4f}   / sqrt(pi n/3) ~{a / math.sqrt(math.pi * n / 3):.5f}"
          f"   central trinomial has {len(str(central_trinomial(n)))} digits")
