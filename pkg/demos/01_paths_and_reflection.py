"""Average range of 1-Lipschitz mappings of paths.

A 1-Lipschitz mapping of P_n rooted at an end is a walk with steps -1, 0, +1,
so the range is max - min + 1 of that walk.  We compute the average three ways
and watch the increments shrink below 2/3.
"""

from fractions import Fraction

from lipwalk import avg_range_bruteforce, make_path
from lipwalk.closed_forms import avg1_path_double_sum, avg1_path_reflection, path_linear_bound
from lipwalk.combinatorics import path_endpoint_distribution

print("where does the far end of P_5 land?")
for k, p in path_endpoint_distribution(5).items():
    print(f"  X = {k:>2}: {p}")

print("\nthree routes to avg_1(P_n)")
for n in range(1, 11):
    brute = avg_range_bruteforce(make_path(n)).average
    ds, refl = avg1_path_double_sum(n), avg1_path_reflection(n)
    assert brute == ds == refl
    print(f"  n={n:<3} {str(ds):<14} ~{float(ds):.4f}")

print("\nincrements never exceed 2/3, and only P_1 -> P_2 reaches it")
prev = avg1_path_double_sum(1)
for n in range(2, 16):
    cur = avg1_path_double_sum(n)
    d = cur - prev
    print(f"  avg(P_{n}) - avg(P_{n - 1}) = {str(d):<16} {'== 2/3' if d == Fraction(2, 3) else '< 2/3'}"
          f"   bound (2n+1)/3 = {path_linear_bound(n)}")
    prev = cur
