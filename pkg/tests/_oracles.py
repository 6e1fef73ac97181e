"""Independent reference computations used only by the tests.

Nothing here shares code with the package: mappings are found by filtering
the full Cartesian product of candidate values, and lattice paths by
listing every step sequence.
"""

import itertools
from fractions import Fraction


def naive_stats(n, edges, root=0, M=1, strong=False):
    """(count, range_sum) by brute force over [-M*n, M*n]^(n-1)."""
    values = range(-M * n, M * n + 1)
    others = [v for v in range(n) if v != root]
    count = total = 0
    for combo in itertools.product(values, repeat=n - 1):
        f = [0] * n
        for v, x in zip(others, combo):
            f[v] = x
        if strong:
            ok = all(abs(f[u] - f[v]) == M for u, v in edges)
        else:
            ok = all(abs(f[u] - f[v]) <= M for u, v in edges)
        if ok:
            count += 1
            total += len(set(f))
    return count, total


def naive_avg(n, edges, **kw):
    count, total = naive_stats(n, edges, **kw)
    return Fraction(total, count)


def lattice_paths(n):
    """Counts of non-negative -1/0/+1 walks of length n by end height."""
    out = {}
    for steps in itertools.product((-1, 0, 1), repeat=n):
        h, low = 0, 0
        for s in steps:
            h += s
            low = min(low, h)
        if low >= 0:
            out[h] = out.get(h, 0) + 1
    return out


def walk_endpoint_counts(n):
    """How many of the 3^(n-1) step sequences of P_n end at each value."""
    out = {}
    for steps in itertools.product((-1, 0, 1), repeat=n - 1):
        k = sum(steps)
        out[k] = out.get(k, 0) + 1
    return out
