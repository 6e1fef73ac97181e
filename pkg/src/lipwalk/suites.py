"""Grouped property checks behind ``lipwalk verify``.

Each suite returns a list of :class:`Outcome`; a suite passes when every
outcome does.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction

from . import closed_forms as cf
from .combinatorics import (
    binomial,
    central_trinomial,
    irregular_trinomial,
    motzkin,
    path_endpoint_probability,
)
from .graphs import (
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_star,
)
from .harness import ALL_CHECKS, DEFAULT_CAPS, enumerate_corollas, max_n
from .graphs import cycle_length
from .lipschitz import STRONG1, WEAK1, mapping_stats

__all__ = ["Outcome", "identity_suite", "formula_suite", "conjecture_suite", "SUITES", "motzkin_bruteforce"]


@dataclass(frozen=True)
class Outcome:
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _timed(name, fn):
    t0 = time.perf_counter()
    failures = fn()
    dt = time.perf_counter() - t0
    if failures:
        shown = "; ".join(str(f) for f in failures[:3])
        return Outcome(name, False, f"{len(failures)} failure(s), e.g. {shown}", dt)
    return Outcome(name, True, f"{dt:.2f}s", dt)


def motzkin_bruteforce(n: int) -> dict:
    """Count non-negative -1/0/+1 step sequences of length n by end height."""
    counts = {}
    for steps in itertools.product((-1, 0, 1), repeat=n):
        h = 0
        for s in steps:
            h += s
            if h < 0:
                break
        else:
            counts[h] = counts.get(h, 0) + 1
    return counts


def identity_suite(n_max: int = 30, motzkin_max: int = 12) -> list:
    T = irregular_trinomial
    rng = range(n_max + 1)
    out = [
        _timed("central trinomial = sum C(n,2k) C(2k,k)", lambda: [
            n for n in rng
            if central_trinomial(n) != sum(binomial(n, 2 * k) * binomial(2 * k, k) for k in range(n // 2 + 1))
        ]),
        _timed("T* recurrence", lambda: [
            (n, k) for n in range(1, n_max + 1) for k in range(-2, 2 * n + 3)
            if T(n, k) != T(n - 1, k) + T(n - 1, k - 1) + T(n - 1, k - 2)
        ]),
        _timed("M(n,k) = T*(n,n-k) - T*(n,n-k-2)", lambda: [
            (n, k) for n in rng for k in range(n + 1)
            if motzkin(n, k) != T(n, n - k) - T(n, n - k - 2)
        ]),
        _timed("alternate-column sums of T*", lambda: [
            n for n in rng
            if (n % 2 == 0 and sum(T(n, 2 * k) for k in range(n + 1)) != (3**n + 1) // 2)
            or (n % 2 == 1 and sum(T(n, 2 * k - 1) for k in range(1, n + 1)) != (3**n - 1) // 2)
        ]),
        _timed("row sum of T* = 3^n", lambda: [n for n in rng if sum(T(n, k) for k in range(2 * n + 1)) != 3**n]),
        _timed("T*(n,n-k) = T*(n,n+k)", lambda: [
            (n, k) for n in rng for k in range(-n - 2, n + 3) if T(n, n - k) != T(n, n + k)
        ]),
        _timed("Motzkin numbers vs lattice-path enumeration", lambda: [
            (n, k) for n in range(motzkin_max + 1)
            for counts in [motzkin_bruteforce(n)]
            for k in range(n + 1) if motzkin(n, k) != counts.get(k, 0)
        ]),
    ]
    return out


def _brute(g, mode=WEAK1):
    count, total = mapping_stats(g, mode)
    return count, Fraction(total, count)


def formula_suite() -> list:
    def complete():
        return [n for n in range(1, 9)
                if _brute(make_complete(n)) != (cf.count1_complete(n), cf.avg1_complete(n))]

    def bipartite():
        return [(p, q) for p in range(1, 9) for q in range(1, 10 - p)
                if _brute(make_complete_bipartite(p, q))
                != (cf.count1_complete_bipartite(p, q), cf.avg1_complete_bipartite(p, q))]

    def stars():
        bad = []
        for n in range(2, 10):
            if _brute(make_star(n))[1] != cf.avg1_star(n):
                bad.append(("weak", n))
            if _brute(make_star(n), STRONG1)[1] != cf.avg_strong1_star(n):
                bad.append(("strong", n))
        return bad

    def paths():
        return [n for n in range(1, 11) if _brute(make_path(n))[1] != cf.avg1_path(n)]

    def cycles():
        return [n for n in range(3, 11) if _brute(make_cycle(n)) != (cf.count1_cycle(n), cf.avg1_cycle(n))]

    def unicyclic():
        return [(r.n, cycle_length(r)) for n in range(3, 9) for r in enumerate_corollas(n)
                if mapping_stats(r, WEAK1)[0] != cf.count1_unicyclic(r.n, cycle_length(r))]

    def two_routes():
        return [n for n in range(1, 21) if cf.avg1_path_double_sum(n) != cf.avg1_path_reflection(n)]

    def normalization():
        return [n for n in range(1, 16) if sum(path_endpoint_probability(n, k) for k in range(-n, n + 1)) != 1]

    def increments():
        bad = []
        for n in range(1, 31):
            d = cf.avg1_path(n + 1) - cf.avg1_path(n)
            if not (0 < d <= Fraction(2, 3)) or (d == Fraction(2, 3)) != (n == 1):
                bad.append(n)
            if cf.avg1_path(n) > cf.path_linear_bound(n):
                bad.append(("linear", n))
        return bad

    def consistency():
        bad = []
        if cf.avg1_complete(2) != cf.avg1_path(2):
            bad.append("K2=P2")
        if cf.avg1_complete(3) != cf.avg1_cycle(3):
            bad.append("K3=C3")
        bad += [n for n in range(2, 10) if cf.avg1_complete_bipartite(1, n - 1) != cf.avg1_star(n)]
        return bad

    return [
        _timed("K_n closed form = brute force (n<=8)", complete),
        _timed("K_p,q closed form = brute force (p+q<=9)", bipartite),
        _timed("S_n weak/strong closed form = brute force (n<=9)", stars),
        _timed("P_n closed form = brute force (n<=10)", paths),
        _timed("C_n count/avg closed form = brute force (n<=10)", cycles),
        _timed("unicyclic count = brute force over corollas (n<=8)", unicyclic),
        _timed("avg_1(P_n): double sum = reflection route (n<=20)", two_routes),
        _timed("endpoint distribution sums to 1 (n<=15)", normalization),
        _timed("path increments <= 2/3 and linear bound (n<=30)", increments),
        _timed("cross-family consistency", consistency),
    ]


_MIN_ORDER = {"lnr": 1, "bhm": 2, "tree_extremality": 2, "kc_monotonicity": 4,
              "corolla_dominance": 3, "unicyclic_count_invariance": 3}
_CAP_KIND = {"lnr": "graphs", "bhm": "graphs", "tree_extremality": "trees", "kc_monotonicity": "kc",
             "corolla_dominance": "corolla", "unicyclic_count_invariance": "unicyclic"}


def conjecture_suite(n: int | None = None, workers: int = 1) -> list:
    """Every sweep for each order from its minimum up to ``n`` (default: its cap)."""
    out = []
    for name, check in ALL_CHECKS.items():
        top = max_n(_CAP_KIND[name]) if n is None else min(n, max_n(_CAP_KIND[name]))
        t0 = time.perf_counter()
        results = [check(k, workers=workers) for k in range(_MIN_ORDER[name], top + 1)]
        bad = [f"n={r.parameters['n']}: {len(r.violations)} violation(s)" for r in results if not r.ok]
        instances = sum(r.instance_count for r in results)
        detail = "; ".join(bad) if bad else f"n<={top}, {instances} instances, 0 violations"
        out.append(Outcome(f"sweep {name}", not bad, detail, time.perf_counter() - t0))
    return out


SUITES = {
    "identities": identity_suite,
    "formulas": formula_suite,
    "conjectures": conjecture_suite,
}
