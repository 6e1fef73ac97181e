"""Closed-form counts and average ranges for 1-Lipschitz mappings.

All functions return exact ``int`` or ``Fraction`` values.  The one
exception is :func:`cycle_avg_asymptotic`, whose estimate is a float and is
kept in a separate field so it can never be mistaken for an exact value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, central_trinomial, path_endpoint_probability
from .errors import InvalidArgumentError, InvalidOrderError
from .graphs import GraphKind, RootedGraph, classify, cycle_length, is_tree, is_unicyclic
from .lipschitz import AvgRangeReport, Mode, WEAK1

__all__ = [
    "avg1_complete",
    "count1_complete",
    "count1_complete_bipartite",
    "avg1_complete_bipartite",
    "avg1_star",
    "avg_strong1_star",
    "avg1_path",
    "avg1_path_double_sum",
    "avg1_path_reflection",
    "path_increment_bound_check",
    "path_linear_bound",
    "count1_cycle",
    "avg1_cycle",
    "CycleAsymptotic",
    "cycle_avg_asymptotic",
    "count1_unicyclic",
    "closed_form_report",
    "closed_form_count",
]


def count1_complete(n: int) -> int:
    if n < 1:
        raise InvalidOrderError("K_n needs n >= 1")
    return 2**n - 1


def avg1_complete(n: int) -> Fraction:
    """avg_1(K_n) = 2 - 1/(2^n - 1)."""
    if n < 1:
        raise InvalidOrderError("K_n needs n >= 1")
    return 2 - Fraction(1, 2**n - 1)


def count1_complete_bipartite(p: int, q: int) -> int:
    if p < 1 or q < 1:
        raise InvalidOrderError("K_{p,q} needs p, q >= 1")
    return 3**p + 3**q + 2 ** (p + q) - 2 ** (p + 1) - 2 ** (q + 1) + 1


def avg1_complete_bipartite(p: int, q: int) -> Fraction:
    """avg_1(K_{p,q}) = 3 - 2^(p+q) / |L_1(K_{p,q})|."""
    return 3 - Fraction(2 ** (p + q), count1_complete_bipartite(p, q))


def avg1_star(n: int) -> Fraction:
    if n < 2:
        raise InvalidOrderError("star needs n >= 2")
    return 3 - Fraction(2**n, 3 ** (n - 1))


def avg_strong1_star(n: int) -> Fraction:
    if n < 2:
        raise InvalidOrderError("star needs n >= 2")
    return 3 - Fraction(4, 2**n)


def avg1_path_double_sum(n: int) -> Fraction:
    """The explicit double binomial sum for avg_1(P_n)."""
    if n < 1:
        raise InvalidOrderError("path needs n >= 1")
    s = 0
    for k in range(n):
        inner = 0
        for i in range((n - 1 - k) // 2 + 1):
            inner += binomial(n - 1, k + i) * binomial(n - k - i - 1, i)
            inner += binomial(n - 1, k + 1 + i) * binomial(n - k - i - 2, i)
        s += k * inner
    return 1 + Fraction(2 * s, 3 ** (n - 1))


def avg1_path_reflection(n: int) -> Fraction:
    """1 + 2 E[max], with P(max = r) = P(X = r) + P(X = r + 1) by reflection."""
    if n < 1:
        raise InvalidOrderError("path needs n >= 1")
    expected_max = sum(
        r * (path_endpoint_probability(n, r) + path_endpoint_probability(n, r + 1)) for r in range(n)
    )
    return 1 + 2 * expected_max


def avg1_path(n: int) -> Fraction:
    return avg1_path_double_sum(n)


def path_increment_bound_check(n: int) -> bool:
    """avg_1(P_{n+1}) - avg_1(P_n) <= 2/3."""
    return avg1_path(n + 1) - avg1_path(n) <= Fraction(2, 3)


def path_linear_bound(n: int) -> Fraction:
    return Fraction(2 * n + 1, 3)


def count1_cycle(n: int) -> int:
    if n < 3:
        raise InvalidOrderError("cycle needs n >= 3")
    return central_trinomial(n)


def avg1_cycle(n: int) -> Fraction:
    """avg_1(C_n) = (3^n + (-1)^n) / (2 * central trinomial(n))."""
    return Fraction(3**n + (-1) ** n, 2 * count1_cycle(n))


@dataclass(frozen=True)
class CycleAsymptotic:
    n: int
    exact: Fraction
    approx_asymptote: float

    @property
    def approx_ratio(self) -> float:
        return float(self.exact) / self.approx_asymptote


def cycle_avg_asymptotic(n: int) -> CycleAsymptotic:
    """Exact avg_1(C_n) next to the float estimate 2 * sqrt(pi * n / 3)."""
    return CycleAsymptotic(n, avg1_cycle(n), 2.0 * math.sqrt(math.pi * n / 3.0))


def count1_unicyclic(n: int, c: int) -> int:
    """Number of 1-Lipschitz mappings of any unicyclic graph of order n with a c-cycle."""
    if c < 3 or c > n:
        raise InvalidArgumentError(f"need 3 <= c <= n, got n={n}, c={c}")
    return central_trinomial(c) * 3 ** (n - c)


def _report(count, avg, mode, name):
    total = avg * count
    assert total.denominator == 1, (name, count, avg)
    return AvgRangeReport(count, total.numerator, avg, mode, f"closed-form:{name}")


def closed_form_report(g: RootedGraph, mode: Mode = WEAK1):
    """Closed-form report for g if its family has a formula in this mode, else None."""
    if mode.M != 1:
        return None
    tag = classify(g)
    n = g.n
    if mode.strong:
        # K_2 and P_3 are tagged complete/path but are stars too
        if n >= 2 and g.m == n - 1 and max(g.degree(v) for v in range(n)) == n - 1:
            return _report(2 ** (n - 1), avg_strong1_star(n), mode, "star")
        return None
    kind = tag.kind
    if kind is GraphKind.COMPLETE:
        return _report(count1_complete(n), avg1_complete(n), mode, "complete")
    if kind is GraphKind.PATH:
        return _report(3 ** (n - 1), avg1_path(n), mode, "path")
    if kind is GraphKind.CYCLE:
        return _report(count1_cycle(n), avg1_cycle(n), mode, "cycle")
    if kind is GraphKind.STAR:
        return _report(3 ** (n - 1), avg1_star(n), mode, "star")
    if kind is GraphKind.COMPLETE_BIPARTITE:
        p, q = tag.params
        return _report(count1_complete_bipartite(p, q), avg1_complete_bipartite(p, q), mode, "complete-bipartite")
    return None


def closed_form_count(g: RootedGraph, mode: Mode = WEAK1):
    """``(formula name, count)`` for g, or None when no counting formula applies.

    Besides the families with an average-range formula this covers trees
    (3^(n-1)) and every unicyclic graph.
    """
    report = closed_form_report(g, mode)
    if report is not None:
        return report.source, report.mapping_count
    if mode != WEAK1:
        return None
    if is_tree(g):
        return "closed-form:tree", 3 ** (g.n - 1)
    if is_unicyclic(g):
        return "closed-form:unicyclic", count1_unicyclic(g.n, cycle_length(g))
    return None
