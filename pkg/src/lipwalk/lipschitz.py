"""Exhaustive enumeration of (strong) M-Lipschitz mappings and their ranges.

This is the ground truth every closed form is checked against.  Vertices are
assigned in BFS order from the root, so each new vertex already has an
assigned neighbour and only ``2M + 1`` (weak) or two (strong) candidate
values need to be tried.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .combinatorics import format_rational
from .errors import InvalidArgumentError, UndefinedAverageError
from .graphs import RootedGraph

__all__ = [
    "Mode",
    "WEAK1",
    "STRONG1",
    "LipschitzMapping",
    "AvgRangeReport",
    "enumerate_mappings",
    "range_of",
    "mapping_stats",
    "avg_range_bruteforce",
    "avg_range_root_invariance_check",
]


@dataclass(frozen=True)
class Mode:
    """``|f(u) - f(v)| <= M`` on every edge, or ``== M`` when ``strong``."""

    M: int = 1
    strong: bool = False

    def __post_init__(self):
        if self.M < 1:
            raise InvalidArgumentError("Lipschitz constant M must be >= 1")

    def __str__(self):
        return f"{'strong' if self.strong else 'weak'}({self.M})"


WEAK1 = Mode(1, False)
STRONG1 = Mode(1, True)


@dataclass(frozen=True)
class LipschitzMapping:
    values: tuple
    mode: Mode = WEAK1

    def is_valid(self, g: RootedGraph) -> bool:
        if len(self.values) != g.n or self.values[g.root] != 0:
            return False
        for u, v in g.edges:
            d = abs(self.values[u] - self.values[v])
            if d > self.mode.M or (self.mode.strong and d != self.mode.M):
                return False
        return True


@dataclass(frozen=True)
class AvgRangeReport:
    mapping_count: int
    range_sum: int
    average: Fraction
    mode: Mode = WEAK1
    source: str = "brute-force"

    def as_dict(self) -> dict:
        return {
            "mapping_count": self.mapping_count,
            "range_sum": self.range_sum,
            "average": format_rational(self.average),
            "mode": {"M": self.mode.M, "strong": self.mode.strong},
            "source": self.source,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AvgRangeReport":
        num, den = d["average"].split("/")
        return cls(
            int(d["mapping_count"]),
            int(d["range_sum"]),
            Fraction(int(num), int(den)),
            Mode(int(d["mode"]["M"]), bool(d["mode"]["strong"])),
            d["source"],
        )


def _plan(g: RootedGraph):
    """BFS order from the root and, for each vertex, its earlier neighbours."""
    order = [g.root]
    pos = {g.root: 0}
    queue = deque([g.root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in pos:
                pos[w] = len(order)
                order.append(w)
                queue.append(w)
    back = [tuple(pos[w] for w in g.adj[v] if pos[w] < pos[v]) for v in order]
    return order, back


def _candidates(vals, prev, mode):
    M = mode.M
    if mode.strong:
        base = vals[prev[0]]
        out = []
        for c in (base - M, base + M):
            if all(abs(vals[p] - c) == M for p in prev[1:]):
                out.append(c)
        return out
    lo = max(vals[p] for p in prev) - M
    hi = min(vals[p] for p in prev) + M
    return range(lo, hi + 1)


def enumerate_mappings(g: RootedGraph, mode: Mode = WEAK1) -> Iterator[LipschitzMapping]:
    """Yield every mapping exactly once, in a fixed order for a given graph."""
    order, back = _plan(g)
    n = g.n
    vals = [0] * n  # indexed by BFS position

    def rec(i):
        if i == n:
            out = [0] * n
            for pos, v in enumerate(order):
                out[v] = vals[pos]
            yield LipschitzMapping(tuple(out), mode)
            return
        for c in _candidates(vals, back[i], mode):
            vals[i] = c
            yield from rec(i + 1)

    yield from rec(1)


def range_of(f) -> int:
    """Number of distinct values taken by a mapping."""
    values = f.values if isinstance(f, LipschitzMapping) else f
    return len(set(values))


def mapping_stats(g: RootedGraph, mode: Mode = WEAK1) -> tuple:
    """``(count, range_sum)`` over all mappings, without materializing them.

    Keeps a multiset of used values so the number of distinct values is
    known at each leaf in O(1).
    """
    order, back = _plan(g)
    n = g.n
    vals = [0] * n
    mult = {0: 1}
    count = 0
    total = 0
    distinct = 1
    M, strong = mode.M, mode.strong

    # Leaves are by far the most numerous nodes; handle the last level inline.
    def rec(i):
        nonlocal count, total, distinct
        prev = back[i]
        if strong:
            base = vals[prev[0]]
            cands = [c for c in (base - M, base + M) if all(abs(vals[p] - c) == M for p in prev)]
        else:
            lo = hi = vals[prev[0]]
            for p in prev:
                x = vals[p]
                if x > lo:
                    lo = x
                if x < hi:
                    hi = x
            cands = range(lo - M, hi + M + 1)
        if i == n - 1:
            for c in cands:
                count += 1
                total += distinct + (0 if mult.get(c) else 1)
            return
        for c in cands:
            vals[i] = c
            k = mult.get(c, 0)
            mult[c] = k + 1
            if k == 0:
                distinct += 1
            rec(i + 1)
            if k == 0:
                distinct -= 1
                del mult[c]
            else:
                mult[c] = k

    if n == 1:
        return 1, 1
    rec(1)
    return count, total


def avg_range_bruteforce(g: RootedGraph, mode: Mode = WEAK1) -> AvgRangeReport:
    count, total = mapping_stats(g, mode)
    if count == 0:
        raise UndefinedAverageError(mapping_count=0)
    return AvgRangeReport(count, total, Fraction(total, count), mode, "brute-force")


def avg_range_root_invariance_check(g: RootedGraph, mode: Mode = WEAK1) -> bool:
    """True iff the brute-force average is the same for every choice of root.

    An empty strong mapping set must be empty for every root; in that case
    the check passes without an average to compare.
    """
    results = set()
    for r in range(g.n):
        count, total = mapping_stats(g.with_root(r), mode)
        results.add(None if count == 0 else Fraction(total, count))
    return len(results) == 1
