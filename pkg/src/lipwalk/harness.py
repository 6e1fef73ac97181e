"""Exhaustive small-graph sweeps for the extremal conjectures and KC results.

Each ``check_*`` function walks every graph of a given order, evaluates the
relevant inequality by brute force, and returns a :class:`SweepResult`.  A
violation carries the full graph encoding plus both sides as exact
rationals, so it can be re-checked by hand.

General graphs come either labeled (every edge subset, slow) or one per
isomorphism class (from the networkx graph atlas, orders up to 7).  Trees are
always enumerated labeled through Prüfer sequences, with the brute-force
evaluation memoized per isomorphism class.  Since the average range is an
isomorphism invariant, deduplication never changes a verdict.
"""

from __future__ import annotations

import functools
import heapq
import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .closed_forms import (
    avg1_path,
    avg1_star,
    closed_form_report,
    count1_unicyclic,
)
from .combinatorics import format_rational
from .errors import SweepLimitError
from .graphs import (
    RootedGraph,
    cycle_length,
    induced_connected,
    is_bipartite,
    is_corolla,
    is_unicyclic,
    kc_applicable,
    kc_transform,
    make_corolla,
    make_path,
    make_star,
    middle_vertices,
    swap_automorphism_exists,
)
from .lipschitz import STRONG1, WEAK1, mapping_stats

__all__ = [
    "DEFAULT_CAPS",
    "max_n",
    "Violation",
    "SweepResult",
    "enumerate_trees",
    "tree_canonical_form",
    "tree_classes",
    "enumerate_connected_graphs",
    "connected_graph_classes",
    "enumerate_corollas",
    "check_lnr",
    "check_bhm",
    "check_tree_extremality",
    "check_kc_monotonicity",
    "check_corolla_dominance",
    "check_unicyclic_count_invariance",
    "ALL_CHECKS",
]

DEFAULT_CAPS = {"graphs": 6, "trees": 8, "kc": 7, "corolla": 7, "unicyclic": 7}
ATLAS_MAX_N = 7


def max_n(kind: str) -> int:
    """Sweep cap for a kind of sweep; ``LIPWALK_MAX_N`` overrides all of them."""
    env = os.environ.get("LIPWALK_MAX_N")
    if env:
        return int(env)
    return DEFAULT_CAPS[kind]


def _require_cap(n, kind, cap):
    limit = max_n(kind) if cap is None else cap
    if n > limit:
        raise SweepLimitError(f"n={n} exceeds the {kind} sweep cap of {limit} (set LIPWALK_MAX_N to raise it)")


@dataclass(frozen=True)
class Violation:
    graph: dict
    lhs: Fraction
    rhs: Fraction
    detail: str = ""

    def as_dict(self):
        return {"graph": self.graph, "lhs": format_rational(self.lhs), "rhs": format_rational(self.rhs), "detail": self.detail}

    def sort_key(self):
        return (self.detail, self.graph["n"], self.graph["edges"], self.graph["root"])


@dataclass
class SweepResult:
    name: str
    instance_count: int
    violations: list
    elapsed: float
    parameters: dict
    skipped: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "instance_count": self.instance_count,
            "skipped": self.skipped,
            "violations": [v.as_dict() for v in self.violations],
            "notes": self.notes,
            "elapsed": round(self.elapsed, 6),
        }

    def summary(self) -> str:
        verdict = "OK" if self.ok else f"{len(self.violations)} VIOLATION(S)"
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.name:<28} {params:<28} instances={self.instance_count:<8} skipped={self.skipped:<6} {verdict}"


def _pmap(fn, items, workers):
    """Order-preserving map, optionally across a process pool."""
    if not workers or workers <= 1:
        return [fn(x) for x in items]
    items = list(items)
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# ---------------------------------------------------------------- graph streams


def _prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def enumerate_trees(n: int) -> Iterator[RootedGraph]:
    """All n^(n-2) labeled trees on ``0..n-1``, one per Prüfer sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        yield RootedGraph(1, [], 0)
        return
    if n == 2:
        yield RootedGraph(2, [(0, 1)], 0)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield RootedGraph(n, _prufer_decode(seq, n), 0)


def _tree_centers(g):
    deg = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


@functools.lru_cache(maxsize=None)
def tree_classes(n: int) -> tuple:
    """``(representatives, labeled_count)``: one tree per isomorphism class, first-seen order."""
    reps = {}
    labeled = 0
    for t in enumerate_trees(n):
        labeled += 1
        reps.setdefault(tree_canonical_form(t), t)
    return tuple(reps.values()), labeled


def _ahu(g, v, parent):
    return "(" + "".join(sorted(_ahu(g, w, v) for w in g.adj[v] if w != parent)) + ")"


def tree_canonical_form(g: RootedGraph) -> str:
    """Isomorphism certificate of an unrooted tree (AHU encoding from its centre)."""
    return min(_ahu(g, c, -1) for c in _tree_centers(g))


def _connected_mask(n, adjmask):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adjmask[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def enumerate_connected_graphs(n: int, cap: int | None = None) -> Iterator[RootedGraph]:
    """Every labeled connected graph on ``0..n-1``, by edge subset in binary order."""
    if n < 1:
        raise ValueError("n must be positive")
    _require_cap(n, "graphs", cap)
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adjmask = [0] * n
        chosen = []
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adjmask[u] |= 1 << v
                adjmask[v] |= 1 << u
                chosen.append((u, v))
        if n == 1 or _connected_mask(n, adjmask):
            yield RootedGraph(n, chosen, 0)


def connected_graph_classes(n: int) -> list:
    """One connected graph per isomorphism class on n vertices (n <= 7)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ATLAS_MAX_N:
        raise SweepLimitError(f"isomorphism classes are only available for n <= {ATLAS_MAX_N}")
    return list(_atlas_classes()[n])


_ATLAS = None


def _atlas_classes():
    global _ATLAS
    if _ATLAS is None:
        import networkx as nx

        by_n = {k: [] for k in range(1, ATLAS_MAX_N + 1)}
        for h in nx.graph_atlas_g():
            k = h.number_of_nodes()
            if k == 0 or not nx.is_connected(h):
                continue
            by_n[k].append(RootedGraph(k, list(h.edges()), 0))
        _ATLAS = by_n
    return _ATLAS


def _graph_stream(n, labeled, kind, cap):
    _require_cap(n, kind, cap)
    if labeled:
        return list(enumerate_connected_graphs(n, cap=n))
    return connected_graph_classes(n)


def enumerate_corollas(n: int) -> Iterator[RootedGraph]:
    """All corollas of order n as (cycle length, per-vertex path lengths) choices."""
    for c in range(3, n + 1):
        extra = n - c
        # compositions of `extra` into c non-negative parts
        for bars in itertools.combinations(range(extra + c - 1), c - 1):
            parts = []
            prev = -1
            for b in bars:
                parts.append(b - prev - 1)
                prev = b
            parts.append(extra + c - 1 - prev - 1)
            yield make_corolla(c, parts)


# ---------------------------------------------------------------- helpers


def _avg(g, mode):
    count, total = mapping_stats(g, mode)
    return None if count == 0 else Fraction(total, count)


def _finish(name, params, instances, violations, t0, skipped=0, notes=None):
    violations = sorted(violations, key=Violation.sort_key)
    return SweepResult(name, instances, violations, time.perf_counter() - t0, params, skipped, notes or {})


# ---------------------------------------------------------------- LNR


def _lnr_task(g):
    avg = _avg(g, WEAK1)
    cf = closed_form_report(g, WEAK1)
    return avg, (None if cf is None else cf.average)


def check_lnr(n: int, *, labeled: bool = False, workers: int = 1, cap: int | None = None) -> SweepResult:
    """avg_1(G) <= avg_1(P_n) for every connected G on n vertices."""
    t0 = time.perf_counter()
    graphs = _graph_stream(n, labeled, "graphs", cap)
    rhs = avg1_path(n)
    violations = []
    cross = 0
    for g, (avg, cf) in zip(graphs, _pmap(_lnr_task, graphs, workers)):
        if avg > rhs:
            violations.append(Violation(g.as_dict(), avg, rhs, "avg_1(G) > avg_1(P_n)"))
        if cf is not None:
            cross += 1
            if cf != avg:
                violations.append(Violation(g.as_dict(), avg, cf, "closed form disagrees with brute force"))
    return _finish("lnr", {"n": n, "labeled": labeled}, len(graphs), violations, t0,
                   notes={"closed_form_cross_checks": cross})


# ---------------------------------------------------------------- BHM


def _strong_task(g):
    return _avg(g, STRONG1)


def check_bhm(n: int, *, labeled: bool = False, workers: int = 1, cap: int | None = None) -> SweepResult:
    """avg_{+-1}(G) <= avg_{+-1}(P_n) for every connected bipartite G; both sides brute force."""
    t0 = time.perf_counter()
    graphs = [g for g in _graph_stream(n, labeled, "graphs", cap) if is_bipartite(g)]
    rhs = _avg(make_path(n), STRONG1)
    violations = []
    for g, avg in zip(graphs, _pmap(_strong_task, graphs, workers)):
        if avg is None or avg > rhs:
            violations.append(Violation(g.as_dict(), avg if avg is not None else Fraction(0), rhs,
                                        "avg_+-1(G) > avg_+-1(P_n)" if avg is not None else "no strong mappings"))
    return _finish("bhm", {"n": n, "labeled": labeled}, len(graphs), violations, t0)


# ---------------------------------------------------------------- trees


def _tree_task(g):
    return _avg(g, WEAK1), _avg(g, STRONG1)


def check_tree_extremality(n: int, *, workers: int = 1, cap: int | None = None) -> SweepResult:
    """star <= T <= path for every labeled tree, in weak and strong mode."""
    if n < 2:
        raise ValueError("tree extremality needs n >= 2")
    _require_cap(n, "trees", cap)
    t0 = time.perf_counter()
    reps, labeled = tree_classes(n)
    values = _pmap(_tree_task, reps, workers)

    lo_w, hi_w = avg1_star(n), avg1_path(n)
    lo_s, hi_s = _avg(make_star(n), STRONG1), _avg(make_path(n), STRONG1)
    violations = []
    for tree, (weak, strong) in zip(reps, values):
        enc = tree.as_dict()
        if weak < lo_w:
            violations.append(Violation(enc, weak, lo_w, "weak: below star"))
        if weak > hi_w:
            violations.append(Violation(enc, weak, hi_w, "weak: above path"))
        if strong < lo_s:
            violations.append(Violation(enc, strong, lo_s, "strong: below star"))
        if strong > hi_s:
            violations.append(Violation(enc, strong, hi_s, "strong: above path"))
    return _finish("tree_extremality", {"n": n}, labeled, violations, t0,
                   notes={"isomorphism_classes": len(reps)})


# ---------------------------------------------------------------- KC monotonicity


def _kc_task(g):
    """Returns (checked, skipped, disconnected, violations) for one graph."""
    checked = skipped = disconnected = 0
    violations = []
    base = None
    for a, b in itertools.permutations(range(g.n), 2):
        if not kc_applicable(g, a, b):
            continue
        if not induced_connected(g, middle_vertices(g, a, b)):
            disconnected += 1
            continue
        if not swap_automorphism_exists(g, a, b):
            skipped += 1
            continue
        if base is None:
            base = _avg(g, WEAK1)
        after = _avg(kc_transform(g, a, b), WEAK1)
        checked += 1
        if base < after:
            violations.append(Violation(g.as_dict(), base, after, f"avg_1(G) < avg_1(G_{{{a}->{b}}})"))
    return checked, skipped, disconnected, violations


def check_kc_monotonicity(n: int, *, labeled: bool = False, workers: int = 1, cap: int | None = None) -> SweepResult:
    """avg_1(G) >= avg_1(G_{a->b}) whenever the swap-automorphism hypothesis holds."""
    t0 = time.perf_counter()
    graphs = _graph_stream(n, labeled, "kc", cap)
    checked = skipped = disconnected = 0
    violations = []
    for c, s, d, v in _pmap(_kc_task, graphs, workers):
        checked += c
        skipped += s
        disconnected += d
        violations += v
    return _finish("kc_monotonicity", {"n": n, "labeled": labeled}, len(graphs), violations, t0,
                   skipped=skipped + disconnected,
                   notes={"pairs_checked": checked, "pairs_without_swap_automorphism": skipped,
                          "pairs_with_disconnected_middle": disconnected})


# ---------------------------------------------------------------- corollas


def check_corolla_dominance(n: int, *, labeled: bool = False, workers: int = 1, cap: int | None = None) -> SweepResult:
    """Every non-corolla unicyclic U has a corolla R of the same order with avg_1(R) >= avg_1(U).

    Also records which U lack a witness with the same cycle length.
    """
    t0 = time.perf_counter()
    graphs = [g for g in _graph_stream(n, labeled, "corolla", cap) if is_unicyclic(g)]
    targets = [g for g in graphs if not is_corolla(g)]
    corollas = list(enumerate_corollas(n))
    best = {}  # cycle length -> best corolla avg
    for r, avg in zip(corollas, _pmap(_lnr_avg, corollas, workers)):
        c = cycle_length(r)
        if c not in best or avg > best[c]:
            best[c] = avg
    overall = max(best.values()) if best else None
    violations = []
    no_same_cycle = []
    for u, avg in zip(targets, _pmap(_lnr_avg, targets, workers)):
        if overall is None or avg > overall:
            violations.append(Violation(u.as_dict(), avg, overall or Fraction(0), "no dominating corolla"))
        c = cycle_length(u)
        if c not in best or best[c] < avg:
            no_same_cycle.append(u.as_dict())
    return _finish("corolla_dominance", {"n": n, "labeled": labeled}, len(targets), violations, t0,
                   skipped=len(graphs) - len(targets),
                   notes={"corollas": len(corollas), "without_same_cycle_witness": no_same_cycle})


def _lnr_avg(g):
    return _avg(g, WEAK1)


# ---------------------------------------------------------------- unicyclic counts


def _count_task(g):
    return mapping_stats(g, WEAK1)[0]


def check_unicyclic_count_invariance(n: int, *, labeled: bool = False, workers: int = 1,
                                     cap: int | None = None) -> SweepResult:
    """Brute-force mapping count of each unicyclic graph equals C(c) * 3^(n-c)."""
    t0 = time.perf_counter()
    graphs = [g for g in _graph_stream(n, labeled, "unicyclic", cap) if is_unicyclic(g)]
    violations = []
    by_c = {}
    for g, count in zip(graphs, _pmap(_count_task, graphs, workers)):
        c = cycle_length(g)
        expected = count1_unicyclic(n, c)
        by_c.setdefault(str(c), set()).add(count)
        if count != expected:
            violations.append(Violation(g.as_dict(), Fraction(count), Fraction(expected), f"count mismatch for c={c}"))
    notes = {"counts_by_cycle_length": {c: sorted(v) for c, v in sorted(by_c.items())}}
    return _finish("unicyclic_count_invariance", {"n": n, "labeled": labeled}, len(graphs), violations, t0, notes=notes)


ALL_CHECKS = {
    "lnr": check_lnr,
    "bhm": check_bhm,
    "tree_extremality": check_tree_extremality,
    "kc_monotonicity": check_kc_monotonicity,
    "corolla_dominance": check_corolla_dominance,
    "unicyclic_count_invariance": check_unicyclic_count_invariance,
}
