"""Rooted connected graphs, the standard families, and the KC-transformation.

Vertices are the integers ``0..n-1`` and edges are stored as sorted pairs in
a frozenset, so two graphs compare equal exactly when they have the same
order, root and edge set.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    DisconnectedGraphError,
    InvalidArgumentError,
    InvalidOrderError,
    NoCycleError,
    TransformNotApplicableError,
)

__all__ = [
    "RootedGraph",
    "GraphKind",
    "GraphClassTag",
    "make_path",
    "make_cycle",
    "make_complete",
    "make_complete_bipartite",
    "make_star",
    "make_corolla",
    "side_vertices",
    "kc_transform",
    "kc_applicable",
    "middle_vertices",
    "cut_vertices",
    "swap_automorphism_exists",
    "is_connected",
    "is_bipartite",
    "is_tree",
    "is_unicyclic",
    "is_pseudotree",
    "is_corolla",
    "cycle_length",
    "diameter",
    "distances_from",
    "classify",
    "to_json",
    "from_json",
    "to_edgelist",
    "from_edgelist",
    "read_graph",
    "write_graph",
]


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


def _adjacency(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in sorted(edges):
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


def _reachable(adj, start, removed=None):
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


@dataclass(frozen=True)
class RootedGraph:
    """A connected simple graph on vertices ``0..n-1`` with a root.

    ``edges`` may be given as any iterable of pairs; it is normalized to a
    frozenset of sorted tuples.  Construction fails on loops, duplicates,
    out-of-range endpoints and disconnected graphs.
    """

    n: int
    edges: frozenset
    root: int = 0
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidOrderError(f"graph needs at least one vertex, got n={self.n}")
        if not 0 <= self.root < self.n:
            raise InvalidArgumentError(f"root {self.root} out of range for n={self.n}")
        raw = list(self.edges)
        norm = set()
        for e in raw:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgumentError(f"edge {(u, v)} has an endpoint outside 0..{self.n - 1}")
            e = _norm_edge(u, v)
            if e in norm:
                raise InvalidArgumentError(f"duplicate edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", frozenset(norm))
        adj = _adjacency(self.n, norm)
        object.__setattr__(self, "adj", adj)
        if len(_reachable(adj, 0)) != self.n:
            raise DisconnectedGraphError("graph must be connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def with_root(self, root: int) -> "RootedGraph":
        return RootedGraph(self.n, self.edges, root)

    def relabel(self, perm) -> "RootedGraph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        return RootedGraph(self.n, edges, perm[self.root])

    def as_dict(self) -> dict:
        return {"n": self.n, "root": self.root, "edges": [list(e) for e in self.sorted_edges()]}

    def __str__(self):
        return to_json(self)


# ---------------------------------------------------------------- families


def make_path(n: int) -> RootedGraph:
    if n < 1:
        raise InvalidOrderError("path needs n >= 1")
    return RootedGraph(n, [(i, i + 1) for i in range(n - 1)], 0)


def make_cycle(n: int) -> RootedGraph:
    if n < 3:
        raise InvalidOrderError("cycle needs n >= 3")
    return RootedGraph(n, [(i, (i + 1) % n) for i in range(n)], 0)


def make_complete(n: int) -> RootedGraph:
    if n < 1:
        raise InvalidOrderError("complete graph needs n >= 1")
    return RootedGraph(n, itertools.combinations(range(n), 2), 0)


def make_complete_bipartite(p: int, q: int) -> RootedGraph:
    """K_{p,q} with parts ``0..p-1`` and ``p..p+q-1``, rooted at vertex 0."""
    if p < 1 or q < 1:
        raise InvalidOrderError("complete bipartite graph needs p, q >= 1")
    return RootedGraph(p + q, [(i, p + j) for i in range(p) for j in range(q)], 0)


def make_star(n: int) -> RootedGraph:
    """Star on n vertices rooted at its centre 0."""
    if n < 2:
        raise InvalidOrderError("star needs n >= 2")
    return RootedGraph(n, [(0, i) for i in range(1, n)], 0)


def make_corolla(cycle_len: int, path_lengths) -> RootedGraph:
    """Cycle ``0..c-1`` with a pendant path of ``path_lengths[i]`` new vertices at vertex i."""
    path_lengths = list(path_lengths)
    if cycle_len < 3:
        raise InvalidOrderError("corolla cycle needs length >= 3")
    if len(path_lengths) != cycle_len:
        raise InvalidArgumentError("need exactly one path length per cycle vertex")
    if any(L < 0 for L in path_lengths):
        raise InvalidArgumentError("path lengths must be non-negative")
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    nxt = cycle_len
    for i, L in enumerate(path_lengths):
        prev = i
        for _ in range(L):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return RootedGraph(nxt, edges, 0)


# ---------------------------------------------------------------- predicates


def is_connected(g: RootedGraph) -> bool:
    # always true for a constructed RootedGraph; kept for symmetry with the others
    return len(_reachable(g.adj, 0)) == g.n


def bipartition(g: RootedGraph):
    """2-colouring as a list of 0/1, or None if g has an odd cycle."""
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if colour[w] < 0:
                colour[w] = 1 - colour[u]
                queue.append(w)
            elif colour[w] == colour[u]:
                return None
    return colour


def is_bipartite(g: RootedGraph) -> bool:
    return bipartition(g) is not None


def is_tree(g: RootedGraph) -> bool:
    return g.m == g.n - 1


def is_unicyclic(g: RootedGraph) -> bool:
    return g.m == g.n


def is_pseudotree(g: RootedGraph) -> bool:
    return g.m <= g.n


def _cycle_vertices(g):
    """Vertices on the unique cycle of a unicyclic graph (leaf peeling)."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return [v for v in range(g.n) if alive[v]]


def cycle_length(g: RootedGraph) -> int:
    if is_tree(g):
        raise NoCycleError("a tree has no cycle")
    if not is_unicyclic(g):
        raise InvalidArgumentError("cycle length is only defined for unicyclic graphs")
    return len(_cycle_vertices(g))


def is_corolla(g: RootedGraph) -> bool:
    """Unicyclic, and every hanging tree is a path attached by its endpoint."""
    if not is_unicyclic(g):
        return False
    on_cycle = set(_cycle_vertices(g))
    for v in range(g.n):
        off = sum(1 for w in g.adj[v] if not (v in on_cycle and w in on_cycle))
        if v in on_cycle:
            if off > 1:
                return False
        elif g.degree(v) > 2:
            return False
    return True


def distances_from(g: RootedGraph, s: int) -> list:
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: RootedGraph) -> int:
    return max(max(distances_from(g, s)) for s in range(g.n))


def cut_vertices(g: RootedGraph) -> list:
    """Vertices whose removal disconnects g (plain O(n * m) check)."""
    out = []
    for v in range(g.n):
        if g.n <= 2:
            break
        start = 0 if v != 0 else 1
        if len(_reachable(g.adj, start, removed=v)) != g.n - 1:
            out.append(v)
    return out


# ---------------------------------------------------------------- KC-transformation


def _check_pair(g, a, b):
    if a == b:
        raise InvalidArgumentError("a and b must be distinct vertices")
    for x in (a, b):
        if not 0 <= x < g.n:
            raise InvalidArgumentError(f"vertex {x} not in graph")


def side_vertices(g: RootedGraph, a: int, b: int) -> frozenset:
    """Vertices that cannot reach b without passing through a (a included)."""
    _check_pair(g, a, b)
    from_b = _reachable(g.adj, b, removed=a)
    return frozenset(v for v in range(g.n) if v not in from_b)


def kc_applicable(g: RootedGraph, a: int, b: int) -> bool:
    return min(len(side_vertices(g, a, b)), len(side_vertices(g, b, a))) > 1


def kc_transform(g: RootedGraph, a: int, b: int) -> RootedGraph:
    """G_{a->b}: move every edge from b into its own side over to a.

    The root keeps its index.  If a new edge already exists it is merged,
    which keeps the result simple.
    """
    va = side_vertices(g, a, b)
    vb = side_vertices(g, b, a)
    if min(len(va), len(vb)) <= 1:
        raise TransformNotApplicableError(
            f"KC-transformation needs min(|V_a;b|, |V_b;a|) > 1, got {len(va)} and {len(vb)}"
        )
    moved = [w for w in g.adj[b] if w in vb]
    edges = set(g.edges)
    for w in moved:
        edges.discard(_norm_edge(b, w))
        edges.add(_norm_edge(a, w))
    return RootedGraph(g.n, edges, g.root)


def middle_vertices(g: RootedGraph, a: int, b: int) -> frozenset:
    """V(G; a, b): everything outside both sides, plus a and b."""
    va = side_vertices(g, a, b)
    vb = side_vertices(g, b, a)
    return frozenset(set(range(g.n)) - va - vb) | {a, b}


def _induced(g, verts):
    vs = set(verts)
    return {v: [w for w in g.adj[v] if w in vs] for v in vs}


def induced_connected(g: RootedGraph, verts) -> bool:
    adj = _induced(g, verts)
    vs = list(adj)
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def swap_automorphism_exists(g: RootedGraph, a: int, b: int) -> bool:
    """Does the subgraph induced on V(G; a, b) have an automorphism swapping a and b?

    Brute force over permutations that fix the pair {a, b} as a swap,
    pruned by degree classes.  Intended for small graphs only.
    """
    _check_pair(g, a, b)
    cuts = set(cut_vertices(g))
    for x in (a, b):
        if x not in cuts:
            raise InvalidArgumentError(f"vertex {x} is not a cut vertex")
    verts = middle_vertices(g, a, b)
    adj = {v: set(ws) for v, ws in _induced(g, verts).items()}
    if len(adj[a]) != len(adj[b]):
        return False
    rest = sorted(verts - {a, b})
    deg = {v: len(adj[v]) for v in adj}
    edges = {_norm_edge(u, w) for u in adj for w in adj[u]}

    mapping = {a: b, b: a}
    used = {a, b}

    def consistent(v, img):
        for w in adj[v]:
            if w in mapping and _norm_edge(img, mapping[w]) not in edges:
                return False
        for w, wi in mapping.items():
            if w not in adj[v] and _norm_edge(img, wi) in edges:
                return False
        return True

    if (a in adj[b]) != (b in adj[a]):
        return False

    def extend(i):
        if i == len(rest):
            return True
        v = rest[i]
        for img in rest:
            if img in used or deg[img] != deg[v]:
                continue
            if not consistent(v, img):
                continue
            mapping[v] = img
            used.add(img)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(img)
        return False

    return extend(0)


# ---------------------------------------------------------------- classification


class GraphKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    STAR = "star"
    COROLLA = "corolla"
    UNICYCLIC = "unicyclic"
    TREE = "tree"
    GENERIC = "generic"


@dataclass(frozen=True)
class GraphClassTag:
    kind: GraphKind
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}({','.join(map(str, self.params))})"


def classify(g: RootedGraph) -> GraphClassTag:
    """Recognize the most specific family g belongs to, up to isomorphism.

    Precedence: complete, path, cycle, star, complete bipartite, corolla,
    unicyclic, tree.  So K_3 is tagged complete rather than cycle and P_3
    path rather than star; the closed forms agree on those overlaps.
    """
    n, m = g.n, g.m
    degs = sorted(g.degree(v) for v in range(n))
    if m == n * (n - 1) // 2:
        return GraphClassTag(GraphKind.COMPLETE, (n,))
    if is_tree(g) and degs[-1] <= 2:
        return GraphClassTag(GraphKind.PATH, (n,))
    if m == n and all(d == 2 for d in degs):
        return GraphClassTag(GraphKind.CYCLE, (n,))
    if is_tree(g) and degs[-1] == n - 1:
        return GraphClassTag(GraphKind.STAR, (n,))
    colour = bipartition(g)
    if colour is not None:
        p = colour.count(0)
        q = n - p
        if m == p * q:
            return GraphClassTag(GraphKind.COMPLETE_BIPARTITE, (min(p, q), max(p, q)))
    if is_unicyclic(g):
        c = cycle_length(g)
        if is_corolla(g):
            return GraphClassTag(GraphKind.COROLLA, (c,))
        return GraphClassTag(GraphKind.UNICYCLIC, (c,))
    if is_tree(g):
        return GraphClassTag(GraphKind.TREE, (n,))
    return GraphClassTag(GraphKind.GENERIC)


# ---------------------------------------------------------------- file formats


def to_json(g: RootedGraph) -> str:
    return json.dumps(g.as_dict())


def from_json(text: str) -> RootedGraph:
    data = json.loads(text)
    try:
        return RootedGraph(int(data["n"]), [tuple(e) for e in data["edges"]], int(data.get("root", 0)))
    except (KeyError, TypeError) as exc:
        raise InvalidArgumentError(f"malformed graph JSON: {exc}") from exc


def to_edgelist(g: RootedGraph) -> str:
    lines = [f"{g.n} {g.root}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> RootedGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise InvalidArgumentError("edge list must start with a 'n root' line")
    try:
        n, root = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise InvalidArgumentError(f"malformed edge list: {exc}") from exc
    return RootedGraph(n, edges, root)


def read_graph(path) -> RootedGraph:
    """Load a graph; JSON if the content starts with ``{``, edge list otherwise."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_edgelist(text)


def write_graph(g: RootedGraph, path, fmt=None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "edgelist"
    text = to_json(g) + "\n" if fmt == "json" else to_edgelist(g)
    path.write_text(text)
