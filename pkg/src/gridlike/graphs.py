"""Undirected simple graphs on dense integer vertices.

Vertices are the integers 0..n-1. Edges are unordered pairs, stored with
the smaller endpoint first and sorted, so iteration order (and therefore
every algorithm downstream) is deterministic. Graphs are immutable and
hashable.
"""

from __future__ import annotations

from collections import deque

from .errors import GraphError


class Graph:
    """Immutable simple graph: n vertices, canonically sorted edge list."""

    __slots__ = ("n", "edges", "_adj", "_edgeset")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        adj = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(canon)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._edgeset = seen

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edgeset

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list]:
    """Induced subgraph on `vertices`, relabeled densely.

    Returns (subgraph, labels) where labels[new_index] = old vertex.
    """
    labels = sorted(set(vertices))
    index = {v: i for i, v in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(labels), edges), labels


def connected_components(g: Graph, within=None) -> list[frozenset]:
    """Components (as vertex sets) of g, optionally restricted to `within`."""
    allowed = set(g.vertices) if within is None else set(within)
    seen = set()
    comps = []
    for root in sorted(allowed):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in allowed and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected_set(g: Graph, vertices) -> bool:
    """True iff `vertices` is non-empty and induces a connected subgraph."""
    vs = set(vertices)
    if not vs:
        return False
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    return len(connected_components(g, vs)) == 1


def is_path(g: Graph, seq) -> bool:
    """True iff `seq` is a non-empty simple path in g."""
    seq = tuple(seq)
    if not seq:
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    if len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def require_path(g: Graph, seq) -> tuple:
    seq = tuple(seq)
    if not is_path(g, seq):
        raise GraphError(f"not a path in the host graph: {seq}")
    return seq


def degeneracy(g: Graph) -> tuple[int, list]:
    """Degeneracy and its removal ordering.

    Repeatedly removes a minimum-degree vertex (ties: smallest index);
    the degeneracy is the largest degree seen at removal time. The
    ordering certifies that g is d-degenerate: every vertex has at most
    d neighbors among the vertices removed after it.
    """
    remaining = set(g.vertices)
    deg = {v: g.degree(v) for v in g.vertices}
    ordering = []
    d = 0
    for _ in range(g.n):
        v = min(remaining, key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        ordering.append(v)
        remaining.discard(v)
        for w in g.neighbors(v):
            if w in remaining:
                deg[w] -= 1
    return d, ordering


def is_bipartite(g: Graph):
    """A bipartition (two frozensets) if g is bipartite, else None.

    Deterministic: components are rooted at their smallest vertex, which
    always lands on the first side. The empty graph yields two empty sides.
    """
    colour = {}
    for root in g.vertices:
        if root in colour:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    side0 = frozenset(v for v, c in colour.items() if c == 0)
    side1 = frozenset(v for v, c in colour.items() if c == 1)
    return side0, side1


def max_clique_at_least(g: Graph, k: int):
    """A clique of size k (sorted tuple) if one exists, else None."""
    if k <= 0:
        return ()
    if k == 1:
        return (0,) if g.n else None
    candidates = [v for v in g.vertices if g.degree(v) >= k - 1]

    def extend(clique, pool):
        if len(clique) == k:
            return tuple(clique)
        need = k - len(clique)
        for i, v in enumerate(pool):
            if len(pool) - i < need:
                return None
            nxt = [w for w in pool[i + 1:] if g.has_edge(v, w)]
            got = extend(clique + [v], nxt)
            if got is not None:
                return got
        return None

    return extend([], candidates)
