"""Paths that sweep a bramble, their segmentation, and disjoint linkages.

The constructive chain: every bramble admits a path hitting all of its
elements; that path splits into consecutive segments whose private
sub-brambles each reach a target order k; and between any two segments
Menger's theorem (realised here as unit-vertex-capacity max flow) yields
k fully vertex-disjoint connecting paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .brambles import Bramble, family_order_at_least, require_bramble
from .errors import GraphError, InsufficientOrderError, LemmaViolationError, PreconditionError
from .graphs import Graph, require_path


@dataclass(frozen=True)
class PathSystem:
    """l disjoint spine paths plus, per spine pair, k disjoint link paths.

    Links of the pair (i, j) run from a vertex of spine i to a vertex of
    spine j with no internal vertex on either; links of different pairs
    may intersect each other and other spines.
    """

    spines: tuple
    links: dict
    k: int
    l: int


def check_path_system(g: Graph, ps: PathSystem) -> list[str]:
    """Names of violated path-system invariants (empty list = valid)."""
    reasons = []
    if len(ps.spines) != ps.l:
        return [f"expected {ps.l} spines, got {len(ps.spines)}"]
    spine_sets = []
    for i, p in enumerate(ps.spines):
        try:
            require_path(g, p)
        except GraphError:
            reasons.append(f"spine {i} is not a path")
        spine_sets.append(set(p))
    for i in range(len(ps.spines)):
        for j in range(i + 1, len(ps.spines)):
            if spine_sets[i] & spine_sets[j]:
                reasons.append(f"spines {i} and {j} intersect")
    expected_pairs = {(i, j) for i in range(ps.l) for j in range(i + 1, ps.l)}
    if set(ps.links) != expected_pairs:
        reasons.append("link families do not cover exactly the spine pairs")
        return reasons
    for (i, j), family in sorted(ps.links.items()):
        if len(family) != ps.k:
            reasons.append(f"family ({i},{j}) has {len(family)} paths, expected {ps.k}")
        used = set()
        for t, q in enumerate(family):
            try:
                require_path(g, q)
            except GraphError:
                reasons.append(f"link {t} of ({i},{j}) is not a path")
                continue
            if q[0] not in spine_sets[i] or q[-1] not in spine_sets[j]:
                reasons.append(f"link {t} of ({i},{j}) does not run spine-to-spine")
            body = set(q[1:-1])
            if body & (spine_sets[i] | spine_sets[j]):
                reasons.append(f"link {t} of ({i},{j}) re-enters its own spines")
            if used & set(q):
                reasons.append(f"links of ({i},{j}) are not disjoint (at {t})")
            used |= set(q)
    return reasons


# ---------------------------------------------------------------------------
# Hitting path
# ---------------------------------------------------------------------------


def _hit_count(elements, path_set) -> int:
    return sum(1 for el in elements if el & path_set)


def _bfs_path(g: Graph, allowed, source, targets):
    """Shortest path from source to any target inside `allowed` vertices.

    Deterministic: neighbours are scanned in sorted order, first parent
    wins. Returns None if no target is reachable.
    """
    if source in targets:
        return (source,)
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in allowed and w not in parent:
                parent[w] = u
                if w in targets:
                    out = [w]
                    while parent[out[-1]] is not None:
                        out.append(parent[out[-1]])
                    return tuple(reversed(out))
                queue.append(w)
    return None


def hitting_path(g: Graph, b: Bramble) -> tuple:
    """A path meeting every element of the bramble.

    Greedy version of the classical exchange argument: keep a path; while
    some element Z is unhit, shrink endpoints that have no private
    element (an element meeting the path only there), then extend from an
    endpoint through one of its private elements into Z. Each extension
    hits at least one new element, so at most |B| rounds happen.
    Candidates are ranked by (elements hit, shorter, lexicographic).
    """
    require_bramble(b)
    elements = list(b.elements)
    if g.n == 0:
        raise GraphError("empty host graph has no paths")
    if not elements:
        return (0,)

    start = min(g.vertices, key=lambda v: (-sum(1 for el in elements if v in el), v))
    path = (start,)

    while True:
        path_set = set(path)
        unhit = [el for el in elements if not (el & path_set)]
        if not unhit:
            return path

        # Shrink: drop endpoints without a private element. Removal keeps
        # the hit count, and privacy at the other endpoint survives it.
        changed = True
        while changed and len(path) > 1:
            changed = False
            for end in (0, -1):
                if len(path) == 1:
                    break
                v = path[end]
                ps = set(path)
                if not any(el & ps == {v} for el in elements):
                    path = path[1:] if end == 0 else path[:-1]
                    changed = True
        path_set = set(path)

        target = unhit[0]
        candidates = []
        for end in (0, -1):
            v = path[end]
            privates = [el for el in elements if el & path_set == {v}]
            for x in privates:
                allowed = (x | target) - (path_set - {v})
                ext = _bfs_path(g, allowed, v, target)
                if ext is None:
                    continue
                if end == -1:
                    cand = path + ext[1:]
                else:
                    cand = tuple(reversed(ext))[:-1] + path
                candidates.append(cand)
        if not candidates:
            raise LemmaViolationError(
                "no extension found although the bramble touches itself",
                witness=sorted(target),
            )
        path = min(
            candidates,
            key=lambda c: (-_hit_count(elements, set(c)), len(c), c),
        )


# ---------------------------------------------------------------------------
# Segmentation
# ---------------------------------------------------------------------------


def sub_bramble(b: Bramble, marked, forbidden) -> list:
    """Elements meeting `marked` and avoiding `forbidden`."""
    marked = set(marked)
    forbidden = set(forbidden)
    return [el for el in b.elements if (el & marked) and not (el & forbidden)]


def sub_bramble_order_at_least(g: Graph, b: Bramble, marked, forbidden, k: int) -> bool:
    """Decide whether the induced sub-bramble has order at least k."""
    return family_order_at_least(sub_bramble(b, marked, forbidden), k)


def segment_path(g: Graph, b: Bramble, p, k: int, l: int) -> list:
    """Split a bramble-hitting path into l segments of private order k.

    Scanning left to right, segment i ends at the first position where
    the elements meeting segment i but no earlier segment form a family
    of order k (extending a segment by one vertex raises that order by at
    most one, so the first order >= k is exactly k). Raises
    InsufficientOrderError when the path is exhausted early, which is
    precisely the failure of the order >= k*l precondition.
    """
    p = require_path(g, p)
    if k < 1 or l < 1:
        raise PreconditionError("k and l must be at least 1")
    missed = [el for el in b.elements if not (el & set(p))]
    if missed:
        raise GraphError(f"path misses {len(missed)} bramble elements")

    alive = list(b.elements)
    segments = []
    t_prev = 0
    for i in range(l):
        found = None
        for t in range(t_prev + 1, len(p) + 1):
            window = set(p[t_prev:t])
            family = [el for el in alive if el & window]
            if family_order_at_least(family, k):
                found = t
                break
        if found is None:
            raise InsufficientOrderError(
                f"only {i} of {l} segments of order {k} fit; "
                f"the bramble order is below {k * l}",
                placed=i,
            )
        window = set(p[t_prev:found])
        segments.append(tuple(p[t_prev:found]))
        alive = [el for el in alive if not (el & window)]
        t_prev = found
    return segments


# ---------------------------------------------------------------------------
# Disjoint paths between two vertex sets (Menger via max flow)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DisjointPathsResult:
    """Either k fully disjoint paths, or a separating cut of size < k."""

    paths: tuple | None
    cut: frozenset | None


class _MinCostFlow:
    """Successive-shortest-path min-cost flow on a small residual network."""

    def __init__(self, n: int):
        self.n = n
        self.adj = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: int, cost: int):
        self.adj[u].append([v, cap, cost, len(self.adj[v])])
        self.adj[v].append([u, 0, -cost, len(self.adj[u]) - 1])

    def augment_unit(self, s: int, t: int) -> bool:
        """Push one unit along a cheapest residual s-t path (SPFA)."""
        INF = 1 << 60
        dist = [INF] * self.n
        prev = [None] * self.n
        dist[s] = 0
        inq = [False] * self.n
        queue = deque([s])
        inq[s] = True
        while queue:
            u = queue.popleft()
            inq[u] = False
            for idx, arc in enumerate(self.adj[u]):
                v, cap, cost, _ = arc
                if cap > 0 and dist[u] + cost < dist[v]:
                    dist[v] = dist[u] + cost
                    prev[v] = (u, idx)
                    if not inq[v]:
                        queue.append(v)
                        inq[v] = True
        if dist[t] >= INF:
            return False
        v = t
        while v != s:
            u, idx = prev[v]
            arc = self.adj[u][idx]
            arc[1] -= 1
            self.adj[v][arc[3]][1] += 1
            v = u
        return True

    def reachable(self, s: int) -> set:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v, cap, _, _ in self.adj[u]:
                if cap > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def vertex_disjoint_paths(g: Graph, a, b, k: int,
                          avoid_cost=None) -> DisjointPathsResult:
    """k pairwise vertex-disjoint a-b paths, or a small separating cut.

    Unit-capacity vertex-split max flow: every vertex can carry at most
    one path, so the flow value equals the maximum number of fully
    disjoint paths (Menger). Each path is trimmed so that exactly its
    first vertex lies in `a`, exactly its last in `b`, and no interior
    vertex is in either set. The optional `avoid_cost` map biases the
    routing away from given vertices without forbidding them. When fewer
    than k paths exist, the result instead carries a vertex cut of size
    < k separating a from b.
    """
    a = set(a)
    b = set(b)
    if not a or not b or (a & b):
        raise PreconditionError("endpoint sets must be non-empty and disjoint")
    if k == 0:
        return DisjointPathsResult((), None)
    cost = avoid_cost or {}
    weight = 1_000_000

    def v_in(v):
        return 2 * v

    def v_out(v):
        return 2 * v + 1

    # Only the vertex-split arcs have capacity 1, so any finite cut is a
    # set of vertices; routing cost lives on the split arcs too.
    big = g.n + 1
    net = _MinCostFlow(2 * g.n + 2)
    source, sink = 2 * g.n, 2 * g.n + 1

    def flow_on(u, idx):
        arc = net.adj[u][idx]
        return net.adj[arc[0]][arc[3]][1]

    def add(u, v, cap, c=0):
        net.add(u, v, cap, c)
        return u, len(net.adj[u]) - 1

    adj_handles = []
    for v in g.vertices:
        add(v_in(v), v_out(v), 1, 1 + weight * cost.get(v, 0))
    for u, v in g.edges:
        adj_handles.append((u, v, add(v_out(u), v_in(v), big)))
        adj_handles.append((v, u, add(v_out(v), v_in(u), big)))
    source_handles = [(v, add(source, v_in(v), big)) for v in sorted(a)]
    for v in sorted(b):
        add(v_out(v), sink, big)

    flow = 0
    while flow < k and net.augment_unit(source, sink):
        flow += 1
    if flow < k:
        reach = net.reachable(source)
        cut = frozenset(v for v in g.vertices
                        if v_in(v) in reach and v_out(v) not in reach)
        return DisjointPathsResult(None, cut)

    # Decode the k unit paths. Each vertex carries at most one unit, so
    # every vertex has at most one flow-carrying outgoing adjacency arc.
    nxt = {}
    for u, v, (node, idx) in adj_handles:
        if flow_on(node, idx) > 0:
            nxt[u] = v
    trimmed = []
    for v, (node, idx) in source_handles:
        if flow_on(node, idx) == 0:
            continue
        walk = [v]
        while walk[-1] in nxt:
            walk.append(nxt[walk[-1]])
        if walk[-1] not in b:
            raise AssertionError("flow decoding lost a path endpoint")
        last_a = max(i for i, w in enumerate(walk) if w in a)
        first_b = min(i for i, w in enumerate(walk) if i >= last_a and w in b)
        trimmed.append(tuple(walk[last_a:first_b + 1]))
    trimmed.sort()
    return DisjointPathsResult(tuple(trimmed), None)


def many_paths(g: Graph, b: Bramble, k: int, l: int) -> PathSystem:
    """Spines plus pairwise disjoint link families, fully verified.

    Pipeline: hitting path, segmentation into l segments of private order
    k, then for every pair of segments k disjoint connecting paths. A
    bramble of order >= k*l guarantees every stage; a Menger shortfall on
    such input is impossible, so it raises LemmaViolationError carrying
    the offending cut.
    """
    path = hitting_path(g, b)
    spines = segment_path(g, b, path, k, l)
    links = {}
    for i in range(l):
        for j in range(i + 1, l):
            res = vertex_disjoint_paths(g, set(spines[i]), set(spines[j]), k)
            if res.paths is None:
                raise LemmaViolationError(
                    f"Menger shortfall between segments {i} and {j}: "
                    f"cut {sorted(res.cut)} of size {len(res.cut)} < {k}",
                    witness=res.cut,
                )
            links[(i, j)] = res.paths
    ps = PathSystem(tuple(spines), links, k, l)
    reasons = check_path_system(g, ps)
    if reasons:
        raise AssertionError("path system invariants broken: " + "; ".join(reasons))
    return ps
