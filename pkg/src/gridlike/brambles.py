"""Brambles, bramble order via minimum hitting sets, and exact treewidth.

A bramble is a family of connected vertex sets that pairwise touch
(intersect, or are joined by an edge). Its order is the minimum size of a
vertex set hitting every element. By treewidth duality, a bramble of
order k+1 certifies treewidth at least k, and the exact small-graph
treewidth routine here is the independent oracle for that inequality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError, SizeLimitError
from .generators import grid_graph
from .graphs import Graph, is_connected_set


@dataclass(frozen=True)
class Bramble:
    """Host graph plus canonically sorted elements (frozensets of vertices)."""

    host: Graph
    elements: tuple

    def __init__(self, host: Graph, elements):
        canon = []
        seen = set()
        for el in elements:
            fs = frozenset(el)
            if fs in seen:
                raise GraphError(f"duplicate bramble element {sorted(fs)}")
            seen.add(fs)
            canon.append(fs)
        canon.sort(key=sorted)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "elements", tuple(canon))


@dataclass(frozen=True)
class OrderCertificate:
    """A hitting set of size `order`; exhaustive means proven minimum.

    When the exact search was skipped (host too large), `order` is only
    the greedy upper bound and `lower_bound` the disjoint-packing bound.
    """

    order: int
    hitting_set: frozenset
    exhaustive: bool
    lower_bound: int

    def hits_all(self, bramble: Bramble) -> bool:
        return all(self.hitting_set & el for el in bramble.elements)


def _touch(g: Graph, x: frozenset, y: frozenset) -> bool:
    if x & y:
        return True
    return any(g.has_edge(u, v) for u in x for v in y)


def check_bramble(g: Graph, elements) -> list[str]:
    """Names of violated bramble invariants (empty list = valid)."""
    elements = [frozenset(el) for el in elements]
    for el in elements:
        for v in el:
            if not 0 <= v < g.n:
                raise GraphError(f"element vertex {v} out of range")
    reasons = []
    for i, el in enumerate(elements):
        if not el:
            reasons.append(f"element {i} is empty")
        elif not is_connected_set(g, el):
            reasons.append(f"element {i} is not connected")
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not _touch(g, elements[i], elements[j]):
                reasons.append(f"elements {i} and {j} do not touch")
    return reasons


def is_bramble(g: Graph, elements) -> bool:
    return not check_bramble(g, elements)


def require_bramble(b: Bramble) -> Bramble:
    reasons = check_bramble(b.host, b.elements)
    if reasons:
        raise GraphError("invalid bramble: " + "; ".join(reasons))
    return b


# ---------------------------------------------------------------------------
# Minimum hitting set machinery (shared by bramble_order and sub-bramble
# order decisions). Branch and bound: branch over the vertices of a
# smallest uncovered element, prune with a greedy upper bound and a
# disjoint-element packing lower bound.
# ---------------------------------------------------------------------------


def greedy_hitting_set(elements) -> frozenset:
    elements = [frozenset(el) for el in elements]
    unhit = [el for el in elements if el]
    chosen = set()
    while unhit:
        counts = {}
        for el in unhit:
            for v in el:
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        chosen.add(v)
        unhit = [el for el in unhit if v not in el]
    return frozenset(chosen)


def packing_lower_bound(elements) -> int:
    """Size of a greedy family of pairwise disjoint elements."""
    taken = []
    for el in sorted((frozenset(e) for e in elements), key=lambda e: (len(e), sorted(e))):
        if all(not (el & t) for t in taken):
            taken.append(el)
    return len(taken)


def minimum_hitting_set(elements, cap: int | None = None):
    """Exact minimum hitting set, or the best one of size <= cap.

    Returns a frozenset, or None when cap is given and no hitting set of
    size <= cap exists. With cap=None the result is the true minimum.
    """
    elements = [frozenset(el) for el in elements]
    if any(not el for el in elements):
        raise GraphError("cannot hit an empty element")
    if not elements:
        return frozenset()
    greedy = greedy_hitting_set(elements)
    if cap is not None and len(greedy) > cap:
        best, limit = None, cap
    else:
        best, limit = greedy, len(greedy) - 1
        if cap is not None:
            limit = min(limit, cap)

    def search(chosen, unhit, limit, best):
        if not unhit:
            return frozenset(chosen), len(chosen) - 1
        if len(chosen) + packing_lower_bound(unhit) > limit:
            return best, limit
        target = min(unhit, key=lambda e: (len(e), sorted(e)))
        for v in sorted(target):
            chosen.append(v)
            rest = [el for el in unhit if v not in el]
            best, limit = search(chosen, rest, limit, best)
            chosen.pop()
        return best, limit

    found, _ = search([], elements, limit, best)
    return found


def hitting_set_at_most(elements, size: int) -> bool:
    """Decide: does a hitting set of size <= `size` exist?"""
    return minimum_hitting_set(elements, cap=size) is not None


def family_order_at_least(elements, k: int) -> bool:
    """Decide order(elements) >= k without computing the order exactly."""
    if k <= 0:
        return True
    return not hitting_set_at_most(elements, k - 1)


def bramble_order(b: Bramble, exact_limit: int = 16) -> OrderCertificate:
    """Order certificate for a bramble.

    Exhaustive branch-and-bound when the host has at most `exact_limit`
    vertices; otherwise only the greedy upper bound and the packing lower
    bound are reported and the exhaustive flag stays unset.
    """
    elements = list(b.elements)
    if not elements:
        return OrderCertificate(0, frozenset(), True, 0)
    greedy = greedy_hitting_set(elements)
    lower = packing_lower_bound(elements)
    if b.host.n > exact_limit and len(greedy) > lower:
        return OrderCertificate(len(greedy), greedy, False, lower)
    best = minimum_hitting_set(elements)
    cert = OrderCertificate(len(best), best, True, max(lower, len(best)))
    if not cert.hits_all(b):
        raise AssertionError("hitting set search returned a non-hitting set")
    return cert


def crosses_bramble(side: int) -> Bramble:
    """The crosses (row plus column) of the side x side grid.

    The canonical bramble of order `side`: any two crosses meet, each
    cross is connected, and no set of fewer than `side` vertices hits
    every cross.
    """
    if side < 1:
        raise GraphError("grid side must be at least 1")
    g = grid_graph(side, side)
    elements = []
    for r in range(side):
        for c in range(side):
            cross = {r * side + cc for cc in range(side)}
            cross |= {rr * side + c for rr in range(side)}
            elements.append(cross)
    return Bramble(g, elements)


# ---------------------------------------------------------------------------
# Exact treewidth for small graphs: dynamic programming over subsets of
# vertices, minimising the maximum "fill degree" along an elimination
# order. dp[S] is the best width achievable when S is eliminated first.
# ---------------------------------------------------------------------------


def treewidth_exact(g: Graph, limit: int = 16) -> int:
    """Exact treewidth; exponential, gated at `limit` vertices."""
    n = g.n
    if n > limit:
        raise SizeLimitError(f"treewidth_exact gated at {limit} vertices, got {n}")
    if n == 0:
        return -1
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    def q_size(eliminated: int, v: int) -> int:
        # Vertices outside `eliminated`+{v} reachable from v through
        # eliminated vertices only; their count is v's fill degree.
        comp = 1 << v
        nbrs = adj[v]
        while True:
            grow = nbrs & eliminated & ~comp
            if not grow:
                break
            comp |= grow
            t = grow
            while t:
                b = t & -t
                nbrs |= adj[b.bit_length() - 1]
                t ^= b
        return bin(nbrs & ~eliminated & ~(1 << v)).count("1")

    full = (1 << n) - 1
    INF = n + 1
    dp = [INF] * (full + 1)
    dp[0] = -1
    for s in range(1, full + 1):
        best = INF
        t = s
        while t:
            b = t & -t
            t ^= b
            prev = dp[s ^ b]
            if prev >= best:
                continue
            q = q_size(s ^ b, b.bit_length() - 1)
            val = prev if prev > q else q
            if val < best:
                best = val
        dp[s] = best
    return dp[full]
