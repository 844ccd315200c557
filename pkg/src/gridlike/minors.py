"""Minor models: verification, exact search, and extraction from dense graphs.

A model of a pattern H in a host G assigns to every pattern vertex a
non-empty, connected branch set in G; branch sets are pairwise disjoint
and every pattern edge is realised by a host edge between the two branch
sets. Verification is polynomial; searching is not, so the exact search
carries an explicit node budget and says whether it completed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FallbackFailedError, FormatError, PreconditionError
from .graphs import Graph, degeneracy, is_connected_set, max_clique_at_least
from .generators import complete_graph


@dataclass(frozen=True)
class MinorModel:
    pattern: Graph
    host: Graph
    branch_sets: tuple

    def __init__(self, pattern: Graph, host: Graph, branch_sets):
        sets = tuple(frozenset(bs) for bs in branch_sets)
        if len(sets) != pattern.n:
            raise FormatError(
                f"structural mismatch: {len(sets)} branch sets for a "
                f"{pattern.n}-vertex pattern"
            )
        for bs in sets:
            for v in bs:
                if not 0 <= v < host.n:
                    raise FormatError(f"branch set vertex {v} outside host")
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "branch_sets", sets)


def check_minor_model(m: MinorModel) -> list[str]:
    """Names of violated model invariants (empty list = valid model)."""
    reasons = []
    sets = m.branch_sets
    for i, bs in enumerate(sets):
        if not bs:
            reasons.append(f"branch set {i} is empty")
        elif not is_connected_set(m.host, bs):
            reasons.append(f"branch set {i} is not connected")
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                reasons.append(f"branch sets {i} and {j} overlap")
    for u, v in m.pattern.edges:
        if not any(m.host.has_edge(a, b) for a in sets[u] for b in sets[v]):
            reasons.append(f"pattern edge ({u},{v}) is not realised")
    return reasons


def verify_minor_model(m: MinorModel) -> bool:
    return not check_minor_model(m)


class DegeneracyBound:
    """A bound d(l) such that every graph with no K_l-minor is d(l)-degenerate.

    Three flavours: Mader's classical 2^(l-2); the Kostochka/Thomason
    asymptotic c*l*sqrt(ln l) with a caller-supplied constant (the sharp
    constant is not pinned down, so it is a parameter); or an explicit
    integer supplied by the caller. Defined for l >= 2 and monotone
    non-decreasing.
    """

    def __init__(self, kind: str, value=None):
        self.kind = kind
        self.value = value

    @classmethod
    def mader(cls) -> "DegeneracyBound":
        return cls("mader")

    @classmethod
    def scaled(cls, c: float) -> "DegeneracyBound":
        if c <= 0:
            raise ValueError("scale constant must be positive")
        return cls("scaled", float(c))

    @classmethod
    def explicit(cls, d: int) -> "DegeneracyBound":
        if d < 1:
            raise ValueError("explicit bound must be at least 1")
        return cls("explicit", int(d))

    @classmethod
    def parse(cls, text: str) -> "DegeneracyBound":
        text = text.strip()
        if text == "mader":
            return cls.mader()
        if text.startswith("c:"):
            return cls.scaled(float(text[2:]))
        try:
            return cls.explicit(int(text))
        except ValueError:
            raise FormatError(f"cannot parse degeneracy bound {text!r}") from None

    def d(self, l: int) -> int:
        if l < 2:
            raise ValueError("bound defined for l >= 2")
        if self.kind == "mader":
            return 2 ** (l - 2)
        if self.kind == "scaled":
            return max(1, math.ceil(self.value * l * math.sqrt(math.log(l))))
        return self.value

    def __repr__(self):
        if self.kind == "mader":
            return "DegeneracyBound.mader()"
        return f"DegeneracyBound.{self.kind}({self.value})"


@dataclass
class MinorSearchResult:
    """Outcome of the exact search.

    complete=True with model=None is a proof of non-existence; with
    complete=False the budget ran out and nothing is known either way.
    """

    model: MinorModel | None
    complete: bool
    nodes: int = 0


class _Budget(Exception):
    pass


def find_minor_exact(g: Graph, l: int, budget: int = 200_000) -> MinorSearchResult:
    """Exhaustive K_l-minor search by edge contractions.

    A graph has a K_l minor iff it has an l-clique or some single edge
    contraction does. States are partitions of the host into connected
    parts; memoisation collapses different contraction orders reaching
    the same partition, and a node budget caps the walk.
    """
    if l < 1:
        raise PreconditionError("pattern order must be at least 1")
    counter = {"nodes": 0}
    memo = set()
    need_edges = l * (l - 1) // 2

    def quotient_edges(parts):
        hit = set()
        owner = {}
        for i, p in enumerate(parts):
            for v in p:
                owner[v] = i
        for u, v in g.edges:
            a, b = owner[u], owner[v]
            if a != b:
                hit.add((a, b) if a < b else (b, a))
        return hit

    def find_clique(parts, qedges):
        adj = {i: set() for i in range(len(parts))}
        for a, b in qedges:
            adj[a].add(b)
            adj[b].add(a)
        cand = sorted((i for i in adj if len(adj[i]) >= l - 1),
                      key=lambda i: (-len(adj[i]), i))

        def extend(clique, pool):
            if len(clique) == l:
                return list(clique)
            for idx, c in enumerate(pool):
                if len(pool) - idx < l - len(clique):
                    return None
                got = extend(clique + [c], [x for x in pool[idx + 1:] if x in adj[c]])
                if got is not None:
                    return got
            return None

        return extend([], cand)

    def search(parts):
        counter["nodes"] += 1
        if counter["nodes"] > budget:
            raise _Budget
        if len(parts) < l:
            return None
        key = frozenset(parts)
        if key in memo:
            return None
        qedges = quotient_edges(parts)
        if len(qedges) >= need_edges:
            deg = {}
            for a, b in qedges:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if sum(1 for x in deg.values() if x >= l - 1) >= l:
                clique = find_clique(parts, qedges)
                if clique is not None:
                    return [parts[i] for i in clique]
            if len(parts) > l:
                for a, b in sorted(qedges):
                    merged = parts[a] | parts[b]
                    rest = [p for i, p in enumerate(parts) if i not in (a, b)]
                    rest.append(merged)
                    rest.sort(key=sorted)
                    got = search(tuple(rest))
                    if got is not None:
                        return got
        memo.add(key)
        return None

    if g.n < l:
        return MinorSearchResult(None, True, 1)
    if l == 1:
        model = MinorModel(complete_graph(1), g, [frozenset({0})])
        return MinorSearchResult(model, True, 1)
    start = tuple(sorted((frozenset({v}) for v in g.vertices), key=sorted))
    try:
        found = search(start)
        complete = True
    except _Budget:
        found = None
        complete = False
    if found is None:
        return MinorSearchResult(None, complete, counter["nodes"])
    model = MinorModel(complete_graph(l), g, found)
    bad = check_minor_model(model)
    if bad:
        raise AssertionError("exact search produced an invalid model: " + "; ".join(bad))
    return MinorSearchResult(model, True, counter["nodes"])


def _max_core(g: Graph, within) -> set:
    """Vertices of the d-core of g[within], d = degeneracy of g[within]."""
    alive = set(within)
    deg = {v: sum(1 for w in g.neighbors(v) if w in alive) for v in alive}
    best_core = set(alive)
    d = 0
    order = []
    work = dict(deg)
    pool = set(alive)
    while pool:
        v = min(pool, key=lambda u: (work[u], u))
        if work[v] > d:
            d = work[v]
            best_core = set(pool)
        order.append(v)
        pool.discard(v)
        for w in g.neighbors(v):
            if w in pool:
                work[w] -= 1
    return best_core


def find_minor_dense(g: Graph, l: int, bound: DegeneracyBound,
                     exact_budget: int = 200_000) -> MinorModel:
    """Extract a K_l model from a graph denser than the degeneracy bound.

    Requires degeneracy(g) > bound.d(l); that inequality guarantees a
    K_l minor exists whenever the bound is valid for l. Strategy: keep a
    quotient of g, repeatedly contract an edge inside the densest core
    (the endpoints sharing the most quotient neighbours, ties smallest),
    checking for an l-clique of parts after every step. Falls back to
    find_minor_exact, and raises FallbackFailedError if that also fails.
    """
    d, _ = degeneracy(g)
    if d <= bound.d(l):
        raise PreconditionError(
            f"degeneracy {d} does not exceed bound d({l}) = {bound.d(l)}"
        )

    parts = [frozenset({v}) for v in g.vertices]

    def quotient() -> Graph:
        owner = {}
        for i, p in enumerate(parts):
            for v in p:
                owner[v] = i
        edges = set()
        for u, v in g.edges:
            a, b = owner[u], owner[v]
            if a != b:
                edges.add((a, b) if a < b else (b, a))
        return Graph(len(parts), sorted(edges))

    while len(parts) >= l:
        q = quotient()
        clique = max_clique_at_least(q, l)
        if clique is not None:
            model = MinorModel(complete_graph(l), g, [parts[i] for i in clique])
            bad = check_minor_model(model)
            if bad:
                raise AssertionError("dense extraction broke: " + "; ".join(bad))
            return model
        core = _max_core(q, q.vertices)
        candidates = [(u, v) for u, v in q.edges if u in core and v in core]
        if not candidates:
            candidates = list(q.edges)
        if not candidates:
            break

        def common(uv):
            u, v = uv
            return len(set(q.neighbors(u)) & set(q.neighbors(v)))

        u, v = min(candidates, key=lambda e: (-common(e), e))
        merged = parts[u] | parts[v]
        parts = [p for i, p in enumerate(parts) if i not in (u, v)]
        parts.append(merged)
        parts.sort(key=sorted)

    result = find_minor_exact(g, l, budget=exact_budget)
    if result.model is not None:
        return result.model
    raise FallbackFailedError(
        f"no K_{l} model found (exact search "
        f"{'completed' if result.complete else 'hit its budget'})"
    )
