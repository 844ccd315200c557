"""Independent transversals of coloured graphs.

Given a proper colouring V_1..V_r of H, an independent transversal picks
one vertex per class so that the picks are pairwise non-adjacent. When
every bichromatic induced subgraph is d-degenerate and the classes are
large enough, the Lovasz Local Lemma guarantees one exists; the
constructive counterpart here is Moser-Tardos resampling. A min-degree
greedy variant works at a larger (polynomial) class size, and a tight
construction shows the degenerate-case threshold cannot be lowered below
d(r-1)+1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import GraphError, PreconditionError
from .graphs import Graph, degeneracy, induced_subgraph


@dataclass(frozen=True)
class ColouredGraph:
    """Graph plus colour classes; classes partition V(H) and are independent."""

    graph: Graph
    classes: tuple

    def __init__(self, graph: Graph, classes):
        canon = tuple(tuple(sorted(set(c))) for c in classes)
        flat = [v for c in canon for v in c]
        if sorted(flat) != list(graph.vertices):
            raise GraphError("classes must partition the vertex set")
        if any(not c for c in canon):
            raise GraphError("empty colour class")
        owner = {}
        for i, c in enumerate(canon):
            for v in c:
                owner[v] = i
        for u, v in graph.edges:
            if owner[u] == owner[v]:
                raise GraphError(f"edge ({u},{v}) inside colour class {owner[u]}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "classes", canon)

    @property
    def r(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict:
        return {v: i for i, c in enumerate(self.classes) for v in c}


def is_independent_transversal(cg: ColouredGraph, chosen) -> bool:
    """One vertex per class, pairwise non-adjacent."""
    chosen = tuple(chosen)
    if len(chosen) != cg.r:
        return False
    for x, cls in zip(chosen, cg.classes):
        if x not in cls:
            return False
    return not any(cg.graph.has_edge(x, y)
                   for i, x in enumerate(chosen) for y in chosen[i + 1:])


def bichromatic_subgraph(cg: ColouredGraph, i: int, j: int) -> Graph:
    sub, _ = induced_subgraph(cg.graph, set(cg.classes[i]) | set(cg.classes[j]))
    return sub


def max_bichromatic_degeneracy(cg: ColouredGraph) -> int:
    worst = 0
    for i in range(cg.r):
        for j in range(i + 1, cg.r):
            worst = max(worst, degeneracy(bichromatic_subgraph(cg, i, j))[0])
    return worst


def lll_threshold(r: int, d: int) -> int:
    """ceil(2e(2r-3)d): the class size at which resampling is guaranteed.

    With classes this large, a uniformly random pick per class makes each
    edge-violation event so unlikely, and so weakly dependent, that the
    Local Lemma applies. d = 0 means no constraints at all.
    """
    if r < 2:
        raise PreconditionError("need at least two colour classes")
    if d < 0:
        raise PreconditionError("degeneracy parameter must be non-negative")
    return math.ceil(2 * math.e * (2 * r - 3) * d)


def resample_transversal(cg: ColouredGraph, seed: int, max_rounds: int):
    """Moser-Tardos core: sample one vertex per class, then repeatedly
    resample the two classes of the lexicographically least violated
    edge. Returns (transversal tuple or None, rounds used)."""
    rng = random.Random(seed)
    owner = cg.class_of()
    chosen = [rng.choice(cls) for cls in cg.classes]

    def violated():
        current = set(chosen)
        for u, v in cg.graph.edges:
            if u in current and v in current:
                return u, v
        return None

    rounds = 0
    while True:
        bad = violated()
        if bad is None:
            assert is_independent_transversal(cg, chosen)
            return tuple(chosen), rounds
        if rounds >= max_rounds:
            return None, rounds
        i, j = sorted((owner[bad[0]], owner[bad[1]]))
        chosen[i] = rng.choice(cg.classes[i])
        chosen[j] = rng.choice(cg.classes[j])
        rounds += 1


def default_max_rounds(g: Graph) -> int:
    return max(100, 10 * len(g.edges))


def transversal_lll(cg: ColouredGraph, d: int, seed: int = 0,
                    max_rounds: int | None = None):
    """Independent transversal by resampling, under the LLL hypotheses.

    Preconditions (violations raise PreconditionError): every class has
    at least lll_threshold(r, d) vertices and every bichromatic induced
    subgraph is d-degenerate. Classes larger than the threshold are kept
    whole; extra vertices only help. Returns None only when max_rounds
    runs out, which under the hypotheses signals an unlucky run to retry,
    never non-existence.
    """
    need = lll_threshold(cg.r, d)
    for i, cls in enumerate(cg.classes):
        if len(cls) < need:
            raise PreconditionError(
                f"class {i} has {len(cls)} < {need} vertices")
    worst = max_bichromatic_degeneracy(cg)
    if worst > d:
        raise PreconditionError(
            f"a bichromatic pair has degeneracy {worst} > {d}")
    if max_rounds is None:
        max_rounds = default_max_rounds(cg.graph)
    found, _ = resample_transversal(cg, seed, max_rounds)
    return found


def transversal_greedy(cg: ColouredGraph):
    """Minimum-degree greedy transversal.

    Repeatedly takes the candidate vertex of globally minimum degree
    (ties: smallest index), fixes it for its class, and withdraws its
    class mates and neighbours from candidacy. Guaranteed to succeed when
    every class has at least r(r-1)d+1 vertices and bichromatic pairs are
    d-degenerate; on smaller instances it may return None.
    """
    owner = cg.class_of()
    candidates = set(cg.graph.vertices)
    unassigned = set(range(cg.r))
    chosen = {}
    while unassigned:
        if any(not any(owner[v] == i for v in candidates) for i in unassigned):
            return None
        deg = {v: sum(1 for w in cg.graph.neighbors(v) if w in candidates)
               for v in candidates}
        v = min(candidates, key=lambda u: (deg[u], u))
        i = owner[v]
        chosen[i] = v
        unassigned.discard(i)
        candidates = {u for u in candidates
                      if owner[u] != i and not cg.graph.has_edge(u, v)}
    out = tuple(chosen[i] for i in range(cg.r))
    assert is_independent_transversal(cg, out)
    return out


def transversal_general(cg: ColouredGraph, t, seed: int = 0,
                        max_rounds: int | None = None):
    """Transversal under the edge-load hypothesis m_i <= t * n_i.

    m_i counts edges with an endpoint in class i. While some class
    exceeds ceil(2et) vertices, delete a maximum-degree vertex of that
    class; the averaging inequality (m_i - deg v)/(n_i - 1) <= m_i/n_i
    keeps the hypothesis true and is asserted at every step. Resampling
    then runs on the trimmed instance. t = 0 forces an edgeless graph,
    where the first sample wins.
    """
    if t < 0:
        raise PreconditionError("t must be non-negative")
    g = cg.graph
    owner = cg.class_of()

    def load(alive, i):
        members = [v for v in cg.classes[i] if v in alive]
        m = sum(1 for u, v in g.edges
                if u in alive and v in alive and (owner[u] == i or owner[v] == i))
        return len(members), m

    alive = set(g.vertices)
    cap = math.ceil(2 * math.e * t)
    for i in range(cg.r):
        n_i, m_i = load(alive, i)
        if n_i < cap:
            raise PreconditionError(f"class {i}: {n_i} < ceil(2et) = {cap}")
        if m_i > t * n_i:
            raise PreconditionError(f"class {i}: m_i = {m_i} > t*n_i = {t * n_i}")

    if t > 0:
        while True:
            over = [i for i in range(cg.r) if load(alive, i)[0] > cap]
            if not over:
                break
            i = over[0]
            n_i, m_i = load(alive, i)
            members = [v for v in cg.classes[i] if v in alive]
            deg = {v: sum(1 for w in g.neighbors(v) if w in alive) for v in members}
            v = min(members, key=lambda u: (-deg[u], u))
            # the proof's monotonicity: removing a max-degree vertex does
            # not increase the edge load ratio of its class
            assert (m_i - deg[v]) * n_i <= m_i * (n_i - 1)
            alive.discard(v)

    sub, labels = induced_subgraph(g, alive)
    back = {i: v for i, v in enumerate(labels)}
    fwd = {v: i for i, v in enumerate(labels)}
    sub_classes = [[fwd[v] for v in cls if v in alive] for cls in cg.classes]
    sub_cg = ColouredGraph(sub, sub_classes)
    if max_rounds is None:
        max_rounds = default_max_rounds(sub)
    found, _ = resample_transversal(sub_cg, seed, max_rounds)
    if found is None:
        return None
    out = tuple(back[x] for x in found)
    assert is_independent_transversal(cg, out)
    return out


def counterexample_graph(r: int, d: int, n: int | None = None) -> ColouredGraph:
    """Tightness construction: d-degenerate pairs, classes of size d(r-1),
    yet no independent transversal.

    Class 1 has d(r-1) vertices split into groups of d; group i is
    completely joined to class i, so every class-1 vertex dominates some
    class and no transversal can avoid all of them. n sizes the classes
    2..r (default d(r-1)).
    """
    if r < 2 or d < 1:
        raise PreconditionError("need r >= 2 and d >= 1")
    if n is None:
        n = d * (r - 1)
    if n < 1:
        raise PreconditionError("classes need at least one vertex")
    first = list(range(d * (r - 1)))
    classes = [first]
    edges = []
    start = len(first)
    for i in range(1, r):
        cls = list(range(start, start + n))
        start += n
        classes.append(cls)
        group = first[(i - 1) * d: i * d]
        edges.extend((w, v) for w in group for v in cls)
    return ColouredGraph(Graph(start, edges), classes)
