"""Cartesian products with complete graphs and minor transfer.

G box K_q is q copies of G plus, for every vertex, a clique across the
copies. Copy c of vertex v gets index c*n + v; certificates depend on
that numbering, so it is fixed. The payoff: a grid-like minor in G turns
into a complete-minor model in G box K_2 by contracting side-A paths in
copy 0 and side-B paths in copy 1, and more generally the intersection
graph of any properly coloured family of connected subgraphs embeds as a
minor of G box K_(number of colours).
"""

from __future__ import annotations

from .errors import GraphError, PreconditionError
from .glm import GridLikeMinor, check_glm
from .graphs import Graph, is_connected_set
from .minors import MinorModel, check_minor_model


def cartesian_k2(g: Graph) -> Graph:
    """Two copies of g plus a perfect matching: copy-0 v -> v, copy-1 v -> n+v."""
    return cartesian_kq(g, 2)


def cartesian_kq(g: Graph, q: int) -> Graph:
    """q copies of g with cliques across the copies at every vertex."""
    if q < 1:
        raise PreconditionError("need at least one copy")
    n = g.n
    edges = []
    for c in range(q):
        edges.extend((c * n + u, c * n + v) for u, v in g.edges)
    for v in range(n):
        edges.extend((c1 * n + v, c2 * n + v)
                     for c1 in range(q) for c2 in range(c1 + 1, q))
    return Graph(q * n, edges)


def _require_glm(glm: GridLikeMinor):
    bad = check_glm(glm)
    if bad:
        raise GraphError("invalid grid-like minor: " + "; ".join(bad))


def product_minor_model(g: Graph, glm: GridLikeMinor) -> MinorModel:
    """Model of the intersection graph H of glm's paths inside g box K_2.

    Side-A paths are contracted in copy 0, side-B paths in copy 1. Any
    intersecting pair shares a host vertex v, and the matching edge
    (v, n+v) realises the corresponding H-edge.
    """
    if glm.host != g:
        raise GraphError("grid-like minor lives in a different host graph")
    _require_glm(glm)
    host = cartesian_k2(g)
    n = g.n
    branch_sets = []
    for idx, p in enumerate(glm.paths):
        offset = 0 if idx in glm.side_a else n
        branch_sets.append(frozenset(offset + v for v in p))
    model = MinorModel(glm.model.host, host, branch_sets)
    bad = check_minor_model(model)
    if bad:
        raise AssertionError("product transfer broke: " + "; ".join(bad))
    return model


def product_complete_minor(g: Graph, glm: GridLikeMinor) -> MinorModel:
    """K_l model in g box K_2, l = order of the grid-like minor.

    Merges the per-path branch sets of product_minor_model along the
    glm's own K_l model: intersecting paths sit in opposite copies and
    are wired by a matching edge, so each merged set stays connected.
    """
    base = product_minor_model(g, glm)
    merged = []
    for bs in glm.model.branch_sets:
        union = set()
        for path_idx in bs:
            union |= base.branch_sets[path_idx]
        merged.append(frozenset(union))
    model = MinorModel(glm.model.pattern, base.host, merged)
    bad = check_minor_model(model)
    if bad:
        raise AssertionError("complete-minor merge broke: " + "; ".join(bad))
    return model


def greedy_colouring(g: Graph) -> list:
    """First-fit colouring in vertex order; an upper bound on chi."""
    colour = {}
    for v in g.vertices:
        used = {colour[w] for w in g.neighbors(v) if w in colour}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return [colour[v] for v in g.vertices]


def intersection_minor_in_kq_product(g: Graph, subgraphs,
                                     colouring=None) -> MinorModel:
    """Model of the intersection graph of connected subgraphs in g box K_q.

    Each subgraph is contracted inside the copy given by its colour; a
    proper colouring (intersecting subgraphs coloured differently) makes
    the branch sets disjoint, and shared vertices are wired by the
    across-copy cliques. Without a colouring, a greedy one is used; q is
    one plus the largest colour.
    """
    sets = [frozenset(s) for s in subgraphs]
    for i, s in enumerate(sets):
        if not is_connected_set(g, s):
            raise GraphError(f"subgraph {i} is not connected and non-empty")
    m = len(sets)
    iedges = [(i, j) for i in range(m) for j in range(i + 1, m) if sets[i] & sets[j]]
    igraph = Graph(m, iedges)
    if colouring is None:
        colouring = greedy_colouring(igraph)
    colouring = list(colouring)
    if len(colouring) != m or any(c < 0 for c in colouring):
        raise GraphError("need one non-negative colour per subgraph")
    for i, j in iedges:
        if colouring[i] == colouring[j]:
            raise GraphError(
                f"improper colouring: intersecting subgraphs {i},{j} share colour "
                f"{colouring[i]}")
    q = max(colouring, default=0) + 1
    host = cartesian_kq(g, q)
    n = g.n
    branch_sets = [frozenset(colouring[i] * n + v for v in sets[i])
                   for i in range(m)]
    model = MinorModel(igraph, host, branch_sets)
    bad = check_minor_model(model)
    if bad:
        raise AssertionError("kq transfer broke: " + "; ".join(bad))
    return model
