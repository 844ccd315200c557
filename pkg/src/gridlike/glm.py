"""Grid-like minors: verification, canonical examples, and extraction.

A grid-like minor of order l in a host graph is a set of paths whose
intersection graph (one vertex per path, edges between intersecting
paths) is bipartite and carries a K_l minor model. The rows and columns
of an l x l grid are the motivating example: their intersection graph is
K_{l,l}, which contains K_{l+1}.

Extraction composes the bramble machinery: a path system from a bramble
of order k*l, then either a dense pair of link families already encodes
a complete minor (early exit), or one link per spine pair is picked by
resampling so that spines plus picked links intersect like the
1-subdivision of K_l.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .brambles import Bramble, check_bramble
from .errors import GraphError, PreconditionError, TransversalExhaustedError
from .generators import complete_graph, grid_graph
from .graphs import Graph, degeneracy, is_path, max_clique_at_least
from .minors import (DegeneracyBound, MinorModel, check_minor_model,
                     find_minor_dense)
from .pathsystems import many_paths
from .transversals import ColouredGraph, default_max_rounds, resample_transversal


def intersection_graph(g: Graph, paths) -> Graph:
    """One vertex per path; an edge wherever two paths share a host vertex."""
    sets = []
    for p in paths:
        if not is_path(g, p):
            raise GraphError(f"invalid path {tuple(p)}")
        sets.append(set(p))
    edges = [(i, j) for i in range(len(sets)) for j in range(i + 1, len(sets))
             if sets[i] & sets[j]]
    return Graph(len(sets), edges)


@dataclass(frozen=True)
class GridLikeMinor:
    """Paths in a host, a bipartition of their intersection graph, and a
    complete-minor model inside that intersection graph."""

    host: Graph
    paths: tuple
    side_a: frozenset
    side_b: frozenset
    model: MinorModel

    def __init__(self, host, paths, side_a, side_b, model):
        paths = tuple(tuple(p) for p in paths)
        side_a = frozenset(side_a)
        side_b = frozenset(side_b)
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "paths", paths)
        object.__setattr__(self, "side_a", side_a)
        object.__setattr__(self, "side_b", side_b)
        object.__setattr__(self, "model", model)

    @property
    def order(self) -> int:
        return self.model.pattern.n


def check_glm(glm: GridLikeMinor) -> list[str]:
    """Names of violated grid-like-minor invariants (empty list = valid)."""
    reasons = []
    for i, p in enumerate(glm.paths):
        if not is_path(glm.host, p):
            reasons.append(f"path {i} is not a path in the host")
    if reasons:
        return reasons
    igraph = intersection_graph(glm.host, glm.paths)
    ids = set(range(len(glm.paths)))
    if (glm.side_a | glm.side_b) != ids or (glm.side_a & glm.side_b):
        reasons.append("sides do not bipartition the path indices")
        return reasons
    for u, v in igraph.edges:
        if (u in glm.side_a) == (v in glm.side_a):
            reasons.append(f"intersecting paths {u},{v} on the same side")
    l = glm.model.pattern.n
    if glm.model.pattern != complete_graph(l):
        reasons.append("model pattern is not a complete graph")
    if glm.model.host != igraph:
        reasons.append("model host differs from the intersection graph")
    else:
        reasons.extend("model: " + r for r in check_minor_model(glm.model))
    return reasons


def verify_glm(glm: GridLikeMinor) -> bool:
    return not check_glm(glm)


def is_one_subdivision_of_complete(glm: GridLikeMinor) -> bool:
    """True iff the intersection graph is exactly the 1-subdivision of K_l
    with spines on side A and one degree-2 link per spine pair on side B."""
    igraph = intersection_graph(glm.host, glm.paths)
    l = glm.order
    spines = sorted(glm.side_a)
    links = sorted(glm.side_b)
    if len(spines) != l or len(links) != l * (l - 1) // 2:
        return False
    if any(igraph.has_edge(u, v) for u in spines for v in spines if u < v):
        return False
    seen_pairs = set()
    for q in links:
        touched = tuple(sorted(s for s in spines if igraph.has_edge(q, s)))
        if len(touched) != 2 or igraph.degree(q) != 2:
            return False
        if touched in seen_pairs:
            return False
        seen_pairs.add(touched)
    return len(seen_pairs) == l * (l - 1) // 2


def grid_rows_columns_glm(l: int) -> GridLikeMinor:
    """Rows and columns of the l x l grid as a grid-like minor of order l+1.

    Their intersection graph is K_{l,l}; contracting a matching of l-1
    row-column pairs leaves a K_{l+1} model.
    """
    if l < 2:
        raise PreconditionError("need l >= 2")
    g = grid_graph(l, l)
    rows = [tuple(r * l + c for c in range(l)) for r in range(l)]
    cols = [tuple(r * l + c for r in range(l)) for c in range(l)]
    paths = rows + cols
    igraph = intersection_graph(g, paths)
    branch_sets = [frozenset({i, l + i}) for i in range(l - 1)]
    branch_sets.append(frozenset({l - 1}))
    branch_sets.append(frozenset({2 * l - 1}))
    model = MinorModel(complete_graph(l + 1), igraph, branch_sets)
    glm = GridLikeMinor(g, paths, frozenset(range(l)),
                        frozenset(range(l, 2 * l)), model)
    bad = check_glm(glm)
    if bad:
        raise AssertionError("canonical grid construction broke: " + "; ".join(bad))
    return glm


def k_threshold(l: int, bound: DegeneracyBound) -> int:
    """Links per spine pair needed for the guaranteed pipeline:
    ceil(2e(2*C(l,2) - 3) * d(l)). Undefined below l = 3, where the
    dependency count goes negative."""
    if l < 3:
        raise PreconditionError("k threshold defined for l >= 3 only")
    pairs = l * (l - 1) // 2
    return math.ceil(2 * math.e * (2 * pairs - 3) * bound.d(l))


def _glm_from_dense_pair(g: Graph, family_a, family_b, l: int,
                         bound: DegeneracyBound) -> GridLikeMinor:
    """Early-exit assembly: two link families whose mutual intersection
    graph is denser than d(l) already contain a K_l minor model."""
    paths = tuple(family_a) + tuple(family_b)
    igraph = intersection_graph(g, paths)
    model = find_minor_dense(igraph, l, bound)
    glm = GridLikeMinor(g, paths, frozenset(range(len(family_a))),
                        frozenset(range(len(family_a), len(paths))), model)
    bad = check_glm(glm)
    if bad:
        raise AssertionError("dense-pair assembly broke: " + "; ".join(bad))
    return glm


def find_glm(g: Graph, l: int, b: Bramble, bound: DegeneracyBound | None = None,
             k_override: int | None = None, seed: int = 0,
             max_rounds: int | None = None) -> GridLikeMinor:
    """Extract a grid-like minor of order l from a bramble of order >= k*l.

    Pipeline: (1) build the path system (l spines, k links per pair);
    (2) for every two link families test whether their mutual
    intersection graph is denser than d(l); if so it contains a K_l
    minor, and those two families alone are the answer; (3) otherwise
    every such graph is d(l)-degenerate, which is exactly the local-lemma
    hypothesis, so resampling picks one link per family with all picks
    pairwise disjoint; (4) spines plus picks form the answer, with the
    canonical model (branch i = spine i plus its higher links).

    k defaults to k_threshold(l, bound), the value making step (3) a
    guarantee; k_override allows desk-scale runs where the guarantee is
    waived but every output is still verified. The class-size hypothesis
    is deliberately not enforced here for that reason. Raises
    InsufficientOrderError (bramble too small), FallbackFailedError
    (step 2 extraction failed), or TransversalExhaustedError (retry with
    a new seed).
    """
    bound = bound or DegeneracyBound.mader()
    if l < 2:
        raise PreconditionError("grid-like minors need order >= 2")
    if k_override is None:
        k = k_threshold(l, bound)
    else:
        if k_override < 1:
            raise PreconditionError("k must be at least 1")
        k = k_override
    bad = check_bramble(g, b.elements)
    if bad:
        raise GraphError("invalid bramble: " + "; ".join(bad))

    ps = many_paths(g, b, k, l)
    pairs = sorted(ps.links)
    d_bound = bound.d(l)

    for x in range(len(pairs)):
        for y in range(x + 1, len(pairs)):
            fam_a, fam_b = ps.links[pairs[x]], ps.links[pairs[y]]
            pair_graph = intersection_graph(g, fam_a + fam_b)
            if degeneracy(pair_graph)[0] > d_bound:
                return _glm_from_dense_pair(g, fam_a, fam_b, l, bound)

    # Transversal branch: one vertex per family in the conflict graph of
    # all links. Families are internally disjoint, so classes are
    # independent and the colouring is proper.
    all_links = [q for pair in pairs for q in ps.links[pair]]
    conflict = intersection_graph(g, all_links)
    classes = []
    at = 0
    for pair in pairs:
        classes.append(list(range(at, at + len(ps.links[pair]))))
        at += len(ps.links[pair])
    cg = ColouredGraph(conflict, classes)
    if max_rounds is None:
        max_rounds = default_max_rounds(conflict)
    chosen, rounds = resample_transversal(cg, seed, max_rounds)
    if chosen is None:
        raise TransversalExhaustedError(
            f"no disjoint link selection after {rounds} resampling rounds; "
            "retry with a new seed", rounds=rounds)
    picked = {pair: all_links[chosen[idx]] for idx, pair in enumerate(pairs)}

    paths = list(ps.spines) + [picked[pair] for pair in pairs]
    side_a = frozenset(range(l))
    side_b = frozenset(range(l, len(paths)))
    igraph = intersection_graph(g, paths)
    branch_sets = []
    for i in range(l):
        bs = {i}
        for idx, (p, q) in enumerate(pairs):
            if p == i:
                bs.add(l + idx)
        branch_sets.append(frozenset(bs))
    model = MinorModel(complete_graph(l), igraph, branch_sets)
    glm = GridLikeMinor(g, paths, side_a, side_b, model)
    bad = check_glm(glm)
    if bad:
        raise AssertionError("pipeline output invalid: " + "; ".join(bad))
    return glm


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Bramble built from a grid-like minor, certifying treewidth >=
    ceil(l/r) - 1 because no vertex lies in more than r elements."""

    bramble: Bramble
    clique_bound: int
    treewidth_bound: int


def lower_bound_bramble(glm: GridLikeMinor, r: int = 2) -> LowerBoundCertificate:
    """Turn a grid-like minor into a treewidth-certifying bramble.

    Each branch set of the model, read as a set of paths, unions into a
    connected subgraph of the host; any two of them meet in a host
    vertex. Since the intersection graph has no K_{r+1} (for bipartite
    graphs r = 2 always works), a host vertex lies in at most r elements,
    so every hitting set needs at least ceil(l/r) vertices.
    """
    if r < 1:
        raise PreconditionError("clique bound must be at least 1")
    bad = check_glm(glm)
    if bad:
        raise GraphError("invalid grid-like minor: " + "; ".join(bad))
    igraph = glm.model.host
    witness = max_clique_at_least(igraph, r + 1)
    if witness is not None:
        raise PreconditionError(
            f"intersection graph has a K_{r + 1} subgraph: {witness}")
    elements = []
    for bs in glm.model.branch_sets:
        union = set()
        for idx in bs:
            union |= set(glm.paths[idx])
        elements.append(frozenset(union))
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not (elements[i] & elements[j]):
                raise AssertionError(
                    f"derived bramble elements {i},{j} share no vertex")
    bad = check_bramble(glm.host, elements)
    if bad:
        raise AssertionError("derived bramble invalid: " + "; ".join(bad))
    for v in glm.host.vertices:
        count = sum(1 for el in elements if v in el)
        if count > r:
            raise AssertionError(f"vertex {v} lies in {count} > {r} elements")
    l = glm.order
    return LowerBoundCertificate(Bramble(glm.host, elements), r,
                                 math.ceil(l / r) - 1)
