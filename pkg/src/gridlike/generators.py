"""Constructors for the small-graph test corpus and random instances.

Everything random is driven by an explicit seed so generated objects are
reproducible byte for byte.
"""

from __future__ import annotations

import random

from .graphs import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows: int, cols: int | None = None) -> Graph:
    """rows x cols grid; vertex (r, c) gets index r*cols + c."""
    if cols is None:
        cols = rows
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def hypercube(dim: int) -> Graph:
    n = 1 << dim
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(dim) if v < v ^ (1 << b)]
    return Graph(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def one_subdivision(g: Graph) -> Graph:
    """Replace every edge uv by a length-2 path u-x_e-v.

    Original vertices keep their indices; the vertex subdividing the i-th
    edge of g gets index g.n + i.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges):
        x = g.n + i
        edges.append((u, x))
        edges.append((v, x))
    return Graph(g.n + len(g.edges), edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) plus a random spanning tree, so the result is connected."""
    rng = random.Random(seed)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    order = list(range(n))
    rng.shuffle(order)
    for prev, v in zip(order, order[1:]):
        u = rng.choice(order[:order.index(v)]) if rng.random() < 0.3 else prev
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, sorted(edges))


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def random_degenerate_coloured(r: int, d: int, sizes, seed: int):
    """Random r-coloured graph whose bichromatic pairs are all d-degenerate.

    For every pair of classes the bipartite subgraph is built by inserting
    its vertices in random order, wiring each new vertex to at most d
    already-present vertices of the opposite class. That construction is
    d-degenerate by the insertion order itself.

    Returns (n, edges, classes) with classes as lists of vertex indices.
    """
    if isinstance(sizes, int):
        sizes = [sizes] * r
    if len(sizes) != r:
        raise ValueError("need one size per class")
    rng = random.Random(seed)
    classes = []
    start = 0
    for s in sizes:
        classes.append(list(range(start, start + s)))
        start += s
    edges = set()
    for i in range(r):
        for j in range(i + 1, r):
            order = classes[i] + classes[j]
            rng.shuffle(order)
            left = set(classes[i])
            side = {v: (0 if v in left else 1) for v in order}
            placed = {0: [], 1: []}
            for v in order:
                other = placed[1 - side[v]]
                if other and d > 0:
                    cnt = rng.randint(0, min(d, len(other)))
                    for w in rng.sample(other, cnt):
                        edges.add((v, w) if v < w else (w, v))
                placed[side[v]].append(v)
    return start, sorted(edges), classes
