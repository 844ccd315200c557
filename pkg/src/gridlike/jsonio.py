"""Serialisation: edge lists, DIMACS, JSON certificates, DOT export.

All JSON is emitted with sorted keys and fixed separators so identical
inputs produce byte-identical files. Parsers reject self-loops and
re-declared edges.
"""

from __future__ import annotations

import json

from .brambles import Bramble, OrderCertificate
from .errors import FormatError, GraphError
from .glm import GridLikeMinor, intersection_graph
from .graphs import Graph
from .minors import MinorModel
from .generators import complete_graph
from .pathsystems import PathSystem
from .transversals import ColouredGraph


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None


def _as_graph(doc) -> Graph:
    try:
        n = doc["n"]
        edges = [tuple(e) for e in doc["edges"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"graph object needs 'n' and 'edges': {exc}") from None
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def graph_to_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


# -- plain text graph formats -----------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Whitespace-separated 'u v' per line, 0-based; n = max vertex + 1."""
    edges = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {ln}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {ln}: non-integer endpoint") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {ln}: negative vertex")
        edges.append((u, v))
    n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def graph_to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_dimacs(text: str) -> Graph:
    """DIMACS 'p edge n m' header plus 'e u v' lines (1-based vertices)."""
    n = None
    edges = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"line {ln}: bad problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {ln}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {ln}: expected 'e u v'")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise FormatError(f"line {ln}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge' line")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def parse_graph(text: str) -> Graph:
    """Auto-detect DIMACS (a 'p' line) versus plain edge list."""
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("p ") or stripped.startswith("c"):
            return parse_dimacs(text)
        if stripped:
            break
    return parse_edge_list(text)


# -- JSON certificates -------------------------------------------------------


def bramble_to_json(b: Bramble) -> str:
    obj = graph_to_obj(b.host)
    obj["elements"] = [sorted(el) for el in b.elements]
    return dumps(obj)


def bramble_from_json(text: str) -> Bramble:
    doc = _load(text)
    g = _as_graph(doc)
    if "elements" not in doc:
        raise FormatError("bramble JSON needs 'elements'")
    try:
        return Bramble(g, [frozenset(el) for el in doc["elements"]])
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def order_certificate_to_json(cert: OrderCertificate) -> str:
    return dumps({
        "order": cert.order,
        "hitting_set": sorted(cert.hitting_set),
        "exhaustive": cert.exhaustive,
        "lower_bound": cert.lower_bound,
    })


def path_system_to_json(ps: PathSystem) -> str:
    return dumps({
        "spines": [list(p) for p in ps.spines],
        "links": {f"{i},{j}": [list(q) for q in fam]
                  for (i, j), fam in sorted(ps.links.items())},
        "k": ps.k,
        "l": ps.l,
    })


def path_system_from_json(text: str) -> PathSystem:
    doc = _load(text)
    try:
        spines = tuple(tuple(p) for p in doc["spines"])
        links = {}
        for key, fam in doc["links"].items():
            i, j = (int(x) for x in key.split(","))
            links[(i, j)] = tuple(tuple(q) for q in fam)
        return PathSystem(spines, links, int(doc["k"]), int(doc["l"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise FormatError(f"bad path system JSON: {exc}") from None


def coloured_graph_to_json(cg: ColouredGraph, chosen=None, seed=None) -> str:
    obj = graph_to_obj(cg.graph)
    obj["classes"] = [list(c) for c in cg.classes]
    if chosen is not None:
        obj["chosen"] = list(chosen)
    if seed is not None:
        obj["seed"] = seed
    return dumps(obj)


def coloured_graph_from_json(text: str):
    """Returns (ColouredGraph, chosen-or-None)."""
    doc = _load(text)
    g = _as_graph(doc)
    if "classes" not in doc:
        raise FormatError("coloured graph JSON needs 'classes'")
    try:
        cg = ColouredGraph(g, doc["classes"])
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    chosen = doc.get("chosen")
    return cg, (tuple(chosen) if chosen is not None else None)


def minor_model_to_json(m: MinorModel) -> str:
    return dumps({
        "pattern": graph_to_obj(m.pattern),
        "host": graph_to_obj(m.host),
        "branch_sets": [sorted(bs) for bs in m.branch_sets],
    })


def minor_model_from_json(text: str) -> MinorModel:
    doc = _load(text)
    try:
        pattern = _as_graph(doc["pattern"])
        host = _as_graph(doc["host"])
        return MinorModel(pattern, host, [frozenset(bs) for bs in doc["branch_sets"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad minor model JSON: {exc}") from None


def glm_to_json(glm: GridLikeMinor) -> str:
    obj = graph_to_obj(glm.host)
    obj["paths"] = [list(p) for p in glm.paths]
    obj["sideA"] = sorted(glm.side_a)
    obj["sideB"] = sorted(glm.side_b)
    obj["model"] = {
        "pattern_l": glm.model.pattern.n,
        "branch_sets": [sorted(bs) for bs in glm.model.branch_sets],
    }
    return dumps(obj)


def glm_from_json(text: str) -> GridLikeMinor:
    doc = _load(text)
    g = _as_graph(doc)
    try:
        paths = [tuple(p) for p in doc["paths"]]
        side_a = frozenset(doc["sideA"])
        side_b = frozenset(doc["sideB"])
        l = int(doc["model"]["pattern_l"])
        branch_sets = [frozenset(bs) for bs in doc["model"]["branch_sets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad grid-like-minor JSON: {exc}") from None
    try:
        igraph = intersection_graph(g, paths)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    model = MinorModel(complete_graph(l), igraph, branch_sets)
    return GridLikeMinor(g, paths, side_a, side_b, model)


# -- DOT export ---------------------------------------------------------------

_PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan",
            "magenta", "gold", "darkgreen", "navy", "salmon")


def glm_to_dot(glm: GridLikeMinor) -> str:
    """Host graph with every path drawn as a coloured chain."""
    lines = ["graph glm {", "  node [shape=circle];"]
    colour_of = {}
    for idx, p in enumerate(glm.paths):
        colour = _PALETTE[idx % len(_PALETTE)]
        for v in p:
            colour_of.setdefault(v, colour)
    for v in glm.host.vertices:
        extra = f', style=filled, fillcolor="{colour_of[v]}"' if v in colour_of else ""
        lines.append(f'  {v} [label="{v}"{extra}];')
    path_edges = {}
    for idx, p in enumerate(glm.paths):
        for a, b in zip(p, p[1:]):
            path_edges.setdefault((min(a, b), max(a, b)),
                                  _PALETTE[idx % len(_PALETTE)])
    for u, v in glm.host.edges:
        colour = path_edges.get((u, v))
        attr = f' [color="{colour}", penwidth=2]' if colour else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def minor_model_to_dot(m: MinorModel) -> str:
    """Host graph with branch sets coloured by pattern vertex."""
    lines = ["graph minor_model {", "  node [shape=circle];"]
    colour_of = {}
    for idx, bs in enumerate(m.branch_sets):
        for v in bs:
            colour_of[v] = _PALETTE[idx % len(_PALETTE)]
    for v in m.host.vertices:
        extra = f', style=filled, fillcolor="{colour_of[v]}"' if v in colour_of else ""
        lines.append(f'  {v} [label="{v}"{extra}];')
    for u, v in m.host.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
