"""Grid-like minors: treewidth certificates at desk scale.

A toolkit for the constructive side of treewidth theory on small graphs:
brambles and their exact order, paths hitting every bramble element,
Menger-style disjoint linkages, independent transversals of coloured
graphs by local-lemma resampling, grid-like minors with polynomial-time
verifiable certificates, and complete-minor models in cartesian products
with complete graphs.
"""

from .brambles import (Bramble, OrderCertificate, bramble_order, check_bramble,
                       crosses_bramble, is_bramble, treewidth_exact)
from .errors import (FallbackFailedError, FormatError, GraphError, GridlikeError,
                     InsufficientOrderError, LemmaViolationError,
                     PreconditionError, SizeLimitError, TransversalExhaustedError)
from .generators import (complete_bipartite, complete_graph, cycle_graph,
                         gnp_graph, grid_graph, hypercube, one_subdivision,
                         path_graph, petersen_graph, star_graph)
from .glm import (GridLikeMinor, LowerBoundCertificate, check_glm, find_glm,
                  grid_rows_columns_glm, intersection_graph,
                  is_one_subdivision_of_complete, k_threshold,
                  lower_bound_bramble, verify_glm)
from .graphs import Graph, degeneracy, is_bipartite, is_path
from .minors import (DegeneracyBound, MinorModel, MinorSearchResult,
                     check_minor_model, find_minor_dense, find_minor_exact,
                     verify_minor_model)
from .pathsystems import (DisjointPathsResult, PathSystem, check_path_system,
                          hitting_path, many_paths, segment_path,
                          sub_bramble_order_at_least, vertex_disjoint_paths)
from .products import (cartesian_k2, cartesian_kq,
                       intersection_minor_in_kq_product, product_complete_minor,
                       product_minor_model)
from .transversals import (ColouredGraph, counterexample_graph,
                           is_independent_transversal, lll_threshold,
                           transversal_general, transversal_greedy,
                           transversal_lll)

__version__ = "0.1.0"

__all__ = [
    "Bramble", "ColouredGraph", "DegeneracyBound", "DisjointPathsResult",
    "FallbackFailedError", "FormatError", "Graph", "GraphError",
    "GridLikeMinor", "GridlikeError", "InsufficientOrderError",
    "LemmaViolationError", "LowerBoundCertificate", "MinorModel",
    "MinorSearchResult", "OrderCertificate", "PathSystem",
    "PreconditionError", "SizeLimitError", "TransversalExhaustedError",
    "bramble_order", "cartesian_k2", "cartesian_kq", "check_bramble",
    "check_glm", "check_minor_model", "check_path_system",
    "complete_bipartite", "complete_graph", "counterexample_graph",
    "crosses_bramble", "cycle_graph", "degeneracy", "find_glm",
    "find_minor_dense", "find_minor_exact", "gnp_graph", "grid_graph",
    "grid_rows_columns_glm", "hitting_path", "hypercube",
    "intersection_graph", "intersection_minor_in_kq_product", "is_bipartite",
    "is_bramble", "is_independent_transversal",
    "is_one_subdivision_of_complete", "is_path", "k_threshold",
    "lll_threshold", "lower_bound_bramble", "many_paths", "one_subdivision",
    "path_graph", "petersen_graph", "product_complete_minor",
    "product_minor_model", "segment_path", "star_graph",
    "sub_bramble_order_at_least", "transversal_general", "transversal_greedy",
    "transversal_lll", "treewidth_exact", "verify_glm", "verify_minor_model",
    "vertex_disjoint_paths",
]
