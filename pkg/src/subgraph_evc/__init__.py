"""Subgraph eigenvector centralities of undirected graphs.

A pattern F (path, triangle, star, ...) defines a symmetric order-k tensor
whose entry on a k-set of vertices counts the copies of F on that set. The
Perron vector of that tensor is the F-subgraph eigenvector centrality; adding
adjacency tuples gives the (K2, F) variant, which exists on every connected
graph.
"""

from .centrality import (CentralityVector, Ranking, betweenness_centrality, correlate,
                         degree_centrality, ec, f_centrality, mixed_centrality, ranking,
                         subgraph_centrality)
from .datasets import karate, regular8_one_triangle
from .errors import (CentralityUndefinedError, DisconnectedGraphError, GraphParseError,
                     NoOccurrencesError, NonIrreducibleWarning, NotConvergedError,
                     NotFConnectedError, PatternError, PatternTooLargeError, ZeroTensorError)
from .graph import (Graph, degree, is_connected, parse_edge_list, parse_pajek, to_edge_list,
                    to_pajek)
from .pattern import (OccurrenceMap, Pattern, builtin_pattern, count_on_set, covered_edges,
                      enumerate_occurrences, is_f_connected, parse_pattern)
from .spectral import SpectralResult, eigenvector_centrality, residual, zqw_iterate
from .tensor import (CONVENTIONS, MixedTensor, SubgraphTensor, apply, associated_digraph, build_mixed_tensor,
                     build_subgraph_tensor, is_weakly_irreducible)

__version__ = "0.1.0"
