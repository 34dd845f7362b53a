"""Centrality measures, rankings and correlations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import rankdata

from .errors import DisconnectedGraphError, NoOccurrencesError, NotFConnectedError
from .graph import Graph, is_connected
from .pattern import Pattern, enumerate_occurrences, is_f_connected
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, eigenvector_centrality, zqw_iterate
from .tensor import MixedTensor, SubgraphTensor, is_weakly_irreducible

TIE_TOL = 1e-9


@dataclass(frozen=True)
class CentralityVector:
    measure: str
    scores: np.ndarray
    meta: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Ranking:
    order: list
    ties: list


def _spectral_meta(res, **extra):
    meta = {"rho": res.rho, "iterations": res.iterations, "converged": res.converged,
            "lower": res.lower, "upper": res.upper, "residual_inf": res.residual_inf}
    meta.update(extra)
    return meta


def _require_connected(g):
    if g.n < 2 or not is_connected(g):
        raise DisconnectedGraphError("centrality requires a connected graph with at least 2 vertices")


def ec(g: Graph, tol=DEFAULT_TOL, max_iterations=DEFAULT_MAX_ITER, callback=None) -> CentralityVector:
    res = eigenvector_centrality(g, tol=tol, max_iterations=max_iterations, callback=callback)
    return CentralityVector("ec", res.x, _spectral_meta(res, convention="set"))


def f_centrality(g: Graph, f: Pattern, tol=DEFAULT_TOL, max_iterations=DEFAULT_MAX_ITER,
                 convention="set", callback=None) -> CentralityVector:
    """F-subgraph eigenvector centrality.

    Raises
    ------
    NoOccurrencesError
        ``f`` does not occur in ``g``.
    NotFConnectedError
        The subgraph tensor is reducible; the error carries the uncovered
        edges and component partition as ``witness``.
    """
    _require_connected(g)
    occ = enumerate_occurrences(g, f)
    if len(occ) == 0:
        raise NoOccurrencesError(f"pattern {f.name or 'F'} does not occur in the graph",)
    t = SubgraphTensor(f.k, g.n, occ, convention)
    if not is_weakly_irreducible(t):
        witness = is_f_connected(g, f, occ)
        raise NotFConnectedError(
            f"graph is not {f.name or 'F'}-connected ({len(witness.uncovered)} uncovered edge(s)); "
            "no positive F-centrality vector exists", witness)
    res = zqw_iterate(t, tol=tol, max_iterations=max_iterations, callback=callback)
    return CentralityVector(f"f:{f.name}" if f.name else "f", res.x,
                            _spectral_meta(res, pattern=f.name, k=f.k, convention=convention))


def mixed_centrality(g: Graph, f: Pattern, tol=DEFAULT_TOL, max_iterations=DEFAULT_MAX_ITER,
                     convention="set", callback=None) -> CentralityVector:
    """(K2, F)-subgraph eigenvector centrality; exists on every connected graph."""
    _require_connected(g)
    if f.k < 3:
        raise ValueError("mixed centrality needs a pattern with at least 3 vertices")
    t = MixedTensor(f.k, g.n, enumerate_occurrences(g, f), g, convention)
    res = zqw_iterate(t, tol=tol, max_iterations=max_iterations, callback=callback)
    return CentralityVector(f"k2f:{f.name}" if f.name else "k2f", res.x,
                            _spectral_meta(res, pattern=f.name, k=f.k, convention=convention))


def degree_centrality(g: Graph) -> CentralityVector:
    return CentralityVector("dc", np.array([len(a) for a in g.adjacency], dtype=float))


def betweenness_centrality(g: Graph) -> CentralityVector:
    """Unnormalized betweenness over unordered vertex pairs (Brandes accumulation)."""
    n, adj = g.n, g.adjacency
    bc = np.zeros(n)
    for s in range(n):
        order = []
        preds = [[] for _ in range(n)]
        sigma = np.zeros(n)
        sigma[s] = 1.0
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = np.zeros(n)
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    # each unordered pair was counted from both endpoints
    return CentralityVector("bc", bc / 2.0)


def subgraph_centrality(g: Graph) -> CentralityVector:
    """Diagonal of ``exp(A)`` via the symmetric eigendecomposition of ``A``."""
    if g.n == 0:
        return CentralityVector("sc", np.zeros(0))
    w, q = np.linalg.eigh(g.adjacency_matrix())
    return CentralityVector("sc", (q ** 2) @ np.exp(w))


def ranking(c, tie_tolerance: float = TIE_TOL) -> Ranking:
    """Order vertices by descending score, grouping near-equal scores.

    A tie group collects consecutive vertices whose score is within
    ``tie_tolerance`` of the group's top score; members are listed by
    ascending id.
    """
    scores = np.asarray(c.scores if isinstance(c, CentralityVector) else c, dtype=float)
    idx = sorted(range(len(scores)), key=lambda v: (-scores[v], v))
    ties = []
    for v in idx:
        if ties and scores[ties[-1][0]] - scores[v] <= tie_tolerance:
            ties[-1].append(v)
        else:
            ties.append([v])
    ties = [sorted(group) for group in ties]
    return Ranking([v for group in ties for v in group], ties)


def correlate(a, b, method: str = "pearson") -> float:
    """Pearson correlation, or Spearman as Pearson on mid-ranks."""
    a = np.asarray(a.scores if isinstance(a, CentralityVector) else a, dtype=float)
    b = np.asarray(b.scores if isinstance(b, CentralityVector) else b, dtype=float)
    if a.shape != b.shape or a.ndim != 1 or len(a) < 2:
        raise ValueError("need two equal-length score vectors with at least 2 entries")
    if method == "spearman":
        a, b = rankdata(a), rankdata(b)
    elif method != "pearson":
        raise ValueError(f"unknown correlation method {method!r}")
    if np.ptp(a) == 0 or np.ptp(b) == 0:
        raise ValueError("correlation undefined for a constant vector")
    r = float(np.corrcoef(a, b)[0, 1])
    return max(-1.0, min(1.0, r))
