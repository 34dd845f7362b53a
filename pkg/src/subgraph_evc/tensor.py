"""Sparse subgraph tensors and their contraction with a vector.

Both tensor kinds store only the occurrence map: a symmetric order-k tensor
whose entry on any ordering of distinct indices with vertex set S equals the
multiplicity m(S).

Contraction conventions
-----------------------
``"set"``
    ``apply(t, x)[i] = sum over stored sets S containing i of m(S) * prod(x[S - {i}])``,
    i.e. each set contributes once per member.
``"tuple"``
    The usual tensor contraction ``sum_{i2..ik} a[i, i2, .., ik] x[i2]..x[ik]``
    over ordered index tuples. For the pattern part this is the set sum times
    ``(k-1)!``.

The adjacency tuples ``(i, j, i, .., i)`` of a mixed tensor contribute
``x[j] * x[i]**(k-2)`` under either convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .pattern import OccurrenceMap, Pattern, enumerate_occurrences, DEFAULT_MAX_ORDER

CONVENTIONS = ("set", "tuple")


def _check_convention(convention):
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}, got {convention!r}")


@dataclass(frozen=True)
class SubgraphTensor:
    k: int
    n: int
    occ: OccurrenceMap
    convention: str = "set"

    def __post_init__(self):
        _check_convention(self.convention)

    @property
    def pattern_weight(self) -> float:
        return float(math.factorial(self.k - 1)) if self.convention == "tuple" else 1.0

    def is_zero(self) -> bool:
        return len(self.occ) == 0


@dataclass(frozen=True)
class MixedTensor:
    k: int
    n: int
    occ: OccurrenceMap
    graph: Graph
    convention: str = "set"

    def __post_init__(self):
        _check_convention(self.convention)
        if self.k < 3:
            raise ValueError("mixed tensor needs pattern order k >= 3")

    @property
    def pattern_weight(self) -> float:
        return float(math.factorial(self.k - 1)) if self.convention == "tuple" else 1.0

    def is_zero(self) -> bool:
        return len(self.occ) == 0 and self.graph.m == 0


def build_subgraph_tensor(g: Graph, f: Pattern, convention: str = "set",
                          max_order: int = DEFAULT_MAX_ORDER) -> SubgraphTensor:
    return SubgraphTensor(f.k, g.n, enumerate_occurrences(g, f, max_order), convention)


def build_mixed_tensor(g: Graph, f: Pattern, convention: str = "set",
                       max_order: int = DEFAULT_MAX_ORDER) -> MixedTensor:
    if f.k < 3:
        raise ValueError(f"mixed tensor needs pattern order k >= 3, got {f.k}")
    return MixedTensor(f.k, g.n, enumerate_occurrences(g, f, max_order), g, convention)


def _edge_arrays(g: Graph):
    e = np.array(g.sorted_edges(), dtype=np.intp).reshape(-1, 2)
    return e[:, 0], e[:, 1]


def _pattern_part(occ: OccurrenceMap, x: np.ndarray, n: int) -> np.ndarray:
    y = np.zeros(n)
    if len(occ) == 0:
        return y
    cols = x[occ.sets]
    k = occ.k
    for p in range(k):
        others = np.prod(np.delete(cols, p, axis=1), axis=1)
        y += np.bincount(occ.sets[:, p], weights=occ.mult * others, minlength=n)
    return y


def apply(t, x) -> np.ndarray:
    """Contract tensor ``t`` with ``x`` in all but the first mode (``t x^{k-1}``)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (t.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({t.n},)")
    y = t.pattern_weight * _pattern_part(t.occ, x, t.n)
    if isinstance(t, MixedTensor) and t.graph.m:
        u, v = _edge_arrays(t.graph)
        xi = x ** (t.k - 2)
        y += np.bincount(u, weights=x[v] * xi[u], minlength=t.n)
        y += np.bincount(v, weights=x[u] * xi[v], minlength=t.n)
    return y


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset

    def successors(self) -> list:
        out = [[] for _ in range(self.n)]
        for i, j in sorted(self.arcs):
            out[i].append(j)
        return out


def associated_digraph(t) -> Digraph:
    """Arc (i, j) whenever a nonzero entry with first index i contains j != i."""
    arcs = set()
    for s in t.occ.entries:
        for i in s:
            for j in s:
                if i != j:
                    arcs.add((i, j))
    if isinstance(t, MixedTensor):
        for u, v in t.graph.edges:
            arcs.add((u, v))
            arcs.add((v, u))
    return Digraph(t.n, frozenset(arcs))


def strongly_connected_components(d: Digraph) -> list:
    """Tarjan's algorithm without recursion.

    Returns components as sorted lists, ordered by smallest member.
    """
    succ = d.successors()
    index = [-1] * d.n
    low = [0] * d.n
    on_stack = [False] * d.n
    stack = []
    comps = []
    counter = 0
    for root in range(d.n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return sorted(comps)


@dataclass(frozen=True)
class IrreducibilityCheck:
    """Truthy iff the associated digraph is strongly connected."""

    irreducible: bool
    components: tuple

    def __bool__(self):
        return self.irreducible


def is_weakly_irreducible(t) -> IrreducibilityCheck:
    comps = strongly_connected_components(associated_digraph(t))
    return IrreducibilityCheck(len(comps) == 1, tuple(tuple(c) for c in comps))


def dump(t) -> str:
    """One line per stored vertex set: ``i1 i2 .. ik  multiplicity`` (0-based)."""
    lines = [" ".join(map(str, s)) + f"  {m}" for s, m in t.occ.entries.items()]
    return "\n".join(lines) + ("\n" if lines else "")
