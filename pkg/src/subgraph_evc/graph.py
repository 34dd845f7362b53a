"""Simple undirected graphs: data model, file formats and structural queries.

Vertices are dense integers ``0..n-1``. The external id of each vertex (as it
appeared in the input file) is kept in ``Graph.labels`` for reporting.
"""

from __future__ import annotations

import io
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import GraphParseError

log = logging.getLogger(__name__)

_HEADER = re.compile(r"#\s*vertices\s*:\s*(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : frozenset of (int, int)
        Unordered edges stored as ``(u, v)`` with ``u < v``.
    labels : tuple
        External vertex ids, ``labels[i]`` is the id of internal vertex ``i``.
    """

    n: int
    edges: frozenset
    labels: tuple = ()
    adjacency: tuple = field(default=(), compare=False, repr=False)
    n_duplicates: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {(u, v)} is not a normalized pair of vertices in 0..{self.n - 1}")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, labels=None) -> "Graph":
        """Build a graph from any iterable of vertex pairs.

        Duplicate pairs collapse; self-loops raise ``ValueError``.
        """
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm), tuple(labels) if labels is not None else ())

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1.0
        return A

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        perm = list(perm)
        labels = [None] * self.n
        for i, p in enumerate(perm):
            labels[p] = self.labels[i]
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), labels)


def _read(text) -> str:
    return text.read() if hasattr(text, "read") else str(text)


def parse_edge_list(text, one_based: bool = False) -> Graph:
    """Parse a whitespace-separated edge list.

    Each non-comment line holds two integer vertex ids; ``#`` starts a
    comment. A comment line ``# vertices: N`` fixes the vertex count, which
    otherwise is the largest id plus one (after index normalization).
    Duplicate edges are collapsed and counted in ``Graph.n_duplicates``.
    """
    header_n = None
    pairs = []
    for lineno, raw in enumerate(io.StringIO(_read(text)), start=1):
        hm = _HEADER.match(raw.strip())
        if hm:
            header_n = int(hm.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex ids, got {len(tokens)} tokens", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if one_based:
            u, v = u - 1, v - 1
        if u < 0 or v < 0:
            raise GraphParseError("vertex ids must be >= %d" % (1 if one_based else 0), lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {tokens[0]}", lineno)
        pairs.append((u, v))

    if not pairs and header_n is None:
        raise GraphParseError("empty input: no edges and no '# vertices: N' header")
    n = max((max(p) for p in pairs), default=-1) + 1
    if header_n is not None:
        if header_n < n:
            raise GraphParseError(f"header declares {header_n} vertices but id {n - 1 + one_based} occurs")
        n = header_n

    edges = {(min(u, v), max(u, v)) for u, v in pairs}
    dup = len(pairs) - len(edges)
    if dup:
        log.info("collapsed %d duplicate edge(s)", dup)
    offset = 1 if one_based else 0
    return Graph(n, frozenset(edges), tuple(range(offset, n + offset)), n_duplicates=dup)


def parse_pajek(text) -> Graph:
    """Parse the ``*Vertices`` / ``*Edges`` / ``*Arcs`` subset of Pajek .net files.

    Arcs are symmetrized. Extra tokens on edge lines (weights) are ignored, as
    are vertex description lines. Isolated vertices are preserved.
    """
    n = None
    section = None
    pairs = []
    for lineno, raw in enumerate(io.StringIO(_read(text)), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head = line.split()
            key = head[0].lower()
            if key == "*vertices":
                if len(head) < 2:
                    raise GraphParseError("*Vertices needs a count", lineno)
                try:
                    n = int(head[1])
                except ValueError:
                    raise GraphParseError(f"bad vertex count {head[1]!r}", lineno) from None
                section = "vertices"
            elif key in ("*edges", "*arcs"):
                if n is None:
                    raise GraphParseError(f"{head[0]} before *Vertices header", lineno)
                section = "edges"
            else:
                raise GraphParseError(f"unsupported section {head[0]}", lineno)
            continue
        if section is None:
            raise GraphParseError("data before *Vertices header", lineno)
        if section == "vertices":
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphParseError("edge line needs two endpoints", lineno)
        try:
            u, v = int(tokens[0]) - 1, int(tokens[1]) - 1
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {line!r}", lineno) from None
        for w, tok in ((u, tokens[0]), (v, tokens[1])):
            if not 0 <= w < n:
                raise GraphParseError(f"endpoint {tok} out of range 1..{n}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {tokens[0]}", lineno)
        pairs.append((u, v))

    if n is None:
        raise GraphParseError("missing *Vertices header")
    edges = {(min(u, v), max(u, v)) for u, v in pairs}
    return Graph(n, frozenset(edges), tuple(range(1, n + 1)), n_duplicates=len(pairs) - len(edges))


def to_edge_list(g: Graph, one_based: bool = False) -> str:
    off = 1 if one_based else 0
    lines = [f"# vertices: {g.n}"]
    lines += [f"{u + off} {v + off}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_pajek(g: Graph) -> str:
    lines = [f"*Vertices {g.n}", "*Edges"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (and ``n >= 1``)."""
    if g.n == 0:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    return len(g.adjacency[v])


def components(n: int, edges: Iterable) -> list:
    """Connected components of the graph ``(range(n), edges)``.

    Each component is a sorted list; components are ordered by smallest vertex.
    """
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]
