"""Pattern templates and occurrence counting.

An occurrence of a pattern F on a vertex set S is a subgraph of G (not
necessarily induced) with vertex set exactly S that is isomorphic to F. Two
occurrences are different when their edge sets differ, so a triangle holds
three occurrences of the 2-path and one of K3.
"""

from __future__ import annotations

import io
import re
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import PatternError, PatternTooLargeError, GraphParseError
from .graph import Graph, components

DEFAULT_MAX_ORDER = 8


@dataclass(frozen=True)
class Pattern:
    k: int
    edges: frozenset
    name: str = ""

    def __post_init__(self):
        if self.k < 2:
            raise PatternError(f"pattern needs at least 2 vertices, got k={self.k}")
        for u, v in self.edges:
            if not (0 <= u < v < self.k):
                raise PatternError(f"template edge {(u, v)} invalid for k={self.k}")
        if len(components(self.k, self.edges)) != 1:
            raise PatternError(f"template {self.name or sorted(self.edges)} is disconnected")

    @classmethod
    def from_edges(cls, k, edges, name=""):
        norm = set()
        for u, v in edges:
            if u == v:
                raise PatternError(f"self-loop at template vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(k, frozenset(norm), name)

    def search_order(self) -> list:
        """Template vertices in BFS order from 0, so each has an earlier neighbour."""
        nbrs = [[] for _ in range(self.k)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        order, seen, queue = [], {0}, deque([0])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(nbrs[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return order


_TOKEN = re.compile(r"^(p|k|star-|cycle-)(\d+)$")


def builtin_pattern(name: str) -> Pattern:
    """Resolve a builtin pattern token.

    ``p<r>`` is the path with r edges (``p1`` == ``k2``), ``k<r>`` the
    complete graph, ``star-<r>`` the star with r leaves (centre 0) and
    ``cycle-<r>`` the r-cycle.
    """
    token = name.strip().lower()
    m = _TOKEN.match(token)
    if not m:
        raise PatternError(f"unknown pattern token {name!r}")
    kind, r = m.group(1), int(m.group(2))
    if kind == "p":
        if r < 1:
            raise PatternError("path length must be >= 1")
        edges = [(i, i + 1) for i in range(r)]
        k = r + 1
    elif kind == "k":
        if r < 2:
            raise PatternError("complete graph needs r >= 2")
        edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
        k = r
    elif kind == "star-":
        if r < 2:
            raise PatternError("star needs r >= 2 leaves")
        edges = [(0, i) for i in range(1, r + 1)]
        k = r + 1
    else:
        if r < 3:
            raise PatternError("cycle needs r >= 3")
        edges = [(i, (i + 1) % r) for i in range(r)]
        k = r
    return Pattern.from_edges(k, edges, token)


BUILTIN_EXAMPLES = ("p1", "k2", "p2", "p3", "k3", "k4", "star-3", "cycle-4")


def parse_pattern(text) -> Pattern:
    """Parse a pattern file: first line ``k``, then one 0-based edge per line."""
    text = text.read() if hasattr(text, "read") else str(text)
    k = None
    edges = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", lineno) from None
        if k is None:
            if len(values) != 1:
                raise GraphParseError("first line must hold the vertex count k", lineno)
            k = values[0]
            if k < 2:
                raise PatternError(f"pattern needs at least 2 vertices, got k={k}")
            continue
        if len(values) != 2:
            raise GraphParseError("template edge line needs two vertex ids", lineno)
        u, v = values
        if not (0 <= u < k and 0 <= v < k):
            raise PatternError(f"line {lineno}: edge index out of range 0..{k - 1}")
        edges.append((u, v))
    if k is None:
        raise GraphParseError("empty pattern file")
    return Pattern.from_edges(k, edges)


def _images(g: Graph, f: Pattern, s, order=None):
    """Yield the image edge set of every bijection template -> s that preserves edges."""
    order = order or f.search_order()
    tnbrs = {u: [] for u in range(f.k)}
    for a, b in f.edges:
        tnbrs[a].append(b)
        tnbrs[b].append(a)
    pos = {u: i for i, u in enumerate(order)}
    # template neighbours already placed when vertex order[i] is assigned
    back = [[w for w in tnbrs[u] if pos[w] < i] for i, u in enumerate(order)]
    assign = {}
    used = [False] * len(s)

    def extend(i):
        if i == f.k:
            yield frozenset((min(assign[a], assign[b]), max(assign[a], assign[b])) for a, b in f.edges)
            return
        u = order[i]
        for j, gv in enumerate(s):
            if used[j]:
                continue
            if all(g.has_edge(gv, assign[w]) for w in back[i]):
                used[j] = True
                assign[u] = gv
                yield from extend(i + 1)
                used[j] = False
                del assign[u]

    yield from extend(0)


def count_on_set(g: Graph, f: Pattern, s) -> int:
    """Number of distinct subgraphs on vertex set ``s`` isomorphic to ``f``."""
    s = sorted(s)
    if len(s) != f.k or len(set(s)) != f.k:
        raise ValueError(f"vertex set must contain {f.k} distinct vertices")
    if s and not (0 <= s[0] and s[-1] < g.n):
        raise ValueError("vertex id out of range")
    return len(set(_images(g, f, s)))


def connected_sets(g: Graph, k: int):
    """Yield every k-subset of vertices inducing a connected subgraph, once each.

    Sets are grown from their smallest vertex, only ever adding vertices that
    are larger than it and not already adjacent to the partial set, which
    generates each connected set exactly once. Yields sorted tuples.
    """
    adj = g.adjacency

    def grow(sub, ext, root, closed):
        if len(sub) == k:
            yield tuple(sorted(sub))
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            new = [u for u in adj[w] if u > root and u not in closed]
            yield from grow(sub + [w], ext + new, root, closed | set(adj[w]))

    for v in range(g.n):
        if k == 1:
            yield (v,)
            continue
        start = [u for u in adj[v] if u > v]
        yield from grow([v], start, v, {v} | set(adj[v]))


@dataclass(frozen=True)
class OccurrenceMap:
    """Vertex sets carrying occurrences of a pattern, with multiplicities.

    ``entries`` maps sorted k-tuples to positive counts, in ascending key
    order. ``covered`` holds every edge of G lying in at least one occurrence.
    """

    k: int
    entries: dict
    covered: frozenset = frozenset()
    sets: np.ndarray = field(default=None, compare=False, repr=False)
    mult: np.ndarray = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        keys = sorted(self.entries)
        object.__setattr__(self, "entries", {s: self.entries[s] for s in keys})
        arr = np.array(keys, dtype=np.intp).reshape(len(keys), self.k)
        object.__setattr__(self, "sets", arr)
        object.__setattr__(self, "mult", np.array([self.entries[s] for s in keys], dtype=float))

    def __len__(self):
        return len(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def per_vertex(self, n: int) -> np.ndarray:
        """Number of occurrences containing each vertex."""
        out = np.zeros(n, dtype=np.int64)
        for s, m in self.entries.items():
            for v in s:
                out[v] += m
        return out


def enumerate_occurrences(g: Graph, f: Pattern, max_order: int = DEFAULT_MAX_ORDER) -> OccurrenceMap:
    if f.k > max_order:
        raise PatternTooLargeError(f"pattern order {f.k} exceeds limit {max_order}")
    order = f.search_order()
    entries = {}
    covered = set()
    for s in connected_sets(g, f.k):
        images = set(_images(g, f, s, order))
        if images:
            entries[s] = len(images)
            for img in images:
                covered |= img
    return OccurrenceMap(f.k, entries, frozenset(covered))


def covered_edges(g: Graph, occ: OccurrenceMap, f: Pattern = None) -> frozenset:
    return occ.covered


@dataclass(frozen=True)
class FConnectivity:
    """Outcome of the F-connectivity test; truthy iff connected."""

    connected: bool
    uncovered: tuple
    components: tuple

    def __bool__(self):
        return self.connected


def is_f_connected(g: Graph, f: Pattern, occ: OccurrenceMap = None) -> FConnectivity:
    """Decide whether every pair of vertices is joined by a path of covered edges.

    An edge is covered when it lies in some occurrence of ``f``. The witness
    lists uncovered edges and the components of the covered spanning subgraph.
    """
    if occ is None:
        occ = enumerate_occurrences(g, f)
    comps = components(g.n, occ.covered)
    uncovered = tuple(sorted(g.edges - occ.covered))
    return FConnectivity(len(comps) == 1, uncovered, tuple(tuple(c) for c in comps))
