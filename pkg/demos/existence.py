"""
When does a pattern centrality exist?
=====================================

A pattern tensor has a positive Perron vector when the edges covered by
pattern occurrences connect every vertex.  Mixing in the plain edges
fixes every connected graph.
"""

import subgraph_evc as sev

# Two triangles joined by a bridge: the bridge lies on no triangle.
g = sev.Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
k3 = sev.builtin_pattern("k3")

check = sev.is_f_connected(g, k3)
print("F-connected:", bool(check))
print("uncovered edges:", check.uncovered)
print("covered components:", check.components)

t = sev.build_subgraph_tensor(g, k3)
irr = sev.is_weakly_irreducible(t)
print("weakly irreducible:", bool(irr), "strong components:", irr.components)

try:
    sev.f_centrality(g, k3)
except sev.NotFConnectedError as exc:
    print("K3 centrality refused:", exc)

cv = sev.mixed_centrality(g, k3)
print("(K2,K3) centrality:", [round(float(s), 4) for s in cv.scores])

# With the 2-path pattern only the single edge fails.
p2 = sev.builtin_pattern("p2")
for edges in ([(0, 1)], [(0, 1), (1, 2)]):
    h = sev.Graph.from_edges(max(max(e) for e in edges) + 1, edges)
    print(f"{len(edges)} edge(s): P2 tensor irreducible =",
          bool(sev.is_weakly_irreducible(sev.build_subgraph_tensor(h, p2))))
