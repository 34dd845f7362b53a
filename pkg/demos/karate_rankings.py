"""
Ranking the karate club members
===============================

Compare the classical eigenvector centrality with pattern-based
centralities and two baselines on Zachary's karate club network.
"""

import numpy as np

import subgraph_evc as sev

g = sev.karate()
print(f"karate club: {g.n} members, {g.m} ties")

# Each pattern centrality is the Perron vector of a tensor whose entries
# count occurrences of the pattern on a vertex set.
p2, k3 = sev.builtin_pattern("p2"), sev.builtin_pattern("k3")
measures = {
    "ec": sev.ec(g),
    "p2c": sev.f_centrality(g, p2),
    "k2k3c": sev.mixed_centrality(g, k3),
    "bc": sev.betweenness_centrality(g),
    "sc": sev.subgraph_centrality(g),
}

labels = np.array(g.labels)
for name, cv in measures.items():
    top = labels[sev.ranking(cv).order[:10]]
    print(f"{name:>6}: {' '.join(str(v) for v in top)}")

# Triangle-aware scores favour the instructor (vertex 1) and the tightly
# knit members around him over the administrator, vertex 34.
names = list(measures)
rho = np.array([[sev.correlate(measures[a], measures[b], "spearman") for b in names]
                for a in names])
print("\nSpearman correlations")
print("       " + " ".join(f"{n:>6}" for n in names))
for n, row in zip(names, rho):
    print(f"{n:>6} " + " ".join(f"{r:6.3f}" for r in row))
