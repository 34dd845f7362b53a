"""Bundled graph fixtures."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .graph import Graph, parse_edge_list

KARATE_N, KARATE_M = 34, 78
SANDI_N, SANDI_M = 86, 124

SANDI_HINT = (
    "The Sandi-Auths network is not bundled. Obtain the Pajek/edge-list file "
    f"yourself and pass it with --graph PATH; it should load as {SANDI_N} vertices "
    f"and {SANDI_M} edges."
)

DATASETS = ("karate",)


def karate_path() -> Path:
    """Filesystem path of the bundled one-based karate-club edge list."""
    return Path(str(resources.files("subgraph_evc") / "data" / "karate.txt"))


def karate() -> Graph:
    """Zachary's karate club, labels 1..34."""
    g = parse_edge_list(karate_path().read_text(), one_based=True)
    assert (g.n, g.m) == (KARATE_N, KARATE_M)
    return g


def dataset_path(name: str) -> Path:
    if name == "karate":
        return karate_path()
    if name.lower().replace("-", "") in ("sandi", "sandiauths"):
        raise KeyError(f"unknown dataset {name!r}. {SANDI_HINT}")
    raise KeyError(f"unknown dataset {name!r}; available: {', '.join(DATASETS)}")


def regular8_one_triangle() -> Graph:
    """Connected 3-regular graph on 8 vertices with exactly one triangle.

    Labels 1..8. The triangle is {1, 2, 8}; vertices 3, 5, 7 hang off 2, 1, 8
    respectively, and 4 and 6 are both joined to all of 3, 5, 7. These
    constraints force every remaining edge, so this is the only such graph up
    to isomorphism with that attachment pattern.
    """
    edges = [(1, 2), (1, 8), (2, 8), (2, 3), (1, 5), (8, 7),
             (4, 3), (4, 5), (4, 7), (6, 3), (6, 5), (6, 7)]
    return Graph.from_edges(8, ((u - 1, v - 1) for u, v in edges), labels=range(1, 9))
