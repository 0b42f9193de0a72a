"""Independent oracles and graph strategies shared by the test modules."""

from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from starcolor.graph import Graph, build_graph


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def nx_outerplanar(g: Graph) -> bool:
    """Outerplanar iff adding one apex joined to every vertex keeps the graph planar."""
    h = g.to_networkx()
    h.add_edges_from(("apex", v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def nx_star_valid(g: Graph, c, kappa: int, lam: int) -> bool:
    """Validity straight from the definition, via networkx components."""
    if any(not 0 <= x < kappa for x in c):
        return False
    h = g.to_networkx()
    mono = h.edge_subgraph([(u, v) for u, v in g.edges if c[u] == c[v]]).copy()
    mono.add_nodes_from(range(g.n))
    for comp in nx.connected_components(mono):
        sub = mono.subgraph(comp)
        if not nx.is_tree(sub) or nx.diameter(sub) > lam:
            return False
    return True


def brute_colorings(g: Graph, kappa: int, lam: int):
    return [c for c in itertools.product(range(kappa), repeat=g.n) if nx_star_valid(g, c, kappa, lam)]


@st.composite
def small_graphs(draw, max_n: int = 7) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])
