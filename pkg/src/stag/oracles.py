"""Brute-force reference implementations used to validate the fast paths."""

from __future__ import annotations

from itertools import combinations

from .aux_graph import StagGraph
from .errors import TooLarge
from .graph_core import Graph, are_isomorphic, block_decomposition, is_connected
from .spanning_trees import SpanningTree, count_spanning_trees


def brute_force_trees(g, max_m=24):
    """All spanning trees by filtering every (n-1)-subset of the edges."""
    if g.m > max_m:
        raise TooLarge(f"m={g.m} exceeds guard {max_m}")
    n = g.n
    out = []
    for combo in combinations(g.edge_ids(), n - 1):
        if _is_spanning_tree(g, combo):
            out.append(SpanningTree(g, combo))
    out.sort()
    return out


def _is_spanning_tree(g, eids):
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in eids:
        e = g.edge(eid)
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            return False
        parent[ru] = rv
    return len(eids) == g.n - 1


def brute_force_stag(g, max_trees=2000):
    """Aux(g) by the pairwise symmetric-difference-2 test over all trees."""
    trees = brute_force_trees(g)
    if len(trees) > max_trees:
        raise TooLarge(f"{len(trees)} trees exceed guard {max_trees}")
    pairs = []
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            if len(trees[i].edge_set ^ trees[j].edge_set) == 2:
                pairs.append((i, j))
    graph = Graph(range(max(1, len(trees))), ((k, u, v) for k, (u, v) in enumerate(pairs)))
    return StagGraph(graph, tuple(trees), g)


def brute_force_is_stag(h, n_max=7):
    """Search all connected minimal-preimage graphs (no K2 block) on up to
    n_max vertices for one whose Aux is isomorphic to h; None if absent.

    Enumeration reuses the networkx graph atlas (all graphs on <= 7
    vertices); Aux construction and isomorphism stay in-house."""
    if n_max > 7:
        raise TooLarge("preimage search is bounded at 7 vertices")
    target = h.n
    if target == 1:
        return Graph([0], []) if h.m == 0 else None
    import networkx as nx

    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if n < 3 or n > n_max:
            continue
        if not nx.is_connected(nxg):
            continue
        g = Graph(range(n), ((i, u, v) for i, (u, v) in enumerate(sorted(map(sorted, nxg.edges())))))
        if any(b.m == 1 for b in block_decomposition(g).blocks):
            continue  # has a K2 block, not a minimal preimage
        if count_spanning_trees(g) != target:
            continue
        aux = brute_force_stag(g, max_trees=max(target, 1))
        ok, _ = are_isomorphic(aux.graph, h)
        if ok:
            return g
    return None
