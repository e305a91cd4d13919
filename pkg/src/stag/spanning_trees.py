"""Spanning tree enumeration, counting, unit transformations and the
reverse-delete construction with a protected edge pair."""

from __future__ import annotations

from collections import deque

from .errors import (
    Disconnected,
    EdgeInTree,
    NotTwoConnected,
    NoWitness,
    TooManyTrees,
)
from .graph_core import (
    block_decomposition,
    fundamental_cycle_edges,
    is_connected,
    is_two_connected,
)

DEFAULT_MAX_TREES = 100_000


class SpanningTree:
    """Spanning tree of a host graph, canonically keyed by its sorted
    edge-id tuple."""

    __slots__ = ("key", "host", "_eset")

    def __init__(self, host, edge_ids):
        self.key = tuple(sorted(edge_ids))
        self.host = host
        self._eset = None

    @classmethod
    def of(cls, host, edge_ids):
        t = cls(host, edge_ids)
        if len(t.key) != host.n - 1:
            raise ValueError(f"expected {host.n - 1} edges, got {len(t.key)}")
        if len(set(t.key)) != len(t.key):
            raise ValueError("repeated edge id")
        if not _spans(host, t.key):
            raise ValueError("edge set does not span the host acyclically")
        return t

    @property
    def edge_set(self):
        if self._eset is None:
            self._eset = frozenset(self.key)
        return self._eset

    def __eq__(self, other):
        return isinstance(other, SpanningTree) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SpanningTree{self.key}"


def _spans(g, eids):
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = 0
    for eid in eids:
        e = g.edge(eid)
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            return False
        parent[ru] = rv
        merged += 1
    return merged == g.n - 1


def count_spanning_trees(g):
    """Matrix-Tree count via fraction-free (Bareiss) integer elimination."""
    if not is_connected(g):
        raise Disconnected("spanning trees need a connected graph")
    size = g.n - 1
    if size == 0:
        return 1
    idx = {v: i for i, v in enumerate(g.vertices[:-1])}
    mat = [[0] * size for _ in range(size)]
    for v, i in idx.items():
        mat[i][i] = g.degree(v)
    for e in g.edges:
        if e.u in idx and e.v in idx:
            mat[idx[e.u]][idx[e.v]] -= 1
            mat[idx[e.v]][idx[e.u]] -= 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            for j in range(k + 1, size):
                if mat[j][k] != 0:
                    mat[k], mat[j] = mat[j], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[size - 1][size - 1]


def dfs_spanning_tree(g):
    """One spanning tree (edge-id frozenset) by breadth-first search."""
    seen = {g.vertices[0]}
    eids = set()
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y, eid in sorted(g.adj(x).items()):
            if y not in seen:
                seen.add(y)
                eids.add(eid)
                queue.append(y)
    if len(seen) != g.n:
        raise Disconnected("spanning trees need a connected graph")
    return frozenset(eids)


def _tree_split(g, tree_eids, removed_eid):
    """Vertex set of the removed edge's u-side component in tree - edge."""
    e = g.edge(removed_eid)
    tadj = {v: [] for v in g.vertices}
    for eid in tree_eids:
        if eid == removed_eid:
            continue
        t = g.edge(eid)
        tadj[t.u].append(t.v)
        tadj[t.v].append(t.u)
    comp = {e.u}
    queue = deque(comp)
    while queue:
        x = queue.popleft()
        for y in tadj[x]:
            if y not in comp:
                comp.add(y)
                queue.append(y)
    return comp


def _type2_keys(g, tree_eids):
    res = set()
    tset = frozenset(tree_eids)
    for f in tset:
        comp = _tree_split(g, tset, f)
        base = tset - {f}
        for e in g.edges:
            if e.eid in tset:
                continue
            if (e.u in comp) != (e.v in comp):
                res.add(base | {e.eid})
    return res


def type2_neighbors(g, t):
    """Trees reachable by deleting a tree edge and relinking across the cut."""
    return {SpanningTree(g, k) for k in _type2_keys(g, t.edge_set)}


def type1_neighbors(g, t):
    """Trees reachable by adding a non-tree edge and deleting another edge
    of the created cycle."""
    res = set()
    tset = t.edge_set
    for e in g.edges:
        if e.eid in tset:
            continue
        cycle = fundamental_cycle_edges(g, tset, e.eid)
        for f in cycle:
            if f != e.eid:
                res.add(SpanningTree(g, (tset - {f}) | {e.eid}))
    return res


def fundamental_cycle(g, t, eid):
    """Ordered edge list of the unique cycle of t + e."""
    if eid in t.edge_set:
        raise EdgeInTree(f"edge {eid} is in the tree")
    return fundamental_cycle_edges(g, t.edge_set, eid)


def enumerate_spanning_trees(g, max_trees=DEFAULT_MAX_TREES):
    """All spanning trees, sorted by canonical key.

    Walks the edge-exchange structure breadth-first from one tree; the
    Kirchhoff count acts as the size guard and a completeness check.
    """
    expected = count_spanning_trees(g)
    if expected > max_trees:
        raise TooManyTrees(f"{expected} trees exceed guard {max_trees}")
    start = dfs_spanning_tree(g)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _type2_keys(g, cur):
            fz = frozenset(nxt)
            if fz not in seen:
                seen.add(fz)
                queue.append(fz)
    assert len(seen) == expected, "exchange walk missed trees"
    return [SpanningTree(g, k) for k in sorted(tuple(sorted(k)) for k in seen)]


def serialize_trees(trees):
    return "".join(f"t: {','.join(map(str, t.key))}\n" for t in trees)


def witness_edge_for_pair(g, t, e1, e2):
    """Non-tree edge whose fundamental cycle contains both tree edges.

    Not every tree admits one for a given pair (a diamond with the tree
    {01, 02, 23} separates 01 from 23), but trees built by
    reverse_delete_tree with the pair protected always do."""
    if not is_two_connected(g) or g.n == 2:
        raise NotTwoConnected("witness requires a 2-connected host != K2")
    if e1 == e2 or e1 not in t.edge_set or e2 not in t.edge_set:
        raise ValueError("e1, e2 must be two distinct tree edges")
    for e in g.edges:
        if e.eid in t.edge_set:
            continue
        cyc = set(fundamental_cycle_edges(g, t.edge_set, e.eid))
        if e1 in cyc and e2 in cyc:
            return e.eid
    raise NoWitness(f"no witness for pair ({e1}, {e2}) on this tree")


def _edges_share_cycle(g, eids, e1, e2):
    """True if e1, e2 lie on a common cycle of the subgraph on eids."""
    sub = g.subgraph_edges(eids, vertices=g.vertices)
    for b in block_decomposition(sub).blocks:
        beids = {e.eid for e in b.edges}
        if e1 in beids and e2 in beids:
            return b.m > 1
    return False


def reverse_delete_tree(g, protected_pair=None):
    """Spanning tree by repeated deletion of cycle edges (reverse Kruskal).

    Edges are scanned in ascending id order. With protected_pair=(e1, e2)
    on a 2-connected host, deletions that would destroy every surviving
    cycle through both edges are deferred, so the last deleted edge lies
    on a surviving cycle containing e1 and e2.

    Returns (tree, trace); each trace entry is (deleted edge id, edge ids
    of a cycle of the surviving graph through it at deletion time).
    """
    if not is_connected(g):
        raise Disconnected("reverse delete needs a connected graph")
    if protected_pair is not None:
        e1, e2 = protected_pair
        if e1 == e2:
            raise ValueError("protected edges must be distinct")
        if not is_two_connected(g) or g.n == 2:
            raise NotTwoConnected("protected pair requires a 2-connected host != K2")
    surviving = set(g.edge_ids())
    trace = []
    target = g.n - 1
    while len(surviving) > target:
        pick = None
        nonbridge = _non_bridges(g, surviving)
        for d in sorted(nonbridge):
            if protected_pair is None:
                pick = d
                break
            if d in (e1, e2):
                continue
            rest = surviving - {d}
            if len(rest) == target or _edges_share_cycle(g, rest, e1, e2):
                pick = d
                break
        if pick is None:
            raise NoWitness("no deletable edge preserves the protected cycle")
        cycle = _cycle_through(g, surviving, pick)
        surviving.discard(pick)
        trace.append((pick, tuple(cycle)))
    return SpanningTree.of(g, surviving), trace


def _non_bridges(g, eids):
    sub = g.subgraph_edges(eids, vertices=g.vertices)
    out = []
    for b in block_decomposition(sub).blocks:
        if b.m > 1:
            out.extend(e.eid for e in b.edges)
    return out


def _cycle_through(g, eids, d):
    e = g.edge(d)
    rest = eids - {d}
    # BFS path between the endpoints avoiding d
    parent = {e.u: (None, None)}
    queue = deque([e.u])
    while queue:
        x = queue.popleft()
        if x == e.v:
            break
        for y, eid in g.adj(x).items():
            if eid in rest and y not in parent:
                parent[y] = (x, eid)
                queue.append(y)
    path = []
    x = e.v
    while x != e.u:
        px, eid = parent[x]
        path.append(eid)
        x = px
    return [d] + path[::-1]
