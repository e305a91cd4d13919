"""Seeded random graph generators used by the stress tests and the CLI."""

import random

from .graph_core import Graph


def random_connected_graph(n, m, seed):
    """Random connected graph with exactly n vertices and m edges: a
    random tree plus distinct chords."""
    rng = random.Random(seed)
    if n < 1:
        raise ValueError("need at least one vertex")
    if m < n - 1 or m > n * (n - 1) // 2:
        raise ValueError("edge count out of range for a connected simple graph")
    pairs = []
    present = set()
    for v in range(1, n):
        u = rng.randrange(v)
        pairs.append((u, v))
        present.add(frozenset((u, v)))
    missing = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if frozenset((u, v)) not in present
    ]
    rng.shuffle(missing)
    pairs.extend(missing[: m - (n - 1)])
    return Graph.from_pairs(pairs, vertices=range(n))


def random_two_connected_graph(n, m, seed):
    """Random 2-connected graph with exactly n vertices and m edges.

    Built by ear addition: a base cycle, some ears with internal vertices
    (each such ear spends one edge beyond its vertex count), then chords
    (ears with no internal vertices) up to the edge budget."""
    rng = random.Random(seed)
    if n < 3:
        raise ValueError("2-connected graphs need at least three vertices")
    if m < n or m > n * (n - 1) // 2:
        raise ValueError("edge count out of range for a 2-connected simple graph")
    max_ears = min(m - n, n - 3)
    ears = rng.randint(0, max_ears) if max_ears > 0 else 0
    if ears == 0:
        base = n
        lengths = []
    else:
        total = rng.randint(ears, n - 3)
        cuts = sorted(rng.sample(range(1, total), ears - 1)) if ears > 1 else []
        bounds = [0] + cuts + [total]
        lengths = [b - a for a, b in zip(bounds, bounds[1:])]
        base = n - total
    pairs = [(i, (i + 1) % base) for i in range(base)]
    present = {frozenset(p) for p in pairs}
    used = base
    for length in lengths:
        a = rng.randrange(used)
        b = rng.randrange(used)
        while b == a:
            b = rng.randrange(used)
        chain = [a] + list(range(used, used + length)) + [b]
        for x, y in zip(chain, chain[1:]):
            pairs.append((x, y))
            present.add(frozenset((x, y)))
        used += length
    missing = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if frozenset((u, v)) not in present
    ]
    rng.shuffle(missing)
    pairs.extend(missing[: m - len(pairs)])
    return Graph.from_pairs(pairs, vertices=range(n))


def random_multiblock_graph(block_sizes, seed, extra_edges=2):
    """Chain of random 2-connected blocks glued at shared cut vertices."""
    rng = random.Random(seed)
    if not block_sizes:
        raise ValueError("need at least one block size")
    pairs = []
    next_id = 0
    glue = None
    for size in block_sizes:
        cap = size * (size - 1) // 2
        m = min(cap, size + rng.randint(0, extra_edges))
        block = random_two_connected_graph(size, m, rng.randrange(1 << 30))
        vmap = {}
        verts = sorted(block.vertices)
        if glue is not None:
            vmap[verts[0]] = glue
            verts = verts[1:]
        for v in verts:
            vmap[v] = next_id
            next_id += 1
        pairs.extend((vmap[e.u], vmap[e.v]) for e in block.edges)
        glue = vmap[max(block.vertices)]
    return Graph.from_pairs(pairs, vertices=range(next_id))
