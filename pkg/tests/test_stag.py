import itertools
import json
import random

import pytest

from stag import (
    Unannotated,
    build_stag,
    complete_graph,
    cycle_graph,
    ground_truth_cliques,
    neighborhood_partitions,
    stag_to_dot,
    stag_to_json,
)
from stag.aux_graph import StagGraph
from stag.generators import random_connected_graph
from stag.oracles import brute_force_stag
from stag.params import maximal_cliques


def test_cycle_gives_complete_stag():
    for n in range(3, 7):
        s = build_stag(cycle_graph(n))
        assert s.graph.n == n
        assert s.graph.is_complete()


def test_tree_gives_single_vertex(p4):
    s = build_stag(p4)
    assert s.graph.n == 1
    assert s.graph.m == 0


def test_matches_brute_force_on_fixtures(c3, c4, c5, p3, k4, diamond, theta,
                                         bowtie, triangle_pendant):
    for g in (c3, c4, c5, p3, k4, diamond, theta, bowtie, triangle_pendant):
        s = build_stag(g)
        b = brute_force_stag(g)
        assert [t.key for t in s.trees] == [t.key for t in b.trees]
        assert s.graph.same_labeled(b.graph)


def test_partition_counts(k4, diamond, theta):
    for g in (k4, diamond, theta):
        s = build_stag(g)
        n, m = g.n, g.m
        for v in s.graph.vertices:
            p = neighborhood_partitions(s, v)
            assert len(p.cut_classes) == n - 1
            assert len(p.cycle_classes) == m - n + 1
            covered = set()
            for _, ws in p.cut_classes:
                assert not (covered & ws)
                covered |= ws
            assert covered == set(s.graph.adj(v))


def test_partitions_are_cliques(theta):
    s = build_stag(theta)
    for v in s.graph.vertices:
        p = neighborhood_partitions(s, v)
        for _, ws in p.cut_classes + p.cycle_classes:
            for a, b in itertools.combinations(sorted(ws), 2):
                assert s.graph.has_edge(a, b)


def test_partitions_require_annotation(c4):
    s = build_stag(c4)
    bare = StagGraph(s.graph, None, None)
    with pytest.raises(Unannotated):
        neighborhood_partitions(bare, 0)
    with pytest.raises(Unannotated):
        ground_truth_cliques(bare)


def test_ground_truth_cliques_c4(c4):
    s = build_stag(c4)
    cliques = ground_truth_cliques(s)
    cycle = [c for c in cliques if c.tag == "cycle"]
    cut = [c for c in cliques if c.tag == "cut"]
    assert len(cycle) == 1 and cycle[0].size == 4
    assert all(c.size == 2 for c in cut)


def test_ground_truth_cliques_k4(k4):
    s = build_stag(k4)
    cliques = ground_truth_cliques(s)
    cycle_sizes = {c.size for c in cliques if c.tag == "cycle"}
    cut_sizes = {c.size for c in cliques if c.tag == "cut"}
    assert cycle_sizes == {3, 4}
    # degree cuts give size 3; the 2+2 vertex bipartitions give size 4
    assert cut_sizes == {3, 4}


def test_ground_truth_matches_generic_clique_search():
    rng = random.Random(17)
    graphs = [cycle_graph(4), complete_graph(4)]
    for _ in range(6):
        n = rng.randint(3, 6)
        m = rng.randint(n - 1, min(9, n * (n - 1) // 2))
        graphs.append(random_connected_graph(n, m, rng.randrange(1 << 30)))
    for g in graphs:
        s = build_stag(g)
        if s.graph.n < 3:
            continue
        gt = {frozenset(c.members) for c in ground_truth_cliques(s)
              if c.size >= 3}
        generic = {c for c in maximal_cliques(s.graph) if len(c) >= 3}
        assert gt == generic


def test_triangle_lies_in_exactly_one_ground_truth_clique(k4, theta):
    for g in (k4, theta):
        s = build_stag(g)
        cliques = ground_truth_cliques(s)
        h = s.graph
        for tri in itertools.combinations(h.vertices, 3):
            a, b, c = tri
            if not (h.has_edge(a, b) and h.has_edge(b, c) and h.has_edge(a, c)):
                continue
            homes = [q for q in cliques if set(tri) <= q.members]
            assert len(homes) == 1


def test_stag_json_and_dot(c3):
    s = build_stag(c3)
    doc = json.loads(stag_to_json(s))
    assert doc["vertices"] == ["0", "1", "2"]
    assert len(doc["edges"]) == 3
    assert doc["trees"] == [[0, 1], [0, 2], [1, 2]]
    dot = stag_to_dot(s)
    assert dot.count("--") == 3

    bare = StagGraph(s.graph, None, None)
    assert json.loads(stag_to_json(bare))["trees"] is None


def test_stag_vertices_ordered_by_tree_key(theta):
    s = build_stag(theta)
    keys = [t.key for t in s.trees]
    assert keys == sorted(keys)
