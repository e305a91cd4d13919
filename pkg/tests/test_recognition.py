import random

import pytest

from stag import (
    Disconnected,
    Graph,
    NotAStag,
    NotMinimal,
    are_isomorphic,
    build_stag,
    complete_graph,
    cycle_graph,
    enumerate_preimages,
    extend_to_maximal_clique,
    infer_params,
    invert,
    invert_prime,
    label_cut_cliques,
    recover_neighborhood_partitions,
    single_vertex_graph,
)
from stag.generators import random_multiblock_graph, random_two_connected_graph
from stag.oracles import brute_force_is_stag
from stag.recognition import add_chords, layout_tree


def test_extend_triangle_in_k4(k4):
    assert extend_to_maximal_clique(k4, {0, 1, 2}) == {0, 1, 2, 3}


def test_extend_is_identity_on_maximal(c4):
    h = build_stag(c4).graph  # K4
    assert extend_to_maximal_clique(h, {0, 1, 2}) == {0, 1, 2, 3}


def test_extend_ambiguous_edge_seed(diamond):
    # both triangles of the diamond contain the hinge edge
    with pytest.raises(NotAStag):
        extend_to_maximal_clique(diamond, {0, 2})


def test_extend_rejects_non_clique(c4):
    with pytest.raises(ValueError):
        extend_to_maximal_clique(c4, {0, 2})
    with pytest.raises(ValueError):
        extend_to_maximal_clique(c4, {0})


def test_recovered_partitions_on_aux_c4(c4):
    h = build_stag(c4).graph
    cut_p, cycle_p = recover_neighborhood_partitions(h, 0)
    assert len(cut_p) == 3
    assert len(cycle_p) == 1
    assert set().union(*cut_p) == set(h.adj(0))
    assert set().union(*cycle_p) == set(h.adj(0))


def test_recovered_partitions_reject_non_stag(p4):
    with pytest.raises(NotAStag):
        recover_neighborhood_partitions(p4, 1)


def test_infer_params_matches_origin(c4, k4, theta, diamond):
    for g in (c4, k4, theta, diamond):
        h = build_stag(g).graph
        inferred = infer_params(h)
        assert (inferred.n, inferred.m) == (g.n, g.m)


def test_labels_cover_every_cut_clique(theta):
    h = build_stag(theta).graph
    params = infer_params(h)
    x = h.vertices[0]
    items = label_cut_cliques(params, x)
    assert len(items) == params.n - 1
    assert all(it.label for it in items)


def test_layout_and_chords_rebuild_a_cycle(c5):
    h = build_stag(c5).graph  # K5
    params = infer_params(h)
    items = label_cut_cliques(params, h.vertices[0])
    tree = layout_tree(items, params.n)
    g = add_chords(tree)
    assert are_isomorphic(g, c5)[0]


def test_layout_infeasible_labels():
    from stag.recognition import LabeledTreeEdge

    items = [
        LabeledTreeEdge(0, frozenset([0])),
        LabeledTreeEdge(1, frozenset([0])),
        LabeledTreeEdge(2, frozenset([0])),
    ]
    # three edges of one cycle id must come out as a path
    tree = layout_tree(items, 4)
    sub = [(u, v) for u, v, label, _ in tree.edges if 0 in label]
    degs = {}
    for u, v in sub:
        degs[u] = degs.get(u, 0) + 1
        degs[v] = degs.get(v, 0) + 1
    assert sorted(degs.values()) == [1, 1, 2, 2]

    with pytest.raises(NotAStag):
        layout_tree(items, 5)  # wrong vertex count, no layout exists


def test_invert_prime_fixtures(c3, c4, c5, k4, diamond, theta):
    for g in (c3, c4, c5, k4, diamond, theta):
        h = build_stag(g).graph
        g2 = invert_prime(h)
        assert are_isomorphic(build_stag(g2).graph, h)[0]


def test_invert_prime_complete_input():
    # K_n is Aux(C_n)
    g = invert_prime(complete_graph(6))
    assert are_isomorphic(g, cycle_graph(6))[0]


def test_invert_k1_and_k2():
    assert invert(single_vertex_graph()).n == 1
    with pytest.raises(NotAStag):
        invert(Graph.from_pairs([(0, 1)]))


def test_invert_multiblock(bowtie, triangle_pendant):
    for g in (bowtie, triangle_pendant):
        h = build_stag(g).graph
        g2 = invert(h)
        assert are_isomorphic(build_stag(g2).graph, h)[0]


def test_invert_result_is_minimal():
    rng = random.Random(41)
    for _ in range(6):
        sizes = [rng.randint(3, 4) for _ in range(2)]
        g = random_multiblock_graph(sizes, rng.randrange(1 << 30))
        h = build_stag(g).graph
        g2 = invert(h)
        from stag import bridges

        assert bridges(g2) == []


def test_invert_rejections(p3, p4, c6, k13, petersen):
    for h in (p3, p4, c6, k13, petersen):
        with pytest.raises(NotAStag):
            invert(h)


def test_rejections_agree_with_brute_force(p3, p4, c6, k13):
    for h in (p3, p4, c6, k13):
        assert brute_force_is_stag(h) is None


def test_brute_force_finds_small_preimages(c3):
    h = build_stag(c3).graph  # K3
    g = brute_force_is_stag(h)
    assert g is not None
    assert are_isomorphic(build_stag(g).graph, h)[0]


def test_invert_disconnected():
    with pytest.raises(Disconnected):
        invert(Graph([0, 1, 2], [(0, 0, 1)]))


def test_invert_random_roundtrip():
    rng = random.Random(43)
    for _ in range(12):
        n = rng.randint(3, 6)
        m = rng.randint(n, min(9, n * (n - 1) // 2))
        g = random_two_connected_graph(n, m, rng.randrange(1 << 30))
        h = build_stag(g).graph
        g2 = invert(h)
        assert are_isomorphic(build_stag(g2).graph, h)[0]


def test_enumerate_preimages(c3):
    more = enumerate_preimages(c3, 5)
    assert len(more) == 5
    base = build_stag(c3).graph
    for g in more:
        assert g.n > c3.n
        assert are_isomorphic(build_stag(g).graph, base)[0]


def test_enumerate_preimages_rejects_bridged(triangle_pendant):
    with pytest.raises(NotMinimal):
        enumerate_preimages(triangle_pendant, 3)
