import random

import pytest

from stag import (
    TooLarge,
    are_isomorphic,
    build_stag,
    cartesian_product,
    complete_graph,
    cycle_graph,
    is_prime,
    path_graph,
    prime_factorize,
    product_of_block_stags,
    single_vertex_graph,
)
from stag.generators import random_multiblock_graph, random_two_connected_graph


def _product(graphs):
    out = graphs[0]
    for g in graphs[1:]:
        out = cartesian_product(out, g)
    return out


def test_prime_small_graphs(c5, k4, p4):
    assert is_prime(c5)
    assert is_prime(k4)
    assert is_prime(p4)
    assert is_prime(complete_graph(2))


def test_k1_prime_by_convention():
    assert is_prime(single_vertex_graph())


def test_c4_factors_into_two_k2():
    fz = prime_factorize(cycle_graph(4))
    assert len(fz.factors) == 2
    assert all(f.n == 2 and f.m == 1 for f in fz.factors)
    assert not fz.is_prime


def test_coordinates_describe_the_product():
    g = _product([complete_graph(3), path_graph(2)])
    fz = prime_factorize(g)
    assert sorted(f.n for f in fz.factors) == [2, 3]
    # each edge changes exactly one coordinate, along an edge of that factor
    order = fz.factors
    for e in g.edges:
        cu, cv = fz.coordinates[e.u], fz.coordinates[e.v]
        diff = [i for i in range(len(cu)) if cu[i] != cv[i]]
        assert len(diff) == 1
        (i,) = diff
        assert order[i].has_edge(cu[i], cv[i])


def test_factorization_roundtrip_random():
    rng = random.Random(13)
    primes = [complete_graph(2), complete_graph(3), path_graph(3), cycle_graph(5)]
    for _ in range(12):
        parts = rng.sample(primes, rng.randint(1, 3))
        g = _product(parts)
        if g.n > 200:
            continue
        fz = prime_factorize(g)
        assert len(fz.factors) == len(parts)
        rebuilt = _product(list(fz.factors))
        assert are_isomorphic(g, rebuilt)[0]


def test_three_way_product():
    k2 = complete_graph(2)
    g = _product([k2, k2, k2])  # the cube
    fz = prime_factorize(g)
    assert len(fz.factors) == 3
    assert all(f.n == 2 for f in fz.factors)


def test_factor_guard():
    with pytest.raises(TooLarge):
        prime_factorize(cycle_graph(5), max_n=4)


def test_aux_of_two_connected_is_prime():
    rng = random.Random(29)
    for _ in range(10):
        n = rng.randint(3, 5)
        m = rng.randint(n, min(8, n * (n - 1) // 2))
        g = random_two_connected_graph(n, m, rng.randrange(1 << 30))
        assert is_prime(build_stag(g).graph)


def test_block_product_theorem_fixtures(bowtie, triangle_pendant, p4):
    for g in (bowtie, triangle_pendant, p4):
        whole = build_stag(g).graph
        prod = product_of_block_stags(g).graph
        assert are_isomorphic(whole, prod)[0]


def test_block_product_theorem_random():
    rng = random.Random(31)
    for _ in range(10):
        sizes = [rng.randint(3, 4) for _ in range(rng.randint(2, 3))]
        g = random_multiblock_graph(sizes, rng.randrange(1 << 30))
        whole = build_stag(g).graph
        prod = product_of_block_stags(g).graph
        assert are_isomorphic(whole, prod)[0]


def test_pendant_edge_does_not_change_stag(k4, triangle_pendant, c3):
    # K2 blocks contribute the K1 identity factor
    s_c3 = build_stag(c3).graph
    s_pendant = build_stag(triangle_pendant).graph
    assert are_isomorphic(s_c3, s_pendant)[0]
