import random
from itertools import combinations, product

import pytest

from oracles import brute_clique_number, has_induced, nx_isomorphic
from p5gem.graph import Graph, GraphError, canonical_form, clique_number, find_induced, is_clique, iter_induced, nontrivial_modules
from p5gem.special import (
    BASES,
    ExpansionSpec,
    HStarSpec,
    base_graph,
    clique_expansion,
    cycle,
    is_p5_gem_free,
    pattern,
    random_cograph,
    realize_hstar,
    sample_hstar,
    sample_hstar_detailed,
)

EXPECTED_ORDERS = (5, 6, 7, 7, 8, 8, 8, 8, 9, 9)


def test_base_graph_examples(c5):
    assert base_graph(1) == c5
    assert base_graph(7).n == 8 and base_graph(7).m == 13
    assert tuple(base_graph(i).n for i in BASES) == EXPECTED_ORDERS
    with pytest.raises(GraphError):
        base_graph(11)


@pytest.mark.parametrize("i", BASES)
def test_base_graphs_are_p5_gem_free_with_c5(i):
    G = base_graph(i)
    assert is_p5_gem_free(G) is None
    assert not has_induced(pattern("P5"), G) and not has_induced(pattern("gem"), G)
    assert find_induced(cycle(5), G) is not None


def test_clique_expansion_examples():
    assert clique_expansion((1, (1, 1, 1, 1, 1))) == cycle(5)
    G = clique_expansion((1, (2, 1, 1, 1, 1)))
    # C5 loses v1's 2 edges, gains the Q1 edge and 2x2 edges to Q2, Q5
    assert (G.n, G.m) == (6, 8)
    assert clique_expansion(ExpansionSpec(7, (1,) * 8)) == base_graph(7)
    with pytest.raises(GraphError):
        ExpansionSpec(1, (1, 0, 1, 1, 1))
    with pytest.raises(GraphError):
        ExpansionSpec(1, (1, 1, 1))


def test_clique_expansion_structure():
    spec = ExpansionSpec(9, (2, 1, 3, 1, 1, 2, 1, 1, 2))
    G = clique_expansion(spec)
    B = base_graph(9)
    blocks = spec.blocks()
    for j, l in product(range(B.n), repeat=2):
        for u, v in product(blocks[j], blocks[l]):
            if u != v:
                assert G.has_edge(u, v) == (j == l or B.has_edge(j, l))
    assert spec.omega() == clique_number(G)


def test_pattern_examples(c5):
    assert (pattern("gem").n, pattern("gem").m) == (5, 7)
    assert pattern("P5").m == 4
    assert pattern("C5") == base_graph(1)
    assert pattern("K_4") == Graph.complete(4) == pattern("K4")
    with pytest.raises(GraphError):
        pattern("house")


def test_is_p5_gem_free_examples(c5, p5):
    assert is_p5_gem_free(c5) is None
    assert is_p5_gem_free(p5) == ("P5", (0, 1, 2, 3, 4))
    name, emb = is_p5_gem_free(pattern("gem"))
    assert name == "gem"


@pytest.mark.parametrize("i", BASES)
def test_expansions_are_p5_gem_free(i):
    n = base_graph(i).n
    for sizes in product((1, 2), repeat=n):
        spec = ExpansionSpec(i, sizes)
        G = clique_expansion(spec)
        assert is_p5_gem_free(G) is None
        # one vertex per block induces the base graph
        assert find_induced(base_graph(i), G) is not None
        for j, block in enumerate(spec.blocks()):
            if len(block) >= 2:
                assert frozenset(block) in nontrivial_modules(G)


def test_g1_expansion_omega_is_max_adjacent_pair():
    for sizes in product(range(1, 4), repeat=5):
        G = clique_expansion((1, sizes))
        expected = max(sizes[i] + sizes[(i + 1) % 5] for i in range(5))
        assert clique_number(G) == expected
    assert brute_clique_number(clique_expansion((1, (3, 1, 2, 1, 2)))) == 5


def _minimal_spec():
    return HStarSpec((1, 1, 1, 1, 1), Graph.empty(1), ((1, frozenset({0})),))


def test_realize_hstar_minimal():
    G = realize_hstar(_minimal_spec())
    assert G.n == 7
    # A6 (vertex 5) sees A1, A3, A4; T1 (vertex 6) sees only A6
    assert G.neighbors(5) == [0, 2, 3, 6]
    assert G.neighbors(6) == [5]
    with pytest.raises(GraphError):
        HStarSpec((1, 1, 0, 1, 1), Graph.empty(1), ((1, frozenset({0})),))
    with pytest.raises(GraphError):
        HStarSpec((1, 1, 1, 1, 1), Graph.empty(1), ((1, frozenset()),))


def _assert_hstar_structure(spec, G):
    parts = spec.parts()
    complete_to = {0: {1, 4, 5}, 1: {0, 2}, 2: {1, 3, 5}, 3: {2, 4, 5}, 4: {0, 3}, 5: {0, 2, 3}}
    for i in range(5):
        assert is_clique(G, parts[i])
    for i in range(6):
        for j in range(6):
            if i == j:
                continue
            expect = j in complete_to[i]
            for u, v in product(parts[i], parts[j]):
                if j == 5 and i == 5:
                    continue
                assert G.has_edge(u, v) == expect
    a6 = set(parts[5])
    for comp, (_, att) in zip(spec.components(), spec.a7):
        assert is_clique(G, comp)
        for v in comp:
            outside = set(G.neighbors(v)) - set(comp)
            assert outside == {parts[5][x] for x in att}
            assert outside & a6


def test_random_cograph_is_p4_free():
    rng = random.Random(3)
    for n in range(1, 12):
        G = random_cograph(rng, n)
        assert find_induced(pattern("P5").remove_vertex(4), G) is None


def test_sample_hstar_is_deterministic():
    assert sample_hstar(12, seed=1) == sample_hstar(12, seed=1)
    with pytest.raises(GraphError):
        sample_hstar(6, seed=1)


def test_hstar_samples():
    g4 = base_graph(4)
    for seed in range(200):
        budget = 7 + seed % 14
        s = sample_hstar_detailed(budget, seed)
        assert s.graph.n <= budget
        assert is_p5_gem_free(s.graph) is None
        assert find_induced(g4, s.graph) is None
        _assert_hstar_structure(s.spec, s.graph)
