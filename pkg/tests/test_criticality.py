from itertools import product

import pytest

from oracles import brute_chromatic_number, random_graph
from p5gem.criticality import (
    PRUNE_CHI,
    PRUNE_CLIQUE,
    block_similar_pair,
    criticality_order,
    has_proper_k_clique,
    is_vertex_critical,
    similar_cliques_prune,
    twin_classes,
)
from p5gem.graph import Graph
from p5gem.special import ExpansionSpec, base_graph, clique_expansion, path


def _brute_critical(G, k):
    if brute_chromatic_number(G) != k:
        return False
    return all(brute_chromatic_number(G.remove_vertex(v)) == k - 1 for v in range(G.n))


def test_known_critical_graphs(c5):
    assert is_vertex_critical(c5, 3).verdict
    assert is_vertex_critical(Graph.complete(4), 4).verdict
    G = clique_expansion((7, (1, 1, 3, 1, 1, 1, 4, 4)))
    rep = is_vertex_critical(G, 6)
    assert rep.verdict and rep.chi == 6
    assert set(rep.per_vertex) == set(range(G.n))
    assert criticality_order(G) == 6


def test_non_critical_examples(c5):
    assert not is_vertex_critical(c5, 4).verdict
    assert is_vertex_critical(c5, 4).prune_reason == PRUNE_CHI
    G = clique_expansion((1, (4, 1, 4, 1, 2)))
    rep = is_vertex_critical(G, 6)
    assert not rep.verdict and rep.prune_reason == PRUNE_CLIQUE
    assert criticality_order(path(4)) is None
    assert criticality_order(Graph.empty(0)) is None
    with pytest.raises(ValueError):
        is_vertex_critical(c5, 0)


def test_full_report_values():
    G = clique_expansion((1, (3, 2, 2, 2, 2)))
    rep = is_vertex_critical(G, 6, full=True)
    assert rep.verdict and rep.chi == 6 and not rep.partial
    rep = is_vertex_critical(path(3), 2, full=True)
    assert not rep.verdict and rep.per_vertex == {0: 2, 1: 1, 2: 2}
    assert rep.to_dict()["per_vertex"] == {"0": 2, "1": 1, "2": 2}


def test_vertex_critical_matches_brute_force(rng):
    for _ in range(200):
        G = random_graph(rng, int(rng.integers(1, 10)))
        for k in range(1, 6):
            assert is_vertex_critical(G, k).verdict == _brute_critical(G, k)


def test_twin_classes():
    G = clique_expansion((1, (2, 1, 3, 1, 1)))
    classes = twin_classes(G)
    assert sorted(map(len, classes)) == [1, 1, 1, 2, 3]
    assert twin_classes(Graph.empty(3)) == [[0, 1, 2]]
    for cls in twin_classes(path(4)):
        assert len(cls) == 1


def test_has_proper_k_clique():
    assert not has_proper_k_clique(Graph.complete(4), 4)
    assert has_proper_k_clique(Graph.complete(5), 4)
    assert has_proper_k_clique(clique_expansion((1, (2, 2, 1, 1, 1))), 4)
    assert not has_proper_k_clique(clique_expansion((1, (2, 1, 1, 1, 1))), 4)


def test_similar_cliques_examples(c5):
    A, B, pairing = similar_cliques_prune(path(3))
    assert (A, B) == ((0,), (2,))
    assert similar_cliques_prune(c5) is None
    spec = ExpansionSpec(2, (1, 1, 1, 1, 1, 1))
    # G2 has non-adjacent vertices with nested neighbourhoods
    assert block_similar_pair(spec) is not None
    A, B, pairing = similar_cliques_prune(clique_expansion(spec), spec=spec)
    assert len(A) == len(B)


def test_similar_pair_implies_not_critical(rng):
    hits = 0
    for _ in range(300):
        G = random_graph(rng, int(rng.integers(2, 9)))
        found = similar_cliques_prune(G, max_m=2)
        if found is None:
            continue
        hits += 1
        A, B, pairing = found
        for a, b in pairing:
            assert not G.adj[a, b]
        chi = brute_chromatic_number(G)
        assert not _brute_critical(G, chi)
    assert hits > 20


@pytest.mark.parametrize("base", [2, 3])
def test_g2_g3_expansions_never_critical(base):
    n = base_graph(base).n
    assert block_similar_pair(ExpansionSpec(base, (1,) * n)) is not None
    for sizes in product((1, 2), repeat=n):
        spec = ExpansionSpec(base, sizes)
        assert criticality_order(clique_expansion(spec)) is None
