import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_automorphisms, brute_clique_number, nx_isomorphic, random_graph
from p5gem.graph import (
    Graph,
    GraphError,
    automorphisms,
    canonical_form,
    clique_number,
    find_induced,
    find_nontrivial_module,
    induced_subgraph,
    is_induced_embedding,
    is_module,
    iter_induced,
    nontrivial_modules,
)
from p5gem.special import base_graph, clique_expansion, cycle, gem, path


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    a = np.zeros((n, n), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    a[iu] = bits
    return Graph(a + a.T)


def test_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph([[0, 1], [0, 0]])
    with pytest.raises(GraphError):
        Graph([[1]])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_induced_subgraph_examples(c5):
    assert induced_subgraph(c5, {0, 1, 2}) == path(3)
    assert induced_subgraph(Graph.complete(6), {0, 1, 2, 3}) == Graph.complete(4)
    G7 = base_graph(7)
    # v2, v3, v6, v4, v8 -> 0-based 1, 2, 5, 3, 7
    sub = induced_subgraph(G7, [1, 2, 5, 3, 7])
    assert nx_isomorphic(sub, c5)
    with pytest.raises(GraphError):
        induced_subgraph(c5, [5])


def test_induced_subgraph_keeps_ascending_order():
    G = Graph.from_edges(4, [(3, 0)])
    assert induced_subgraph(G, [3, 0]).edges() == [(0, 1)]


@given(graphs())
def test_induced_on_all_vertices_is_identity(G):
    assert induced_subgraph(G, range(G.n)) == G


def test_clique_number_examples(c5):
    assert clique_number(Graph.complete(7)) == 7
    assert clique_number(c5) == 2
    assert clique_number(clique_expansion((1, (4, 1, 4, 1, 1)))) == 5
    assert clique_number(Graph.empty(0)) == 0


def test_clique_number_matches_subset_enumeration(rng):
    for _ in range(300):
        G = random_graph(rng, int(rng.integers(0, 11)))
        assert clique_number(G) == brute_clique_number(G)


def test_module_examples(c5):
    assert find_nontrivial_module(Graph.complete(3)) == {0, 1}
    assert find_nontrivial_module(c5) is None
    assert find_nontrivial_module(clique_expansion((1, (2, 1, 1, 1, 1)))) == {0, 1}


def _brute_least_module(G):
    for size in range(2, G.n):
        for S in combinations(range(G.n), size):
            if is_module(G, S):
                return frozenset(S)
    return None


def test_module_tie_break_matches_subset_scan(rng):
    for _ in range(200):
        G = random_graph(rng, int(rng.integers(0, 9)))
        assert find_nontrivial_module(G) == _brute_least_module(G)
        for M in nontrivial_modules(G):
            assert is_module(G, M) and 1 < len(M) < G.n


def test_canonical_form_examples(c5, p5):
    relabelled = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert canonical_form(c5) == canonical_form(relabelled)
    assert canonical_form(p5) != canonical_form(c5)
    assert canonical_form(clique_expansion((1, (2, 1, 2, 1, 1)))) == canonical_form(
        clique_expansion((1, (1, 2, 1, 2, 1)))
    )


def test_canonical_form_invariant_under_relabelling(rng):
    for _ in range(1000):
        G = random_graph(rng, int(rng.integers(0, 11)))
        perm = rng.permutation(G.n)
        assert canonical_form(G) == canonical_form(G.relabel(perm))


def test_canonical_form_separates_nonisomorphic(rng):
    pool = [random_graph(rng, int(rng.integers(4, 8))) for _ in range(80)]
    for G, H in combinations(pool, 2):
        if G.n == H.n and G.m == H.m:
            assert (canonical_form(G) == canonical_form(H)) == nx_isomorphic(G, H)


def test_canonical_form_size_cap():
    with pytest.raises(GraphError):
        canonical_form(Graph.empty(257))


def test_automorphism_examples(c5):
    assert len(automorphisms(c5)) == 10
    assert len(automorphisms(Graph.complete(4))) == 24
    G7 = base_graph(7)
    assert set(automorphisms(G7)) == brute_automorphisms(G7)
    assert len(automorphisms(G7)) == 4
    with pytest.raises(GraphError):
        automorphisms(Graph.empty(13))


@pytest.mark.parametrize("i", range(1, 11))
def test_automorphism_groups_of_base_graphs(i):
    G = base_graph(i)
    auts = automorphisms(G)
    if G.n <= 8:
        assert set(auts) == brute_automorphisms(G)
    assert math.factorial(G.n) % len(auts) == 0
    assert auts[0] == tuple(range(G.n))
    group = set(auts)
    for p in auts:
        for q in auts:
            assert tuple(p[q[v]] for v in range(G.n)) in group


def test_find_induced_examples(c5, p5):
    assert find_induced(p5, c5) is None
    G = clique_expansion((1, (2, 1, 1, 1, 1)))
    emb = find_induced(c5, G)
    assert emb is not None and is_induced_embedding(c5, G, emb)
    # one vertex per expansion clique: Q1 = {0, 1}, then 2, 3, 4, 5
    assert len({0 if v < 2 else v for v in emb}) == 5
    assert find_induced(gem(), gem()) == tuple(range(5))


def test_find_induced_images_are_isomorphic(rng):
    for _ in range(200):
        G = random_graph(rng, int(rng.integers(5, 12)))
        H = random_graph(rng, int(rng.integers(1, 6)))
        emb = find_induced(H, G)
        if emb is not None:
            assert is_induced_embedding(H, G, emb)
            assert canonical_form(induced_subgraph(G, emb)) == canonical_form(H)
            assert nx_isomorphic(induced_subgraph(G, emb), H)


def test_find_induced_agrees_with_subset_search(rng):
    from oracles import has_induced

    for _ in range(60):
        G = random_graph(rng, int(rng.integers(5, 9)))
        H = random_graph(rng, 4)
        assert (find_induced(H, G) is not None) == has_induced(H, G)


def test_iter_induced_counts_c5_copies(c5):
    assert len(list(iter_induced(c5, c5))) == 10
    assert find_induced(Graph.complete(6), c5) is None
