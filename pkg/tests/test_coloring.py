import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_chromatic_number, random_graph
from p5gem.coloring import (
    chi_c5_expansion,
    chromatic_number,
    is_proper_coloring,
    k_colorable,
    optimal_coloring,
)
from p5gem.graph import Graph, GraphError, clique_number
from p5gem.special import ExpansionSpec, clique_expansion


def test_k_colorable_examples(c5):
    assert k_colorable(c5, 2) is None
    col = k_colorable(c5, 3)
    assert col is not None and is_proper_coloring(c5, col.assignment, 3)
    assert k_colorable(clique_expansion((1, (4, 1, 4, 1, 1))), 5) is None


def test_k_colorable_degenerate():
    assert k_colorable(Graph.empty(0), 0).assignment == ()
    assert k_colorable(Graph.empty(3), 0) is None
    assert k_colorable(Graph.empty(3), 1).assignment == (1, 1, 1)
    with pytest.raises(GraphError):
        k_colorable(Graph.empty(1), -1)


def test_chromatic_number_examples(c5):
    assert chromatic_number(Graph.complete(7)) == 7
    assert chromatic_number(c5) == 3
    assert chromatic_number(clique_expansion((1, (3, 2, 2, 2, 2)))) == 6
    assert chromatic_number(Graph.empty(0)) == 0


def test_symmetry_breaking_uses_colours_in_order(c5):
    col = k_colorable(c5, 3)
    first_seen = []
    for c in col.assignment:
        if c not in first_seen:
            first_seen.append(c)
    assert first_seen == sorted(first_seen)


def test_chromatic_number_matches_partition_oracle(rng):
    for _ in range(250):
        G = random_graph(rng, int(rng.integers(0, 12)))
        chi = chromatic_number(G)
        assert chi == brute_chromatic_number(G)
        col = optimal_coloring(G)
        assert is_proper_coloring(G, col.assignment, chi)
        assert sorted(set(col.assignment)) == list(range(1, chi + 1))


def test_chromatic_bounds_and_vertex_deletion(rng):
    for _ in range(100):
        G = random_graph(rng, int(rng.integers(1, 11)))
        chi = chromatic_number(G)
        assert clique_number(G) <= chi <= G.n
        for v in range(G.n):
            assert chromatic_number(G.remove_vertex(v)) in (chi - 1, chi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_returned_colourings_are_proper(seed, k):
    G = random_graph(np.random.default_rng(seed), 9)
    col = k_colorable(G, k)
    if col is not None:
        assert is_proper_coloring(G, col.assignment, k)
    else:
        assert brute_chromatic_number(G) > k


def test_chi_c5_expansion_examples():
    assert chi_c5_expansion(ExpansionSpec(1, (1, 1, 1, 1, 1))) == 3
    assert chi_c5_expansion(ExpansionSpec(1, (4, 1, 4, 1, 1))) == 6
    assert chi_c5_expansion(ExpansionSpec(1, (5, 1, 5, 1, 1))) == 7
    with pytest.raises(GraphError):
        chi_c5_expansion(ExpansionSpec(7, (1,) * 8))


def test_is_proper_coloring_rejects(c5):
    assert not is_proper_coloring(c5, (1, 2, 1, 2, 1))
    assert not is_proper_coloring(c5, (1, 2, 1, 2))
    assert not is_proper_coloring(c5, (1, 2, 1, 2, 3), k=2)
    assert not is_proper_coloring(c5, (0, 1, 0, 1, 2))
