import numpy as np

from oracles import random_graph
from p5gem import kernels
from p5gem._accel import JIT_ENABLED, py_func
from p5gem.graph import Graph, canonical_order, iter_induced
from p5gem.special import cycle, pattern


def _color_args(G, k):
    nbrs, deg = G.neighbor_table()
    return G.adj, nbrs, deg, k


def test_jit_flag_is_boolean():
    assert isinstance(JIT_ENABLED, bool)


def test_color_search_jit_matches_python(rng):
    slow = py_func(kernels.color_search)
    for _ in range(60):
        G = random_graph(rng, int(rng.integers(0, 12)))
        for k in range(0, 5):
            fast_res = kernels.color_search(*_color_args(G, k))
            slow_res = slow(*_color_args(G, k))
            assert bool(fast_res[0]) == bool(slow_res[0])
            assert np.array_equal(fast_res[1], slow_res[1])
            assert fast_res[2] == slow_res[2]


def test_induced_search_jit_matches_python(rng):
    patterns = [cycle(5), pattern("P5"), pattern("gem"), Graph.complete(3)]
    for _ in range(20):
        G = random_graph(rng, int(rng.integers(5, 12)))
        for H in patterns:
            fast = sorted(iter_induced(H, G))
            saved = kernels.induced_search
            try:
                kernels.induced_search = py_func(saved)
                slow = sorted(iter_induced(H, G))
            finally:
                kernels.induced_search = saved
            assert fast == slow
