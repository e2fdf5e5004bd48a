"""Compare the numba kernels against their pure-Python fallbacks.

Run with ``python3 benchmarks/bench_kernels.py``. The JIT column is empty
when numba is missing or ``P5GEM_DISABLE_JIT=1`` is set.
"""

import argparse
import time

import numpy as np

from p5gem import kernels
from p5gem._accel import JIT_ENABLED, py_func
from p5gem.graph import Graph, _placement_order
from p5gem.reference import reference_graphs
from p5gem.special import cycle, pattern


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def colouring_workload(impl):
    jobs = []
    for G in reference_graphs(7):
        nbrs, deg = G.neighbor_table()
        jobs.append((G.adj, nbrs, deg))

    def run():
        for adj, nbrs, deg in jobs:
            ok, _, _ = impl(adj, nbrs, deg, 6)
            assert not ok

    return run


def induced_workload(impl, seed=0):
    rng = np.random.default_rng(seed)
    hosts = []
    for _ in range(40):
        n = 16
        a = np.triu((rng.random((n, n)) < 0.5).astype(np.uint8), 1)
        hosts.append(Graph(a | a.T))
    pats = [cycle(5), pattern("P5"), pattern("gem")]

    def run():
        for G in hosts:
            for H in pats:
                order = _placement_order(H)
                cand = np.ones((H.n, G.n), dtype=np.bool_)
                impl(H.adj, G.adj, order, cand, 10_000)

    return run


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    rows = [
        ("color_search, 46 graphs, k=6", colouring_workload, kernels.color_search),
        ("induced_search, 40 hosts x 3 patterns", induced_workload, kernels.induced_search),
    ]
    print(f"{'workload':40s} {'python (s)':>12s} {'jit (s)':>10s} {'speedup':>8s}")
    for name, make, kernel in rows:
        slow = _time(make(py_func(kernel)), args.repeat)
        if JIT_ENABLED:
            make(kernel)()  # compile outside the timing
            fast = _time(make(kernel), args.repeat)
            print(f"{name:40s} {slow:12.3f} {fast:10.4f} {slow / fast:8.1f}")
        else:
            print(f"{name:40s} {slow:12.3f} {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
