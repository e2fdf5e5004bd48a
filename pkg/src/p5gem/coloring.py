"""Exact colouring: k-colourability, chromatic number, C5-expansion closed form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .graph import Graph, GraphError, clique_number


@dataclass(frozen=True)
class Coloring:
    """Proper colouring with colours ``1..k``; ``assignment[v]`` is the colour of v."""

    assignment: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.assignment, default=0)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out


def is_proper_coloring(G: Graph, assignment: Sequence[int], k: int | None = None) -> bool:
    """Independent check: length, colour range and no monochromatic edge."""
    if len(assignment) != G.n:
        return False
    if any(not isinstance(c, int) or c < 1 for c in assignment):
        return False
    if k is not None and any(c > k for c in assignment):
        return False
    return all(assignment[u] != assignment[v] for u, v in G.edges())


def k_colorable(G: Graph, k: int, omega: int | None = None) -> Coloring | None:
    """A proper colouring with at most k colours, or None iff chi(G) > k.

    ``omega`` may pass a known clique number to skip recomputing the cutoff.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    if G.n == 0:
        return Coloring(())
    if omega is None:
        omega = clique_number(G)
    if omega > k:
        return None
    nbrs, deg = G.neighbor_table()
    ok, colors, _ = kernels.color_search(G.adj, nbrs, deg, k)
    if not ok:
        return None
    return Coloring(tuple(int(c) + 1 for c in colors))


def chromatic_number(G: Graph) -> int:
    """chi(G), searching upward from the clique number."""
    if G.n == 0:
        return 0
    omega = clique_number(G)
    k = omega
    while k_colorable(G, k, omega=omega) is None:
        k += 1
    return k


def optimal_coloring(G: Graph) -> Coloring:
    chi = chromatic_number(G)
    col = k_colorable(G, chi)
    assert col is not None
    return col


def c5_expansion_omega(sizes: Sequence[int]) -> int:
    return max(sizes[i] + sizes[(i + 1) % 5] for i in range(5))


def chi_c5_expansion(spec) -> int:
    """Chromatic number of a clique expansion of C5 (base graph 1): max(omega, ceil(n/2))."""
    if spec.base != 1:
        raise GraphError(f"closed form only holds for base graph 1, got G{spec.base}")
    sizes = spec.sizes
    return max(c5_expansion_omega(sizes), (sum(sizes) + 1) // 2)
