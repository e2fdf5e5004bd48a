"""The ten base graphs, clique expansions, forbidden patterns and H* samples."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, find_induced, is_clique

# 1-based edge lists, vertex v_j -> index j-1
_C5 = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
_G2 = _C5 + [(6, 1), (6, 3), (6, 4)]
_G4 = _G2 + [(7, 1), (7, 2), (7, 4)]
_G8 = _C5 + [(6, 1), (6, 4), (6, 8), (7, 1), (7, 3), (7, 5), (7, 8), (8, 2), (8, 4)]
BASE_EDGES: dict[int, list[tuple[int, int]]] = {
    1: _C5,
    2: _G2,
    3: _G2 + [(7, 2), (7, 4)],
    4: _G4,
    5: _G4 + [(8, 1), (8, 3)],
    6: _G4 + [(8, 2), (8, 5), (8, 6)],
    7: [(1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 5), (2, 8), (3, 6),
        (4, 5), (4, 6), (4, 8), (5, 6), (5, 7)],
    8: _G8,
    9: _G8 + [(9, 1), (9, 4)],
    10: _C5 + [(6, 1), (6, 4), (6, 8), (6, 9), (7, 1), (7, 3), (7, 5), (7, 8),
               (8, 2), (8, 4), (9, 2), (9, 3), (9, 5)],
}
BASE_ORDERS = {1: 5, 2: 6, 3: 7, 4: 7, 5: 8, 6: 8, 7: 8, 8: 8, 9: 9, 10: 9}
BASES = tuple(range(1, 11))


@lru_cache(maxsize=None)
def base_graph(i: int) -> Graph:
    """G_i with v_j at index j-1."""
    if i not in BASE_EDGES:
        raise GraphError(f"base graph index must be in 1..10, got {i}")
    return Graph.from_edges(BASE_ORDERS[i], [(u - 1, v - 1) for u, v in BASE_EDGES[i]])


@lru_cache(maxsize=None)
def base_maximal_cliques(i: int) -> tuple[tuple[int, ...], ...]:
    """Maximal cliques of G_i (0-based), found by subset enumeration."""
    G = base_graph(i)
    cliques = [
        S for r in range(1, G.n + 1) for S in combinations(range(G.n), r) if is_clique(G, S)
    ]
    sets = [frozenset(S) for S in cliques]
    maximal = [S for S, fs in zip(cliques, sets) if not any(fs < other for other in sets)]
    return tuple(maximal)


@dataclass(frozen=True)
class ExpansionSpec:
    """Clique expansion of base graph ``base``: v_j is replaced by a clique of order ``sizes[j]``."""

    base: int
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if self.base not in BASE_EDGES:
            raise GraphError(f"base graph index must be in 1..10, got {self.base}")
        if len(self.sizes) != BASE_ORDERS[self.base]:
            raise GraphError(
                f"G{self.base} has {BASE_ORDERS[self.base]} vertices, got {len(self.sizes)} sizes"
            )
        if any(s < 1 for s in self.sizes):
            raise GraphError(f"clique orders must be >= 1, got {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def blocks(self) -> list[range]:
        """Vertex ranges Q_1, Q_2, ... in the expanded graph."""
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out

    def omega(self) -> int:
        return max(sum(self.sizes[j] for j in C) for C in base_maximal_cliques(self.base))

    def shrink(self, j: int) -> "ExpansionSpec | None":
        """Spec of the graph with one vertex of Q_j deleted, None if Q_j would vanish."""
        if self.sizes[j] == 1:
            return None
        sizes = list(self.sizes)
        sizes[j] -= 1
        return ExpansionSpec(self.base, tuple(sizes))

    def label(self) -> str:
        return f"G{self.base}({', '.join(map(str, self.sizes))})"

    def graph(self) -> Graph:
        return clique_expansion(self)


def clique_expansion(spec: ExpansionSpec | tuple[int, Sequence[int]]) -> Graph:
    """Replace each v_j of the base graph by a clique Q_j; Q_j, Q_l complete iff v_j ~ v_l."""
    if not isinstance(spec, ExpansionSpec):
        spec = ExpansionSpec(spec[0], tuple(spec[1]))
    B = base_graph(spec.base).adj
    owner = np.repeat(np.arange(len(spec.sizes)), spec.sizes)
    a = B[np.ix_(owner, owner)].copy()
    a[owner[:, None] == owner[None, :]] = 1
    np.fill_diagonal(a, 0)
    return Graph(a)


# --- patterns ---------------------------------------------------------------


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gem() -> Graph:
    """P4 on 0-1-2-3 plus vertex 4 adjacent to all of it."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def pattern(name: str) -> Graph:
    """'P5', 'gem', 'C5', or 'K<k>' / 'K_k'."""
    key = name.strip()
    if key == "P5":
        return path(5)
    if key.lower() == "gem":
        return gem()
    if key == "C5":
        return cycle(5)
    if key.startswith("K"):
        digits = key[1:].lstrip("_")
        if digits.isdigit():
            return Graph.complete(int(digits))
    raise GraphError(f"unknown pattern {name!r}")


FORBIDDEN = ("P5", "gem")


def is_p5_gem_free(G: Graph) -> tuple[str, tuple[int, ...]] | None:
    """None if G has no induced P5 or gem, else (pattern name, embedding)."""
    for name in FORBIDDEN:
        emb = find_induced(pattern(name), G)
        if emb is not None:
            return name, emb
    return None


# --- H* ----------------------------------------------------------------------

# cycle of cliques A1..A5 plus A6 complete to A1, A3, A4 (0-based part indices)
_HSTAR_PART_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2), (5, 3)]


@dataclass(frozen=True)
class HStarSpec:
    """Partition data for a graph in H*.

    ``cliques`` are the orders of A1..A5, ``a6`` is the (P4-free) graph on A6,
    and each entry of ``a7`` is ``(order, attachment)``: a clique component
    T_i complete to the A6 vertices in ``attachment`` and to nothing else.
    """

    cliques: tuple[int, int, int, int, int]
    a6: Graph
    a7: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        if len(self.cliques) != 5 or any(c < 1 for c in self.cliques):
            raise GraphError("A1..A5 must all be non-empty")
        if self.a6.n < 1:
            raise GraphError("A6 must be non-empty")
        if not self.a7:
            raise GraphError("A7 must be non-empty")
        for size, att in self.a7:
            if size < 1:
                raise GraphError("every A7 component must be non-empty")
            if not att or any(not 0 <= x < self.a6.n for x in att):
                raise GraphError("every A7 component needs a non-empty attachment inside A6")

    @property
    def n(self) -> int:
        return sum(self.cliques) + self.a6.n + sum(s for s, _ in self.a7)

    def parts(self) -> list[list[int]]:
        """Vertex lists A1..A7 in layout order (A1..A5, A6, T_1..T_m)."""
        sizes = list(self.cliques) + [self.a6.n, sum(s for s, _ in self.a7)]
        out, start = [], 0
        for s in sizes:
            out.append(list(range(start, start + s)))
            start += s
        return out

    def components(self) -> list[list[int]]:
        start = sum(self.cliques) + self.a6.n
        out = []
        for size, _ in self.a7:
            out.append(list(range(start, start + size)))
            start += size
        return out


def realize_hstar(spec: HStarSpec) -> Graph:
    n = spec.n
    parts = spec.parts()
    a = np.zeros((n, n), dtype=np.uint8)
    for i in range(5):
        idx = parts[i]
        a[np.ix_(idx, idx)] = 1
    for p, q in _HSTAR_PART_EDGES:
        a[np.ix_(parts[p], parts[q])] = 1
        a[np.ix_(parts[q], parts[p])] = 1
    a6 = parts[5]
    a[np.ix_(a6, a6)] = spec.a6.adj
    for comp, (_, att) in zip(spec.components(), spec.a7):
        a[np.ix_(comp, comp)] = 1
        targets = [a6[x] for x in sorted(att)]
        a[np.ix_(comp, targets)] = 1
        a[np.ix_(targets, comp)] = 1
    np.fill_diagonal(a, 0)
    return Graph(a)


def random_cograph(rng: random.Random, n: int) -> Graph:
    """Random P4-free graph on n vertices by recursive disjoint union / join."""

    def build(m: int, join: bool) -> np.ndarray:
        if m == 1:
            return np.zeros((1, 1), dtype=np.uint8)
        k = rng.randint(2, min(m, 3))
        cuts = sorted(rng.sample(range(1, m), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [m])]
        blocks = [build(s, not join) for s in sizes]
        out = np.ones((m, m), dtype=np.uint8) if join else np.zeros((m, m), dtype=np.uint8)
        start = 0
        for blk, s in zip(blocks, sizes):
            out[start : start + s, start : start + s] = blk
            start += s
        np.fill_diagonal(out, 0)
        return out

    return Graph(build(n, rng.random() < 0.5))


def random_hstar_spec(rng: random.Random, budget: int) -> HStarSpec:
    """Draw an H* spec with at most ``budget`` vertices."""
    total = rng.randint(7, budget)
    spare = total - 7
    extra = [0] * 7
    for _ in range(spare):
        extra[rng.randrange(7)] += 1
    cliques = tuple(1 + e for e in extra[:5])
    a6 = random_cograph(rng, 1 + extra[5])
    a7_total = 1 + extra[6]
    comps = []
    while a7_total:
        size = rng.randint(1, min(a7_total, 3))
        a7_total -= size
        r = rng.randint(1, a6.n)
        comps.append((size, frozenset(rng.sample(range(a6.n), r))))
    return HStarSpec(cliques, a6, tuple(comps))


@dataclass
class HStarSample:
    spec: HStarSpec
    graph: Graph
    rejections: int = 0
    seed: int = 0


MAX_REJECTIONS = 1000


def sample_hstar_detailed(budget: int, seed: int) -> HStarSample:
    """Seeded H* draw, rejection-sampled until (P5, gem)-free."""
    if budget < 7:
        raise GraphError("H* graphs need at least 7 vertices")
    rng = random.Random(seed)
    for attempt in range(MAX_REJECTIONS + 1):
        spec = random_hstar_spec(rng, budget)
        G = realize_hstar(spec)
        if is_p5_gem_free(G) is None:
            return HStarSample(spec, G, attempt, seed)
    raise RuntimeError(f"no (P5, gem)-free H* sample after {MAX_REJECTIONS} rejections (seed {seed})")


def sample_hstar(budget: int, seed: int) -> Graph:
    return sample_hstar_detailed(budget, seed).graph
