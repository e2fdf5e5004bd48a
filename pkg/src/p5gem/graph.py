"""Simple undirected graphs and the structural queries built on them."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels

MAX_VERTICES = 1 << 16
CANON_MAX = 256
AUTOMORPHISM_MAX = 12


class GraphError(ValueError):
    """Invalid graph input (bad vertex, size cap exceeded, ...)."""


class Graph:
    """Finite simple graph on vertices ``0..n-1``.

    The adjacency matrix is stored as a read-only ``uint8`` array; instances
    are immutable and hashable.
    """

    __slots__ = ("_adj", "_masks", "_nbrs", "_hash")

    def __init__(self, adj):
        a = np.array(adj, dtype=np.uint8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if a.shape[0] > MAX_VERTICES:
            raise GraphError(f"graphs are limited to {MAX_VERTICES} vertices")
        a = (a != 0).astype(np.uint8)
        if np.any(np.diagonal(a)):
            raise GraphError("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency matrix must be symmetric")
        a.setflags(write=False)
        self._adj = a
        self._masks = None
        self._nbrs = None
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            a[u, v] = a[v, u] = 1
        return cls(a)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(np.zeros((n, n), dtype=np.uint8))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        a = np.ones((n, n), dtype=np.uint8)
        np.fill_diagonal(a, 0)
        return cls(a)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    def __len__(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    @property
    def m(self) -> int:
        return int(self._adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1).astype(np.int64)

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self._adj[v]).tolist()

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as Python-int bitsets."""
        if self._masks is None:
            self._masks = tuple(
                sum(1 << int(u) for u in np.flatnonzero(row)) for row in self._adj
            )
        return self._masks

    def neighbor_table(self) -> tuple[np.ndarray, np.ndarray]:
        """Padded neighbour lists ``(nbrs, deg)`` as consumed by the kernels."""
        if self._nbrs is None:
            deg = self.degrees()
            width = int(deg.max()) if self.n else 0
            nbrs = np.zeros((self.n, max(width, 1)), dtype=np.int64)
            for v in range(self.n):
                row = np.flatnonzero(self._adj[v])
                nbrs[v, : len(row)] = row
            self._nbrs = (nbrs, deg)
        return self._nbrs

    def complement(self) -> "Graph":
        a = 1 - self._adj
        np.fill_diagonal(a, 0)
        return Graph(a)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        p = np.asarray(perm, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        inv = np.empty_like(p)
        inv[p] = np.arange(self.n)
        return Graph(self._adj[np.ix_(inv, inv)])

    def remove_vertex(self, v: int) -> "Graph":
        keep = [u for u in range(self.n) if u != v]
        return induced_subgraph(self, keep)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, np.packbits(self._adj).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertices(G: Graph, S: Iterable[int]) -> list[int]:
    members = sorted(set(int(v) for v in S))
    for v in members:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
    return members


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """G[S] relabelled to ``0..|S|-1`` in ascending order of original index."""
    members = _check_vertices(G, S)
    idx = np.array(members, dtype=np.int64)
    return Graph(G.adj[np.ix_(idx, idx)])


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    S = list(S)
    return all(G.adj[u, v] for u, v in combinations(S, 2))


def is_module(G: Graph, S: Iterable[int]) -> bool:
    inside = set(S)
    for x in range(G.n):
        if x in inside:
            continue
        hits = sum(int(G.adj[x, s]) for s in inside)
        if 0 < hits < len(inside):
            return False
    return True


# --- cliques ---------------------------------------------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _color_bound(P: int, masks: tuple[int, ...]) -> list[tuple[int, int]]:
    """Greedy sequential colouring of P; returns (vertex, colour) in ascending colour."""
    order = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~low
            avail &= ~masks[v]
            uncolored &= ~low
            order.append((v, color))
    return order


def max_clique(G: Graph) -> list[int]:
    """A maximum clique (sorted) by branch and bound with a greedy-colouring bound."""
    masks = G.masks
    best: list[int] = []

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        for v, c in reversed(_color_bound(P, masks)):
            if len(R) + c <= len(best):
                return
            R.append(v)
            newP = P & masks[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << G.n) - 1)
    return sorted(best)


def clique_number(G: Graph) -> int:
    """omega(G); 0 for the empty graph."""
    return len(max_clique(G))


# --- modules ---------------------------------------------------------------


def module_closure(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Smallest module containing S: repeatedly absorb splitting vertices."""
    masks = G.masks
    inside = 0
    for v in S:
        inside |= 1 << v
    changed = True
    while changed:
        changed = False
        for x in range(G.n):
            if inside >> x & 1:
                continue
            hit = masks[x] & inside
            if hit and hit != inside:
                inside |= 1 << x
                changed = True
    return frozenset(v for v in range(G.n) if inside >> v & 1)


def nontrivial_modules(G: Graph) -> list[frozenset[int]]:
    """Distinct minimal modules around each vertex pair, excluding V(G).

    Every non-trivial module contains one of these, so the list is empty
    exactly when G is prime. Sorted by size, then sorted member list.
    """
    found = set()
    for u, v in combinations(range(G.n), 2):
        M = module_closure(G, (u, v))
        if len(M) < G.n:
            found.add(M)
    return sorted(found, key=lambda M: (len(M), sorted(M)))


def find_nontrivial_module(G: Graph) -> frozenset[int] | None:
    """Lexicographically least non-trivial module of minimum size, or None.

    Minimum-size modules are exactly the minimum-size pair closures, so the
    tie-break "smallest, then lexicographically least member list" is the
    same as scanning all subsets by size then lexicographic order.
    """
    modules = nontrivial_modules(G)
    return modules[0] if modules else None


# --- canonical form --------------------------------------------------------


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cells are split by neighbour counts into every cell."""
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        new_cells: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                key = tuple(_popcount(masks[v] & cm) for cm in cell_masks)
                keyed.setdefault(key, []).append(v)
            for key in sorted(keyed):
                new_cells.append(keyed[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _encode_order(G: Graph, order: list[int]) -> bytes:
    idx = np.array(order, dtype=np.int64)
    a = G.adj[np.ix_(idx, idx)]
    bits = a[np.triu_indices(len(order), 1)]
    return np.packbits(bits).tobytes()


def canonical_order(G: Graph) -> list[int]:
    """Vertex order giving the lexicographically least encoding over the search tree.

    Individualisation-refinement: refine, pick the first smallest non-singleton
    cell, individualise each of its vertices in turn. Branches on a vertex
    that is a twin of one already tried are skipped, since swapping twins is
    an automorphism fixing the current partition.
    """
    if G.n > CANON_MAX:
        raise GraphError(f"canonical_form supports n <= {CANON_MAX}")
    masks = G.masks
    open_nb = masks
    closed_nb = tuple(m | (1 << v) for v, m in enumerate(masks))
    best_code: bytes | None = None
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(masks, cells)
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            code = _encode_order(G, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried_open, tried_closed = set(), set()
        for v in cell:
            if open_nb[v] in tried_open or closed_nb[v] in tried_closed:
                continue
            tried_open.add(open_nb[v])
            tried_closed.add(closed_nb[v])
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    if G.n:
        search([list(range(G.n))])
    return best_order


def canonical_form(G: Graph) -> bytes:
    """Isomorphism-invariant byte label (valid within one version only)."""
    order = canonical_order(G)
    return G.n.to_bytes(2, "big") + _encode_order(G, order)


def canonical_graph(G: Graph) -> Graph:
    order = canonical_order(G)
    return induced_subgraph_ordered(G, order)


def induced_subgraph_ordered(G: Graph, order: Sequence[int]) -> Graph:
    """G restricted to ``order``, with ``order[i]`` becoming vertex ``i``."""
    idx = np.asarray(order, dtype=np.int64)
    return Graph(G.adj[np.ix_(idx, idx)])


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G) == canonical_form(H)


# --- automorphisms ---------------------------------------------------------


def automorphisms(G: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples, sorted; identity first."""
    n = G.n
    if n > AUTOMORPHISM_MAX:
        raise GraphError(f"automorphisms supports n <= {AUTOMORPHISM_MAX}")
    adj = G.adj
    deg = G.degrees()
    perm = [-1] * n
    used = [False] * n
    out: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(perm))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            if all(adj[v, u] == adj[w, perm[u]] for u in range(v)):
                perm[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        perm[v] = -1

    extend(0)
    return out


# --- induced subgraphs -----------------------------------------------------


def _placement_order(H: Graph) -> np.ndarray:
    """Connected-first placement order: start at max degree, grow by most links."""
    h = H.n
    deg = H.degrees()
    order: list[int] = []
    placed = [False] * h
    links = [0] * h
    for _ in range(h):
        best = -1
        for u in range(h):
            if placed[u]:
                continue
            if best < 0 or (links[u], deg[u]) > (links[best], deg[best]):
                best = u
        placed[best] = True
        order.append(best)
        for u in H.neighbors(best):
            links[u] += 1
    return np.array(order, dtype=np.int64)


def iter_induced(H: Graph, G: Graph, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield induced embeddings of H in G as tuples ``emb[u] = image of u``."""
    if H.n > G.n:
        return
    hdeg, gdeg = H.degrees(), G.degrees()
    hco = H.n - 1 - hdeg
    gco = G.n - 1 - gdeg
    cand = (hdeg[:, None] <= gdeg[None, :]) & (hco[:, None] <= gco[None, :])
    order = _placement_order(H)
    if limit is not None:
        rows = kernels.induced_search(H.adj, G.adj, order, cand, limit)
    else:
        cap = 1024
        while True:
            rows = kernels.induced_search(H.adj, G.adj, order, cand, cap)
            if len(rows) < cap:
                break
            cap *= 8
    for row in rows:
        yield tuple(int(x) for x in row)


def find_induced(H: Graph, G: Graph) -> tuple[int, ...] | None:
    """One induced embedding of H into G, or None."""
    for emb in iter_induced(H, G, limit=1):
        return emb
    return None


def is_induced_embedding(H: Graph, G: Graph, emb: Sequence[int]) -> bool:
    """Check that ``emb`` is injective, in range, and preserves adjacency both ways."""
    if len(emb) != H.n or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= g < G.n for g in emb):
        return False
    idx = np.asarray(emb, dtype=np.int64)
    return bool(np.array_equal(G.adj[np.ix_(idx, idx)], H.adj))
