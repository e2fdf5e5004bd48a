"""Vertex-criticality tests and the cheap non-criticality certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import chromatic_number, k_colorable
from .graph import Graph, clique_number, is_clique
from .special import ExpansionSpec, base_graph

PRUNE_SIMILAR = "similar-cliques"
PRUNE_CHI = "chi-mismatch"
PRUNE_CLIQUE = "proper-k-clique"


@dataclass
class CriticalityReport:
    """Outcome of a k-vertex-criticality test.

    ``chi`` is exact when known; otherwise ``chi_relation`` records whether
    chi(G) was shown to be below (``"<"``) or above (``">"``) k. ``per_vertex``
    holds exact chi(G - v) values for every vertex examined; ``partial`` is
    set when the test stopped before covering all vertices.
    """

    k: int
    chi: int | None
    verdict: bool
    per_vertex: dict[int, int] = field(default_factory=dict)
    partial: bool = False
    prune_reason: str | None = None
    chi_relation: str = "="

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "chi": self.chi,
            "chi_relation": self.chi_relation,
            "verdict": self.verdict,
            "partial": self.partial,
            "prune_reason": self.prune_reason,
            "per_vertex": {str(v): c for v, c in sorted(self.per_vertex.items())},
        }


def twin_classes(G: Graph) -> list[list[int]]:
    """Partition into classes of pairwise twins (same open or same closed neighbourhood).

    Deleting any member of a class gives isomorphic graphs, so one
    representative per class suffices for per-vertex tests.
    """
    masks = G.masks
    by_key: dict[tuple[str, int], list[int]] = {}
    owner: dict[int, list[int]] = {}
    for v in range(G.n):
        closed = ("c", masks[v] | (1 << v))
        opened = ("o", masks[v])
        cls = by_key.get(closed) or by_key.get(opened)
        if cls is None:
            cls = []
        cls.append(v)
        by_key.setdefault(closed, cls)
        by_key.setdefault(opened, cls)
        owner[v] = cls
    seen, out = set(), []
    for v in range(G.n):
        cls = owner[v]
        if id(cls) not in seen:
            seen.add(id(cls))
            out.append(cls)
    return out


def is_vertex_critical(G: Graph, k: int, full: bool = False) -> CriticalityReport:
    """Decide whether chi(G) = k and chi(G - v) = k - 1 for every vertex v.

    Stops at the first failure unless ``full`` is set, in which case chi(G)
    and every chi(G - v) are computed exactly.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if full:
        return _full_report(G, k)
    if G.n == 0:
        return CriticalityReport(k, 0, False, prune_reason=PRUNE_CHI, chi_relation="<")
    omega = clique_number(G)
    if omega > k:
        return CriticalityReport(k, None, False, partial=True, prune_reason=PRUNE_CHI, chi_relation=">")
    if omega == k and G.m != G.n * (G.n - 1) // 2:
        return CriticalityReport(k, None, False, partial=True, prune_reason=PRUNE_CLIQUE, chi_relation=">=")
    if k_colorable(G, k - 1, omega=omega) is not None:
        return CriticalityReport(k, None, False, partial=True, prune_reason=PRUNE_CHI, chi_relation="<")
    per_vertex: dict[int, int] = {}
    for cls in twin_classes(G):
        H = G.remove_vertex(cls[0])
        if k_colorable(H, k - 1) is None:
            # chi(G - v) >= k; chi(G) is only known to be >= k here
            return CriticalityReport(k, None, False, per_vertex, partial=True, chi_relation=">=")
        for v in cls:
            per_vertex[v] = k - 1
    return CriticalityReport(k, k, True, per_vertex)


def _full_report(G: Graph, k: int) -> CriticalityReport:
    chi = chromatic_number(G)
    per_vertex: dict[int, int] = {}
    for cls in twin_classes(G):
        c = chromatic_number(G.remove_vertex(cls[0]))
        for v in cls:
            per_vertex[v] = c
    verdict = chi == k and all(c == k - 1 for c in per_vertex.values())
    reason = None
    if chi != k:
        reason = PRUNE_CHI
    rel = "=" if chi == k else ("<" if chi < k else ">")
    return CriticalityReport(k, chi, verdict, per_vertex, prune_reason=reason, chi_relation=rel)


def criticality_order(G: Graph) -> int | None:
    """The k for which G is k-vertex-critical, or None."""
    if G.n == 0:
        return None
    chi = chromatic_number(G)
    return chi if is_vertex_critical(G, chi).verdict else None


def has_proper_k_clique(G: Graph, k: int) -> bool:
    """True iff omega(G) >= k and G is not K_k; such G is never k-vertex-critical."""
    is_kk = G.n == k and G.m == k * (k - 1) // 2
    return not is_kk and clique_number(G) >= k


# --- similar cliques ---------------------------------------------------------


def block_similar_pair(spec: ExpansionSpec) -> tuple[int, int] | None:
    """Blocks (j, l), 0-based, with v_j, v_l non-adjacent, N(v_j) within N(v_l) and |Q_j| <= |Q_l|.

    Then Q_j and any |Q_j| vertices of Q_l are two cliques where each vertex
    of the first has its outside neighbourhood inside that of its partner.
    """
    B = base_graph(spec.base)
    masks = B.masks
    sizes = spec.sizes
    for j in range(B.n):
        for l in range(B.n):
            if j == l or B.adj[j, l]:
                continue
            if masks[j] & ~masks[l] == 0 and sizes[j] <= sizes[l]:
                return j, l
    return None


def similar_cliques_prune(
    G: Graph, max_m: int = 3, spec: ExpansionSpec | None = None
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]] | None:
    """Find disjoint cliques A, B with N(a_i) minus A inside N(b_i) minus B for a pairing a_i -> b_i.

    With ``spec`` the block-level check runs first (any clique order). The
    general search covers cliques of order at most ``max_m``. Returns
    ``(A, B, pairing)`` or None.
    """
    if spec is not None:
        hit = block_similar_pair(spec)
        if hit is not None:
            blocks = spec.blocks()
            j, l = hit
            A = tuple(blocks[j])
            B = tuple(list(blocks[l])[: len(A)])
            return A, B, tuple(zip(A, B))
    masks = G.masks
    for m in range(1, max_m + 1):
        for A in combinations(range(G.n), m):
            if not is_clique(G, A):
                continue
            amask = sum(1 << a for a in A)
            outside = [masks[a] & ~amask for a in A]
            near = 0
            for a in A:
                near |= masks[a]
            cands = []
            for o in outside:
                cands.append(
                    [
                        b
                        for b in range(G.n)
                        if not (amask >> b) & 1 and not (near >> b) & 1 and o & ~masks[b] == 0
                    ]
                )
            found = _pick_partners(G, cands)
            if found is not None:
                return A, found, tuple(zip(A, found))
    return None


def _pick_partners(G: Graph, cands: list[list[int]]) -> tuple[int, ...] | None:
    """Distinct, pairwise adjacent b_i drawn from ``cands[i]``."""
    chosen: list[int] = []

    def pick(i: int) -> bool:
        if i == len(cands):
            return True
        for b in cands[i]:
            if b in chosen or any(not G.adj[b, c] for c in chosen):
                continue
            chosen.append(b)
            if pick(i + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if pick(0) else None
