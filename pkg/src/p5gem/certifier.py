"""Certifying k-colourability for (P5, gem)-free graphs, k <= 6."""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .coloring import Coloring, is_proper_coloring, k_colorable
from .formats import g6_decode, g6_encode, read_catalog, sort_catalog
from .graph import Graph, canonical_form, find_induced, induced_subgraph_ordered, is_induced_embedding
from .special import cycle, is_p5_gem_free, pattern

MAX_K = 6

KIND_COLORING = "colouring"
KIND_WITNESS = "critical-witness"
KIND_NA = "not-applicable"


class CatalogMissing(RuntimeError):
    """The (k+1)-critical catalog needed for k is unavailable."""


class CertifierInconsistency(AssertionError):
    """No catalog graph embeds, yet the graph is not k-colourable."""


def catalog_filename(k: int) -> str:
    return f"critical_k{k}.g6"


def builtin_catalog(k: int) -> list[Graph] | None:
    """Catalogs that need no search: {K2} for k = 2 and {K3, C5} for k = 3."""
    if k == 2:
        return [Graph.complete(2)]
    if k == 3:
        return sort_catalog([Graph.complete(3), cycle(5)])
    return None


def load_catalogs(catalog_dir: str | os.PathLike | None = None, ks: Sequence[int] = range(2, MAX_K + 2)) -> dict[int, list[Graph]]:
    """Read ``critical_k<j>.g6`` files from ``catalog_dir`` (default: the packaged data).

    Missing files are skipped; k = 2, 3 fall back to the built-in lists.
    """
    out: dict[int, list[Graph]] = {}
    for j in ks:
        if catalog_dir is None:
            ref = resources.files("p5gem").joinpath("data", catalog_filename(j))
            path = Path(str(ref)) if ref.is_file() else None
        else:
            path = Path(catalog_dir) / catalog_filename(j)
            path = path if path.is_file() else None
        if path is not None:
            out[j] = sort_catalog(read_catalog(path))
        elif builtin_catalog(j) is not None:
            out[j] = builtin_catalog(j)
    return out


@dataclass
class Certificate:
    """Outcome of :func:`certify`.

    ``witness`` is ``(catalog index, graph6 of the catalog graph, embedding)``
    and ``pattern`` is ``(name, embedding)``; the embeddings map the small
    graph's vertices to vertices of the input.
    """

    kind: str
    k: int
    coloring: Coloring | None = None
    witness: tuple[int, str, tuple[int, ...]] | None = None
    pattern: tuple[str, tuple[int, ...]] | None = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "k": self.k}
        if self.coloring is not None:
            d["colouring"] = [f"{v}:{c}" for v, c in enumerate(self.coloring.assignment)]
        if self.witness is not None:
            idx, g6, emb = self.witness
            d["witness"] = {"catalog": f"k{self.k + 1}#{idx}", "graph6": g6,
                            "map": [f"{u}:{v}" for u, v in enumerate(emb)]}
        if self.pattern is not None:
            name, emb = self.pattern
            d["pattern"] = {"name": name, "map": [f"{u}:{v}" for u, v in enumerate(emb)]}
        return d


def certify(G: Graph, k: int, catalogs: Mapping[int, list[Graph]], check: bool = True) -> Certificate:
    """k-colouring of G, or an induced (k+1)-vertex-critical catalog graph, or a P5/gem.

    Catalog graphs are tried in catalog order (smallest first). With
    ``check`` the colouring branch asserts it agrees with the catalog branch.
    """
    if not 1 <= k <= MAX_K:
        raise ValueError(f"certify supports 1 <= k <= {MAX_K}, got {k}")
    if k + 1 not in catalogs:
        raise CatalogMissing(f"no catalog of {k + 1}-vertex-critical graphs loaded")
    hit = is_p5_gem_free(G)
    if hit is not None:
        return Certificate(KIND_NA, k, pattern=hit)
    for idx, H in enumerate(catalogs[k + 1]):
        emb = find_induced(H, G)
        if emb is not None:
            return Certificate(KIND_WITNESS, k, witness=(idx, g6_encode(H), emb))
    col = k_colorable(G, k)
    if col is None:
        if check:
            raise CertifierInconsistency(f"no {k + 1}-critical subgraph found but G is not {k}-colourable")
        return Certificate(KIND_NA, k)
    return Certificate(KIND_COLORING, k, coloring=col)


def verify_certificate(
    G: Graph, k: int, cert: Certificate, catalogs: Mapping[int, list[Graph]] | None = None
) -> tuple[bool, str]:
    """Check a certificate from scratch; returns ``(ok, reason)``."""
    if cert.kind == KIND_COLORING:
        if cert.coloring is None:
            return False, "missing-colouring"
        a = cert.coloring.assignment
        if len(a) != G.n:
            return False, "wrong-length"
        if any(c < 1 or c > k for c in a):
            return False, "too-many-colours"
        if not is_proper_coloring(G, a, k):
            return False, "improper"
        return True, "ok"
    if cert.kind == KIND_WITNESS:
        if cert.witness is None:
            return False, "missing-witness"
        idx, g6, emb = cert.witness
        try:
            H = g6_decode(g6)
        except ValueError:
            return False, "bad-graph6"
        if not is_induced_embedding(H, G, emb):
            return False, "not-induced"
        if catalogs is not None:
            members = {canonical_form(X) for X in catalogs.get(k + 1, [])}
            if canonical_form(H) not in members:
                return False, "not-in-catalog"
        image = induced_subgraph_ordered(G, emb)
        if k_colorable(image, k) is not None:
            return False, "witness-colourable"
        return True, "ok"
    if cert.kind == KIND_NA:
        if cert.pattern is None:
            return False, "missing-pattern"
        name, emb = cert.pattern
        if name not in ("P5", "gem"):
            return False, "bad-pattern"
        if not is_induced_embedding(pattern(name), G, emb):
            return False, "not-induced"
        return True, "ok"
    return False, "unknown-kind"
