"""Published lists of k-vertex-critical (P5, gem)-free graphs for k = 6, 7.

Each entry is ``(base, sizes)``; ``(0, ())`` stands for K_k.
"""

REFERENCE_TUPLES = {
    6: [
        (0, ()),
        (1, (4, 1, 4, 1, 1)),
        (1, (4, 1, 3, 2, 1)),
        (1, (3, 2, 3, 2, 1)),
        (1, (3, 2, 2, 3, 1)),
        (1, (3, 2, 2, 2, 2)),
        (7, (1, 3, 1, 3, 1, 1, 4, 2)),
        (7, (1, 2, 2, 3, 1, 1, 4, 2)),
        (7, (1, 1, 3, 3, 1, 1, 4, 2)),
        (7, (1, 2, 2, 2, 1, 2, 4, 2)),
        (7, (2, 2, 1, 2, 2, 1, 3, 3)),
        (7, (2, 1, 2, 2, 2, 1, 3, 3)),
        (7, (1, 1, 3, 2, 2, 1, 3, 3)),
        (7, (2, 1, 2, 2, 1, 2, 3, 3)),
        (7, (1, 2, 2, 2, 1, 1, 4, 3)),
        (7, (1, 1, 3, 2, 1, 1, 4, 3)),
        (7, (1, 2, 2, 1, 1, 2, 4, 3)),
        (7, (1, 1, 3, 1, 1, 1, 4, 4)),
        (7, (1, 1, 2, 1, 1, 2, 4, 4)),
    ],
    7: [
        (0, ()),
        (1, (5, 1, 5, 1, 1)),
        (1, (5, 1, 4, 2, 1)),
        (1, (4, 2, 4, 2, 1)),
        (1, (5, 1, 3, 3, 1)),
        (1, (4, 2, 3, 3, 1)),
        (1, (3, 3, 3, 3, 1)),
        (1, (4, 2, 2, 4, 1)),
        (1, (4, 2, 3, 2, 2)),
        (1, (3, 3, 3, 2, 2)),
        (1, (3, 3, 2, 3, 2)),
        (7, (1, 4, 1, 4, 1, 1, 5, 2)),
        (7, (1, 3, 2, 4, 1, 1, 5, 2)),
        (7, (1, 2, 3, 4, 1, 1, 5, 2)),
        (7, (1, 1, 4, 4, 1, 1, 5, 2)),
        (7, (1, 3, 2, 3, 1, 2, 5, 2)),
        (7, (1, 2, 3, 3, 1, 2, 5, 2)),
        (7, (2, 3, 1, 3, 2, 1, 4, 3)),
        (7, (2, 2, 2, 3, 2, 1, 4, 3)),
        (7, (1, 3, 2, 3, 2, 1, 4, 3)),
        (7, (2, 1, 3, 3, 2, 1, 4, 3)),
        (7, (1, 2, 3, 3, 2, 1, 4, 3)),
        (7, (1, 1, 4, 3, 2, 1, 4, 3)),
        (7, (2, 2, 2, 3, 1, 2, 4, 3)),
        (7, (2, 1, 3, 3, 1, 2, 4, 3)),
        (7, (2, 2, 2, 2, 2, 2, 4, 3)),
        (7, (1, 2, 3, 2, 2, 2, 4, 3)),
        (7, (1, 3, 2, 3, 1, 1, 5, 3)),
        (7, (1, 2, 3, 3, 1, 1, 5, 3)),
        (7, (1, 1, 4, 3, 1, 1, 5, 3)),
        (7, (1, 3, 2, 2, 1, 2, 5, 3)),
        (7, (1, 2, 3, 2, 1, 2, 5, 3)),
        (7, (1, 1, 3, 3, 1, 2, 5, 3)),
        (7, (2, 2, 2, 2, 2, 1, 4, 4)),
        (7, (2, 1, 3, 2, 2, 1, 4, 4)),
        (7, (1, 1, 4, 2, 2, 1, 4, 4)),
        (7, (2, 2, 2, 2, 1, 2, 4, 4)),
        (7, (2, 1, 3, 2, 1, 2, 4, 4)),
        (7, (1, 1, 3, 2, 2, 2, 4, 4)),
        (7, (1, 2, 3, 2, 1, 1, 5, 4)),
        (7, (1, 1, 4, 2, 1, 1, 5, 4)),
        (7, (1, 2, 3, 1, 1, 2, 5, 4)),
        (7, (1, 2, 2, 2, 1, 2, 5, 4)),
        (7, (1, 1, 3, 2, 1, 2, 5, 4)),
        (7, (1, 1, 4, 1, 1, 1, 5, 5)),
        (7, (1, 1, 3, 1, 1, 2, 5, 5)),
    ],
}


def reference_graphs(k: int):
    """Graphs of the published list for k (6 or 7)."""
    from .graph import Graph
    from .special import ExpansionSpec, clique_expansion

    if k not in REFERENCE_TUPLES:
        raise KeyError(f"no reference list for k={k}")
    out = []
    for base, sizes in REFERENCE_TUPLES[k]:
        out.append(Graph.complete(k) if base == 0 else clique_expansion(ExpansionSpec(base, sizes)))
    return out
