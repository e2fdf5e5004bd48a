"""Backtracking kernels: exact k-colouring and induced-subgraph embedding.

Both take dense ``uint8`` adjacency matrices and keep their whole search
state in preallocated arrays so they compile under numba in nopython mode.
With JIT disabled the very same code runs as plain Python.
"""

import numpy as np

from ._accel import njit


@njit
def color_search(adj, nbrs, deg, k):
    """DSATUR backtracking for a proper colouring with at most ``k`` colours.

    ``nbrs[v, :deg[v]]`` lists the neighbours of ``v``. Returns ``(ok, colors, nodes)``
    where ``colors`` holds 0-based colours when ``ok`` and ``nodes`` counts the
    search-tree nodes visited.

    Vertex choice: largest saturation, then largest degree, then least index.
    A new colour may only be the next unused index.
    """
    n = adj.shape[0]
    colors = np.full(n, -1, np.int64)
    nodes = 0
    if n == 0:
        return True, colors, nodes
    if k <= 0:
        return False, colors, nodes
    cnt = np.zeros((n, k + 1), np.int64)
    sat = np.zeros(n, np.int64)
    stack_v = np.zeros(n, np.int64)
    stack_c = np.zeros(n, np.int64)
    stack_used = np.zeros(n, np.int64)
    used = 0
    depth = 0
    entering = True
    while True:
        if entering:
            if depth == n:
                return True, colors, nodes
            nodes += 1
            best = -1
            for v in range(n):
                if colors[v] >= 0:
                    continue
                if best < 0 or sat[v] > sat[best] or (sat[v] == sat[best] and deg[v] > deg[best]):
                    best = v
            stack_v[depth] = best
            stack_c[depth] = 0
            stack_used[depth] = used
            entering = False
        v = stack_v[depth]
        used = stack_used[depth]
        limit = used if used < k else k - 1
        chosen = -1
        for c in range(stack_c[depth], limit + 1):
            if cnt[v, c] == 0:
                chosen = c
                break
        if chosen >= 0:
            colors[v] = chosen
            for i in range(deg[v]):
                u = nbrs[v, i]
                if cnt[u, chosen] == 0:
                    sat[u] += 1
                cnt[u, chosen] += 1
            stack_c[depth] = chosen + 1
            if chosen == used:
                used += 1
            depth += 1
            entering = True
            continue
        # exhausted this vertex: undo the assignment one level up
        depth -= 1
        if depth < 0:
            return False, np.full(n, -1, np.int64), nodes
        w = stack_v[depth]
        c = colors[w]
        colors[w] = -1
        for i in range(deg[w]):
            u = nbrs[w, i]
            cnt[u, c] -= 1
            if cnt[u, c] == 0:
                sat[u] -= 1


@njit
def induced_search(hadj, gadj, order, cand, limit):
    """Enumerate up to ``limit`` induced embeddings of H into G.

    ``order`` is the sequence in which H's vertices are placed and
    ``cand[u, g]`` pre-filters admissible images. Returns an array of shape
    ``(count, h)`` whose rows map H-vertex ``u`` to ``row[u]``.
    """
    h = hadj.shape[0]
    n = gadj.shape[0]
    out = np.empty((limit, h), np.int64)
    count = 0
    if h == 0:
        out[0, :] = 0
        return out[:1]
    image = np.full(h, -1, np.int64)
    used = np.zeros(n, np.bool_)
    nxt = np.zeros(h, np.int64)
    pos = 0
    while pos >= 0:
        if pos == h:
            for q in range(h):
                out[count, order[q]] = image[q]
            count += 1
            if count >= limit:
                break
            pos -= 1
            used[image[pos]] = False
            image[pos] = -1
            continue
        u = order[pos]
        placed = False
        for g in range(nxt[pos], n):
            if used[g] or not cand[u, g]:
                continue
            ok = True
            for q in range(pos):
                if hadj[u, order[q]] != gadj[g, image[q]]:
                    ok = False
                    break
            if ok:
                image[pos] = g
                used[g] = True
                nxt[pos] = g + 1
                placed = True
                break
        if placed:
            pos += 1
            if pos < h:
                nxt[pos] = 0
        else:
            nxt[pos] = 0
            pos -= 1
            if pos >= 0:
                used[image[pos]] = False
                image[pos] = -1
    return out[:count]
