"""Exhaustive catalog of small connected graphs, one per isomorphism class.

Burning numbers and spanning-tree minima are invariant under relabeling, so
checking one representative per class is exhaustive over all labelings.
"""

from __future__ import annotations

from itertools import combinations, permutations

from treeburn import Graph, build_graph


def connected_graph_reps(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism; the
    representative is the one with the lexicographically least edge mask."""
    pairs = list(combinations(range(n), 2))
    idx = {e: i for i, e in enumerate(pairs)}
    perm_maps = [
        tuple(idx[tuple(sorted((perm[u], perm[v])))] for u, v in pairs)
        for perm in permutations(range(n))
    ]
    m = len(pairs)
    reps = []
    for mask in range(1 << m):
        adj = [[] for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u].append(v)
                adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            continue
        canonical = True
        for pm in perm_maps[1:]:
            other = 0
            for i in range(m):
                if mask >> i & 1:
                    other |= 1 << pm[i]
            if other < mask:
                canonical = False
                break
        if canonical:
            edges = [pairs[i] for i in range(m) if mask >> i & 1]
            reps.append(build_graph(n, edges))
    return reps
