"""Immutable simple graphs and trees, structural queries, and generators.

Vertex ids are always dense 0-based integers and adjacency lists are kept
sorted, so every traversal and tie-break in the package is deterministic.
Derived structures (forest components, induced subtrees) carry relabeling
maps back to their source tree.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    LoopEdge,
    NotAcyclic,
    NotAnEdge,
    NotConnected,
    VertexOutOfRange,
)
from .rng import SplitMix64


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: sorted adjacency tuple per vertex."""

    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        n = self.n
        if n == 0:
            return False
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count == n


@dataclass(frozen=True)
class Tree:
    """Connected acyclic graph; construct via as_tree()."""

    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.graph.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.graph.degree(v) == 1]


@dataclass(frozen=True)
class Component:
    """One tree of a forest, with its map back to source-tree vertex ids."""

    tree: Tree
    to_source: tuple[int, ...]


@dataclass(frozen=True)
class Forest:
    components: tuple[Component, ...]


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build a Graph.

    Rejects loops, duplicate edges (in either orientation), and endpoints
    outside 0..vertex_count-1, each with its own exception type.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be nonnegative")
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
        if u == v:
            raise LoopEdge(f"loop edge at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(tuple(tuple(sorted(a)) for a in adj))


def as_tree(g: Graph) -> Tree:
    """Check connectivity and edge count; wrap as a Tree."""
    if not g.is_connected():
        raise NotConnected(f"graph with {g.n} vertices is not connected")
    if g.edge_count() != g.n - 1:
        raise NotAcyclic(f"{g.edge_count()} edges on {g.n} vertices")
    return Tree(g)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def component_vertices_beyond(t: Tree, u: int, v: int) -> list[int]:
    """Vertices of the component of t minus edge uv that contains v, sorted."""
    if not t.graph.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    # in a tree, u is reachable from v only through the edge uv itself, so
    # refusing to visit u explores exactly v's side of the cut
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for w in t.neighbors(x):
            if w != u and w not in seen:
                seen.add(w)
                stack.append(w)
    return sorted(seen)


def component_size_beyond(t: Tree, u: int, v: int) -> int:
    """Order of the component of t minus edge uv that contains v."""
    return len(component_vertices_beyond(t, u, v))


def degree2_census(t: Tree) -> tuple[int, list[int]]:
    """Count and list (sorted) the degree-2 vertices."""
    vs = [v for v in range(t.n) if t.degree(v) == 2]
    return len(vs), vs


def augment_degree2(t: Tree) -> tuple[Tree, dict[int, int]]:
    """Attach one new leaf to each degree-2 vertex.

    New leaves get ids n, n+1, ... in ascending order of their attachment
    vertex; the returned map sends each new leaf to its attachment.  The
    result has no degree-2 vertices and contains t as the induced subtree
    on the original ids.
    """
    n = t.n
    _, deg2 = degree2_census(t)
    edges = t.edges()
    attach: dict[int, int] = {}
    for i, w in enumerate(deg2):
        leaf = n + i
        attach[leaf] = w
        edges.append((w, leaf))
    return as_tree(build_graph(n + len(deg2), edges)), attach


def split_at_degree2(t: Tree) -> Forest:
    """Split t at every degree-2 vertex.

    Each degree-2 vertex is replaced by two pendant copies, one per incident
    edge, disconnecting the tree there.  Yields exactly n2+1 components of
    total order n+n2, none containing a degree-2 vertex; each component maps
    its vertices back to source ids (copies map to the split vertex).
    """
    n = t.n
    _, deg2 = degree2_census(t)
    deg2_set = set(deg2)
    # Expanded vertex set: originals keep their id; each degree-2 vertex w
    # contributes copies (one per incident edge) instead of itself.
    copy_id: dict[tuple[int, int], int] = {}  # (w, neighbor) -> expanded id
    to_source: list[int] = list(range(n))
    next_id = n
    for w in deg2:
        for nb in t.neighbors(w):
            copy_id[(w, nb)] = next_id
            to_source.append(w)
            next_id += 1

    def endpoint(x: int, other: int) -> int:
        return copy_id[(x, other)] if x in deg2_set else x

    expanded_edges = [(endpoint(u, v), endpoint(v, u)) for u, v in t.edges()]
    adj: dict[int, list[int]] = {i: [] for i in range(next_id) if i not in deg2_set}
    for a, b in expanded_edges:
        adj[a].append(b)
        adj[b].append(a)

    components: list[Component] = []
    seen: set[int] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        local = {x: i for i, x in enumerate(comp)}
        local_edges = [
            (local[a], local[b]) for a, b in expanded_edges if a in local and b in local
        ]
        tree = as_tree(build_graph(len(comp), local_edges))
        components.append(Component(tree, tuple(to_source[x] for x in comp)))
    return Forest(tuple(components))


def induced_subtree(t: Tree, vertices: Sequence[int]) -> tuple[Tree, tuple[int, ...]]:
    """Induced subgraph of t on the given vertices, as a dense-id Tree.

    New ids follow the sorted order of the given vertices; the returned map
    sends new ids back to source ids.  Raises if the induced subgraph is not
    itself a tree (i.e. the vertex set is not connected in t).
    """
    vs = sorted(set(vertices))
    local = {x: i for i, x in enumerate(vs)}
    edges = [
        (local[u], local[v])
        for u, v in t.edges()
        if u in local and v in local
    ]
    return as_tree(build_graph(len(vs), edges)), tuple(vs)


# ---------------------------------------------------------------------------
# Prufer codes
# ---------------------------------------------------------------------------

def prufer_decode(code: Sequence[int]) -> Tree:
    """Labeled tree on len(code)+2 vertices from its Prufer code."""
    n = len(code) + 2
    if n == 2:
        return as_tree(build_graph(2, [(0, 1)]))
    degree = [1] * n
    for x in code:
        if not 0 <= x < n:
            raise VertexOutOfRange(f"code entry {x} outside 0..{n - 1}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return as_tree(build_graph(n, edges))


def prufer_encode(t: Tree) -> tuple[int, ...]:
    """Prufer code of a labeled tree (length n-2); inverse of prufer_decode."""
    n = t.n
    if n < 2:
        raise ValueError("Prufer codes are defined for trees with n >= 2")
    if n == 2:
        return ()
    degree = [t.degree(v) for v in range(n)]
    removed = bytearray(n)
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = 1
        nb = next(w for w in t.neighbors(leaf) if not removed[w])
        code.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(leaves, nb)
    return tuple(code)


def labeled_trees(n: int):
    """Yield every labeled tree on n vertices, in Prufer-code order."""
    if n == 1:
        yield as_tree(build_graph(1, []))
        return
    if n == 2:
        yield prufer_decode(())
        return
    code = [0] * (n - 2)
    while True:
        yield prufer_decode(code)
        i = n - 3
        while i >= 0 and code[i] == n - 1:
            code[i] = 0
            i -= 1
        if i < 0:
            return
        code[i] += 1


# ---------------------------------------------------------------------------
# Generators (all deterministic given their arguments)
# ---------------------------------------------------------------------------

def gen_path(n: int) -> Tree:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return as_tree(build_graph(n, [(i, i + 1) for i in range(n - 1)]))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    return build_graph(n, edges)


def gen_full_binary(height: int) -> Tree:
    """Complete binary tree with the given height; root is the only degree-2 vertex."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    n = (1 << (height + 1)) - 1
    edges = []
    for v in range(n):
        for c in (2 * v + 1, 2 * v + 2):
            if c < n:
                edges.append((v, c))
    return as_tree(build_graph(n, edges))


def gen_double_star(s: int, t: int) -> Tree:
    """Two adjacent centers (ids 0 and 1) with s and t pendant leaves."""
    if s < 0 or t < 0:
        raise ValueError("leaf counts must be nonnegative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(s)]
    edges += [(1, 2 + s + j) for j in range(t)]
    return as_tree(build_graph(2 + s + t, edges))


def gen_random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree via a random Prufer code."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return as_tree(build_graph(1, []))
    if n == 2:
        return gen_path(2)
    rng = SplitMix64(seed)
    return prufer_decode([rng.below(n) for _ in range(n - 2)])


def gen_random_no_deg2(n_target: int, seed: int) -> Tree:
    """Random tree of order n_target with a leaf grafted onto each degree-2
    vertex.  Order lands in [n_target, 2*n_target]; the distribution is NOT
    uniform over degree-2-free trees (rejection sampling would be), it only
    provides deterministic coverage.
    """
    base = gen_random_tree(n_target, seed)
    tree, _ = augment_degree2(base)
    return tree
