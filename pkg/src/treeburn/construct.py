"""Constructive burning sequences for trees, with machine-checkable certificates.

The pipeline: a tree with no degree-2 vertices is burned by picking a
separator vertex v whose branches are all small except the one across a
designated heavy edge, burning the small branches by plain propagation from
v, and recursing into the one remaining branch after smoothing its root
away.  Arbitrary trees are first made degree-2-free by grafting a leaf onto
every degree-2 vertex, and the sequence found on the grafted tree is
projected back.

Every certificate is validated by simulation before it is returned; a
violated length bound raises InternalBoundViolation, never a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Union

from .bounds import ceil_sqrt, margin, refined_bound
from .engine import (
    BurningSequence,
    RoundLabeling,
    Schedule,
    canonicalize,
    greedy_schedule,
    simulate,
    validate_sequence,
)
from .errors import (
    DegreeTooSmall,
    InternalBoundViolation,
    NotInducedSubtree,
    PreconditionViolated,
    StructureMismatch,
)
from .exact import burning_number
from .graphs import (
    Tree,
    as_tree,
    augment_degree2,
    bfs_distances,
    build_graph,
    component_vertices_beyond,
    degree2_census,
    induced_subtree,
)

# Exact solving is instantaneous at this size and covers every order where
# the separator threshold would fall outside its valid range.
EXACT_FALLBACK_N = 9


@dataclass(frozen=True)
class SeparatorCert:
    """A vertex v whose branches are all at most p, except that the rest of
    the tree across the edge to the last listed neighbor exceeds p.

    neighbors lists v's neighborhood with the heavy neighbor last; sizes[i]
    is the order of the branch through neighbors[i] for i < k-1, and
    sizes[k-1] is the order of v's own side across the heavy edge.
    """

    vertex: int
    neighbors: tuple[int, ...]
    heavy_index: int  # 1-based position of the heavy neighbor (== k)
    threshold: Fraction
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class SmoothResult:
    """Outcome of smoothing a vertex away: the new tree, the id map back to
    the tree that was smoothed, the removed vertices (the smoothed vertex
    plus any surplus leaves), and the path the remaining neighbors form."""

    tree: Tree
    to_parent: tuple[int, ...]
    removed: frozenset[int]
    smoothed: int
    path_order: tuple[int, ...]

    def translate(self, f: Callable[[int], int]) -> "SmoothResult":
        """Re-express all parent-space ids through f (result ids unchanged)."""
        return replace(
            self,
            to_parent=tuple(f(x) for x in self.to_parent),
            removed=frozenset(f(x) for x in self.removed),
            smoothed=f(self.smoothed),
            path_order=tuple(f(x) for x in self.path_order),
        )


@dataclass(frozen=True)
class BoundCertificate:
    """A validated burning sequence together with the bound it witnesses."""

    tree: Tree
    n: int
    n2: int
    m: int
    target: int
    sequence: BurningSequence
    labeling: RoundLabeling
    trace: tuple[dict, ...]


def _rooted_sizes(t: Tree, root: int) -> tuple[list[int], list[int]]:
    n = t.n
    parent = [-1] * n
    parent[root] = root
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in t.neighbors(u):
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
                stack.append(w)
    size = [1] * n
    for u in reversed(order):
        if u != root:
            size[parent[u]] += size[u]
    return parent, size


def find_separator(t: Tree, p: Union[int, Fraction]) -> SeparatorCert:
    """Locate a separator vertex for threshold p in [1, n-1).

    Walk: start at the neighbor of the lowest-id leaf with that leaf as the
    heavy neighbor; while some non-heavy branch exceeds p, step into the
    first such branch (ascending id) and let the old position become the new
    heavy neighbor.  The side of the walk position across the heavy edge
    always exceeds p, and it shrinks strictly at every step, so the walk
    terminates at a valid certificate.
    """
    if isinstance(p, float):
        raise TypeError("p must be an exact rational, not a float")
    p = Fraction(p)
    n = t.n
    if n < 3:
        raise PreconditionViolated(f"separator needs n >= 3, got {n}")
    if not 1 <= p < n - 1:
        raise PreconditionViolated(f"threshold {p} outside [1, {n - 1})")

    heavy = min(t.leaves())
    v = t.neighbors(heavy)[0]
    parent, size = _rooted_sizes(t, heavy)

    def branch_size(center: int, nb: int) -> int:
        return size[nb] if parent[nb] == center else n - size[center]

    while True:
        step = None
        for u in t.neighbors(v):
            if u != heavy and branch_size(v, u) > p:
                step = u
                break
        if step is None:
            lights = tuple(u for u in t.neighbors(v) if u != heavy)
            sizes = tuple(branch_size(v, u) for u in lights) + (
                n - branch_size(v, heavy),
            )
            return SeparatorCert(
                vertex=v,
                neighbors=lights + (heavy,),
                heavy_index=len(lights) + 1,
                threshold=p,
                sizes=sizes,
            )
        heavy, v = v, step


def smooth(t: Tree, w: int) -> SmoothResult:
    """Delete w (degree q >= 2) and stitch its neighbors into a path.

    With p leaf-neighbors: the two lowest-id leaf-neighbors become the path
    endpoints (as many of them as exist when p < 2), the non-leaf neighbors
    fill the path in ascending id order, and any further leaf-neighbors are
    deleted outright.  The result has n - 1 - max(0, p - 2) vertices and is
    free of degree-2 vertices whenever w was the only one in t.
    """
    q = t.degree(w)
    if q < 2:
        raise DegreeTooSmall(f"vertex {w} has degree {q}")
    leaf_nbrs = [x for x in t.neighbors(w) if t.degree(x) == 1]
    other_nbrs = [x for x in t.neighbors(w) if t.degree(x) > 1]
    kept_leaves = leaf_nbrs[:2]
    deleted = leaf_nbrs[2:]
    path = kept_leaves[:1] + other_nbrs + kept_leaves[1:2]
    removed = frozenset({w, *deleted})
    kept = [x for x in range(t.n) if x not in removed]
    local = {x: i for i, x in enumerate(kept)}
    edges = [(local[a], local[b]) for a, b in t.edges() if a in local and b in local]
    edges += [(local[path[i]], local[path[i + 1]]) for i in range(len(path) - 1)]
    return SmoothResult(
        tree=as_tree(build_graph(len(kept), edges)),
        to_parent=tuple(kept),
        removed=removed,
        smoothed=w,
        path_order=tuple(path),
    )


def lift_sequence(
    t: Tree, u: int, v: int, sr: SmoothResult, seq_prime: BurningSequence
) -> BurningSequence:
    """Turn a sequence for the tree obtained by smoothing u in t - v into a
    sequence for t that starts at the leaf v and is at most one round longer.

    The leaf ignites in round 1; each original source follows one round
    late, dropped (round left empty) if the fire reached it first.
    """
    if not (0 <= v < t.n and 0 <= u < t.n):
        raise StructureMismatch("u and v must be vertices of t")
    if t.degree(v) != 1 or t.neighbors(v) != (u,):
        raise PreconditionViolated(f"{v} must be a leaf of t adjacent to {u}")
    if t.degree(u) < 3:
        raise PreconditionViolated(f"degree of {u} must be at least 3")
    if sr.smoothed != u:
        raise StructureMismatch("smoothing result is not for the designated vertex")
    mapped = set(sr.to_parent)
    if v in mapped or v in sr.removed:
        raise StructureMismatch("the removed leaf reappears in the smoothing result")
    if mapped | set(sr.removed) != set(range(t.n)) - {v}:
        raise StructureMismatch("smoothing result does not partition t minus the leaf")

    proposals = [v] + [sr.to_parent[s] for s in seq_prime.sources]
    schedule, labeling = greedy_schedule(t, proposals)
    if labeling.total_rounds > len(seq_prime) + 1:
        raise InternalBoundViolation(
            f"lift took {labeling.total_rounds} rounds, bound {len(seq_prime) + 1}"
        )
    result = canonicalize(t, schedule)
    validate_sequence(t, result)
    return result


def _no_deg2_cert(t: Tree, m: int, requested_m: int) -> BoundCertificate:
    n = t.n
    target = ceil_sqrt(n - m)
    trace: list[dict] = []

    if n <= EXACT_FALLBACK_N:
        res = burning_number(t)
        if res.burning_number > target:
            raise InternalBoundViolation(
                f"exact solve gave {res.burning_number} > target {target}"
            )
        labeling = validate_sequence(t, res.witness)
        trace.append({"step": "exact", "n": n, "length": len(res.witness)})
        return BoundCertificate(
            t, n, 0, requested_m, target, res.witness, labeling, tuple(trace)
        )

    m_eff = m
    if m >= 1 and n == m * (m + 1) + 1:
        # ceil_sqrt(n) equals the target at this exact order, so the margin
        # can be dropped and the separator round run margin-free.
        m_eff = 0
        if ceil_sqrt(n) != target:
            raise InternalBoundViolation("margin drop changed the target")
        trace.append({"step": "drop_margin", "m": m, "target": target})

    p = Fraction(4 * target - 3, 2)  # 2*target - 3/2, exact
    sep = find_separator(t, p)
    v = sep.vertex
    heavy = sep.neighbors[-1]
    branch = component_vertices_beyond(t, v, heavy)
    trace.append(
        {
            "step": "separator",
            "vertex": v,
            "heavy": heavy,
            "threshold": str(p),
            "neighbors": list(sep.neighbors),
            "sizes": list(sep.sizes),
            "light_components": [
                component_vertices_beyond(t, v, x) for x in sep.neighbors[:-1]
            ],
        }
    )

    if len(branch) == 1:
        drive = [v, heavy]
        trace.append({"step": "pendant_branch", "sequence": drive})
    else:
        branch_tree, branch_map = induced_subtree(t, branch)
        branch_local = {x: i for i, x in enumerate(branch_map)}
        sr = smooth(branch_tree, branch_local[heavy])
        reduced_n = sr.tree.n
        if m_eff >= 1 and reduced_n <= m_eff * m_eff:
            m_child = 0
        elif m_eff >= 1:
            m_child = m_eff - 1
        else:
            m_child = 0
        trace.append(
            {
                "step": "smooth",
                "vertex": heavy,
                "removed": sorted(branch_map[x] for x in sr.removed),
                "path": [branch_map[x] for x in sr.path_order],
                "branch_map": list(branch_map),
            }
        )
        child = construct_no_deg2(sr.tree, m_child)
        if len(child.sequence) > target - 1:
            raise InternalBoundViolation(
                f"branch sequence length {len(child.sequence)} > {target - 1}"
            )
        trace.append(
            {
                "step": "recurse",
                "m": m_child,
                "order": reduced_n,
                "target": child.target,
                "length": len(child.sequence),
                "trace": list(child.trace),
            }
        )
        tk, tk_map = induced_subtree(t, branch + [v])
        tk_local = {x: i for i, x in enumerate(tk_map)}
        sr_tk = sr.translate(lambda b: tk_local[branch_map[b]])
        lifted = lift_sequence(
            tk, tk_local[heavy], tk_local[v], sr_tk, child.sequence
        )
        drive = [tk_map[x] for x in lifted.sources]
        trace.append(
            {
                "step": "lift",
                "leaf": v,
                "sequence": drive,
                "subtree_map": list(tk_map),
            }
        )

    labeling = simulate(t, Schedule(tuple(drive)))
    if labeling.total_rounds > target:
        raise InternalBoundViolation(
            f"assembled process took {labeling.total_rounds} rounds, target {target}"
        )
    seq = canonicalize(t, tuple(drive))
    labeling = validate_sequence(t, seq)
    trace.append(
        {"step": "assemble", "schedule": drive, "total_rounds": labeling.total_rounds}
    )
    return BoundCertificate(t, n, 0, requested_m, target, seq, labeling, tuple(trace))


def construct_no_deg2(t: Tree, m: int) -> BoundCertificate:
    """Burning sequence of length <= ceil_sqrt(n - m) for a tree without
    degree-2 vertices of order n >= m*(m+1)+1.

    Recursive: small trees are solved exactly; otherwise a separator confines
    the work to one branch, whose root is smoothed away before recursing with
    a reduced margin, and the branch sequence is lifted and replayed on the
    whole tree while the light branches burn by propagation.
    """
    count2, listing = degree2_census(t)
    if count2:
        raise PreconditionViolated(f"tree has degree-2 vertices: {listing}")
    if m < 0:
        raise PreconditionViolated("margin must be nonnegative")
    if t.n < m * (m + 1) + 1:
        raise PreconditionViolated(
            f"order {t.n} below m*(m+1)+1 = {m * (m + 1) + 1} for margin {m}"
        )
    return _no_deg2_cert(t, m, m)


def project_to_subtree(
    t_sub: Tree, t_sup: Tree, seq: BurningSequence
) -> BurningSequence:
    """Replay a sequence for t_sup on the induced subtree t_sub.

    t_sub's vertices must be ids 0..t_sub.n-1 of t_sup and induce exactly
    t_sub.  Each source maps to itself if inside the subtree, else to its
    nearest subtree vertex (graph distance in t_sup, ties by lowest id);
    sources the fire beat are dropped.  The result is never longer than seq.
    """
    k = t_sub.n
    if k > t_sup.n:
        raise NotInducedSubtree("subtree has more vertices than the host")
    inside = {(a, b) for a, b in t_sup.edges() if a < k and b < k}
    if inside != set(t_sub.edges()):
        raise NotInducedSubtree("vertex prefix does not induce the given subtree")
    proposals = []
    for y in seq.sources:
        if not 0 <= y < t_sup.n:
            raise StructureMismatch(f"source {y} is not a vertex of the host tree")
        if y < k:
            proposals.append(y)
        else:
            dist = bfs_distances(t_sup.graph, y)
            proposals.append(min(range(k), key=lambda x: (dist[x], x)))
    schedule, labeling = greedy_schedule(t_sub, proposals)
    if labeling.total_rounds > len(seq):
        raise InternalBoundViolation(
            f"projection took {labeling.total_rounds} rounds, bound {len(seq)}"
        )
    result = canonicalize(t_sub, schedule)
    validate_sequence(t_sub, result)
    return result


def construct_general(t: Tree) -> BoundCertificate:
    """Burning sequence of length <= refined_bound(n, n2) for any tree.

    Grafts a leaf onto every degree-2 vertex, constructs on the grafted tree
    with the largest admissible margin, and projects the sequence back.
    """
    n = t.n
    n2, _ = degree2_census(t)
    t1, attach = augment_degree2(t)
    total = n + n2
    m = margin(total)
    if total < m * (m + 1) + 1:
        raise InternalBoundViolation("margin exceeded its defining inequality")
    target = refined_bound(n, n2)
    inner = construct_no_deg2(t1, m)
    if inner.target != target:
        raise InternalBoundViolation("augmented target disagrees with the bound")
    seq = project_to_subtree(t, t1, inner.sequence)
    if len(seq) > target:
        raise InternalBoundViolation(
            f"projected length {len(seq)} exceeds target {target}"
        )
    labeling = validate_sequence(t, seq)
    trace = (
        {
            "step": "augment",
            "added": sorted(attach.items()),
            "order": t1.n,
        },
        {
            "step": "construct_augmented",
            "m": m,
            "target": target,
            "length": len(inner.sequence),
            "trace": list(inner.trace),
        },
        {"step": "project", "length": len(seq)},
    )
    return BoundCertificate(t, n, n2, m, target, seq, labeling, trace)
