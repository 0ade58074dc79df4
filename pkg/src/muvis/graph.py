"""Simple undirected graphs and the shortest-path visibility primitives.

Vertices are dense 0-based integers.  A :class:`Graph` is immutable after
construction; all operations are pure functions, so concurrent readers are
safe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotConnectedError, UnreachablePairError

INF = float("inf")

# Above this size is_mutual_visibility_set switches from pure-Python bitmask
# BFS to a scipy.sparse.csgraph implementation.
_BITMASK_LIMIT = 64


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no self-loops, no parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Normalize raw edge pairs into a :class:`Graph`.

    Duplicate edges collapse; endpoints must lie in ``[0, n)``; self-loops
    are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
    )


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabelled densely.

    Returns the subgraph and the position->original-id mapping.
    """
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [
        (pos[u], pos[v])
        for u, v in g.edges
        if u in pos and v in pos
    ]
    return build_graph(len(keep), edges), keep


def bfs_distances(g: Graph, source: int) -> list:
    """Unweighted shortest-path distances from ``source``; unreachable
    vertices get ``inf``."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> tuple[int, ...]:
    """Articulation vertices of g, via iterative lowpoint DFS.

    Works per component; isolated vertices are never articulation points.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        # stack frames: (vertex, parent, iterator position)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, idx = stack[-1]
            nbrs = g.adjacency[u]
            if idx < len(nbrs):
                stack[-1] = (u, parent, idx + 1)
                w = nbrs[idx]
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, 0))
                else:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        is_cut[p] = True
        if root_children > 1:
            is_cut[root] = True
    return tuple(v for v in range(n) if is_cut[v])


def _blocked_bfs(g: Graph, source: int, blocked: frozenset[int]) -> list:
    """BFS distances where vertices in ``blocked`` may be reached but are
    never expanded (they cannot serve as internal path vertices)."""
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] is INF:
                dist[w] = du
                if w not in blocked:
                    queue.append(w)
    return dist


def pair_visible(g: Graph, x_set: Iterable[int], u: int, v: int) -> bool:
    """True iff some geodesic between u and v avoids ``x_set`` internally.

    Equivalently: v is at distance d_g(u, v) from u in the subgraph induced
    by (V minus x_set) plus {u, v}.  Raises :class:`UnreachablePairError`
    when u and v lie in different components, since "not visible" would be
    misleading there.
    """
    if u == v:
        raise ValueError("pair visibility needs two distinct vertices")
    for w in (u, v):
        if not (0 <= w < g.n):
            raise ValueError(f"vertex {w} out of range for n={g.n}")
    full = bfs_distances(g, u)
    if full[v] is INF:
        raise UnreachablePairError(f"vertices {u} and {v} are in different components")
    if v in g.adjacency[u]:
        return True
    blocked = frozenset(x_set) - {u, v}
    restricted = _blocked_bfs(g, u, blocked)
    return restricted[v] == full[v]


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _mask_layers(masks: list[int], source: int, block_mask: int) -> dict[int, int]:
    """Distances via bitmask BFS; blocked vertices are reached, not expanded."""
    dist = {source: 0}
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        reach = 0
        expand = frontier & ~block_mask if d > 1 else frontier
        while expand:
            low = expand & -expand
            reach |= masks[low.bit_length() - 1]
            expand &= expand - 1
        frontier = reach & ~seen
        seen |= frontier
        probe = frontier
        while probe:
            low = probe & -probe
            dist[low.bit_length() - 1] = d
            probe &= probe - 1
    return dist


def _is_mv_bitmask(g: Graph, members: list[int]) -> bool:
    masks = _adjacency_masks(g)
    x_mask = 0
    for v in members:
        x_mask |= 1 << v
    for p in members:
        full = _mask_layers(masks, p, 0)
        restricted = _mask_layers(masks, p, x_mask & ~(1 << p))
        for q in members:
            if q != p and restricted.get(q) != full.get(q):
                return False
    return True


def _is_mv_scipy(g: Graph, members: list[int]) -> bool:
    # Scale path: one C-speed BFS per member on the blocked graph.  Blocking
    # a member as an internal vertex never hides a geodesic to it, so
    # comparing distances to the other members suffices.
    import numpy as np
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import dijkstra

    n = g.n
    rows = np.fromiter((u for u, _ in g.edges), dtype=np.int32, count=g.m)
    cols = np.fromiter((v for _, v in g.edges), dtype=np.int32, count=g.m)
    data = np.ones(g.m, dtype=np.int8)
    adj = csr_matrix((data, (rows, cols)), shape=(n, n))
    adj = adj + adj.T
    full = dijkstra(adj, directed=False, indices=members, unweighted=True)
    member_pos = {v: i for i, v in enumerate(members)}
    others = np.array(members, dtype=np.int64)
    for i, p in enumerate(members):
        keep = np.ones(n, dtype=bool)
        keep[others] = False
        keep[p] = True
        keep_ids = np.flatnonzero(keep)
        sub = adj[keep_ids][:, keep_ids]
        pos_in_keep = np.full(n, -1, dtype=np.int64)
        pos_in_keep[keep_ids] = np.arange(len(keep_ids))
        d_sub = dijkstra(sub, directed=False, indices=[int(pos_in_keep[p])], unweighted=True)[0]
        for q in members:
            if q == p:
                continue
            best = np.inf
            for w in g.adjacency[q]:
                pw = pos_in_keep[w]
                if pw >= 0:
                    best = min(best, d_sub[pw] + 1)
            if best != full[i][q]:
                return False
    return True


def is_mutual_visibility_set(g: Graph, x_set: Iterable[int]) -> bool:
    """True iff every pair of vertices in ``x_set`` is visible with respect
    to it.  Empty and singleton sets are vacuously mutual-visibility sets.

    Requires a connected graph.
    """
    members = sorted(set(x_set))
    if members and not (0 <= members[0] and members[-1] < g.n):
        raise ValueError("set contains out-of-range vertices")
    if not is_connected(g):
        raise NotConnectedError("mutual-visibility check needs a connected graph")
    if len(members) <= 1:
        return True
    if g.n <= _BITMASK_LIMIT:
        return _is_mv_bitmask(g, members)
    return _is_mv_scipy(g, members)


def first_invisible_pair(g: Graph, x_set: Iterable[int]) -> tuple[int, int] | None:
    """Lexicographically first pair of ``x_set`` that fails visibility, or
    None when the set is a mutual-visibility set."""
    members = sorted(set(x_set))
    for u, v in combinations(members, 2):
        if not pair_visible(g, members, u, v):
            return (u, v)
    return None
