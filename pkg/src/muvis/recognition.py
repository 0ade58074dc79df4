"""Distance-hereditary recognition by pendant/twin pruning.

A connected graph is distance-hereditary exactly when it can be reduced to a
single vertex by repeatedly deleting a pendant vertex, a true twin, or a
false twin.  The recognizer performs that reduction greedily and returns the
certificate (:class:`PruningSequence`); replayed in reverse it rebuilds the
input graph exactly, and it also drives the canonical decomposition
constructor.

Twin candidates are tracked with incremental neighborhood hashes (128-bit
labels, see :mod:`muvis._rng`) so that the whole reduction runs in roughly
O(n + m) set operations; every candidate pair is verified exactly before a
step is emitted, so hashing can never produce a wrong certificate.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from ._rng import vertex_label
from .errors import InvalidSequenceError, NotConnectedError, NotDistanceHereditaryError
from .graph import Graph, build_graph, induced_subgraph, is_connected

PENDANT = "pendant"
TRUE_TWIN = "true-twin"
FALSE_TWIN = "false-twin"
_KINDS = (PENDANT, TRUE_TWIN, FALSE_TWIN)


@dataclass(frozen=True)
class PruningStep:
    """One reduction step: ``removed`` leaves the graph, ``anchor`` is its
    pendant neighbor or twin partner at removal time."""

    kind: str
    removed: int
    anchor: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidSequenceError(f"unknown step kind {self.kind!r}")
        if self.removed == self.anchor:
            raise InvalidSequenceError("step removes its own anchor")


@dataclass(frozen=True)
class PruningSequence:
    """Ordered reduction of a graph to the single vertex ``root``."""

    steps: tuple[PruningStep, ...]
    root: int

    def __len__(self) -> int:
        return len(self.steps)


class _CandidateHeap:
    """Lazy min-id heap; stale entries are dropped at pop time."""

    __slots__ = ("_heap",)

    def __init__(self):
        self._heap: list[int] = []

    def push(self, v: int):
        heapq.heappush(self._heap, v)

    def pop_valid(self, is_valid) -> int | None:
        while self._heap:
            v = heapq.heappop(self._heap)
            if is_valid(v):
                return v
        return None


def recognize_dh(g: Graph):
    """Prune ``g`` down to one vertex, or report why that is impossible.

    Returns a :class:`PruningSequence` if g is distance-hereditary.  Raises
    :class:`NotDistanceHereditaryError` (carrying the irreducible remainder
    graph as ``remainder``) otherwise.  Tie-breaking is fixed: at every step
    the smallest-id vertex admitting a pendant step is removed, then the
    smallest admitting a true-twin step, then false-twin; the anchor is the
    smallest-id valid partner.
    """
    if g.n == 0:
        raise ValueError("recognition needs at least one vertex")
    if not is_connected(g):
        raise NotConnectedError("recognition needs a connected graph")
    n = g.n
    adj: list[set[int]] = [set(nbrs) for nbrs in g.adjacency]
    alive = [True] * n
    labels = [vertex_label(v) for v in range(n)]
    open_hash = [0] * n
    for v in range(n):
        h = 0
        for w in adj[v]:
            h ^= labels[w]
        open_hash[v] = h

    open_buckets: dict[int, set[int]] = {}
    closed_buckets: dict[int, set[int]] = {}
    pendants = _CandidateHeap()
    true_twins = _CandidateHeap()
    false_twins = _CandidateHeap()

    def bucket_add(v: int):
        b = open_buckets.setdefault(open_hash[v], set())
        b.add(v)
        if len(b) >= 2:
            false_twins.push(v)
            if len(b) == 2:
                # the incumbent's candidacy may be new as well
                other = next(iter(b - {v}))
                false_twins.push(other)
        c = closed_buckets.setdefault(open_hash[v] ^ labels[v], set())
        c.add(v)
        if len(c) >= 2:
            true_twins.push(v)
            if len(c) == 2:
                other = next(iter(c - {v}))
                true_twins.push(other)

    def bucket_remove(v: int):
        b = open_buckets.get(open_hash[v])
        if b is not None:
            b.discard(v)
            if not b:
                del open_buckets[open_hash[v]]
        key = open_hash[v] ^ labels[v]
        c = closed_buckets.get(key)
        if c is not None:
            c.discard(v)
            if not c:
                del closed_buckets[key]

    for v in range(n):
        bucket_add(v)
        if len(adj[v]) == 1:
            pendants.push(v)

    def pendant_ok(v: int) -> bool:
        return alive[v] and len(adj[v]) == 1

    def true_twin_partner(v: int) -> int | None:
        if not alive[v]:
            return None
        bucket = closed_buckets.get(open_hash[v] ^ labels[v])
        if not bucket or len(bucket) < 2:
            return None
        # equal 128-bit hashes mean equal neighborhoods short of a collision,
        # so the smallest co-bucket member is almost surely the answer; the
        # exact check (N[v] == N[w] iff adj[v] ^ adj[w] == {v, w}) keeps the
        # certificate sound regardless
        best = min(w for w in bucket if w != v)
        if best in adj[v] and adj[v] ^ adj[best] == {v, best}:
            return best
        for w in sorted(bucket):
            if w != v and w != best and w in adj[v] and adj[v] ^ adj[w] == {v, w}:
                return w
        return None

    def false_twin_partner(v: int) -> int | None:
        if not alive[v]:
            return None
        bucket = open_buckets.get(open_hash[v])
        if not bucket or len(bucket) < 2:
            return None
        best = min(w for w in bucket if w != v)
        if best not in adj[v] and adj[v] == adj[best]:
            return best
        for w in sorted(bucket):
            if w != v and w != best and w not in adj[v] and adj[v] == adj[w]:
                return w
        return None

    def remove_vertex(v: int):
        alive[v] = False
        bucket_remove(v)
        for u in adj[v]:
            adj[u].discard(v)
            bucket_remove(u)
            open_hash[u] ^= labels[v]
            bucket_add(u)
            if len(adj[u]) == 1:
                pendants.push(u)
        adj[v].clear()

    steps: list[PruningStep] = []
    alive_count = n
    while alive_count > 1:
        v = pendants.pop_valid(pendant_ok)
        if v is not None:
            anchor = next(iter(adj[v]))
            kind = PENDANT
        else:
            partner = None
            v = true_twins.pop_valid(lambda x: true_twin_partner(x) is not None)
            if v is not None:
                partner = true_twin_partner(v)
                kind = TRUE_TWIN
            else:
                v = false_twins.pop_valid(lambda x: false_twin_partner(x) is not None)
                if v is not None:
                    partner = false_twin_partner(v)
                    kind = FALSE_TWIN
                else:
                    remainder_vertices = [u for u in range(n) if alive[u]]
                    remainder, _ = induced_subgraph(_current_graph(n, adj, alive), remainder_vertices)
                    raise NotDistanceHereditaryError(
                        f"graph is not distance-hereditary: pruning stalled with "
                        f"{alive_count} vertices left",
                        remainder=remainder,
                    )
            anchor = partner
        steps.append(PruningStep(kind=kind, removed=v, anchor=anchor))
        remove_vertex(v)
        alive_count -= 1

    root = next(u for u in range(n) if alive[u])
    return PruningSequence(steps=tuple(steps), root=root)


def _current_graph(n: int, adj: list[set[int]], alive: list[bool]) -> Graph:
    edges = [
        (u, w)
        for u in range(n)
        if alive[u]
        for w in adj[u]
        if u < w
    ]
    return build_graph(n, edges)


def is_distance_hereditary(g: Graph) -> bool:
    """Boolean wrapper around :func:`recognize_dh`."""
    try:
        recognize_dh(g)
        return True
    except NotDistanceHereditaryError:
        return False


def replay_pruning(g: Graph, seq: PruningSequence) -> bool:
    """Check that ``seq`` is a valid reduction of ``g`` (used by tests and
    by expansion round-trip checks)."""
    adj = [set(nbrs) for nbrs in g.adjacency]
    alive = set(range(g.n))
    for step in seq.steps:
        v, a = step.removed, step.anchor
        if v not in alive or a not in alive:
            return False
        if step.kind == PENDANT:
            if adj[v] != {a}:
                return False
        elif step.kind == TRUE_TWIN:
            if a not in adj[v] or adj[v] ^ adj[a] != {v, a}:
                return False
        else:
            if a in adj[v] or adj[v] != adj[a]:
                return False
        for u in adj[v]:
            adj[u].discard(v)
        adj[v].clear()
        alive.discard(v)
    return alive == {seq.root}
