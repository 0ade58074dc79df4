"""Exponential-time ground-truth engines.

These are the independent oracles the fast decomposition pipeline is tested
against: an exhaustive metric check of the distance-hereditary property and
a brute-force maximum mutual-visibility search.  Both work on bitmask
adjacency and are only intended for desk-scale graphs; the caps are
arguments so callers can raise them deliberately.
"""

from __future__ import annotations

from .errors import NotConnectedError, SizeCapError
from .graph import Graph, _adjacency_masks, is_connected

DEFAULT_METRIC_CAP = 10
DEFAULT_MU_CAP = 16


def _require_small(g: Graph, n_cap: int, what: str):
    if g.n > n_cap:
        raise SizeCapError(f"{what} capped at n={n_cap}, got n={g.n}")


def _mask_bfs(masks: list[int], source: int, allowed: int) -> list[int]:
    """Distances inside the sub-universe ``allowed`` (-1 = unreached)."""
    dist = [-1] * len(masks)
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        reach = 0
        probe = frontier
        while probe:
            low = probe & -probe
            reach |= masks[low.bit_length() - 1]
            probe &= probe - 1
        frontier = reach & allowed & ~seen
        seen |= frontier
        probe = frontier
        while probe:
            low = probe & -probe
            dist[low.bit_length() - 1] = d
            probe &= probe - 1
    return dist


def is_dh_metric(g: Graph, n_cap: int = DEFAULT_METRIC_CAP) -> bool:
    """Exhaustively decide the distance-hereditary property from its
    definition: every connected induced subgraph preserves distances."""
    _require_small(g, n_cap, "metric distance-hereditary check")
    if not is_connected(g):
        raise NotConnectedError("metric check needs a connected graph")
    n = g.n
    masks = _adjacency_masks(g)
    full = (1 << n) - 1
    global_dist = [_mask_bfs(masks, v, full) for v in range(n)]
    for subset in range(1, 1 << n):
        k = subset.bit_count()
        if k < 3:
            continue
        members = []
        probe = subset
        while probe:
            low = probe & -probe
            members.append(low.bit_length() - 1)
            probe &= probe - 1
        sub_dist0 = _mask_bfs(masks, members[0], subset)
        if any(sub_dist0[v] == -1 for v in members):
            continue  # disconnected; its components are other subsets
        for u in members:
            du = _mask_bfs(masks, u, subset) if u != members[0] else sub_dist0
            for v in members:
                if v > u and du[v] != global_dist[u][v]:
                    return False
    return True


def _mv_check_masks(
    masks: list[int], x_mask: int, members: list[int], full_dist: dict[int, list[int]]
) -> bool:
    """All-pairs visibility of the member set, computed by one blocked BFS
    per member (blocked vertices are reachable but never internal)."""
    for i, p in enumerate(members):
        if i + 1 == len(members):
            break
        restricted = _blocked_mask_bfs(masks, p, x_mask & ~(1 << p))
        full = full_dist[p]
        for q in members[i + 1:]:
            if restricted[q] != full[q]:
                return False
    return True


def _blocked_mask_bfs(masks: list[int], source: int, block_mask: int) -> list[int]:
    dist = [-1] * len(masks)
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        expand = frontier if d == 1 else frontier & ~block_mask
        reach = 0
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


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask &= mask - 1
    return out


def _max_mv_over(g: Graph, ground: list[int]) -> tuple[int, tuple[int, ...] | None]:
    """Largest mutual-visibility set inside ``ground``.

    Mutual-visibility sets are closed under taking subsets, so the family is
    climbed level by level: a k-set is a candidate only if all of its
    (k-1)-subsets were verified.  The witness is the lexicographically least
    set of maximum size, matching a decreasing-size lexicographic scan.
    """
    if not ground:
        return 0, None
    masks = _adjacency_masks(g)
    full = (1 << g.n) - 1
    full_dist = {v: _mask_bfs(masks, v, full) for v in ground}
    level: set[int] = {1 << v for v in ground}
    best_sets = level
    while True:
        candidates: set[int] = set()
        for y in level:
            for v in ground:
                bit = 1 << v
                if y & bit:
                    continue
                x = y | bit
                if x in candidates:
                    continue
                probe = x
                ok = True
                while probe:
                    low = probe & -probe
                    if (x ^ low) not in level:
                        ok = False
                        break
                    probe &= probe - 1
                if ok:
                    candidates.add(x)
        nxt = {x for x in candidates if _mv_check_masks(masks, x, _bits(x), full_dist)}
        if not nxt:
            break
        level = nxt
        best_sets = nxt
    witness = min(tuple(_bits(x)) for x in best_sets)
    return len(witness), witness


def mu_bruteforce(g: Graph, n_cap: int = DEFAULT_MU_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact mutual-visibility number with a deterministic witness.

    Works on any connected graph, distance-hereditary or not.
    """
    _require_small(g, n_cap, "brute-force mu")
    if not is_connected(g):
        raise NotConnectedError("brute-force mu needs a connected graph")
    size, witness = _max_mv_over(g, list(range(g.n)))
    assert witness is not None
    return size, witness


def mu_set_avoiding(
    g: Graph, forbidden, n_cap: int = DEFAULT_MU_CAP
) -> tuple[int, tuple[int, ...] | None]:
    """Largest mutual-visibility set disjoint from ``forbidden``."""
    _require_small(g, n_cap, "brute-force mu")
    if not is_connected(g):
        raise NotConnectedError("brute-force mu needs a connected graph")
    banned = set(forbidden)
    ground = [v for v in range(g.n) if v not in banned]
    return _max_mv_over(g, ground)
