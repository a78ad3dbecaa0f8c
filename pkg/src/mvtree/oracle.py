"""Exhaustive ground truth built only from adjacency and BFS distances.

Nothing here touches Steiner subtrees, legs or attachment points. A pair
``{u, v}`` is X-visible when at least one of its shortest paths (enumerated
explicitly) has no internal vertex in ``X``; every family below is obtained
by testing every subset against that definition.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import EmptyQ, TooLarge, VertexOutOfRange

TREE_LIMIT = 14
GRAPH_LIMIT = 12
CQ_LIMIT = 9

Mask = int


def _mask(vs) -> Mask:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _members(mask: Mask) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _is_tree(g) -> bool:
    return sum(len(a) for a in g.adjacency) == 2 * (g.n - 1)


class GeodesicIndex:
    """Internal-vertex masks of every shortest path between every pair.

    ``paths[u][v]`` lists one bitmask per distinct shortest ``u``-``v`` path.
    Trees have exactly one per pair.
    """

    def __init__(self, g):
        n = g.n
        self.n = n
        dist = []
        for s in range(n):
            d = [-1] * n
            d[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in g.adjacency[x]:
                    if d[y] < 0:
                        d[y] = d[x] + 1
                        queue.append(y)
            dist.append(d)
        self.dist = dist
        self.paths: list[list[list[Mask]]] = [[[] for _ in range(n)] for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                found = sorted(set(self._walk(g.adjacency, u, v)))
                self.paths[u][v] = self.paths[v][u] = found

    def _walk(self, adjacency, u, v):
        dist = self.dist
        stack = [(u, 0)]
        while stack:
            x, inner = stack.pop()
            for y in adjacency[x]:
                if dist[u][y] == dist[u][x] + 1 and dist[y][v] == dist[x][v] - 1:
                    if y == v:
                        yield inner
                    else:
                        stack.append((y, inner | 1 << y))

    def pair_visible(self, u: int, v: int, xmask: Mask) -> bool:
        return any(not (m & xmask) for m in self.paths[u][v])

    def is_mv_mask(self, smask: Mask) -> bool:
        members = _members(smask)
        for i, a in enumerate(members):
            row = self.paths[a]
            for b in members[i + 1 :]:
                if all(m & smask for m in row[b]):
                    return False
        return True


def oracle_is_mv_set(g, s, index: GeodesicIndex | None = None) -> bool:
    """Definitional check; ``g`` may be a ``Tree`` or a ``SimpleGraph``."""
    s = set(s)
    for v in s:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} out of range for n={g.n}")
    index = index or GeodesicIndex(g)
    return index.is_mv_mask(_mask(s))


@dataclass(frozen=True)
class MvFamily:
    """Every mutual-visibility set of a small graph.

    All three lists are ordered by cardinality, then lexicographically.
    """

    all_mv_sets: list[tuple[int, ...]]
    maximum_sets: list[tuple[int, ...]]
    maximal_sets: list[tuple[int, ...]]
    mu: int


def _subset_key(mask: Mask):
    m = _members(mask)
    return (len(m), m)


def oracle_mv_family(g, limit: int | None = None, index: GeodesicIndex | None = None) -> MvFamily:
    if limit is None:
        limit = TREE_LIMIT if _is_tree(g) else GRAPH_LIMIT
    if g.n > limit:
        raise TooLarge(f"exhaustive family limited to n <= {limit}, got n={g.n}")
    index = index or GeodesicIndex(g)
    mv = [m for m in range(1 << g.n) if index.is_mv_mask(m)]
    mv_set = set(mv)
    mu = max(bin(m).count("1") for m in mv)
    # Subsets of MV sets are MV, so a set is maximal iff no single vertex extends it.
    maximal = [
        m for m in mv
        if not any((m | 1 << x) in mv_set for x in range(g.n) if not m >> x & 1)
    ]
    maximum = [m for m in mv if bin(m).count("1") == mu]
    order = lambda ms: [_members(m) for m in sorted(ms, key=_subset_key)]  # noqa: E731
    return MvFamily(order(mv), order(maximum), order(maximal), mu)


def oracle_maximal_absolute_cq_sets(t, q, index: GeodesicIndex | None = None) -> list[tuple[int, ...]]:
    """Inclusion-maximal absolute c_Q-visible sets, found by testing every ``W``.

    A set ``W`` disjoint from ``q`` qualifies when ``q`` is a mutual-visibility
    set and every pair of ``q + W`` is q-visible. Returns ``[]`` when ``q`` is
    not a mutual-visibility set.
    """
    if t.n > CQ_LIMIT:
        raise TooLarge(f"exhaustive c_Q search limited to n <= {CQ_LIMIT}, got n={t.n}")
    q = set(q)
    if not q:
        raise EmptyQ("q must be nonempty")
    for v in q:
        if not 0 <= v < t.n:
            raise VertexOutOfRange(f"vertex {v} out of range for n={t.n}")
    index = index or GeodesicIndex(t)
    return [_members(m) for m in _maximal_cq_masks(index, _mask(q))]


def _maximal_cq_masks(index: GeodesicIndex, qmask: Mask) -> list[Mask]:
    if not index.is_mv_mask(qmask):
        return []
    n = index.n
    vis = index.pair_visible
    qs = _members(qmask)
    rest = ((1 << n) - 1) & ~qmask
    outside = _members(rest)
    ok = {w: all(vis(u, w, qmask) for u in qs) for w in outside}
    compat = {w: _mask(y for y in outside if y != w and vis(w, y, qmask)) for w in outside}
    # Every subset of ``rest`` is tested; validity of W is read off W minus
    # its lowest vertex, which has already been visited.
    valid = {0: True}
    sub = 0
    while True:
        sub = (sub - rest) & rest
        if not sub:
            break
        low = sub & -sub
        others = sub ^ low
        w = low.bit_length() - 1
        valid[sub] = valid[others] and ok[w] and (compat[w] & others) == others
    good = [m for m, v in valid.items() if v]
    maximal = [m for m in good if not any(valid.get(m | 1 << w) for w in outside if not m >> w & 1)]
    return sorted(maximal, key=lambda m: _members(m))


def tree_mv_table(edges: np.ndarray) -> np.ndarray:
    """Mutual-visibility flags for every subset of every tree in a batch.

    ``edges`` has shape ``(B, n-1, 2)``. The result has shape ``(B, 2**n)``;
    entry ``[b, S]`` says whether the vertex set with bitmask ``S`` is a
    mutual-visibility set of tree ``b``. A tree has one geodesic per pair, so
    ``z`` lies inside the ``u``-``v`` path exactly when
    ``d(u, z) + d(z, v) == d(u, v)``; distances come from Floyd-Warshall.
    """
    edges = np.asarray(edges, dtype=np.int64)
    batch, m = edges.shape[0], edges.shape[1]
    n = m + 1
    big = np.int32(4 * n)
    dist = np.full((batch, n, n), big, dtype=np.int32)
    idx = np.arange(batch)[:, None]
    dist[idx, edges[:, :, 0], edges[:, :, 1]] = 1
    dist[idx, edges[:, :, 1], edges[:, :, 0]] = 1
    dist[:, np.arange(n), np.arange(n)] = 0
    for k in range(n):
        np.minimum(dist, dist[:, :, k : k + 1] + dist[:, k : k + 1, :], out=dist)
    weights = (1 << np.arange(n, dtype=np.int64))
    subsets = np.arange(1 << n, dtype=np.int64)
    valid = np.ones((batch, 1 << n), dtype=bool)
    for u, v in itertools.combinations(range(n), 2):
        on = dist[:, u, :] + dist[:, :, v] == dist[:, u, v][:, None]
        on[:, [u, v]] = False
        inner = on.astype(np.int64) @ weights
        both = subsets[((subsets >> u) & (subsets >> v) & 1).astype(bool)]
        valid[:, both] &= (inner[:, None] & both[None, :]) == 0
    return valid


def popcounts(n: int) -> np.ndarray:
    s = np.arange(1 << n, dtype=np.int64)
    out = np.zeros_like(s)
    for v in range(n):
        out += s >> v & 1
    return out
