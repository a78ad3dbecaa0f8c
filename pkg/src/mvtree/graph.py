"""General simple graphs: line graphs, visibility, blocks and cut vertices.

Only what the line-graph identity needs is here. Mutual visibility in a
general graph is decided by brute force; block graphs get the closed form
``|V| - |cut vertices|``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    NoEdges,
    NotAGraph,
    NotBlockGraph,
    PreconditionViolated,
    TooFewEdges,
    TooLarge,
    VertexOutOfRange,
)
from .io import parse_edge_list
from .tree import Edge, Tree, VertexSet, vertex_set
from .visibility import MuResult

BRUTE_FORCE_LIMIT = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Connected simple undirected graph on ``0 .. n-1``.

    ``edge_labels[i]`` names the tree edge behind vertex ``i`` when the graph
    is a line graph, and is ``None`` otherwise.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_labels: tuple[Edge, ...] | None = field(default=None, compare=False)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} out of range for n={self.n}")
        return v


def graph_from_edge_list(
    n: int, pairs: Iterable[Sequence[int]], edge_labels: Sequence[Edge] | None = None
) -> SimpleGraph:
    """Validate and build a connected :class:`SimpleGraph`. Cycles are allowed."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NotAGraph(f"vertex count must be a positive integer, got {n!r}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise NotAGraph(f"vertex {x} out of range for n={n}")
        if u == v:
            raise NotAGraph(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise NotAGraph(f"duplicate edge {min(u, v)}-{max(u, v)}")
        adj[u].add(v)
        adj[v].add(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    if len(_bfs_distances(adjacency, 0)) != n:
        raise NotAGraph("graph is disconnected")
    labels = tuple(edge_labels) if edge_labels is not None else None
    return SimpleGraph(n, adjacency, labels)


def parse_graph(text: str) -> SimpleGraph:
    n, pairs = parse_edge_list(text)
    return graph_from_edge_list(n, pairs)


def _bfs_distances(adjacency, source: int, allowed=None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def line_graph(t: Tree) -> SimpleGraph:
    """Line graph of ``t``; vertex ``i`` stands for ``t.edges[i]``."""
    if not t.edges:
        raise NoEdges("the single-vertex tree has no line graph")
    incident: list[list[int]] = [[] for _ in range(t.n)]
    for i, (u, v) in enumerate(t.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = [p for inc in incident for p in itertools.combinations(inc, 2)]
    return graph_from_edge_list(len(t.edges), pairs, edge_labels=t.edges)


def is_pair_x_visible(g: SimpleGraph, x: Iterable[int], u: int, v: int) -> bool:
    """Whether some shortest ``u``-``v`` path has no internal vertex in ``x``.

    Compares the ``u``-``v`` distance in ``g`` against the distance in the
    subgraph induced on ``(V - x) + {u, v}``.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise PreconditionViolated("pair visibility needs two distinct vertices")
    blocked = set(vertex_set(x, g.n)) - {u, v}
    allowed = set(range(g.n)) - blocked
    full = _bfs_distances(g.adjacency, u)[v]
    restricted = _bfs_distances(g.adjacency, u, allowed).get(v)
    return restricted == full


def is_mv_set_general(g: SimpleGraph, s: Iterable[int]) -> bool:
    s = vertex_set(s, g.n)
    return all(is_pair_x_visible(g, s, a, b) for a, b in itertools.combinations(s, 2))


class _LayeredVisibility:
    # Per pair, the geodesic interval split into distance layers; a pair is
    # visible past X when some vertex survives in every layer while walking
    # outward along edges.
    def __init__(self, g: SimpleGraph):
        n = g.n
        self.nbr = [sum(1 << y for y in g.adjacency[x]) for x in range(n)]
        dist = [_bfs_distances(g.adjacency, s) for s in range(n)]
        self.layers = {}
        for u, v in itertools.combinations(range(n), 2):
            d = dist[u][v]
            layers = [0] * max(d - 1, 0)
            for z in range(n):
                k = dist[u][z]
                if 0 < k < d and dist[z][v] == d - k:
                    layers[k - 1] |= 1 << z
            self.layers[u, v] = layers

    def visible(self, u: int, v: int, xmask: int) -> bool:
        frontier = 1 << u
        for layer in self.layers[u, v]:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= self.nbr[low.bit_length() - 1]
                f ^= low
            frontier = reach & layer & ~xmask
            if not frontier:
                return False
        return True

    def is_mv(self, members: Sequence[int]) -> bool:
        xmask = 0
        for a in members:
            xmask |= 1 << a
        return all(self.visible(a, b, xmask) for a, b in itertools.combinations(members, 2))


def brute_force_mu(g: SimpleGraph, limit: int = BRUTE_FORCE_LIMIT) -> MuResult:
    """Largest mutual-visibility set by exhaustive search.

    Subsets of a mutual-visibility set are again mutual-visibility sets, so
    scanning cardinalities downward from ``n`` and stopping at the first hit
    finds the maximum.
    """
    if g.n > limit:
        raise TooLarge(f"brute-force mu limited to n <= {limit}, got n={g.n}")
    engine = _LayeredVisibility(g)
    for k in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), k):
            if engine.is_mv(combo):
                return MuResult(k, combo)
    raise AssertionError("unreachable: every single vertex is a mutual-visibility set")


def _blocks_and_cuts(g: SimpleGraph) -> tuple[list[tuple[Edge, ...]], set[int]]:
    # Iterative Hopcroft-Tarjan with an edge stack.
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[tuple[Edge, ...]] = []
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        edge_stack: list[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append((min(e), max(e)))
                    if e == (p, v):
                        break
                blocks.append(tuple(sorted(block)))
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return blocks, cuts


def articulation_points(g: SimpleGraph) -> VertexSet:
    return tuple(sorted(_blocks_and_cuts(g)[1]))


def blocks(g: SimpleGraph) -> list[VertexSet]:
    """Vertex sets of the blocks (maximal 2-connected pieces and bridges)."""
    out = [tuple(sorted({x for e in b for x in e})) for b in _blocks_and_cuts(g)[0]]
    if g.n == 1:
        out = [(0,)]
    return sorted(out)


def is_block_graph(g: SimpleGraph) -> bool:
    for block in _blocks_and_cuts(g)[0]:
        k = len({x for e in block for x in e})
        if len(block) != k * (k - 1) // 2:
            return False
    return True


def mu_block_graph(g: SimpleGraph) -> int:
    if not is_block_graph(g):
        raise NotBlockGraph("some block is not a clique")
    return g.n - len(articulation_points(g))


def mu_line_graph_of_tree(t: Tree) -> int:
    """Mutual-visibility number of the line graph of ``t``, by counting leaf edges."""
    if len(t.edges) < 2:
        raise TooFewEdges(f"need at least two edges, got {len(t.edges)}")
    return sum(1 for u, v in t.edges if t.degree(u) == 1 or t.degree(v) == 1)
