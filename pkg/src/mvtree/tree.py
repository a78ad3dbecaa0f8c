"""Immutable labeled trees and their structural decompositions.

Vertices are the integers ``0 .. n-1``. Vertex sets are represented as sorted
tuples of distinct ints, so two sets compare equal exactly when their sorted
member lists do and tuples of sets sort lexicographically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EmptySeed,
    NoBranchVertex,
    NotATree,
    VertexOutOfRange,
)

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


def vertex_set(members: Iterable[int], n: int | None = None) -> VertexSet:
    """Canonicalize ``members`` into a sorted duplicate-free tuple.

    When ``n`` is given every member must lie in ``range(n)``.
    """
    vs = tuple(sorted(set(int(v) for v in members)))
    if n is not None:
        for v in vs:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} out of range for n={n}")
    return vs


@dataclass(frozen=True)
class Tree:
    """A labeled tree on ``0 .. n-1``.

    Build instances through :func:`tree_from_edge_list`, which validates the
    input; the constructor itself trusts its arguments. ``edges`` holds each
    edge as ``(min, max)`` in ascending order, so equal trees compare equal.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} out of range for n={self.n}")
        return v


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


@dataclass(frozen=True)
class SteinerSubtree:
    """The minimal subtree of a tree containing ``seed``."""

    vertices: VertexSet
    edges: tuple[Edge, ...]
    leaves: VertexSet
    seed: VertexSet


@dataclass(frozen=True)
class Leg:
    """Path from a leaf to its nearest branch vertex.

    ``interior_plus_leaf`` is the leg's vertex set without the branch vertex;
    its size equals ``length``.
    """

    leaf: int
    branch: int
    path: Path
    length: int
    interior_plus_leaf: VertexSet


def tree_from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Tree:
    """Validate an edge list and build a :class:`Tree`.

    Raises :class:`NotATree` for a non-positive vertex count, out-of-range
    endpoints, self-loops, duplicate edges, a wrong edge count, or a
    disconnected edge set.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NotATree(f"vertex count must be a positive integer, got {n!r}")
    seen: set[Edge] = set()
    for pair in pairs:
        if len(pair) != 2:
            raise NotATree(f"edge {tuple(pair)!r} does not have two endpoints")
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise NotATree(f"vertex {x} out of range for n={n}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise NotATree(f"duplicate edge {e[0]}-{e[1]}")
        seen.add(e)
    if len(seen) != n - 1:
        raise NotATree(f"edge count {len(seen)} != n-1 = {n - 1}")
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    if len(_reachable(adjacency, 0)) != n:
        raise NotATree("edge set is disconnected")
    return Tree(n, edges, adjacency)


def _reachable(adjacency, root: int, blocked: int | None = None) -> list[int]:
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y != blocked and y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def path_between(t: Tree, u: int, v: int) -> Path:
    """The unique ``u``-``v`` path in ``t``."""
    t.check_vertex(u)
    t.check_vertex(v)
    parent = {u: u}
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    out = [v]
    while out[-1] != u:
        out.append(parent[out[-1]])
    out.reverse()
    return Path(tuple(out))


def leaves(t: Tree) -> VertexSet:
    """Degree-one vertices; the single-vertex tree counts its vertex as a leaf."""
    if t.n == 1:
        return (0,)
    return tuple(v for v in range(t.n) if len(t.adjacency[v]) == 1)


def branch_vertices(t: Tree) -> VertexSet:
    return tuple(v for v in range(t.n) if len(t.adjacency[v]) >= 3)


def legs(t: Tree) -> list[Leg]:
    """One :class:`Leg` per leaf, ordered by leaf id.

    Raises :class:`NoBranchVertex` for paths, where legs are undefined.
    """
    if not branch_vertices(t):
        raise NoBranchVertex("tree has no vertex of degree >= 3; legs are undefined")
    out = []
    for u in leaves(t):
        walk = [u]
        prev, cur = -1, u
        while len(t.adjacency[cur]) < 3:
            nxt = next(y for y in t.adjacency[cur] if y != prev)
            prev, cur = cur, nxt
            walk.append(cur)
        out.append(
            Leg(
                leaf=u,
                branch=cur,
                path=Path(tuple(walk)),
                length=len(walk) - 1,
                interior_plus_leaf=tuple(sorted(walk[:-1])),
            )
        )
    return out


def steiner_subtree(t: Tree, s: Iterable[int]) -> SteinerSubtree:
    """Minimal subtree of ``t`` containing every vertex of ``s``.

    Leaves outside ``s`` are pruned repeatedly until none remain.
    """
    seed = vertex_set(s, t.n)
    if not seed:
        raise EmptySeed("Steiner subtree needs a nonempty seed set")
    keep = set(seed)
    deg = [len(a) for a in t.adjacency]
    alive = [True] * t.n
    stack = [v for v in range(t.n) if deg[v] == 1 and v not in keep]
    while stack:
        v = stack.pop()
        alive[v] = False
        for y in t.adjacency[v]:
            if alive[y]:
                deg[y] -= 1
                if deg[y] == 1 and y not in keep:
                    stack.append(y)
    vertices = tuple(v for v in range(t.n) if alive[v])
    edges = tuple(e for e in t.edges if alive[e[0]] and alive[e[1]])
    if len(vertices) == 1:
        sub_leaves: VertexSet = vertices
    else:
        sub_leaves = tuple(v for v in vertices if deg[v] == 1)
    return SteinerSubtree(vertices, edges, sub_leaves, seed)


def attachment_map(t: Tree, subtree_vertices: Iterable[int]) -> list[int]:
    """Nearest subtree vertex for every vertex of ``t``.

    ``subtree_vertices`` must induce a connected subtree; the nearest vertex
    is then unique, and one outward breadth-first sweep finds it.
    """
    att = [-1] * t.n
    queue = deque()
    for x in subtree_vertices:
        att[x] = x
        queue.append(x)
    while queue:
        x = queue.popleft()
        for y in t.adjacency[x]:
            if att[y] < 0:
                att[y] = att[x]
                queue.append(y)
    return att


def attachment_point(t: Tree, q: Iterable[int], x: int) -> int:
    t.check_vertex(x)
    h = steiner_subtree(t, q)
    return attachment_map(t, h.vertices)[x]


def branch_partition(t: Tree, q: Iterable[int]) -> dict[int, VertexSet]:
    """Group ``V(t) \\ q`` by attachment point onto the Steiner subtree of ``q``.

    Keys are the subtree vertices with a nonempty class, in ascending order.
    A subtree vertex outside ``q`` attaches to itself, so it appears in its
    own class.
    """
    h = steiner_subtree(t, q)
    inside = set(h.seed)
    att = attachment_map(t, h.vertices)
    classes: dict[int, list[int]] = {}
    for w in range(t.n):
        if w not in inside:
            classes.setdefault(att[w], []).append(w)
    return {x: tuple(classes[x]) for x in sorted(classes)}


def components_after_removal(t: Tree, v: int) -> list[VertexSet]:
    """Vertex sets of the components of ``t - v``, sorted lexicographically."""
    t.check_vertex(v)
    comps = [tuple(sorted(_reachable(t.adjacency, y, blocked=v))) for y in t.adjacency[v]]
    return sorted(comps)
