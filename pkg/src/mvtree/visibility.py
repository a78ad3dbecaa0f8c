"""Mutual-visibility sets of trees via Steiner subtrees and legs.

A set ``S`` of tree vertices is a mutual-visibility set exactly when it is
the leaf set of its own Steiner subtree. From this, the maximum size is the
leaf count, and the maximum sets of a tree with a branch vertex are the
choices of one vertex from each leg (branch vertex excluded).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Iterator, Literal

from .errors import PreconditionViolated, TooSmall
from .tree import (
    Tree,
    VertexSet,
    attachment_map,
    branch_vertices,
    leaves,
    legs,
    steiner_subtree,
    vertex_set,
)


@dataclass(frozen=True)
class MuResult:
    mu: int
    witness: VertexSet


@dataclass(frozen=True)
class RMuResult:
    count: int
    regime: Literal["path", "branched", "singleton"]


def is_mv_set_fast(t: Tree, s: Iterable[int]) -> bool:
    s = vertex_set(s, t.n)
    if len(s) <= 1:
        return True
    return steiner_subtree(t, s).leaves == s


def mu_tree(t: Tree) -> MuResult:
    leaf_set = leaves(t)
    return MuResult(len(leaf_set), leaf_set)


def mu_tree_via_branch_degrees(t: Tree) -> int:
    """Leaf count from the degrees of branch vertices alone."""
    if t.n < 2:
        raise TooSmall("branch-degree formula needs n >= 2")
    return 2 + sum(t.degree(v) - 2 for v in branch_vertices(t))


def r_mu(t: Tree) -> RMuResult:
    """Number of maximum mutual-visibility sets.

    Paths on ``n >= 2`` vertices have ``C(n, 2)`` (any two vertices); trees
    with a branch vertex have the product of their leg lengths.
    """
    if t.n == 1:
        return RMuResult(1, "singleton")
    if not branch_vertices(t):
        return RMuResult(comb(t.n, 2), "path")
    return RMuResult(prod(leg.length for leg in legs(t)), "branched")


def enumerate_maximum_mv_sets(t: Tree) -> Iterator[VertexSet]:
    """Yield every maximum mutual-visibility set once, in lexicographic order."""
    if t.n == 1:
        yield (0,)
        return
    if not branch_vertices(t):
        for u in range(t.n):
            for v in range(u + 1, t.n):
                yield (u, v)
        return
    yield from _one_per_group([leg.interior_plus_leaf for leg in legs(t)])


def _one_per_group(groups: list[VertexSet]) -> Iterator[VertexSet]:
    # Groups are disjoint. The next element of a sorted selection is the
    # smallest pick among the remaining groups, so it must leave every other
    # remaining group a larger candidate.
    def rec(remaining: list[VertexSet], floor: int, prefix: tuple[int, ...]):
        if not remaining:
            yield prefix
            return
        candidates = sorted(
            (x, i) for i, g in enumerate(remaining) for x in g if x > floor
        )
        for x, i in candidates:
            rest = remaining[:i] + remaining[i + 1 :]
            if all(g[-1] > x for g in rest):
                yield from rec(rest, x, prefix + (x,))

    yield from rec(list(groups), -1, ())


def is_pair_q_visible_via_attachment(t: Tree, q: Iterable[int], u: int, w: int) -> bool:
    """Decide whether ``u`` in ``q`` and ``w`` outside it see each other past ``q``.

    ``q`` must itself be a mutual-visibility set. The answer depends only on
    where ``w`` attaches to the Steiner subtree of ``q``: at ``u`` itself, or
    at a subtree vertex not in ``q``.
    """
    q = vertex_set(q, t.n)
    t.check_vertex(u)
    t.check_vertex(w)
    if u not in q:
        raise PreconditionViolated(f"u={u} is not in q")
    if w in q:
        raise PreconditionViolated(f"w={w} is in q")
    if not is_mv_set_fast(t, q):
        raise PreconditionViolated("q is not a mutual-visibility set")
    a = attachment_map(t, steiner_subtree(t, q).vertices)[w]
    return a == u or a not in q
