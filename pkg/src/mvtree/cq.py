"""c_Q-visible and absolute c_Q-visible sets in trees.

For a mutual-visibility set ``Q``, the maximal absolute c_Q-visible sets are
built directly. With one vertex ``u`` they are the components of ``T - u``.
With two or more vertices there is a single one: every vertex outside ``Q``
whose attachment point on the Steiner subtree of ``Q`` is not in ``Q``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import EmptyQ, Overlap, TooLarge
from .oracle import CQ_LIMIT, GeodesicIndex, _mask, _maximal_cq_masks, _members
from .tree import (
    Tree,
    VertexSet,
    branch_partition,
    components_after_removal,
    path_between,
    vertex_set,
)
from .visibility import is_mv_set_fast

Construction = Literal["empty", "components", "union_of_internal_branches"]


@dataclass(frozen=True)
class CqReport:
    q: VertexSet
    q_is_mv: bool
    maximal_sets: list[VertexSet]
    construction: Construction


def _check_q_w(t: Tree, q, w) -> tuple[VertexSet, VertexSet]:
    q = vertex_set(q, t.n)
    w = vertex_set(w, t.n)
    if not q:
        raise EmptyQ("q must be nonempty")
    overlap = set(q) & set(w)
    if overlap:
        raise Overlap(f"w and q share vertices {sorted(overlap)}")
    return q, w


def _q_visible(t: Tree, qset: set[int], a: int, b: int) -> bool:
    return not any(z in qset for z in path_between(t, a, b).internal)


def is_cq_visible_set(t: Tree, q: Iterable[int], w: Iterable[int]) -> bool:
    """Pairs inside ``w`` and pairs between ``q`` and ``w`` are all q-visible."""
    q, w = _check_q_w(t, q, w)
    qset = set(q)
    pairs = itertools.chain(itertools.combinations(w, 2), itertools.product(q, w))
    return all(_q_visible(t, qset, a, b) for a, b in pairs)


def is_absolute_cq_visible_set(t: Tree, q: Iterable[int], w: Iterable[int]) -> bool:
    q, w = _check_q_w(t, q, w)
    return is_mv_set_fast(t, q) and is_cq_visible_set(t, q, w)


def maximal_absolute_cq_visible_sets(t: Tree, q: Iterable[int]) -> CqReport:
    q = vertex_set(q, t.n)
    if not q:
        raise EmptyQ("q must be nonempty")
    if not is_mv_set_fast(t, q):
        return CqReport(q, False, [], "empty")
    if len(q) == 1:
        # The single-vertex tree has no components; only the empty set remains.
        comps = components_after_removal(t, q[0]) or [()]
        return CqReport(q, True, comps, "components")
    classes = branch_partition(t, q)
    qset = set(q)
    union = tuple(sorted(w for x, cls in classes.items() if x not in qset for w in cls))
    return CqReport(q, True, [union], "union_of_internal_branches")


def is_disjoint_visible(t: Tree, q: Iterable[int]) -> bool:
    sets = maximal_absolute_cq_visible_sets(t, q).maximal_sets
    return all(not set(a) & set(b) for a, b in itertools.combinations(sets, 2))


def verify_absolute_clear(t: Tree, limit: int = CQ_LIMIT) -> bool:
    """Exhaustively confirm that every nonempty ``q`` is disjoint-visible.

    For each ``q`` the maximal absolute c_Q-visible sets are found by testing
    every subset of ``V - q``; they must be pairwise disjoint and coincide
    with :func:`maximal_absolute_cq_visible_sets`.
    """
    return find_absolute_clear_violation(t, limit) is None


def find_absolute_clear_violation(t: Tree, limit: int = CQ_LIMIT) -> dict | None:
    """First ``q`` breaking absolute-clearness or disagreeing with the construction."""
    if t.n > limit:
        raise TooLarge(f"absolute-clear verification limited to n <= {limit}, got n={t.n}")
    index = GeodesicIndex(t)
    for qmask in range(1, 1 << t.n):
        found = _maximal_cq_masks(index, qmask)
        if any(a & b for a, b in itertools.combinations(found, 2)):
            return {"q": _members(qmask), "reason": "overlapping maximal sets",
                    "exhaustive": [_members(m) for m in found]}
        built = maximal_absolute_cq_visible_sets(t, _members(qmask)).maximal_sets
        if sorted(_mask(s) for s in built) != sorted(found):
            return {"q": _members(qmask), "reason": "construction disagrees with exhaustive search",
                    "exhaustive": [_members(m) for m in found], "constructed": built}
    return None
