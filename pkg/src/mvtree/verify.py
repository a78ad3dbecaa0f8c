"""Property harness: every fast algorithm checked against the oracle.

Trees come from two sources: all labeled trees up to ``exhaustive_max_n``
vertices (Prüfer enumeration) and ``trials`` random trees for each larger
size up to ``max_n``. Each property records how many trees it checked and
the first counterexample it met.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cq import find_absolute_clear_violation, maximal_absolute_cq_visible_sets
from .errors import TooLarge
from .generators import all_labeled_trees, random_subset, random_tree
from .graph import (
    articulation_points,
    brute_force_mu,
    is_block_graph,
    is_mv_set_general,
    line_graph,
    mu_block_graph,
    mu_line_graph_of_tree,
)
from .oracle import CQ_LIMIT, TREE_LIMIT, GeodesicIndex, _mask, oracle_mv_family
from .tree import (
    Tree,
    attachment_map,
    attachment_point,
    branch_partition,
    branch_vertices,
    leaves,
    legs,
    path_between,
    steiner_subtree,
    tree_from_edge_list,
)
from .visibility import (
    enumerate_maximum_mv_sets,
    is_mv_set_fast,
    is_pair_q_visible_via_attachment,
    mu_tree,
    mu_tree_via_branch_degrees,
    r_mu,
)

MvCheck = Callable[[Tree, Iterable[int]], bool]

PROPERTIES = (
    "degree_sum",
    "leaf_count_formula",
    "steiner_is_path_union",
    "steiner_of_leaves_is_whole_tree",
    "attachment_idempotent",
    "branch_partition_covers_complement",
    "legs_partition_outside_branch_core",
    "mv_fast_matches_oracle",
    "mu_matches_oracle",
    "r_mu_matches_oracle",
    "enumeration_matches_oracle",
    "mv_size_at_most_leaf_count",
    "restriction_to_subtree",
    "branch_core_sets_submaximum",
    "pair_visibility_via_attachment",
    "absolute_clear",
    "absolute_cq_downward_closed",
    "line_graph_is_block_graph",
    "line_graph_mu_three_routes",
    "line_graph_cut_vertices",
    "block_graph_witness",
)


@dataclass
class PropertyOutcome:
    checked: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class VerifyResult:
    max_n: int
    seed: int
    trials: int
    exhaustive_max_n: int
    trees: int = 0
    outcomes: dict[str, PropertyOutcome] = field(
        default_factory=lambda: {name: PropertyOutcome() for name in PROPERTIES}
    )

    @property
    def all_passed(self) -> bool:
        return all(o.passed for o in self.outcomes.values())


def _tree_json(t: Tree) -> dict:
    return {"n": t.n, "edges": [list(e) for e in t.edges]}


class _Recorder:
    def __init__(self, result: VerifyResult):
        self.result = result
        self.tree: Tree | None = None

    def __call__(self, name: str, ok: bool, detail=None) -> None:
        outcome = self.result.outcomes[name]
        outcome.checked += 1
        if not ok and outcome.counterexample is None:
            outcome.counterexample = {"tree": _tree_json(self.tree), "detail": detail}


def _relabel(t: Tree, vertices) -> tuple[Tree, dict[int, int]]:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in t.edges if u in index and v in index]
    return tree_from_edge_list(len(vertices), edges), index


def check_tree(t: Tree, rng: random.Random, record: _Recorder, is_mv: MvCheck = is_mv_set_fast,
               subsets_per_tree: int = 20) -> None:
    """Run every property on ``t``, reporting through ``record``."""
    record.tree = t
    n = t.n
    leaf_set = leaves(t)
    branched = bool(branch_vertices(t))

    record("degree_sum", sum(t.degrees()) == 2 * (n - 1))
    if n >= 2:
        record("leaf_count_formula", len(leaf_set) == mu_tree_via_branch_degrees(t))
        h = steiner_subtree(t, leaf_set)
        record("steiner_of_leaves_is_whole_tree", h.edges == t.edges and h.vertices == tuple(range(n)))

    samples = [s for s in (random_subset(n, rng) for _ in range(subsets_per_tree)) if s]
    for s in samples:
        h = steiner_subtree(t, s)
        verts, edges = set(s), set()
        for u, v in itertools.combinations(s, 2):
            p = path_between(t, u, v).vertices
            verts.update(p)
            edges.update((min(a, b), max(a, b)) for a, b in zip(p, p[1:]))
        ok = (set(h.vertices) == verts and set(h.edges) == edges
              and set(h.leaves) <= set(s) and set(s) <= set(h.vertices))
        record("steiner_is_path_union", ok, {"seed": list(s)})

        att = attachment_map(t, h.vertices)
        x = rng.randrange(n)
        a = attachment_point(t, s, x)
        record("attachment_idempotent", a == att[x] and attachment_point(t, s, a) == a,
               {"q": list(s), "x": x})
        classes = branch_partition(t, s)
        flat = [w for cls in classes.values() for w in cls]
        ok = (sorted(flat) == sorted(set(range(n)) - set(s)) and len(flat) == len(set(flat))
              and all(att[w] == x for x, cls in classes.items() for w in cls))
        record("branch_partition_covers_complement", ok, {"q": list(s)})

    if branched:
        core = set(steiner_subtree(t, branch_vertices(t)).vertices)
        pieces = [leg.interior_plus_leaf for leg in legs(t)]
        flat = [w for p in pieces for w in p]
        record("legs_partition_outside_branch_core",
               len(flat) == len(set(flat)) and set(flat) == set(range(n)) - core)

    if n > TREE_LIMIT:
        return
    index = GeodesicIndex(t)
    family = oracle_mv_family(t, index=index)
    mv_masks = {_mask(s) for s in family.all_mv_sets}

    # Every subset for small trees; a random sample otherwise.
    if n <= 10:
        candidates = [tuple(v for v in range(n) if m >> v & 1) for m in range(1 << n)]
    else:
        candidates = [random_subset(n, rng) for _ in range(200)]
    bad = next((s for s in candidates if is_mv(t, s) != (_mask(s) in mv_masks)), None)
    record("mv_fast_matches_oracle", bad is None, None if bad is None else {"set": list(bad)})

    mu = mu_tree(t)
    record("mu_matches_oracle", mu.mu == family.mu and is_mv(t, mu.witness),
           {"fast": mu.mu, "oracle": family.mu})
    record("r_mu_matches_oracle", r_mu(t).count == len(family.maximum_sets),
           {"fast": r_mu(t).count, "oracle": len(family.maximum_sets)})
    listed = list(enumerate_maximum_mv_sets(t))
    ok = listed == sorted(family.maximum_sets) and all(is_mv(t, s) and len(s) == mu.mu for s in listed)
    record("enumeration_matches_oracle", ok)
    record("mv_size_at_most_leaf_count", all(len(s) <= len(leaf_set) for s in family.all_mv_sets))

    if branched:
        core = set(steiner_subtree(t, branch_vertices(t)).vertices)
        big = next((s for s in family.all_mv_sets if core & set(s) and len(s) >= len(leaf_set)), None)
        record("branch_core_sets_submaximum", big is None, None if big is None else {"set": list(big)})

    seed = random_subset(n, rng) or (rng.randrange(n),)
    sub_vertices = steiner_subtree(t, seed).vertices
    sub, index_map = _relabel(t, sub_vertices)
    picks = rng.sample(family.all_mv_sets, min(30, len(family.all_mv_sets)))
    bad = next((s for s in picks
                if not is_mv(sub, [index_map[v] for v in s if v in index_map])), None)
    record("restriction_to_subtree", bad is None,
           None if bad is None else {"set": list(bad), "subtree_vertices": list(sub_vertices)})

    nonempty = [q for q in family.all_mv_sets if q]
    for q in rng.sample(nonempty, min(5, len(nonempty))):
        outside = [w for w in range(n) if w not in q]
        if not outside:
            continue
        u, w = rng.choice(q), rng.choice(outside)
        direct = not set(path_between(t, u, w).internal) & set(q)
        record("pair_visibility_via_attachment",
               is_pair_q_visible_via_attachment(t, q, u, w) == direct,
               {"q": list(q), "u": u, "w": w})

        report = maximal_absolute_cq_visible_sets(t, q)
        for wset in report.maximal_sets:
            part = [v for v in wset if rng.random() < 0.5]
            ok = all(not set(path_between(t, a, b).internal) & set(q)
                     for a, b in itertools.combinations(list(q) + part, 2))
            record("absolute_cq_downward_closed", ok, {"q": list(q), "w": part})

    if n <= CQ_LIMIT:
        violation = find_absolute_clear_violation(t)
        record("absolute_clear", violation is None, violation)

    if t.edges:
        lg = line_graph(t)
        record("line_graph_is_block_graph", is_block_graph(lg))
        expected = tuple(i for i, (u, v) in enumerate(t.edges) if t.degree(u) >= 2 and t.degree(v) >= 2)
        cuts = articulation_points(lg)
        record("line_graph_cut_vertices", cuts == expected, {"cut": list(cuts), "expected": list(expected)})
        witness = [v for v in range(lg.n) if v not in cuts]
        record("block_graph_witness", is_mv_set_general(lg, witness))
        if len(t.edges) >= 2:
            routes = {
                "leaf_edges": mu_line_graph_of_tree(t),
                "block_formula": mu_block_graph(lg),
                "brute_force": brute_force_mu(lg).mu,
                "mu_tree": mu.mu,
            }
            record("line_graph_mu_three_routes", len(set(routes.values())) == 1, routes)


def iter_trees(max_n: int, seed: int, trials: int, exhaustive_max_n: int):
    rng = random.Random(seed)
    for n in range(1, min(max_n, exhaustive_max_n) + 1):
        yield from all_labeled_trees(n)
    for n in range(exhaustive_max_n + 1, max_n + 1):
        for _ in range(trials):
            yield random_tree(n, rng)


def run_verify(max_n: int = 8, seed: int = 0, trials: int = 20, exhaustive_max_n: int = 6,
               is_mv: MvCheck | None = None) -> VerifyResult:
    """Run the full property suite.

    ``is_mv`` replaces the fast mutual-visibility test, which lets a
    deliberately broken variant be injected to confirm the suite notices.
    """
    if not 1 <= max_n <= TREE_LIMIT:
        raise TooLarge(f"max_n must lie in 1..{TREE_LIMIT}, got {max_n}")
    is_mv = is_mv or is_mv_set_fast
    result = VerifyResult(max_n, seed, trials, exhaustive_max_n)
    record = _Recorder(result)
    rng = random.Random(seed + 1)
    for t in iter_trees(max_n, seed, trials, exhaustive_max_n):
        result.trees += 1
        check_tree(t, rng, record, is_mv=is_mv)
    return result
