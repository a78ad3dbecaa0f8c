import itertools

import pytest
from hypothesis import given, settings

from mvtree import (
    EmptyQ,
    Overlap,
    TooLarge,
    all_labeled_trees,
    branch_partition,
    components_after_removal,
    is_absolute_cq_visible_set,
    is_cq_visible_set,
    is_disjoint_visible,
    is_mv_set_fast,
    maximal_absolute_cq_visible_sets,
    oracle_maximal_absolute_cq_sets,
    path_tree,
    spider_tree,
    star_tree,
    verify_absolute_clear,
)
from mvtree.cq import find_absolute_clear_violation

from conftest import trees, trees_with_subset


class TestCqVisible:
    def test_empty_w(self, p5):
        assert is_cq_visible_set(p5, [0, 4], [])

    def test_star(self, star3):
        assert is_cq_visible_set(star3, [1, 2], [0, 3])

    def test_blocked_by_q(self):
        assert not is_cq_visible_set(path_tree(3), [1], [0, 2])

    def test_overlap(self, p5):
        with pytest.raises(Overlap):
            is_cq_visible_set(p5, [0, 1], [1])

    def test_empty_q(self, p5):
        with pytest.raises(EmptyQ):
            is_cq_visible_set(p5, [], [1])


class TestAbsoluteCqVisible:
    def test_q_not_mv(self, p5):
        assert not is_absolute_cq_visible_set(p5, [0, 2, 4], [])
        assert not is_absolute_cq_visible_set(p5, [0, 2, 4], [1])

    def test_star(self, star3):
        assert is_absolute_cq_visible_set(star3, [1, 2], [0, 3])

    def test_path_interior(self, p5):
        assert is_absolute_cq_visible_set(p5, [0, 4], [1, 2, 3])

    @given(trees_with_subset(max_n=8, nonempty=True))
    @settings(max_examples=80, deadline=None)
    def test_downward_closed(self, ts):
        t, q = ts
        for w in maximal_absolute_cq_visible_sets(t, q).maximal_sets:
            for k in range(len(w) + 1):
                for part in itertools.combinations(w, k):
                    assert is_absolute_cq_visible_set(t, q, part)


class TestMaximalSets:
    def test_star_center(self, star3):
        report = maximal_absolute_cq_visible_sets(star3, [0])
        assert report.maximal_sets == [(1,), (2,), (3,)]
        assert report.construction == "components"
        assert oracle_maximal_absolute_cq_sets(star3, [0]) == [(1,), (2,), (3,)]

    def test_star_two_leaves(self, star3):
        report = maximal_absolute_cq_visible_sets(star3, [1, 2])
        assert report.maximal_sets == [(0, 3)]
        assert report.construction == "union_of_internal_branches"
        assert oracle_maximal_absolute_cq_sets(star3, [1, 2]) == [(0, 3)]

    def test_q_not_mv(self, p5):
        report = maximal_absolute_cq_visible_sets(p5, [0, 2, 4])
        assert report.maximal_sets == [] and not report.q_is_mv
        assert report.construction == "empty"

    def test_union_may_be_empty(self):
        t = path_tree(2)
        assert maximal_absolute_cq_visible_sets(t, [0, 1]).maximal_sets == [()]
        assert oracle_maximal_absolute_cq_sets(t, [0, 1]) == [()]

    def test_single_vertex_tree(self):
        t = path_tree(1)
        assert maximal_absolute_cq_visible_sets(t, [0]).maximal_sets == [()]
        assert oracle_maximal_absolute_cq_sets(t, [0]) == [()]

    def test_oracle_rejects_non_mv_q(self):
        assert oracle_maximal_absolute_cq_sets(path_tree(3), [0, 1, 2]) == []

    def test_oracle_limits(self):
        with pytest.raises(TooLarge):
            oracle_maximal_absolute_cq_sets(path_tree(10), [0])
        with pytest.raises(EmptyQ):
            oracle_maximal_absolute_cq_sets(path_tree(3), [])

    @given(trees_with_subset(max_n=8, nonempty=True))
    @settings(max_examples=150, deadline=None)
    def test_matches_oracle(self, ts):
        t, q = ts
        report = maximal_absolute_cq_visible_sets(t, q)
        assert report.maximal_sets == oracle_maximal_absolute_cq_sets(t, q)
        assert len(report.maximal_sets) <= 1 or report.construction == "components"
        if report.q_is_mv and len(q) == 1 and t.n > 1:
            assert report.maximal_sets == components_after_removal(t, q[0])
        if report.q_is_mv and len(q) >= 2:
            classes = branch_partition(t, q)
            expect = sorted(w for x, c in classes.items() if x not in q for w in c)
            assert report.maximal_sets == [tuple(expect)]


class TestDisjointVisible:
    def test_star_center(self, star3):
        assert is_disjoint_visible(star3, [0])

    def test_path_middle(self, p5):
        assert maximal_absolute_cq_visible_sets(p5, [2]).maximal_sets == [(0, 1), (3, 4)]
        assert is_disjoint_visible(p5, [2])

    @given(trees_with_subset(max_n=14, nonempty=True))
    def test_always_true(self, ts):
        assert is_disjoint_visible(*ts)


class TestVerifyAbsoluteClear:
    def test_p2(self):
        assert verify_absolute_clear(path_tree(2))

    def test_spider_112(self):
        assert verify_absolute_clear(spider_tree([1, 1, 2]))

    def test_all_trees_up_to_six(self):
        for n in range(1, 7):
            for t in all_labeled_trees(n):
                assert find_absolute_clear_violation(t) is None

    def test_too_large(self):
        with pytest.raises(TooLarge):
            verify_absolute_clear(path_tree(10))

    def test_detects_a_wrong_construction(self, monkeypatch):
        import mvtree.cq as cq

        real = cq.maximal_absolute_cq_visible_sets

        def broken(t, q):
            report = real(t, q)
            if report.construction == "union_of_internal_branches":
                return cq.CqReport(report.q, True, [(q[0],)], report.construction)
            return report

        monkeypatch.setattr(cq, "maximal_absolute_cq_visible_sets", broken)
        violation = find_absolute_clear_violation(star_tree(3))
        assert violation is not None
        assert violation["reason"] == "construction disagrees with exhaustive search"

    def test_q_outside_mv_gives_no_sets(self):
        t = spider_tree([1, 2])
        for q in [(0, 1, 3), (0, 1, 2, 3)]:
            assert not is_mv_set_fast(t, q)
            assert oracle_maximal_absolute_cq_sets(t, q) == []
