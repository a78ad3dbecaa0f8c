import pytest
from hypothesis import strategies as st

from mvtree import path_tree, spider_tree, star_tree, tree_from_edge_list, tree_from_prufer


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return tree_from_prufer(seq, n)


@st.composite
def trees_with_subset(draw, min_n=1, max_n=12, nonempty=False):
    t = draw(trees(min_n, max_n))
    s = draw(st.sets(st.integers(0, t.n - 1), min_size=1 if nonempty else 0))
    return t, tuple(sorted(s))


@pytest.fixture
def p5():
    return path_tree(5)


@pytest.fixture
def star3():
    return star_tree(3)


@pytest.fixture
def star4():
    return star_tree(4)


@pytest.fixture
def spider123():
    # legs 0-1, 0-2-3, 0-4-5-6
    return spider_tree([1, 2, 3])


@pytest.fixture
def double_star():
    return tree_from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
