import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvtree import (
    NoEdges,
    NotAGraph,
    NotBlockGraph,
    TooFewEdges,
    TooLarge,
    articulation_points,
    blocks,
    brute_force_mu,
    graph_from_edge_list,
    is_block_graph,
    is_mv_set_general,
    is_pair_x_visible,
    line_graph,
    mu_block_graph,
    mu_line_graph_of_tree,
    mu_tree,
    oracle_is_mv_set,
    oracle_mv_family,
    path_tree,
    spider_tree,
    star_tree,
)
from mvtree.graph import parse_graph

from conftest import trees

K3 = graph_from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
C4 = graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
P3 = graph_from_edge_list(3, [(0, 1), (1, 2)])
P4 = graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    # random spanning tree plus extra edges keeps the graph connected
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    edges |= set(extra)
    return graph_from_edge_list(n, sorted(edges))


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


class TestConstruction:
    def test_cycles_allowed(self):
        assert C4.n == 4 and len(C4.edges) == 4

    @pytest.mark.parametrize(
        "n, pairs", [(3, [(0, 1)]), (2, [(0, 0)]), (2, [(0, 1), (1, 0)]), (2, [(0, 2)])]
    )
    def test_rejects(self, n, pairs):
        with pytest.raises(NotAGraph):
            graph_from_edge_list(n, pairs)

    def test_parse(self):
        g = parse_graph("# square\n4\n0 1\n1 2\n2 3\n3 0\n")
        assert g == C4


class TestLineGraph:
    def test_p3(self):
        assert line_graph(path_tree(3)).edges == ((0, 1),)

    def test_star_is_triangle(self):
        assert line_graph(star_tree(3)) == K3

    def test_p4_is_p3(self):
        assert line_graph(path_tree(4)) == P3

    def test_labels(self):
        lg = line_graph(spider_tree([1, 2]))
        assert lg.edge_labels == ((0, 1), (0, 2), (2, 3))

    def test_single_vertex(self):
        with pytest.raises(NoEdges):
            line_graph(path_tree(1))

    @given(trees(min_n=2, max_n=12))
    def test_matches_networkx(self, t):
        lg = line_graph(t)
        T = nx.Graph(list(t.edges))
        L = nx.line_graph(T)
        relabel = {e: i for i, e in enumerate(lg.edge_labels)}
        got = {tuple(sorted((relabel[tuple(sorted(a))], relabel[tuple(sorted(b))]))) for a, b in L.edges}
        assert got == set(lg.edges)


class TestPairVisibility:
    def test_adjacent(self):
        assert is_pair_x_visible(P3, [0, 1, 2], 0, 1)

    def test_alternative_geodesic(self):
        assert is_pair_x_visible(C4, [1], 0, 2)

    def test_unique_geodesic_blocked(self):
        assert not is_pair_x_visible(P3, [1], 0, 2)

    @given(connected_graphs(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_symmetric_and_monotone(self, g, data):
        if g.n < 2:
            return
        u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
        x = data.draw(st.sets(st.integers(0, g.n - 1)))
        y = x | data.draw(st.sets(st.integers(0, g.n - 1)))
        assert is_pair_x_visible(g, x, u, v) == is_pair_x_visible(g, x, v, u)
        if not is_pair_x_visible(g, x, u, v):
            assert not is_pair_x_visible(g, y, u, v)


class TestMvGeneral:
    def test_small(self):
        assert is_mv_set_general(P3, [1])
        assert is_mv_set_general(K3, [0, 1, 2])
        assert not is_mv_set_general(P3, [0, 1, 2])

    @given(connected_graphs(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_matches_oracle(self, g, data):
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert is_mv_set_general(g, s) == oracle_is_mv_set(g, s)


class TestBruteForceMu:
    def test_k3(self):
        assert brute_force_mu(K3).mu == 3

    def test_p5(self):
        g = graph_from_edge_list(5, [(i, i + 1) for i in range(4)])
        assert brute_force_mu(g).mu == 2

    def test_line_graph_of_claw(self):
        assert brute_force_mu(line_graph(star_tree(3))).mu == 3 == mu_tree(star_tree(3)).mu

    def test_limit(self):
        big = graph_from_edge_list(17, [(i, i + 1) for i in range(16)])
        with pytest.raises(TooLarge):
            brute_force_mu(big)

    @given(connected_graphs(max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_matches_oracle_family(self, g):
        res = brute_force_mu(g)
        assert res.mu == oracle_mv_family(g).mu
        assert len(res.witness) == res.mu and is_mv_set_general(g, res.witness)


class TestBlocks:
    def test_articulation_examples(self):
        assert articulation_points(K3) == ()
        assert articulation_points(P3) == (1,)
        assert articulation_points(line_graph(path_tree(5))) == (1, 2)

    def test_block_graph_examples(self):
        assert is_block_graph(P4)
        assert not is_block_graph(C4)
        assert is_block_graph(line_graph(spider_tree([2, 1, 3])))

    @given(connected_graphs(max_n=12))
    @settings(max_examples=150)
    def test_articulation_points_match_networkx(self, g):
        assert set(articulation_points(g)) == set(nx.articulation_points(to_nx(g)))

    @given(connected_graphs(max_n=12))
    @settings(max_examples=150)
    def test_blocks_match_networkx(self, g):
        expect = sorted(tuple(sorted(c)) for c in nx.biconnected_components(to_nx(g)))
        if g.n == 1:
            expect = [(0,)]
        assert blocks(g) == expect

    @given(connected_graphs(max_n=10))
    @settings(max_examples=150)
    def test_block_graph_matches_definition(self, g):
        G = to_nx(g)
        expect = all(G.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2
                     for c in nx.biconnected_components(G))
        assert is_block_graph(g) == expect

    @given(trees(min_n=2, max_n=12))
    def test_remove_and_check(self, t):
        lg = line_graph(t)
        G = to_nx(lg)
        brute = {v for v in G if not nx.is_connected(G.subgraph(set(G) - {v}))} if lg.n > 1 else set()
        assert set(articulation_points(lg)) == brute


class TestBlockGraphMu:
    def test_examples(self):
        assert mu_block_graph(K3) == 3
        assert mu_block_graph(P4) == 2

    def test_line_graph_of_double_star(self, double_star):
        lg = line_graph(double_star)
        assert mu_block_graph(lg) == brute_force_mu(lg).mu == 4

    def test_not_block_graph(self):
        with pytest.raises(NotBlockGraph):
            mu_block_graph(C4)

    @given(connected_graphs(max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_witness_is_mv(self, g):
        if not is_block_graph(g):
            return
        cuts = set(articulation_points(g))
        witness = [v for v in range(g.n) if v not in cuts]
        assert is_mv_set_general(g, witness)
        assert mu_block_graph(g) == brute_force_mu(g).mu


class TestLineGraphMu:
    def test_p4(self):
        assert mu_line_graph_of_tree(path_tree(4)) == 2

    def test_star(self, star4):
        assert mu_line_graph_of_tree(star4) == 4

    def test_single_edge(self):
        with pytest.raises(TooFewEdges):
            mu_line_graph_of_tree(path_tree(2))

    @given(trees(min_n=3, max_n=10))
    @settings(max_examples=80, deadline=None)
    def test_three_routes(self, t):
        lg = line_graph(t)
        assert is_block_graph(lg)
        want = mu_tree(t).mu
        assert mu_line_graph_of_tree(t) == mu_block_graph(lg) == brute_force_mu(lg).mu == want

    @given(trees(min_n=2, max_n=14))
    def test_cut_vertices_are_inner_edges(self, t):
        lg = line_graph(t)
        inner = tuple(i for i, (u, v) in enumerate(t.edges) if t.degree(u) >= 2 and t.degree(v) >= 2)
        assert articulation_points(lg) == inner
        # each cut vertex of a tree's line graph lies in exactly two blocks
        bl = blocks(lg)
        assert all(sum(c in b for b in bl) == 2 for c in inner)
