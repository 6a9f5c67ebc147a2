import random

import pytest

from helpers import brute_cycle_counts, random_connected_graph
from toricrank import (
    EdgeCycle,
    Graph,
    GraphError,
    GraphFormatError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    cycle_has_chord,
    enumerate_even_cycles,
    enumerate_k4_subgraphs,
    induced_subgraph,
    is_bipartite,
    parse_graph,
)

K4_TEXT = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"


class TestParse:
    def test_k4(self):
        g = parse_graph(K4_TEXT)
        assert g.n == 4 and g.m == 6
        assert g.edges == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_path(self):
        g = parse_graph("1 2\n2 3\n")
        assert g.n == 3 and g.m == 2

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse_graph("1 1\n")

    def test_duplicate_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph("1 2\n2 1\n")

    def test_disconnected_rejected(self):
        with pytest.raises(GraphFormatError, match="connected"):
            parse_graph("1 2\n3 4\n")

    def test_header_and_comments(self):
        g = parse_graph("# a square\np 4 4\n1 2\n2 3\n3 4\n1 4\n")
        assert g.n == 4 and g.m == 4

    def test_header_mismatch(self):
        with pytest.raises(GraphFormatError, match="header"):
            parse_graph("p 3 5\n1 2\n2 3\n")

    def test_malformed_line_number(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_graph("1 2\n2 x\n")

    def test_isolated_header_vertex(self):
        with pytest.raises(GraphFormatError, match="connected"):
            parse_graph("p 3 1\n1 2\n")


class TestBipartite:
    def test_k33(self):
        parts = is_bipartite(complete_bipartite_graph(3, 3))
        assert parts == ((1, 2, 3), (4, 5, 6))

    def test_k4(self):
        assert is_bipartite(complete_graph(4)) is None

    def test_single_edge(self):
        assert is_bipartite(Graph(2, ((1, 2),))) == ((1,), (2,))


class TestEvenCycles:
    def test_k4_count(self):
        cycles = enumerate_even_cycles(complete_graph(4))
        assert len(cycles) == 3
        assert all(len(c) == 4 for c in cycles)

    def test_k33_counts(self):
        cycles = enumerate_even_cycles(complete_bipartite_graph(3, 3))
        by_len = {}
        for c in cycles:
            by_len[len(c)] = by_len.get(len(c), 0) + 1
        assert by_len == {4: 9, 6: 6}
        # independent oracle: vertex-subset permutation scan
        brute = brute_cycle_counts(complete_bipartite_graph(3, 3))
        assert brute[4] == 9 and brute[6] == 6

    def test_tree_empty(self):
        assert enumerate_even_cycles(parse_graph("1 2\n2 3\n3 4\n")) == []

    def test_max_length_prefix(self):
        g = complete_bipartite_graph(3, 3)
        bounded = enumerate_even_cycles(g, max_length=4)
        full = [c for c in enumerate_even_cycles(g) if len(c) == 4]
        assert bounded == full

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_kn_four_cycles_closed_form(self, n):
        g = complete_graph(n)
        quad = [c for c in enumerate_even_cycles(g, max_length=4)]
        expected = 3 * (n * (n - 1) * (n - 2) * (n - 3) // 24)
        assert len(quad) == expected
        assert brute_cycle_counts(g)[4] == expected

    def test_no_duplicates_random(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_connected_graph(rng, 8, 12)
            cycles = enumerate_even_cycles(g)
            keys = {frozenset(c.edge_indices) for c in cycles}
            assert len(keys) == len(cycles)
            counts = brute_cycle_counts(g)
            expected = sum(v for q, v in counts.items() if q % 2 == 0)
            assert len(cycles) == expected

    def test_unbounded_guard(self):
        g = cycle_graph(13)
        with pytest.raises(GraphError, match="max_length"):
            enumerate_even_cycles(g)
        assert len(enumerate_even_cycles(g, max_length=14)) == 0

    def test_bipartite_all_even(self):
        rng = random.Random(6)
        for _ in range(10):
            g = random_connected_graph(rng, 8, 10)
            if is_bipartite(g) is None:
                continue
            assert all(len(c) % 2 == 0 for c in enumerate_even_cycles(g))


class TestChords:
    def test_k4_four_cycles_have_chords(self):
        g = complete_graph(4)
        for c in enumerate_even_cycles(g):
            assert cycle_has_chord(g, c)

    def test_k33_four_cycles_chordless(self):
        g = complete_bipartite_graph(3, 3)
        for c in enumerate_even_cycles(g, max_length=4):
            assert not cycle_has_chord(g, c)

    def test_k33_six_cycles_have_chords(self):
        g = complete_bipartite_graph(3, 3)
        for c in enumerate_even_cycles(g):
            if len(c) == 6:
                assert cycle_has_chord(g, c)

    def test_not_a_cycle_rejected(self):
        g = complete_graph(4)
        with pytest.raises(GraphError):
            EdgeCycle.from_vertices(g, (1, 2, 2))


class TestSubgraphs:
    def test_k6_k4_count(self):
        assert len(enumerate_k4_subgraphs(complete_graph(6))) == 15

    def test_k33_no_k4(self):
        assert enumerate_k4_subgraphs(complete_bipartite_graph(3, 3)) == []

    def test_k4_itself(self):
        assert enumerate_k4_subgraphs(complete_graph(4)) == [(1, 2, 3, 4)]

    def test_induced_k6_to_k4(self):
        sub, emap = induced_subgraph(complete_graph(6), [1, 2, 3, 4])
        assert sub.m == 6 and sub.n == 4
        assert len(emap) == 6

    def test_induced_4cycle_in_k33(self):
        g = complete_bipartite_graph(3, 3)
        c = enumerate_even_cycles(g, max_length=4)[0]
        sub, _ = induced_subgraph(g, c.vertices)
        assert sub.m == 4

    def test_induced_single_edge(self):
        sub, emap = induced_subgraph(complete_graph(4), [1, 2])
        assert sub.edges == ((1, 2),) and emap == (0,)

    def test_induced_disconnected_rejected(self):
        g = cycle_graph(6)
        with pytest.raises(GraphError):
            induced_subgraph(g, [1, 4])


def test_incidence_columns_two_hot():
    rng = random.Random(7)
    for _ in range(25):
        g = random_connected_graph(rng, 9, 14)
        for col in g.incidence_columns():
            assert sum(col) == 2
            assert set(col) <= {0, 1}
