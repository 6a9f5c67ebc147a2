import random
from fractions import Fraction

import pytest

from helpers import (
    column_rank,
    even_cycle_circuit_vector,
    frac_rank,
    random_connected_bipartite,
    random_connected_graph,
)
from toricrank import (
    CapExceededError,
    circuits_bruteforce,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_even_cycles,
    integer_rank,
    is_bipartite,
    parse_graph,
    relint_intersection_feasible,
    vector_in_cone,
)


class TestRank:
    def test_k4(self):
        assert integer_rank(complete_graph(4).incidence_columns()) == 4

    def test_k33(self):
        assert integer_rank(complete_bipartite_graph(3, 3).incidence_columns()) == 5

    def test_single_edge(self):
        assert integer_rank(((1, 1),)) == 1

    def test_matches_fraction_elimination(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_connected_graph(rng, 9, 14)
            cols = g.incidence_columns()
            assert integer_rank(cols) == frac_rank([list(c) for c in cols])

    def test_rejects_non_incidence(self):
        with pytest.raises(ValueError):
            integer_rank(((1, 1, 1),))


class TestCircuits:
    def test_k4_exact(self):
        g = complete_graph(4)
        got = {c.vector for c in circuits_bruteforce(g.incidence_columns())}
        # x12*x34 - x14*x23, x12*x34 - x13*x24, x13*x24 - x14*x23
        assert got == {
            (1, 0, -1, -1, 0, 1),
            (1, -1, 0, 0, -1, 1),
            (0, 1, -1, -1, 1, 0),
        }

    def test_c4_single(self):
        g = cycle_graph(4)
        circuits = circuits_bruteforce(g.incidence_columns())
        assert len(circuits) == 1
        assert circuits[0].vector == (1, -1, 1, -1)

    def test_tree_empty(self):
        g = parse_graph("1 2\n2 3\n3 4\n")
        assert circuits_bruteforce(g.incidence_columns()) == []

    def test_cap(self):
        g = complete_graph(6)  # 15 edges
        with pytest.raises(CapExceededError):
            circuits_bruteforce(g.incidence_columns(), cap=14)

    def test_axioms_random(self):
        rng = random.Random(9)
        for _ in range(15):
            g = random_connected_graph(rng, 8, 11)
            cols = g.incidence_columns()
            circuits = circuits_bruteforce(g.incidence_columns())
            supports = [set(c.support) for c in circuits]
            for a in range(len(supports)):
                for b in range(len(supports)):
                    if a != b:
                        assert not supports[a] < supports[b]
            for cv in circuits:
                img = [
                    sum(x * cols[j][i] for j, x in enumerate(cv.vector))
                    for i in range(g.n)
                ]
                assert not any(img)
                assert all(abs(x) <= 2 for x in cv.vector)
                assert cv.vector[cv.support[0]] > 0
                # dropping any support index leaves independent columns
                assert column_rank(g, cv.support) == len(cv.support) - 1
                for drop in cv.support:
                    rest = [j for j in cv.support if j != drop]
                    assert column_rank(g, rest) == len(rest)

    def test_bipartite_bijection_with_even_cycles(self):
        rng = random.Random(10)
        done = 0
        while done < 12:
            g = random_connected_bipartite(rng, 9, 13)
            circuits = circuits_bruteforce(g.incidence_columns())
            cycles = enumerate_even_cycles(g)
            assert len(circuits) == len(cycles)
            got = {c.vector for c in circuits}
            expected = {even_cycle_circuit_vector(g, c) for c in cycles}
            assert got == expected
            done += 1


class TestCones:
    def test_extremality_k4(self):
        cols = complete_graph(4).incidence_columns()
        for j in range(len(cols)):
            rest = cols[:j] + cols[j + 1 :]
            assert not vector_in_cone(cols[j], rest)

    def test_zero_vector(self):
        cols = complete_graph(4).incidence_columns()
        assert vector_in_cone((0, 0, 0, 0), cols)
        assert vector_in_cone((0, 0, 0, 0), ())

    def test_sum_of_columns(self):
        cols = complete_graph(4).incidence_columns()
        target = tuple(a + b for a, b in zip(cols[0], cols[1]))
        assert vector_in_cone(target, cols[:2])

    def test_rational_target(self):
        cols = complete_graph(4).incidence_columns()
        target = tuple(Fraction(x, 3) for x in cols[0])
        assert vector_in_cone(target, cols)

    def test_relint_triple_k4(self):
        g = complete_graph(4)
        cols = g.incidence_columns()
        # supports {12,34}, {14,23}, {13,24} share the all-ones point
        assert relint_intersection_feasible([(0, 5), (2, 3), (1, 4)], cols)

    def test_relint_singleton(self):
        cols = complete_graph(4).incidence_columns()
        assert relint_intersection_feasible([(0,)], cols)

    def test_relint_different_degrees_k33(self):
        g = complete_bipartite_graph(3, 3)
        cols = g.incidence_columns()
        # supports of x14*x26 and x15*x36: distinct degrees force failure
        assert not relint_intersection_feasible([(0, 5), (1, 8)], cols)

    def test_relint_monotone_under_removal(self):
        rng = random.Random(12)
        g = complete_graph(5)
        cols = g.incidence_columns()
        for _ in range(30):
            t = rng.randint(2, 4)
            supports = []
            for _ in range(t):
                k = rng.randint(1, 3)
                supports.append(tuple(sorted(rng.sample(range(g.m), k))))
            if relint_intersection_feasible(supports, cols):
                for drop in range(t):
                    sub = supports[:drop] + supports[drop + 1 :]
                    if sub:
                        assert relint_intersection_feasible(sub, cols)

    def test_variable_guard(self):
        cols = complete_graph(6).incidence_columns()
        supports = [tuple(range(15))] * 5
        with pytest.raises(CapExceededError):
            relint_intersection_feasible(supports, cols)
