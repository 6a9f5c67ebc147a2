"""The compiled and pure kernels must return identical values.

Skipped entirely when the extension is not built.
"""

import random

import pytest

from helpers import random_connected_graph
from toricrank import _kernels_py as pure
from toricrank.graphs import complete_bipartite_graph, complete_graph

compiled = pytest.importorskip("toricrank._kernels")


def corpus():
    rng = random.Random(41)
    graphs = [
        complete_graph(4),
        complete_graph(5),
        complete_graph(6),
        complete_bipartite_graph(3, 3),
        complete_bipartite_graph(2, 4),
    ]
    for _ in range(30):
        graphs.append(random_connected_graph(rng, 8, 12))
    return graphs


@pytest.mark.parametrize("g", corpus(), ids=lambda g: f"n{g.n}m{g.m}")
def test_circuit_scan_identical(g):
    eps = g.endpoints0()
    assert pure.circuit_scan(g.n, eps) == compiled.circuit_scan(g.n, eps)


def test_fiber_solve_identical():
    rng = random.Random(42)
    for g in corpus():
        eps = g.endpoints0()
        for _ in range(6):
            mon = [0] * g.m
            for _ in range(rng.randint(0, 4)):
                mon[rng.randrange(g.m)] += 1
            b = [0] * g.n
            for j, e in enumerate(mon):
                u, v = eps[j]
                b[u] += e
                b[v] += e
            assert pure.fiber_solve(eps, tuple(b)) == compiled.fiber_solve(
                eps, tuple(b)
            )


def test_rank_identical():
    for g in corpus():
        mat = [list(c) for c in g.incidence_columns()]
        assert pure.bareiss_rank(mat) == compiled.bareiss_rank(mat)
