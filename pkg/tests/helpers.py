"""Shared test oracles and seeded graph generators.

Every oracle here is deliberately independent of the package internals:
cycle counts come from vertex-subset permutation scans, ranks from
Fraction Gaussian elimination, fiber sizes from scanning all monomials of
the right total degree, and matching numbers from exhaustive subset
search over faces.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from toricrank import Graph, cycle_has_chord, enumerate_even_cycles, is_bipartite


def brute_cycle_counts(g: Graph) -> dict[int, int]:
    """Cycle counts by length via Hamiltonian scans of vertex subsets."""
    counts: dict[int, int] = {}
    for q in range(3, g.n + 1):
        c = 0
        for vs in combinations(range(1, g.n + 1), q):
            for perm in permutations(vs[1:]):
                if len(perm) > 1 and perm[0] > perm[-1]:
                    continue
                seq = (vs[0],) + perm
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % q]) for i in range(q)
                ):
                    c += 1
        if c:
            counts[q] = c
    return counts


def frac_rank(rows: list[list[int]]) -> int:
    """Rank over Q by plain Fraction Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat or not mat[0]:
        return 0
    rank = 0
    for col in range(len(mat[0])):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def column_rank(g: Graph, indices) -> int:
    cols = g.incidence_columns()
    sub = [[cols[j][i] for j in indices] for i in range(g.n)]
    return frac_rank(sub)


def naive_fiber_members(g: Graph, b) -> list[tuple[int, ...]]:
    """Independent double loop: scan all monomials of the right total degree."""
    total = sum(b)
    if total % 2:
        return []
    t = total // 2
    out = []
    for mon in _compositions(g.m, t):
        img = [0] * g.n
        for j, e in enumerate(mon):
            if e:
                u, v = g.edges[j]
                img[u - 1] += e
                img[v - 1] += e
        if tuple(img) == tuple(b):
            out.append(mon)
    return sorted(out)


def _compositions(m: int, t: int):
    if m == 0:
        if t == 0:
            yield ()
        return
    vec = [0] * m

    def rec(i, rem):
        if i == m - 1:
            vec[i] = rem
            yield tuple(vec)
            vec[i] = 0
            return
        for x in range(rem + 1):
            vec[i] = x
            yield from rec(i + 1, rem - x)
        vec[i] = 0

    yield from rec(0, t)


def even_cycle_circuit_vector(g: Graph, cycle) -> tuple[int, ...]:
    """Alternating +-1 vector of an even cycle, normalized like a circuit."""
    vec = [0] * g.m
    for k, j in enumerate(cycle.edge_indices):
        vec[j] += 1 if k % 2 == 0 else -1
    lead = next(x for x in vec if x != 0)
    if lead < 0:
        vec = [-x for x in vec]
    return tuple(vec)


def brute_delta(d, dims) -> int:
    """Exhaustive matching search over the whole face list, no decomposition."""
    eligible = [f for f in d.faces if len(f) - 1 in dims]
    best_cov = -1
    best_cnt = 0
    for k in range(len(eligible) + 1):
        for combo in combinations(eligible, k):
            verts: set[int] = set()
            ok = True
            for f in combo:
                if verts & set(f):
                    ok = False
                    break
                verts |= set(f)
            if not ok:
                continue
            cov = len(verts)
            if cov > best_cov or (cov == best_cov and k < best_cnt):
                best_cov = cov
                best_cnt = k
    return best_cnt


def random_connected_graph(rng: random.Random, max_n: int, max_m: int) -> Graph:
    n = rng.randint(2, max_n)
    edges = []
    for v in range(2, n + 1):
        u = rng.randint(1, v - 1)
        edges.append((u, v))
    pool = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if (u, v) not in edges
    ]
    rng.shuffle(pool)
    extra = rng.randint(0, max(0, min(max_m - len(edges), len(pool))))
    edges.extend(pool[:extra])
    return Graph(n, tuple(edges))


def random_connected_bipartite(
    rng: random.Random, max_n: int, max_m: int
) -> Graph:
    while True:
        n = rng.randint(2, max_n)
        a = rng.randint(1, n - 1)
        left = list(range(1, a + 1))
        right = list(range(a + 1, n + 1))
        edges = []
        for v in right:
            edges.append((rng.choice(left), v))
        touched = {u for u, _ in edges}
        for u in left:
            if u not in touched:
                edges.append((u, rng.choice(right)))
        edges = list(dict.fromkeys((min(u, v), max(u, v)) for u, v in edges))
        if len(edges) > max_m:
            continue
        pool = [(u, v) for u in left for v in right if (u, v) not in set(edges)]
        rng.shuffle(pool)
        extra = rng.randint(0, max(0, min(max_m - len(edges), len(pool))))
        edges.extend(pool[:extra])
        try:
            return Graph(n, tuple(edges))
        except Exception:
            continue


def random_quadratic_bipartite(rng: random.Random, count: int) -> list[Graph]:
    """Connected bipartite graphs whose chordless even cycles are all 4-cycles.

    Those are certifiably generated by quadratic binomials, so the
    quadratic structure laws must hold on them.
    """
    out: list[Graph] = []
    while len(out) < count:
        g = random_connected_bipartite(rng, 8, 12)
        cycles = enumerate_even_cycles(g)
        chordless = [c for c in cycles if not cycle_has_chord(g, c)]
        if any(len(c) > 4 for c in chordless):
            continue
        if not chordless:
            continue
        out.append(g)
    return out


def bowtie() -> Graph:
    """Two triangles sharing one vertex; the smallest non-quadratic case."""
    return Graph(5, ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)))


def exhaustive_connected_graphs(max_edges: int = 7) -> list[Graph]:
    """Connected graphs arising as edge subsets of the complete graph on
    five vertices, one per isomorphism class."""
    base = [(u, v) for u in range(1, 6) for v in range(u + 1, 6)]
    seen: set[tuple] = set()
    out: list[Graph] = []
    for k in range(1, max_edges + 1):
        for combo in combinations(base, k):
            verts = sorted({v for e in combo for v in e})
            relabel = {v: i + 1 for i, v in enumerate(verts)}
            edges = tuple((relabel[u], relabel[v]) for u, v in combo)
            try:
                g = Graph(len(verts), edges)
            except Exception:
                continue
            canon = _canonical_form(len(verts), edges)
            if canon in seen:
                continue
            seen.add(canon)
            out.append(g)
    return out


def _canonical_form(n: int, edges) -> tuple:
    eset = {(min(u, v), max(u, v)) for u, v in edges}
    best = None
    for perm in permutations(range(1, n + 1)):
        mapped = tuple(
            sorted(
                (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
                for u, v in eset
            )
        )
        if best is None or mapped < best:
            best = mapped
    return (n, best)
