"""Pure-Python compute kernels.

These are the hot inner loops (circuit subset scan, fiber enumeration,
fraction-free rank).  The compiled extension `toricrank._kernels` exposes
the same three functions with identical outputs; `toricrank._backend`
picks whichever is available.  Inputs use 0-based vertex/edge indices and
plain tuples so both backends stay interchangeable.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

BACKEND_NAME = "pure"

# Masks are machine words in the compiled backend, so scans are capped there.
MAX_SCAN_EDGES = 62


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, nrows):
            f = mat[r][col]
            row = mat[r]
            top = mat[rank]
            # Every row must be rescaled each step or later exact
            # divisions by the previous pivot break.
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _bareiss_det(mat: list[list[int]]) -> int:
    """Determinant of a small square integer matrix, fraction-free."""
    a = [row[:] for row in mat]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            piv = None
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    piv = i
                    break
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def _pivot_rows(n: int, endpoints, sel: list[int]) -> list[int]:
    """Indices of |sel| vertex rows that are independent on the columns sel."""
    s = len(sel)
    work: list[list[int]] = []
    chosen: list[int] = []
    for v in range(n):
        row = [0] * s
        for c, j in enumerate(sel):
            if endpoints[j][0] == v or endpoints[j][1] == v:
                row[c] = 1
        cand = [w[:] for w in work] + [row]
        if bareiss_rank(cand) == len(cand):
            work.append(row)
            chosen.append(v)
            if len(chosen) == s:
                break
    return chosen


def _fundamental_circuit(
    n: int, endpoints, sel: list[int], j: int
) -> tuple[int, ...]:
    """Kernel vector of the dependent column set sel + [j], sel independent.

    Returned as a full-length integer vector: coprime entries, positive
    entry at the smallest support index.
    """
    m = len(endpoints)
    s = len(sel)
    rows = _pivot_rows(n, endpoints, sel)
    base = []
    rhs = []
    for v in rows:
        base.append([1 if endpoints[c][0] == v or endpoints[c][1] == v else 0 for c in sel])
        rhs.append(1 if endpoints[j][0] == v or endpoints[j][1] == v else 0)
    d = _bareiss_det(base)
    vec = [0] * m
    # Cramer: column i of the base replaced by the target column.
    for i in range(s):
        mod = [row[:] for row in base]
        for r in range(s):
            mod[r][i] = rhs[r]
        vec[sel[i]] = _bareiss_det(mod)
    vec[j] = -d
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g > 1:
        vec = [x // g for x in vec]
    for x in vec:
        if x != 0:
            if x < 0:
                vec = [-y for y in vec]
            break
    return tuple(vec)


def circuit_scan(
    n: int, endpoints: Sequence[tuple[int, int]]
) -> list[tuple[int, ...]]:
    """All circuit vectors of the incidence columns of the given edges.

    Walks the independent sets of the column matroid in lexicographic
    order (supersets of dependent sets are never expanded); every
    dependent extension of an independent set contains exactly one
    circuit, which is extracted once.  Independence uses the structure of
    two-hot columns: a set is independent iff each connected component it
    spans carries at most one cycle, and that cycle is odd.
    """
    m = len(endpoints)
    if m > MAX_SCAN_EDGES:
        raise ValueError(f"circuit scan supports at most {MAX_SCAN_EDGES} edges")
    circuits: list[tuple] = []  # (mask, vector entries...)
    by_edge: list[list[int]] = [[] for _ in range(m)]
    found_masks: set[int] = set()

    def scan(mask: int, sel: list[int], parent: list[int], par: list[int], odd: list[bool], last: int):
        for j in range(last + 1, m):
            u, v = endpoints[j]
            ru, pu = u, 0
            while parent[ru] != ru:
                pu ^= par[ru]
                ru = parent[ru]
            rv, pv = v, 0
            while parent[rv] != rv:
                pv ^= par[rv]
                rv = parent[rv]
            if ru != rv and not (odd[ru] and odd[rv]):
                # Bridging two components is a tree edge unless both already
                # carry an odd cycle (then the bridge completes a circuit).
                np_, npar, nodd = parent[:], par[:], odd[:]
                np_[ru] = rv
                npar[ru] = pu ^ pv ^ 1
                nodd[rv] = nodd[rv] or nodd[ru]
                sel.append(j)
                scan(mask | (1 << j), sel, np_, npar, nodd, j)
                sel.pop()
            elif ru == rv and not odd[ru] and pu == pv:
                # closes an odd cycle in a bipartite component: independent
                nodd = odd[:]
                nodd[ru] = True
                sel.append(j)
                scan(mask | (1 << j), sel, parent, par, nodd, j)
                sel.pop()
            else:
                child = mask | (1 << j)
                for cm in by_edge[j]:
                    if cm & child == cm:
                        break
                else:
                    vec = _fundamental_circuit(n, endpoints, sel, j)
                    cmask = 0
                    for i, x in enumerate(vec):
                        if x:
                            cmask |= 1 << i
                    if cmask not in found_masks:
                        found_masks.add(cmask)
                        circuits.append((cmask,) + vec)
                        for i, x in enumerate(vec):
                            if x:
                                by_edge[i].append(cmask)

    scan(0, [], list(range(n)), [0] * n, [False] * n, -1)
    out = [c[1:] for c in circuits]
    out.sort(key=lambda vec: tuple(i for i, x in enumerate(vec) if x))
    return out


def fiber_solve(
    endpoints: Sequence[tuple[int, int]], b: Sequence[int]
) -> list[tuple[int, ...]]:
    """All nonnegative integer exponent vectors with incidence image b.

    DFS over edges in index order, exponents tried in increasing value, so
    the output is sorted lexicographically.
    """
    n = len(b)
    m = len(endpoints)
    if sum(b) % 2 != 0:
        return []
    covered = [False] * n
    last_edge = [-1] * n
    for j, (u, v) in enumerate(endpoints):
        covered[u] = covered[v] = True
        last_edge[u] = last_edge[v] = j
    for v in range(n):
        if b[v] > 0 and not covered[v]:
            return []
    finishing: list[list[int]] = [[] for _ in range(m)]
    for v in range(n):
        if last_edge[v] >= 0:
            finishing[last_edge[v]].append(v)
    out: list[tuple[int, ...]] = []
    resid = list(b)
    expo = [0] * m

    def walk(j: int):
        if j == m:
            out.append(tuple(expo))
            return
        u, v = endpoints[j]
        top = min(resid[u], resid[v])
        for t in range(top + 1):
            expo[j] = t
            resid[u] -= t
            resid[v] -= t
            if all(resid[w] == 0 for w in finishing[j]):
                walk(j + 1)
            resid[u] += t
            resid[v] += t
        expo[j] = 0

    if m == 0:
        return [()] if all(x == 0 for x in b) else []
    walk(0)
    return out
