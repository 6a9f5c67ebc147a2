"""Binomials graded by vertex degree vectors, fibers, and generating sets.

A monomial is an exponent tuple over the edge variables; its image under
the incidence matrix is its degree vector in N^n.  The binomial ideal of
a graph is handled through those degree fibers: two monomials in the same
fiber differ by an ideal element, and a set of binomials generates the
ideal exactly when it connects every fiber.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _backend
from .errors import BoundTooSmallError, GraphError, InternalCheckError
from .graphs import (
    EdgeCycle,
    Graph,
    cycle_has_chord,
    enumerate_even_cycles,
    induced_subgraph,
    is_bipartite,
)

Monomial = tuple[int, ...]
GDegree = tuple[int, ...]


def g_degree(g: Graph, mon: Sequence[int]) -> GDegree:
    """Degree vector of a monomial: each edge marks both its endpoints."""
    if len(mon) != g.m:
        raise ValueError(f"exponent vector must have length {g.m}")
    b = [0] * g.n
    for j, e in enumerate(mon):
        if e:
            u, v = g.edges[j]
            b[u - 1] += e
            b[v - 1] += e
    return tuple(b)


def total_degree(mon: Sequence[int]) -> int:
    return sum(mon)


def edge_variable_name(g: Graph, j: int) -> str:
    u, v = g.edges[j]
    u, v = min(u, v), max(u, v)
    if g.n <= 9:
        return f"x{u}{v}"
    return f"x{{{u},{v}}}"


def format_monomial(g: Graph, mon: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(mon):
        if e == 1:
            parts.append(edge_variable_name(g, j))
        elif e > 1:
            parts.append(f"{edge_variable_name(g, j)}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Binomial:
    """Difference of two monomials with disjoint supports.

    Stored with common factors cancelled and the lexicographically larger
    side as `plus`.  Both sides of anything built from a closed walk share
    one degree vector by construction.
    """

    plus: Monomial
    minus: Monomial

    @classmethod
    def from_vectors(cls, a: Sequence[int], b: Sequence[int]) -> "Binomial":
        if len(a) != len(b):
            raise ValueError("exponent vectors differ in length")
        common = [min(x, y) for x, y in zip(a, b)]
        pa = tuple(x - c for x, c in zip(a, common))
        pb = tuple(y - c for y, c in zip(b, common))
        if pa < pb:
            pa, pb = pb, pa
        return cls(pa, pb)

    @property
    def is_zero(self) -> bool:
        return self.plus == self.minus

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(x - y for x, y in zip(self.plus, self.minus))

    @property
    def plus_support(self) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.plus) if e)

    @property
    def minus_support(self) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.minus) if e)

    @property
    def degree(self) -> int:
        """Total degree of either side (they agree for homogeneous input)."""
        return sum(self.plus)

    def text(self, g: Graph) -> str:
        return f"{format_monomial(g, self.plus)} - {format_monomial(g, self.minus)}"


def binomial_from_walk(g: Graph, walk: Sequence[int]) -> Binomial:
    """Alternating-product binomial of an even closed walk of edge indices.

    The walk may repeat edges; a walk whose two alternating products
    coincide cancels to the zero binomial (`is_zero`), which callers must
    not treat as a generator.
    """
    q = len(walk)
    if q == 0 or q % 2 != 0:
        raise GraphError("walk must be closed of even positive length")
    for j in walk:
        if not (0 <= j < g.m):
            raise GraphError(f"edge index {j} out of range")
    # Recover the vertex sequence; the first vertex is forced unless the
    # walk starts by traversing one edge back and forth.
    first = set(g.edges[walk[0]])
    second = set(g.edges[walk[1 % q]])
    shared = first & second
    if not shared:
        raise GraphError("consecutive walk edges must share a vertex")
    v0 = min(first - shared) if first - shared else min(first)
    v = v0
    for k, j in enumerate(walk):
        u1, u2 = g.edges[j]
        if v == u1:
            v = u2
        elif v == u2:
            v = u1
        else:
            raise GraphError(f"walk breaks at position {k}: vertex {v} not on edge")
    if v != v0:
        raise GraphError("walk is not closed")
    plus = [0] * g.m
    minus = [0] * g.m
    for k, j in enumerate(walk):
        if k % 2 == 0:
            plus[j] += 1
        else:
            minus[j] += 1
    result = Binomial.from_vectors(plus, minus)
    if not result.is_zero and g_degree(g, result.plus) != g_degree(g, result.minus):
        raise InternalCheckError("walk binomial is not degree-homogeneous")
    return result


def polynomial_in_ideal(
    g: Graph, terms: Iterable[tuple[int | Fraction, Sequence[int]]]
) -> bool:
    """Membership test for a polynomial given as (coefficient, monomial) terms.

    The monomial map sends every monomial to its degree vector, distinct
    fibers land on distinct monomials downstairs, so the polynomial maps
    to zero iff the coefficients cancel within every degree fiber.
    """
    sums: dict[GDegree, Fraction] = {}
    for coeff, mon in terms:
        b = g_degree(g, tuple(mon))
        sums[b] = sums.get(b, Fraction(0)) + Fraction(coeff)
    return all(v == 0 for v in sums.values())


@dataclass(frozen=True)
class Fiber:
    """All monomials with one degree vector, plus an optional move graph."""

    degree: GDegree
    members: tuple[Monomial, ...]
    adjacency: tuple[tuple[int, int], ...] | None = None
    connected: bool | None = None


def enumerate_fiber(g: Graph, b: Sequence[int]) -> Fiber:
    """Every exponent vector with degree vector b, sorted lexicographically.

    Finite because the degree semigroup is pointed: each exponent is
    bounded by the degree budget at the edge's two endpoints.
    """
    if len(b) != g.n:
        raise ValueError(f"degree vector must have length {g.n}")
    if any(x < 0 or int(x) != x for x in b):
        raise ValueError("degree vector entries must be nonnegative integers")
    members = _backend.fiber_solve(g.endpoints0(), tuple(int(x) for x in b))
    return Fiber(tuple(int(x) for x in b), tuple(members))


def _fiber_edges(
    members: Sequence[Monomial], gens: Iterable[Binomial]
) -> set[tuple[int, int]]:
    index = {u: i for i, u in enumerate(members)}
    edges: set[tuple[int, int]] = set()
    for f in gens:
        if f.is_zero:
            continue
        psup = [(j, e) for j, e in enumerate(f.plus) if e]
        for i, u in enumerate(members):
            if any(u[j] < e for j, e in psup):
                continue
            v = tuple(x - p + q for x, p, q in zip(u, f.plus, f.minus))
            k = index.get(v)
            if k is not None and k != i:
                edges.add((min(i, k), max(i, k)))
    return edges


def _component_roots(count: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [find(x) for x in range(count)]


def fiber_graph(fiber: Fiber, gens: Sequence[Binomial]) -> Fiber:
    """The fiber with moves filled in: {u, v} is an edge when u - v is a
    monomial multiple of one of the given binomials."""
    edges = sorted(_fiber_edges(fiber.members, gens))
    roots = _component_roots(len(fiber.members), edges)
    connected = len(set(roots)) <= 1
    return Fiber(fiber.degree, fiber.members, tuple(edges), connected)


def _exponent_vectors(m: int, t: int):
    """All length-m nonnegative tuples with sum t, lexicographically."""
    vec = [0] * m
    if m == 0:
        if t == 0:
            yield ()
        return

    def rec(i: int, remaining: int):
        if i == m - 1:
            vec[i] = remaining
            yield tuple(vec)
            vec[i] = 0
            return
        for x in range(remaining + 1):
            vec[i] = x
            yield from rec(i + 1, remaining - x)
        vec[i] = 0

    yield from rec(0, t)


def _fibers_of_total_degree(g: Graph, t: int) -> dict[GDegree, list[Monomial]]:
    groups: dict[GDegree, list[Monomial]] = {}
    for mon in _exponent_vectors(g.m, t):
        groups.setdefault(g_degree(g, mon), []).append(mon)
    return groups


def default_degree_bound(g: Graph) -> int:
    """Half the longest even cycle length, at least 2.

    Above the unbounded-cycle vertex limit the caller must supply an
    explicit bound instead.
    """
    cycles = enumerate_even_cycles(g)
    longest = max((len(c) for c in cycles), default=0)
    return max(2, longest // 2)


@dataclass(frozen=True)
class GeneratingSet:
    """A minimal generating set found degree by degree.

    `exact` means the count is certified complete (bipartite input with
    all chordless even cycles inside the bound); otherwise the result is
    relative to `degree_bound`.
    """

    binomials: tuple[Binomial, ...]
    indispensable: tuple[bool, ...]
    degree_bound: int
    exact: bool
    bipartite: bool
    processed_degrees: tuple[GDegree, ...]

    @property
    def mu(self) -> int:
        return len(self.binomials)

    @property
    def indispensable_count(self) -> int:
        return sum(1 for f in self.indispensable if f)


def _chordless_cycle_info(
    g: Graph, bound: int
) -> tuple[list[EdgeCycle], bool]:
    """Chordless even cycles and whether the listing is complete."""
    from .graphs import UNBOUNDED_CYCLE_VERTEX_LIMIT

    if g.n <= UNBOUNDED_CYCLE_VERTEX_LIMIT:
        cycles = enumerate_even_cycles(g)
        complete = True
    else:
        # Look one degree past the bound so truncation is detectable.
        cycles = enumerate_even_cycles(g, max_length=2 * bound + 2)
        complete = False
    return [c for c in cycles if not cycle_has_chord(g, c)], complete


def minimal_generating_set(
    g: Graph, degree_bound: int | None = None
) -> GeneratingSet:
    """Build a minimal generating set degree by degree.

    Degree vectors realized by monomials of total degree <= the bound are
    processed in (total degree, lexicographic) order; each fiber that the
    previously chosen binomials leave disconnected contributes one
    binomial per extra component, joining that component's smallest
    member to the fiber's smallest member.  A binomial is flagged
    indispensable when its fiber has exactly two elements and no prior
    move connected them, which forces it into every binomial generating
    set.  For bipartite graphs the count is cross-checked against the
    chordless even cycles.
    """
    bound = default_degree_bound(g) if degree_bound is None else degree_bound
    if bound < 2:
        raise ValueError("degree bound must be at least 2")
    bip = is_bipartite(g) is not None
    chordless, candidates_complete = _chordless_cycle_info(g, bound)
    max_candidate = max((len(c) // 2 for c in chordless), default=0)

    gens: list[Binomial] = []
    flags: list[bool] = []
    processed: list[GDegree] = []
    added_at_top = False
    for t in range(2, bound + 1):
        for b in sorted(_fibers_of_total_degree(g, t).items()):
            degree, members = b
            if len(members) < 2:
                continue
            members = sorted(members)
            processed.append(degree)
            edges = _fiber_edges(members, gens)
            roots = _component_roots(len(members), edges)
            base_root = roots[0]
            extra_roots = sorted(set(roots) - {base_root})
            if not extra_roots:
                continue
            if t == bound:
                added_at_top = True
            fresh = len(members) == 2 and not edges
            for r in extra_roots:
                smallest = members[roots.index(r)]
                gens.append(Binomial.from_vectors(smallest, members[0]))
                flags.append(fresh)
    if added_at_top and max_candidate > bound:
        raise BoundTooSmallError(
            f"fibers at total degree {bound} were still disconnected and "
            f"chordless even cycles reach degree {max_candidate}; rerun "
            f"with degree_bound >= {max_candidate}"
        )
    exact = bip and candidates_complete and bound >= max_candidate
    if exact and len(gens) != len(chordless):
        raise InternalCheckError(
            f"bipartite cross-check failed: {len(gens)} generators vs "
            f"{len(chordless)} chordless even cycles"
        )
    return GeneratingSet(
        tuple(gens), tuple(flags), bound, exact, bip, tuple(processed)
    )


def indispensable_monomials(g: Graph, degree_bound: int) -> list[Monomial]:
    """Minimal generators of the ideal of monomials that move.

    A monomial moves when its fiber has a second element; the minimal
    such monomials under divisibility are collected up to the bound,
    sorted by (total degree, exponents).
    """
    if degree_bound < 2:
        raise ValueError("degree bound must be at least 2")
    kept: list[Monomial] = []
    for t in range(2, degree_bound + 1):
        for _, members in sorted(_fibers_of_total_degree(g, t).items()):
            if len(members) < 2:
                continue
            for u in sorted(members):
                if not any(all(x >= y for x, y in zip(u, w)) for w in kept):
                    kept.append(u)
    kept.sort(key=lambda u: (sum(u), u))
    return kept


def indispensable_binomials(
    g: Graph, degree_bound: int | None = None
) -> list[Binomial]:
    """The binomials forced into every binomial generating set.

    For bipartite input the flagged set is verified, up to sign, against
    the walk binomials of the chordless even cycles.
    """
    gs = minimal_generating_set(g, degree_bound)
    flagged = [b for b, f in zip(gs.binomials, gs.indispensable) if f]
    if gs.bipartite and gs.exact:
        chordless, _ = _chordless_cycle_info(g, gs.degree_bound)
        expected = set()
        for c in chordless:
            f = binomial_from_walk(g, c.edge_indices)
            expected.add((f.plus, f.minus))
        got = {(b.plus, b.minus) for b in flagged}
        if got != expected:
            raise InternalCheckError(
                "bipartite indispensable set does not match the chordless cycles"
            )
    return flagged


def is_quadratically_generated(g: Graph, degree_bound: int | None = None) -> bool:
    """True when the scan finds only quadratic generators.

    The scan runs through total degree >= 3 so a cubic obstruction is
    always visible; beyond the bound the answer is bound-relative, as is
    everything about non-bipartite generators.
    """
    bound = max(default_degree_bound(g), 3) if degree_bound is None else degree_bound
    gs = minimal_generating_set(g, bound)
    return all(b.degree == 2 for b in gs.binomials)


def sample_multiple_divisibility(
    g: Graph, cycle: EdgeCycle, trials: int, seed: int
) -> bool:
    """Randomized check that every multiple of a 4-cycle binomial keeps
    both alternating pairs visible.

    Draws random polynomial cofactors in the variables of the induced
    subgraph (up to 5 terms, exponents up to 3, small fixed coefficient
    pool) and verifies each product has a monomial divisible by the plus
    pair and one divisible by the minus pair.  The induced subgraph must
    not be complete.
    """
    if len(cycle) != 4:
        raise ValueError("cycle must have length 4")
    sub, edge_map = induced_subgraph(g, cycle.vertices)
    if sub.m == 6:
        raise GraphError("induced subgraph on the cycle is complete")
    e = cycle.edge_indices
    pair_a = (e[0], e[2])
    pair_b = (e[1], e[3])
    rng = random.Random(seed)
    pool = (
        Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
        Fraction(3), Fraction(-3), Fraction(1, 2), Fraction(-1, 2),
    )
    fplus = [0] * g.m
    fminus = [0] * g.m
    fplus[pair_a[0]] += 1
    fplus[pair_a[1]] += 1
    fminus[pair_b[0]] += 1
    fminus[pair_b[1]] += 1
    for _ in range(trials):
        cofactor: dict[Monomial, Fraction] = {}
        while not cofactor:
            cofactor.clear()
            for _ in range(rng.randint(1, 5)):
                mon = [0] * g.m
                for j in edge_map:
                    mon[j] = rng.randint(0, 3)
                key = tuple(mon)
                cofactor[key] = cofactor.get(key, Fraction(0)) + rng.choice(pool)
            cofactor = {k: v for k, v in cofactor.items() if v != 0}
        product: dict[Monomial, Fraction] = {}
        for mon, coeff in cofactor.items():
            up = tuple(x + y for x, y in zip(mon, fplus))
            um = tuple(x + y for x, y in zip(mon, fminus))
            product[up] = product.get(up, Fraction(0)) + coeff
            product[um] = product.get(um, Fraction(0)) - coeff
        product = {k: v for k, v in product.items() if v != 0}
        has_a = any(
            mon[pair_a[0]] >= 1 and mon[pair_a[1]] >= 1 for mon in product
        )
        has_b = any(
            mon[pair_b[0]] >= 1 and mon[pair_b[1]] >= 1 for mon in product
        )
        if not (has_a and has_b):
            return False
    return True
