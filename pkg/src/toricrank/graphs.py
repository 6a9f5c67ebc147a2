"""Graph model: validated edge lists, bipartiteness, cycles, subgraphs.

Vertices are labelled 1..n and edges keep their input order; the edge at
index i supplies the variable x_{i+1} and the i-th incidence column used
everywhere else in the package.  All objects are immutable and all
functions are pure, so everything here is safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError, GraphFormatError

# Unbounded cycle enumeration is allowed only up to this many vertices;
# beyond it the caller must pass max_length to make the cost explicit.
UNBOUNDED_CYCLE_VERTEX_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph with an indexed edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge ({u},{v}) uses a vertex outside 1..{self.n}")
            if u == v:
                raise GraphError(f"loop detected at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
        if not self._is_connected():
            raise GraphError("graph is not connected")

    def _is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {1}
        queue = deque([1])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map from a normalized endpoint pair to its 0-based edge index."""
        return {
            (min(u, v), max(u, v)): i for i, (u, v) in enumerate(self.edges)
        }

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def incidence_columns(self) -> tuple[tuple[int, ...], ...]:
        """The 0/1 columns of the vertex-edge incidence matrix, edge order."""
        cols = []
        for u, v in self.edges:
            col = [0] * self.n
            col[u - 1] = 1
            col[v - 1] = 1
            cols.append(tuple(col))
        return tuple(cols)

    def endpoints0(self) -> tuple[tuple[int, int], ...]:
        """Edges as 0-based vertex pairs, for the compute kernels."""
        return tuple((min(u, v) - 1, max(u, v) - 1) for u, v in self.edges)


@dataclass(frozen=True)
class EdgeCycle:
    """A cycle given by its vertex sequence and the matching edge indices.

    vertices is the canonical traversal (smallest vertex first, smaller
    neighbour second); edge_indices[i] joins vertices[i] and vertices[i+1],
    cyclically.  Indices are 0-based.
    """

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_indices)

    @classmethod
    def from_vertices(cls, g: Graph, vs: Sequence[int]) -> "EdgeCycle":
        q = len(vs)
        if q < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if len(set(vs)) != q:
            raise GraphError("cycle vertices must be pairwise distinct")
        idx = []
        for i in range(q):
            u, v = vs[i], vs[(i + 1) % q]
            j = g.edge_index.get((min(u, v), max(u, v)))
            if j is None:
                raise GraphError(f"({u},{v}) is not an edge of the graph")
            idx.append(j)
        vs = cls._canonical(tuple(vs))
        idx = tuple(
            g.edge_index[(min(vs[i], vs[(i + 1) % q]), max(vs[i], vs[(i + 1) % q]))]
            for i in range(q)
        )
        return cls(vs, idx)

    @staticmethod
    def _canonical(vs: tuple[int, ...]) -> tuple[int, ...]:
        q = len(vs)
        k = vs.index(min(vs))
        rot = vs[k:] + vs[:k]
        if rot[1] > rot[-1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return rot


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a validated Graph.

    Format: UTF-8 lines, '#' starts a comment line, an optional header
    "p <n> <m>" fixes the vertex count, every other line is "<u> <v>"
    with 1-based vertex labels.  Edge order in the file defines the
    variable order x_1..x_m.
    """
    n_header: int | None = None
    m_header: int | None = None
    edges: list[tuple[int, int]] = []
    max_label = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if edges or n_header is not None:
                raise GraphFormatError("header must precede all edges", lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n_header, m_header = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno) from None
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected integers, got {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise GraphFormatError("vertex labels are 1-based positive integers", lineno)
        if u == v:
            raise GraphFormatError(f"loop detected at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if any((min(a, b), max(a, b)) == key for a, b in edges):
            raise GraphFormatError(f"duplicate edge ({key[0]},{key[1]})", lineno)
        edges.append((u, v))
        max_label = max(max_label, u, v)
    if not edges and n_header is None:
        raise GraphFormatError("no edges and no header found", None)
    n = n_header if n_header is not None else max_label
    if m_header is not None and m_header != len(edges):
        raise GraphFormatError(
            f"header declares {m_header} edges but {len(edges)} were given", None
        )
    try:
        return Graph(n, tuple(edges))
    except GraphError as exc:
        raise GraphFormatError(str(exc), None) from exc


def complete_graph(n: int) -> Graph:
    """K_n with edges in lexicographic order."""
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} on parts {1..a} and {a+1..a+b}, edges in lexicographic order."""
    return Graph(
        a + b, tuple((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1))
    )


def cycle_graph(length: int) -> Graph:
    """The cycle on `length` vertices; edge i joins i and i+1, last closes."""
    if length < 3:
        raise GraphError("cycle graphs need length >= 3")
    edges = [(i, i + 1) for i in range(1, length)] + [(1, length)]
    return Graph(length, tuple(edges))


def is_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Return the bipartition (side of vertex 1 first) or None.

    Deterministic BFS 2-coloring from vertex 1.
    """
    color = {1: 0}
    queue = deque([1])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in color:
                color[y] = color[x] ^ 1
                queue.append(y)
            elif color[y] == color[x]:
                return None
    part0 = tuple(sorted(v for v in color if color[v] == 0))
    part1 = tuple(sorted(v for v in color if color[v] == 1))
    return part0, part1


def _cycle_vertex_sequences(
    g: Graph, max_length: int | None
) -> list[tuple[int, ...]]:
    # DFS over paths whose interior vertices all exceed the start vertex;
    # closing back to the start with path[1] < path[-1] keeps one traversal
    # direction, so each cycle is produced exactly once.
    out: list[tuple[int, ...]] = []
    adj = g.adjacency
    for s in range(1, g.n + 1):
        path = [s]
        on_path = {s}

        def extend(v: int):
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif (
                    w > s
                    and w not in on_path
                    and (max_length is None or len(path) < max_length)
                ):
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.remove(w)

        extend(s)
    return out


def enumerate_even_cycles(g: Graph, max_length: int | None = None) -> list[EdgeCycle]:
    """All even cycles, each once up to rotation/reflection.

    Sorted by (length, edge index sequence).  Unbounded enumeration is
    refused above UNBOUNDED_CYCLE_VERTEX_LIMIT vertices.
    """
    if max_length is None and g.n > UNBOUNDED_CYCLE_VERTEX_LIMIT:
        raise GraphError(
            f"graphs with more than {UNBOUNDED_CYCLE_VERTEX_LIMIT} vertices "
            "require an explicit max_length"
        )
    if max_length is not None and max_length % 2 != 0:
        raise GraphError("max_length must be even")
    cycles = [
        EdgeCycle.from_vertices(g, vs)
        for vs in _cycle_vertex_sequences(g, max_length)
        if len(vs) % 2 == 0
    ]
    cycles.sort(key=lambda c: (len(c), c.edge_indices))
    return cycles


def cycle_has_chord(g: Graph, cycle: EdgeCycle) -> bool:
    """True iff some graph edge joins two non-consecutive cycle vertices."""
    vs = cycle.vertices
    for i, j in combinations(range(len(vs)), 2):
        consecutive = (j - i == 1) or (i == 0 and j == len(vs) - 1)
        if not consecutive and g.has_edge(vs[i], vs[j]):
            return True
    return False


def enumerate_k4_subgraphs(g: Graph) -> list[tuple[int, int, int, int]]:
    """All vertex 4-sets whose induced subgraph is complete, lex sorted."""
    out = []
    for quad in combinations(range(1, g.n + 1), 4):
        if all(g.has_edge(u, v) for u, v in combinations(quad, 2)):
            out.append(quad)
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """The induced subgraph on `vs`, relabelled 1..k by sorted order.

    Returns (subgraph, edge_map) where edge_map[i] is the original 0-based
    index of the subgraph's i-th edge.  Raises if the result is not
    connected (or vs is empty/invalid).
    """
    vset = sorted(set(vs))
    if not vset:
        raise GraphError("vertex set must be nonempty")
    if vset[0] < 1 or vset[-1] > g.n:
        raise GraphError("vertex set outside 1..n")
    relabel = {v: i + 1 for i, v in enumerate(vset)}
    edges = []
    edge_map = []
    inside = set(vset)
    for j, (u, v) in enumerate(g.edges):
        if u in inside and v in inside:
            edges.append((relabel[u], relabel[v]))
            edge_map.append(j)
    try:
        sub = Graph(len(vset), tuple(edges))
    except GraphError as exc:
        raise GraphError(f"induced subgraph on {vset} is invalid: {exc}") from exc
    return sub, tuple(edge_map)
