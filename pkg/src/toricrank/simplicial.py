"""The circuit-support complex and its exact matching invariants.

Vertices are the inclusion-minimal supports appearing among circuit
halves; a set of vertices forms a face exactly when the relative
interiors of the subcones they span share a point, which is decided by
exact rational feasibility.  The matching number delta is computed by
exhaustive two-phase search per connected component: first the maximum
coverable vertex count, then the fewest faces achieving it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import CapExceededError, InternalCheckError, SearchGuardError
from .graphs import Graph
from .linalg import (
    DEFAULT_CIRCUIT_CAP,
    circuits_bruteforce,
    relint_intersection_feasible,
)

DEFAULT_MAX_FACE_CARD = 8
DEFAULT_COMPONENT_FACES_GUARD = 4096

SupportSet = tuple[int, ...]


def compute_c_min(g: Graph, cap: int = DEFAULT_CIRCUIT_CAP) -> list[SupportSet]:
    """Inclusion-minimal supports among positive/negative circuit halves."""
    circuits = circuits_bruteforce(g.incidence_columns(), cap)
    supports = {cv.positive_support for cv in circuits}
    supports |= {cv.negative_support for cv in circuits}
    minimal = [
        s
        for s in supports
        if not any(t != s and set(t) < set(s) for t in supports)
    ]
    return sorted(minimal)


class ComponentKind(Enum):
    EDGE = "edge"
    TWO_SIMPLEX = "two_simplex"
    OTHER = "other"


@dataclass(frozen=True)
class DeltaComplex:
    """Explicit face list on the minimal-support vertex set.

    Faces are sorted vertex-index tuples of cardinality >= 1, closed under
    taking subsets, ordered by (cardinality, indices).
    """

    vertices: tuple[SupportSet, ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def faces_of_card(self, k: int) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == k]


@dataclass(frozen=True)
class JMatching:
    """Pairwise-disjoint faces whose dimensions lie in the allowed set."""

    dims: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]


def build_delta(
    g: Graph,
    max_face_card: int = DEFAULT_MAX_FACE_CARD,
    circuit_cap: int = DEFAULT_CIRCUIT_CAP,
) -> DeltaComplex:
    """Construct the complex by feasibility tests of increasing cardinality.

    Supersets of non-faces are never tested.  For vertex pairs the
    feasibility answer is cross-checked against the circuit criterion: a
    pair is a face iff some circuit realizes the two supports as its
    halves.
    """
    circuits = circuits_bruteforce(g.incidence_columns(), circuit_cap)
    supports = {cv.positive_support for cv in circuits}
    supports |= {cv.negative_support for cv in circuits}
    vertices = tuple(
        sorted(
            s
            for s in supports
            if not any(t != s and set(t) < set(s) for t in supports)
        )
    )
    vindex = {s: i for i, s in enumerate(vertices)}
    cols = g.incidence_columns()

    circuit_pairs = set()
    for cv in circuits:
        a, b = cv.positive_support, cv.negative_support
        if a in vindex and b in vindex:
            i, j = vindex[a], vindex[b]
            circuit_pairs.add((min(i, j), max(i, j)))

    faces: list[tuple[int, ...]] = [(i,) for i in range(len(vertices))]
    level: list[tuple[int, ...]] = []
    for i, j in combinations(range(len(vertices)), 2):
        feasible = relint_intersection_feasible(
            [vertices[i], vertices[j]], cols
        )
        if feasible != ((i, j) in circuit_pairs):
            raise InternalCheckError(
                f"face test disagrees with the circuit criterion on pair "
                f"({vertices[i]}, {vertices[j]})"
            )
        if feasible:
            level.append((i, j))
    faces.extend(level)
    card = 2
    while level:
        if card == max_face_card:
            if _closure_candidates(level):
                raise CapExceededError(
                    f"faces of cardinality beyond {max_face_card} are "
                    "possible; raise max_face_card to test them"
                )
            break
        nxt = []
        for cand in _closure_candidates(level):
            if relint_intersection_feasible(
                [vertices[i] for i in cand], cols
            ):
                nxt.append(cand)
        faces.extend(nxt)
        level = nxt
        card += 1
    faces.sort(key=lambda f: (len(f), f))
    return DeltaComplex(vertices, tuple(faces))


def _closure_candidates(level: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Extensions of current faces whose proper subsets are all faces."""
    present = set(level)
    seen = set()
    out = []
    top = max((f[-1] for f in level), default=-1)
    for f in level:
        for v in range(f[-1] + 1, top + 1):
            cand = f + (v,)
            if cand in seen:
                continue
            seen.add(cand)
            if all(
                cand[:k] + cand[k + 1 :] in present for k in range(len(cand))
            ):
                out.append(cand)
    out.sort()
    return out


def _vertex_partition(d: DeltaComplex) -> list[list[int]]:
    parent = list(range(len(d.vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in d.faces:
        for a, b in zip(f, f[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(len(d.vertices)):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def delta_components(d: DeltaComplex) -> list[DeltaComplex]:
    """Connected components as standalone complexes with inherited faces."""
    out = []
    for verts in _vertex_partition(d):
        local = {v: i for i, v in enumerate(verts)}
        vs = tuple(d.vertices[v] for v in verts)
        fs = tuple(
            tuple(local[v] for v in f)
            for f in d.faces
            if all(v in local for v in f)
        )
        out.append(DeltaComplex(vs, fs))
    return out


def classify_component(c: DeltaComplex) -> ComponentKind:
    """Edge, full 2-simplex, or anything else."""
    if len(c.vertices) == 2 and (0, 1) in c.faces:
        return ComponentKind.EDGE
    if len(c.vertices) == 3 and (0, 1, 2) in c.faces:
        return ComponentKind.TWO_SIMPLEX
    return ComponentKind.OTHER


def _component_best(
    faces: list[tuple[int, ...]],
    positions: dict[int, int],
    dims: frozenset[int],
) -> tuple[int, list[tuple[int, ...]]]:
    """Fewest faces among matchings of maximum coverage, first-found ties.

    Faces are explored largest-first then lexicographically, so the
    reported witness prefers big faces.
    """
    eligible = [f for f in faces if len(f) - 1 in dims]
    eligible.sort(key=lambda f: (-len(f), f))
    masks = [
        sum(1 << positions[v] for v in f) for f in eligible
    ]
    suffix = [0] * (len(eligible) + 1)
    for i in range(len(eligible) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    best_cov = -1
    best_cnt = 0
    best: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def search(i: int, used: int, cov: int, cnt: int):
        nonlocal best_cov, best_cnt, best
        reachable = cov + (suffix[i] & ~used).bit_count()
        if reachable < best_cov:
            return
        if reachable == best_cov and cnt >= best_cnt:
            return
        if i == len(eligible):
            if cov > best_cov or (cov == best_cov and cnt < best_cnt):
                best_cov = cov
                best_cnt = cnt
                best = [eligible[k] for k in chosen]
            return
        if masks[i] & used == 0:
            chosen.append(i)
            search(i + 1, used | masks[i], cov + len(eligible[i]), cnt + 1)
            chosen.pop()
        search(i + 1, used, cov, cnt)

    search(0, 0, 0, 0)
    return best_cnt, best


def delta_value(
    d: DeltaComplex,
    dims: set[int] | frozenset[int],
    component_faces_guard: int = DEFAULT_COMPONENT_FACES_GUARD,
) -> tuple[int, JMatching]:
    """Least face count among maximum-coverage matchings with allowed dims.

    Solved exactly per connected component and summed; the witness is the
    concatenation of the per-component optima.  Dimensions absent from
    the complex are ignored; a component with no eligible face
    contributes zero.
    """
    dims = frozenset(dims)
    if not dims:
        raise ValueError("the allowed dimension set must be nonempty")
    if any(x < 0 for x in dims):
        raise ValueError("dimensions are nonnegative integers")
    total = 0
    witness: list[tuple[int, ...]] = []
    for verts in _vertex_partition(d):
        vset = set(verts)
        comp_faces = [f for f in d.faces if f[0] in vset]
        if len(comp_faces) > component_faces_guard:
            raise SearchGuardError(
                f"component has {len(comp_faces)} faces, beyond the guard "
                f"{component_faces_guard}"
            )
        positions = {v: i for i, v in enumerate(verts)}
        cnt, faces = _component_best(comp_faces, positions, dims)
        total += cnt
        witness.extend(faces)
    return total, JMatching(tuple(sorted(dims)), tuple(witness))
