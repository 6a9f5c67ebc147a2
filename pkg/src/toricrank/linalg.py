"""Exact integer/rational linear algebra over incidence columns.

Rank is fraction-free integer elimination; circuit enumeration walks the
column matroid for inclusion-minimal dependent sets; cone membership and
relative-interior questions reduce to exact rational phase-1 simplex with
Bland's rule, so every boolean answer is a certificate, never a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import _backend
from .errors import CapExceededError, InternalCheckError

DEFAULT_CIRCUIT_CAP = 16
DEFAULT_VARIABLE_GUARD = 64

IncidenceColumn = tuple[int, ...]


def _check_incidence(cols: Sequence[IncidenceColumn]) -> list[tuple[int, int]]:
    """Validate two-hot 0/1 columns and return their 0-based endpoint pairs."""
    if not cols:
        raise ValueError("column list must be nonempty")
    n = len(cols[0])
    endpoints = []
    for col in cols:
        if len(col) != n or any(x not in (0, 1) for x in col) or sum(col) != 2:
            raise ValueError("incidence columns must be 0/1 with exactly two ones")
        ones = [i for i, x in enumerate(col) if x]
        endpoints.append((ones[0], ones[1]))
    return endpoints


def integer_rank(cols: Sequence[IncidenceColumn]) -> int:
    """Rank over Q of the matrix with the given incidence columns."""
    _check_incidence(cols)
    return _backend.bareiss_rank([list(c) for c in cols])


@dataclass(frozen=True)
class CircuitVector:
    """An integer kernel vector with inclusion-minimal support.

    Entries are coprime, the smallest support index carries a positive
    entry, and every entry has absolute value at most 2.
    """

    vector: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.vector) if x != 0)

    @property
    def positive_part(self) -> tuple[int, ...]:
        return tuple(x if x > 0 else 0 for x in self.vector)

    @property
    def negative_part(self) -> tuple[int, ...]:
        return tuple(-x if x < 0 else 0 for x in self.vector)

    @property
    def positive_support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.vector) if x > 0)

    @property
    def negative_support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.vector) if x < 0)


def circuits_bruteforce(
    cols: Sequence[IncidenceColumn], cap: int = DEFAULT_CIRCUIT_CAP
) -> list[CircuitVector]:
    """All circuits of the column configuration, sorted by support.

    Found as inclusion-minimal dependent column subsets, each carrying a
    one-dimensional kernel solved exactly.  Refuses more than `cap`
    columns; the subset walk is exponential in the worst case.
    """
    endpoints = _check_incidence(cols)
    m = len(cols)
    if m > cap:
        raise CapExceededError(
            f"{m} columns exceed the circuit enumeration cap {cap}; "
            "pass a larger cap to accept the cost"
        )
    if m > _backend.MAX_SCAN_EDGES:
        raise CapExceededError(
            f"circuit scan supports at most {_backend.MAX_SCAN_EDGES} columns"
        )
    n = len(cols[0])
    out = []
    for vec in _backend.circuit_scan(n, endpoints):
        cv = CircuitVector(tuple(vec))
        _validate_circuit(cols, cv)
        out.append(cv)
    return out


def _validate_circuit(cols: Sequence[IncidenceColumn], cv: CircuitVector) -> None:
    n = len(cols[0])
    image = [0] * n
    for j, x in enumerate(cv.vector):
        if x:
            for i in range(n):
                image[i] += x * cols[j][i]
    if any(image):
        raise InternalCheckError("circuit vector is not in the kernel")
    if any(abs(x) > 2 for x in cv.vector):
        raise InternalCheckError("circuit entry exceeds the +-2 bound")
    g = 0
    for x in cv.vector:
        g = gcd(g, abs(x))
    if g != 1:
        raise InternalCheckError("circuit entries are not coprime")
    if cv.vector[cv.support[0]] < 0:
        raise InternalCheckError("circuit sign normalization violated")


def _phase1_feasible(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> bool:
    """Does A x = b admit x >= 0?  Exact phase-1 simplex, Bland's rule."""
    nrows = len(rows)
    nvars = len(rows[0]) if nrows else 0
    if nrows == 0:
        return True
    tab: list[list[Fraction]] = []
    for i in range(nrows):
        row = list(rows[i])
        b = rhs[i]
        if b < 0:
            row = [-x for x in row]
            b = -b
        tab.append(row + [Fraction(0)] * nrows + [b])
    for i in range(nrows):
        tab[i][nvars + i] = Fraction(1)
    basis = [nvars + i for i in range(nrows)]
    # Objective row: total artificial value expressed in the nonbasics.
    cost = [Fraction(0)] * (nvars + nrows + 1)
    for i in range(nrows):
        for j in range(nvars):
            cost[j] += tab[i][j]
        cost[-1] += tab[i][-1]
    while True:
        enter = None
        for j in range(nvars):  # artificials never re-enter
            if cost[j] > 0:
                enter = j
                break
        if enter is None:
            return cost[-1] == 0
        leave = None
        best = None
        for i in range(nrows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise InternalCheckError("phase-1 objective unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter


def vector_in_cone(
    b: Sequence[int | Fraction], cols: Sequence[IncidenceColumn]
) -> bool:
    """Is b a nonnegative rational combination of the given columns?"""
    n = len(b)
    if not cols:
        return all(x == 0 for x in b)
    if any(len(c) != n for c in cols):
        raise ValueError("dimension mismatch between b and the columns")
    rows = [[Fraction(cols[j][i]) for j in range(len(cols))] for i in range(n)]
    return _phase1_feasible(rows, [Fraction(x) for x in b])


def relint_intersection_feasible(
    supports: Sequence[Iterable[int]],
    cols: Sequence[IncidenceColumn],
    variable_guard: int = DEFAULT_VARIABLE_GUARD,
) -> bool:
    """Do the relative interiors of the subcones spanned by the supports meet?

    Decided exactly: a common point needs strictly positive weights on
    every generator of every support; by homogeneity of the cones this is
    equivalent to weights >= 1, which phase-1 simplex settles after the
    shift lambda = 1 + y.
    """
    sup = [sorted(set(s)) for s in supports]
    if not sup or any(not s for s in sup):
        raise ValueError("each support must be nonempty")
    n = len(cols[0])
    for s in sup:
        if s[-1] >= len(cols) or s[0] < 0:
            raise ValueError("support index out of range")
    if len(sup) == 1:
        return True
    nvars = sum(len(s) for s in sup)
    if nvars > variable_guard:
        raise CapExceededError(
            f"{nvars} weight variables exceed the guard {variable_guard}"
        )
    sums = []
    for s in sup:
        tot = [0] * n
        for j in s:
            for i in range(n):
                tot[i] += cols[j][i]
        sums.append(tot)
    # Equations: sum over support 0 minus sum over support k of the shifted
    # weights, one block of n rows per k >= 1.
    offsets = []
    pos = 0
    for s in sup:
        offsets.append(pos)
        pos += len(s)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k in range(1, len(sup)):
        for i in range(n):
            row = [Fraction(0)] * nvars
            for c, j in enumerate(sup[0]):
                row[offsets[0] + c] += cols[j][i]
            for c, j in enumerate(sup[k]):
                row[offsets[k] + c] -= cols[j][i]
            rows.append(row)
            rhs.append(Fraction(sums[k][i] - sums[0][i]))
    return _phase1_feasible(rows, rhs)
