"""Exact integer lattices in Hermite normal form.

Lattices are spanned by integer row vectors.  The canonical basis is the
row-style HNF: each row's first nonzero entry (its pivot) is positive, pivot
columns strictly increase down the rows, and every entry above a pivot lies
in ``[0, pivot)``.  Everything is exact Python integer arithmetic.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

INFINITE_INDEX = math.inf

Vector = tuple


def _hnf_rows(rows: list[list[int]], ncols: int) -> list[tuple[int, ...]]:
    rows = [list(r) for r in rows if any(r)]
    top = 0
    pivot_cols = []
    for col in range(ncols):
        if top == len(rows):
            break
        while True:
            nz = [i for i in range(top, len(rows)) if rows[i][col]]
            if len(nz) <= 1:
                break
            k = min(nz, key=lambda i: abs(rows[i][col]))
            piv = rows[k]
            pv = piv[col]
            for i in nz:
                if i == k:
                    continue
                r = rows[i]
                q = r[col] // pv
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
            rows = rows[:top] + [r for r in rows[top:] if any(r)]
        if not nz:
            continue
        k = nz[0]
        rows[top], rows[k] = rows[k], rows[top]
        piv = rows[top]
        if piv[col] < 0:
            for j in range(col, ncols):
                piv[j] = -piv[j]
        pv = piv[col]
        for i in range(top):
            r = rows[i]
            q = r[col] // pv
            if q:
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
        pivot_cols.append(col)
        top += 1
    return [tuple(r) for r in rows[:top]]


class IntegerLattice:
    """Sublattice of ``Z**dimension`` with a canonical HNF basis."""

    __slots__ = ("dimension", "basis", "pivots")

    def __init__(self, dimension: int, rows: Iterable[Sequence[int]] = ()):
        rows = [list(map(int, r)) for r in rows]
        for r in rows:
            if len(r) != dimension:
                raise ValueError(f"row of length {len(r)} in dimension {dimension}")
        self.dimension = dimension
        self.basis = tuple(_hnf_rows(rows, dimension))
        self.pivots = tuple(next(j for j, a in enumerate(r) if a) for r in self.basis)

    @classmethod
    def full(cls, dimension: int) -> IntegerLattice:
        return cls(dimension, _identity(dimension))

    @classmethod
    def scaled(cls, dimension: int, c: int) -> IntegerLattice:
        return cls(dimension, [[c * a for a in r] for r in _identity(dimension)])

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dimension

    def __repr__(self):
        return f"IntegerLattice(dim={self.dimension}, rank={self.rank}, basis={list(self.basis)})"

    def __eq__(self, other):
        return (
            isinstance(other, IntegerLattice)
            and self.dimension == other.dimension
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.dimension, self.basis))

    def _check_dim(self, other_dim: int):
        if other_dim != self.dimension:
            raise ValueError(f"dimension mismatch: {other_dim} vs {self.dimension}")

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        """Integer coordinates of ``v`` in the HNF basis, or None if ``v`` is not in the lattice."""
        self._check_dim(len(v))
        v = list(v)
        coords = []
        for row, pc in zip(self.basis, self.pivots):
            if any(v[:pc]):
                return None
            q, r = divmod(v[pc], row[pc])
            if r:
                return None
            coords.append(q)
            if q:
                for j in range(pc, self.dimension):
                    v[j] -= q * row[j]
        return coords if not any(v) else None

    def contains(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    __contains__ = contains

    def contains_lattice(self, other: IntegerLattice) -> bool:
        self._check_dim(other.dimension)
        return all(self.contains(r) for r in other.basis)

    def equals(self, other: IntegerLattice) -> bool:
        self._check_dim(other.dimension)
        return self.basis == other.basis

    def sum(self, other: IntegerLattice) -> IntegerLattice:
        self._check_dim(other.dimension)
        return IntegerLattice(self.dimension, self.basis + other.basis)

    __add__ = sum

    def intersect(self, other: IntegerLattice) -> IntegerLattice:
        """Exact intersection, via the HNF of ``[[B1, B1], [B2, 0]]``."""
        self._check_dim(other.dimension)
        n = self.dimension
        zero = (0,) * n
        stacked = [r + r for r in self.basis] + [r + zero for r in other.basis]
        h = _hnf_rows(stacked, 2 * n)
        return IntegerLattice(n, [r[n:] for r in h if not any(r[:n])])

    def index_in(self, sup: IntegerLattice):
        """``|sup / self|``; INFINITE_INDEX when the ranks differ."""
        self._check_dim(sup.dimension)
        if not sup.contains_lattice(self):
            raise ValueError("lattice is not contained in the putative superlattice")
        if self.rank != sup.rank:
            return INFINITE_INDEX
        if self.rank == 0:
            return 1
        coords = [sup.coordinates(r) for r in self.basis]
        return abs(determinant(coords))

    def determinant(self) -> int:
        if not self.is_full_rank:
            raise ValueError("determinant of a rank-deficient lattice")
        return math.prod(r[c] for r, c in zip(self.basis, self.pivots))

    def scale(self, c: int) -> IntegerLattice:
        return IntegerLattice(self.dimension, [[c * a for a in r] for r in self.basis])

    def image(self, matrix: Sequence[Sequence[int]]) -> IntegerLattice:
        """Lattice spanned by ``row @ matrix`` for the basis rows."""
        m = len(matrix[0]) if matrix else 0
        return IntegerLattice(m, [vec_mat(r, matrix) for r in self.basis])

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "rank": self.rank,
            "hnf": [[str(a) for a in r] for r in self.basis],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> IntegerLattice:
        return cls(int(data["dimension"]), [[int(a) for a in r] for r in data["hnf"]])


def hnf(rows: Sequence[Sequence[int]], dimension: int | None = None) -> IntegerLattice:
    rows = [list(r) for r in rows]
    if dimension is None:
        if not rows:
            raise ValueError("dimension is required for an empty row set")
        dimension = len(rows[0])
    return IntegerLattice(dimension, rows)


def kron_vec(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(a * b for a in u for b in v)


def kron(l1: IntegerLattice, l2: IntegerLattice) -> IntegerLattice:
    """Tensor product lattice inside ``Z**(a*b)``."""
    return IntegerLattice(
        l1.dimension * l2.dimension,
        [kron_vec(u, v) for u in l1.basis for v in l2.basis],
    )


def kron_mat(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(kron_vec(ra, rb)) for ra in a for rb in b]


def vec_mat(v: Sequence[int], matrix: Sequence[Sequence[int]]) -> list[int]:
    m = len(matrix[0])
    out = [0] * m
    for a, row in zip(v, matrix):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] += a * b
    return out


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def rational_inverse(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Return ``(A, D)`` with ``matrix**-1 == A / D``, ``D > 0`` minimal."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    inv = [row[n:] for row in a]
    d = math.lcm(*(x.denominator for row in inv for x in row))
    return [[int(x * d) for x in row] for row in inv], d


def kernel_mod(matrix: Sequence[Sequence[int]], modulus: int) -> IntegerLattice:
    """``{x in Z**n : x @ matrix == 0 (mod modulus)}`` for an ``n x m`` matrix."""
    n = len(matrix)
    if modulus == 1:
        return IntegerLattice.full(n)
    # the conditions only depend on the column lattice of matrix plus modulus*Z**n
    columns = {tuple(row[j] % modulus for row in matrix) for j in range(len(matrix[0]))}
    cols = [list(c) for c in columns if any(c)]
    cols += [[modulus * int(i == j) for j in range(n)] for i in range(n)]
    h = _hnf_rows(cols, n)
    ident = _identity(n)
    stacked = [[h_row[i] for h_row in h] + ident[i] for i in range(n)]
    k = len(h)
    stacked += [[modulus * int(i == j) for j in range(k)] + [0] * n for i in range(k)]
    sol = _hnf_rows(stacked, k + n)
    return IntegerLattice(n, [r[k:] for r in sol if not any(r[:k])])


def elementary_divisors(lattice: IntegerLattice) -> list[int]:
    """Invariant factors of ``Z**n / lattice`` restricted to the lattice's span.

    For a full-rank lattice these are the cyclic orders of the finite quotient.
    """
    if lattice.rank == 0:
        return []
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    return [int(abs(d)) for d in invariant_factors(Matrix(lattice.basis), domain=ZZ)]
