"""Cyclotomic integers Z[w_k], w_k = exp(2 pi i / p**k), and the normal closure S.

Elements of ``Z[w_k]`` are coefficient vectors on the power basis
``1, w, ..., w**(d-1)`` with ``d = phi(p**k)``, always reduced by the
``p**k``-th cyclotomic polynomial.  The normal closure of ``Z[G]`` is the
product of one such ring per character class; its coordinates are the
concatenation of the component vectors in class order, giving ``Z**n``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from sympy import factorint

from .characters import CharacterClass, classes, value_exponent
from .groupring import RingElement
from .groups import PrimaryGroup
from .lattice import IntegerLattice, rational_inverse, vec_mat


@dataclass(frozen=True)
class CycRing:
    p: int
    k: int

    @property
    def root_order(self) -> int:
        return self.p**self.k

    @property
    def degree(self) -> int:
        return 1 if self.k == 0 else self.p ** (self.k - 1) * (self.p - 1)

    def reduce(self, exponent_coeffs: Sequence[int]) -> CyclotomicInteger:
        """Reduce ``sum c_t w**t`` (any length) to the power basis."""
        N = self.root_order
        v = [0] * N
        for t, c in enumerate(exponent_coeffs):
            v[t % N] += c
        if self.k == 0:
            return CyclotomicInteger(self, (v[0],))
        m = N // self.p
        d = self.degree
        for t in range(N - 1, d - 1, -1):
            c = v[t]
            if c:
                v[t] = 0
                base = t - d
                for j in range(self.p - 1):
                    v[base + j * m] -= c
        return CyclotomicInteger(self, tuple(v[:d]))

    def zero(self) -> CyclotomicInteger:
        return CyclotomicInteger(self, (0,) * self.degree)

    def one(self) -> CyclotomicInteger:
        return self.integer(1)

    def integer(self, c: int) -> CyclotomicInteger:
        return CyclotomicInteger(self, (c,) + (0,) * (self.degree - 1))

    def root_power(self, t: int) -> CyclotomicInteger:
        """``w_k**t``."""
        v = [0] * self.root_order
        v[t % self.root_order] = 1
        return self.reduce(v)

    @property
    def omega(self) -> CyclotomicInteger:
        """The primitive ``p``-th root of unity ``w_k**(p**(k-1))``."""
        if self.k == 0:
            raise ValueError("Z has no primitive p-th root of unity")
        return self.root_power(self.p ** (self.k - 1))

    def trace_of_power(self, j: int) -> int:
        """Exact trace of ``w_k**j`` down to Q."""
        N = self.root_order
        order = N // math.gcd(j % N, N)
        if order == 1:
            return self.degree
        if order == self.p:
            return -(self.p ** (self.k - 1))
        return 0

    def gram_matrix(self) -> list[list[int]]:
        d = self.degree
        return [[self.trace_of_power(i + j) for j in range(d)] for i in range(d)]


@dataclass(frozen=True)
class CyclotomicInteger:
    ring: CycRing
    coeffs: tuple[int, ...]

    def _same(self, other: CyclotomicInteger) -> CyclotomicInteger:
        if isinstance(other, int):
            return self.ring.integer(other)
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return CyclotomicInteger(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.ring, tuple(other * a for a in self.coeffs))
        other = self._same(other)
        out = [0] * (2 * self.ring.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self.ring.reduce(out)

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def trace(self) -> int:
        return sum(c * self.ring.trace_of_power(i) for i, c in enumerate(self.coeffs))

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, ring: CycRing, text: str) -> CyclotomicInteger:
        return cls(ring, tuple(int(c) for c in json.loads(text)))


def cyc_add(a: CyclotomicInteger, b: CyclotomicInteger) -> CyclotomicInteger:
    return a + b


def cyc_mul(a: CyclotomicInteger, b: CyclotomicInteger) -> CyclotomicInteger:
    return a * b


def embed_up(a: CyclotomicInteger) -> CyclotomicInteger:
    """Z[w_(k-1)] -> Z[w_k] via ``w_(k-1) = w_k**p``."""
    ring = CycRing(a.ring.p, a.ring.k + 1)
    v = [0] * ring.root_order
    for i, c in enumerate(a.coeffs):
        v[i * ring.p] += c
    return ring.reduce(v)


def galois(m: int, a: CyclotomicInteger) -> CyclotomicInteger:
    """The automorphism ``w -> w**m`` for ``m`` prime to ``p``."""
    if m % a.ring.p == 0:
        raise ValueError(f"{m} is not prime to {a.ring.p}")
    if a.ring.k == 0:
        return a
    v = [0] * a.ring.root_order
    N = a.ring.root_order
    for i, c in enumerate(a.coeffs):
        v[i * m % N] += c
    return a.ring.reduce(v)


@dataclass(frozen=True)
class FractionalLattice:
    """``lattice / denominator`` with ``gcd(content, denominator) == 1``."""

    lattice: IntegerLattice
    denominator: int

    @classmethod
    def make(cls, rows, dimension: int, denominator: int) -> FractionalLattice:
        lat = IntegerLattice(dimension, rows)
        g = denominator
        for r in lat.basis:
            for a in r:
                g = math.gcd(g, a)
        if g > 1:
            lat = IntegerLattice(dimension, [[a // g for a in r] for r in lat.basis])
        return cls(lat, denominator // g)

    def scale(self, c: int) -> FractionalLattice:
        return FractionalLattice.make(
            [[c * a for a in r] for r in self.lattice.basis], self.lattice.dimension, self.denominator
        )

    def integral(self) -> IntegerLattice:
        if self.denominator != 1:
            raise ValueError("fractional lattice is not integral")
        return self.lattice


def trace_dual(ring: CycRing) -> FractionalLattice:
    """Dual of Z[w_k] under the trace form (the inverse different)."""
    inv, d = rational_inverse(ring.gram_matrix())
    return FractionalLattice.make(inv, ring.degree, d)


def principal_fractional(x: CyclotomicInteger, denominator: int) -> FractionalLattice:
    """The fractional ideal ``(x / denominator) Z[w_k]``."""
    ring = x.ring
    rows = [(x * ring.root_power(i)).coeffs for i in range(ring.degree)]
    return FractionalLattice.make(rows, ring.degree, denominator)


def j_rho(cls: CharacterClass, a: RingElement) -> CyclotomicInteger:
    """Image of ``a`` under the representative character, in Z[w_k]."""
    group = cls.representative.group
    if a.group != group:
        raise ValueError("ring element is not over the class's group")
    ring = CycRing(group.p, cls.level)
    exps = _class_exponents(cls)
    v = [0] * ring.root_order
    for t, c in zip(exps, a.coeffs):
        if c:
            v[t] += c
    return ring.reduce(v)


@lru_cache(maxsize=None)
def _class_exponents(cls: CharacterClass) -> tuple[int, ...]:
    group = cls.representative.group
    scale = group.order // group.p**cls.level
    return tuple(value_exponent(cls.representative, x) // scale for x in group.elements)


@dataclass(frozen=True)
class SElement:
    """Element of the normal closure: one cyclotomic integer per class."""

    components: tuple[CyclotomicInteger, ...]

    def __add__(self, other):
        return SElement(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        return SElement(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return SElement(tuple(-a for a in self.components))

    def __mul__(self, other):
        if isinstance(other, int):
            return SElement(tuple(other * a for a in self.components))
        return SElement(tuple(a * b for a, b in zip(self.components, other.components)))

    __rmul__ = __mul__

    def coords(self) -> tuple[int, ...]:
        return tuple(c for comp in self.components for c in comp.coeffs)

    def to_json(self) -> str:
        return json.dumps([[str(c) for c in comp.coeffs] for comp in self.components])


class NormalClosure:
    """The maximal order S of Q[G] together with the embedding of Z[G]."""

    def __init__(self, group: PrimaryGroup):
        self.group = group
        self.classes = classes(group)
        self.rings = tuple(CycRing(group.p, c.level) for c in self.classes)
        offsets = [0]
        for r in self.rings:
            offsets.append(offsets[-1] + r.degree)
        self.offsets = tuple(offsets)
        if offsets[-1] != group.order:
            raise AssertionError("Z-rank of S differs from |G|")

    @property
    def rank(self) -> int:
        return self.offsets[-1]

    def embed(self, a: RingElement) -> SElement:
        return SElement(tuple(j_rho(c, a) for c in self.classes))

    def from_coords(self, v: Sequence[int]) -> SElement:
        return SElement(
            tuple(
                CyclotomicInteger(r, tuple(v[self.offsets[i]:self.offsets[i + 1]]))
                for i, r in enumerate(self.rings)
            )
        )

    def one(self) -> SElement:
        return SElement(tuple(r.one() for r in self.rings))

    def zero(self) -> SElement:
        return SElement(tuple(r.zero() for r in self.rings))

    def idempotent(self, i: int) -> SElement:
        return SElement(
            tuple(r.one() if j == i else r.zero() for j, r in enumerate(self.rings))
        )

    def basis(self) -> list[SElement]:
        n = self.rank
        return [self.from_coords([int(i == j) for j in range(n)]) for i in range(n)]

    @cached_property
    def embedding_matrix(self) -> list[list[int]]:
        """Rows are the S-coordinates of the group elements (R -> S)."""
        return [
            list(self.embed(RingElement.monomial(self.group, g)).coords())
            for g in self.group.elements
        ]

    @cached_property
    def _inverse_embedding(self) -> tuple[list[list[int]], int]:
        return rational_inverse(self.embedding_matrix)

    def image_lattice(self) -> IntegerLattice:
        return IntegerLattice(self.rank, self.embedding_matrix)

    def pull_back(self, s: SElement) -> RingElement | None:
        """The ``a`` in Z[G] with ``embed(a) == s``, or None if ``s`` is not in the image."""
        inv, d = self._inverse_embedding
        v = vec_mat(s.coords(), inv)
        if any(x % d for x in v):
            return None
        return RingElement(self.group, [x // d for x in v])

    def mult_matrix(self, s: SElement) -> list[list[int]]:
        """Matrix of ``x -> x * s`` acting on S-coordinate row vectors."""
        return [list((b * s).coords()) for b in self.basis()]

    def s_adams(self, m: int, s: SElement) -> SElement:
        if m < 1:
            raise ValueError("Adams operations are indexed by positive integers")
        for q, mult in factorint(m).items():
            for _ in range(mult):
                s = self._adams_prime(q, s)
        return s

    def _adams_prime(self, q: int, s: SElement) -> SElement:
        if q != self.group.p:
            return SElement(tuple(galois(q, c) for c in s.components))
        out = []
        for cls, comp in zip(self.classes, s.components):
            if cls.parent is None:
                out.append(comp)
            else:
                out.append(embed_up(s.components[cls.parent]))
        return SElement(tuple(out))


@lru_cache(maxsize=None)
def normal_closure(group: PrimaryGroup) -> NormalClosure:
    return NormalClosure(group)


def embed_R_in_S(a: RingElement) -> SElement:
    return normal_closure(a.group).embed(a)


def s_adams(m: int, s: SElement, group: PrimaryGroup) -> SElement:
    return normal_closure(group).s_adams(m, s)
