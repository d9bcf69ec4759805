"""Finite abelian groups given as direct products of cyclic groups.

Elements are plain tuples of exponents ``(a_1, ..., a_r)`` with
``0 <= a_i < c_i``.  The element order used everywhere (coefficient vectors
of group ring elements, lattice coordinates) is mixed-radix lexicographic
with the last coordinate running fastest, so that the elements of a direct
product ``G1 x G2`` are ordered like the Kronecker product of the factors.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from math import gcd, lcm, prod
from typing import Sequence

from sympy import isprime

GroupElement = tuple


def prime_power_exponent(c: int, p: int) -> int | None:
    """Return ``k`` with ``c == p**k``, or None if ``c`` is not a power of ``p``."""
    if c < 1:
        return None
    k = 0
    while c % p == 0:
        c //= p
        k += 1
    return k if c == 1 else None


class AbelianGroup:
    """Direct product of cyclic groups of the given orders."""

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(c) for c in orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(c < 1 for c in orders):
            raise ValueError(f"cyclic orders must be positive: {orders}")
        self.orders = orders
        self.rank = len(orders)
        self.order = prod(orders)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.orders)})"

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def is_element(self, g) -> bool:
        return (
            isinstance(g, tuple)
            and len(g) == self.rank
            and all(isinstance(a, int) and 0 <= a < c for a, c in zip(g, self.orders))
        )

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % c for a, b, c in zip(g, h, self.orders))

    def inverse(self, g: GroupElement) -> GroupElement:
        return tuple(-a % c for a, c in zip(g, self.orders))

    def pow(self, g: GroupElement, m: int) -> GroupElement:
        return tuple(m * a % c for a, c in zip(g, self.orders))

    def element_order(self, g: GroupElement) -> int:
        return lcm(*(c // gcd(a, c) for a, c in zip(g, self.orders)))

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(c) for c in self.orders)))

    def enumerate(self) -> list[GroupElement]:
        """All elements, identity first, last coordinate fastest."""
        return list(self.elements)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        strides = []
        s = 1
        for c in reversed(self.orders):
            strides.append(s)
            s *= c
        return tuple(reversed(strides))

    def index_of(self, g: GroupElement) -> int:
        return sum(a * s for a, s in zip(g, self._strides))

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        """``mul_table[i][j]`` is the index of ``elements[i] * elements[j]``."""
        els = self.elements
        idx = self.index_of
        return tuple(tuple(idx(self.mul(g, h)) for h in els) for g in els)

    def pow_indices(self, m: int) -> tuple[int, ...]:
        """Index of ``g**m`` for every element ``g`` in enumeration order."""
        return tuple(self.index_of(self.pow(g, m)) for g in self.elements)


class PrimaryGroup(AbelianGroup):
    """Abelian group of prime power order ``n = p**e``."""

    def __init__(self, p: int, orders: Sequence[int]):
        p = int(p)
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        exps = []
        for c in orders:
            k = prime_power_exponent(int(c), p)
            if k is None or k < 1:
                raise ValueError(f"cyclic order {c} is not a positive power of {p}")
            exps.append(k)
        super().__init__(orders)
        self.p = p
        self.e = sum(exps)

    def __repr__(self):
        return f"PrimaryGroup({self.p}, {list(self.orders)})"

    def spec_string(self) -> str:
        return f"{self.p}:" + ",".join(str(c) for c in self.orders)


def make_group(p: int, orders: Sequence[int]) -> PrimaryGroup:
    return PrimaryGroup(p, orders)


class ProductGroup(AbelianGroup):
    """Direct product ``G1 x G2`` of primary groups for distinct primes.

    The factor coordinates are concatenated, so the index of ``(g1, g2)`` is
    ``index(g1) * |G2| + index(g2)``.
    """

    def __init__(self, factor1: PrimaryGroup, factor2: PrimaryGroup):
        if factor1.p == factor2.p:
            raise ValueError("product factors must have distinct primes")
        super().__init__(factor1.orders + factor2.orders)
        self.factor1 = factor1
        self.factor2 = factor2

    def __repr__(self):
        return f"ProductGroup({self.factor1!r}, {self.factor2!r})"

    def split(self, g: GroupElement) -> tuple[GroupElement, GroupElement]:
        r1 = self.factor1.rank
        return g[:r1], g[r1:]

    def join(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        return tuple(g1) + tuple(g2)


def parse_group_spec(text: str) -> PrimaryGroup:
    """Parse ``"p:c1,c2,..."`` into a :class:`PrimaryGroup`."""
    try:
        p_text, orders_text = text.split(":")
        p = int(p_text)
        orders = [int(c) for c in orders_text.split(",")]
    except ValueError:
        raise ValueError(f"bad group spec {text!r}; expected 'p:c1,c2,...'") from None
    return PrimaryGroup(p, orders)


def primary_groups_up_to(bound: int) -> list[PrimaryGroup]:
    """Every primary abelian group of order ``<= bound`` (up to isomorphism)."""
    groups = []
    p = 2
    while p <= bound:
        if isprime(p):
            e = 1
            while p**e <= bound:
                for part in _partitions(e):
                    groups.append(PrimaryGroup(p, [p**k for k in sorted(part)]))
                e += 1
        p += 1
    return groups


def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest
