"""Exact arithmetic in the integral group ring Z[G] of a finite abelian group.

A :class:`RingElement` is a dense vector of Python integers indexed by
``group.elements``.  Besides the ring operations this module provides the
Adams operations ``psi^m`` (induced by ``g -> g**m``), the fundamental
lambda-operations ``theta^l = (a**l - psi^l(a)) / l`` for prime ``l``, and the
integer polynomials ``f_q``, ``g_q`` and ``h`` that show up in the closed forms
for the conductor generators.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from sympy import isprime

from .groups import AbelianGroup, GroupElement


class RingElement:
    __slots__ = ("group", "coeffs")

    def __init__(self, group: AbelianGroup, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != group.order:
            raise ValueError(
                f"expected {group.order} coefficients, got {len(coeffs)}"
            )
        self.group = group
        self.coeffs = coeffs

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, group: AbelianGroup) -> RingElement:
        return cls(group, [0] * group.order)

    @classmethod
    def one(cls, group: AbelianGroup) -> RingElement:
        return cls.monomial(group, group.identity)

    @classmethod
    def monomial(cls, group: AbelianGroup, g: GroupElement, c: int = 1) -> RingElement:
        coeffs = [0] * group.order
        coeffs[group.index_of(g)] = c
        return cls(group, coeffs)

    @classmethod
    def from_terms(cls, group: AbelianGroup, terms) -> RingElement:
        """Build from an iterable of ``(element, coefficient)`` pairs."""
        coeffs = [0] * group.order
        for g, c in terms:
            coeffs[group.index_of(g)] += c
        return cls(group, coeffs)

    @classmethod
    def indicator(cls, group: AbelianGroup, elements: Iterable[GroupElement]) -> RingElement:
        return cls.from_terms(group, ((g, 1) for g in elements))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: RingElement):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.group != self.group:
            raise ValueError("ring elements live over different groups")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = RingElement.one(self.group) * other
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.group, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = RingElement.one(self.group) * other
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.group, [other * a for a in self.coeffs])
        if self._check(other) is NotImplemented:
            return NotImplemented
        table = self.group.mul_table
        out = [0] * self.group.order
        b_terms = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in b_terms:
                out[row[j]] += a * b
        return RingElement(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are not defined in Z[G]")
        result = RingElement.one(self.group)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def exact_div(self, d: int) -> RingElement:
        """Divide every coefficient by ``d``; raise ArithmeticError if inexact."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"{self!r} is not divisible by {d}")
            out.append(q)
        return RingElement(self.group, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElement.one(self.group) * other
        return (
            isinstance(other, RingElement)
            and other.group == self.group
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.group, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for g, c in zip(self.group.elements, self.coeffs):
            if c:
                terms.append(f"{c}*{g}")
        return "RingElement(" + (" + ".join(terms) or "0") + ")"

    # -- structure maps ---------------------------------------------------

    def augmentation(self) -> int:
        return sum(self.coeffs)

    def translate(self, g: GroupElement) -> RingElement:
        """The product ``g * self`` for a group element ``g``."""
        row = self.group.mul_table[self.group.index_of(g)]
        out = [0] * self.group.order
        for j, c in enumerate(self.coeffs):
            out[row[j]] = c
        return RingElement(self.group, out)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, group: AbelianGroup, text: str) -> RingElement:
        return cls(group, [int(c) for c in json.loads(text)])


def augmentation(a: RingElement) -> int:
    return a.augmentation()


def adams(m: int, a: RingElement) -> RingElement:
    """Adams operation: ``sum a_x x  ->  sum a_x x**m``."""
    if m < 1:
        raise ValueError("Adams operations are indexed by positive integers")
    target = a.group.pow_indices(m)
    out = [0] * a.group.order
    for i, c in enumerate(a.coeffs):
        if c:
            out[target[i]] += c
    return RingElement(a.group, out)


def theta(ell: int, a: RingElement) -> RingElement:
    """Fundamental lambda-operation ``(a**ell - psi^ell(a)) / ell`` for prime ``ell``."""
    if not isprime(ell):
        raise ValueError(f"theta is only defined for prime index, got {ell}")
    return (a**ell - adams(ell, a)).exact_div(ell)


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        result = IntPolynomial([1])
        for _ in range(m):
            result = result * self
        return result

    def divmod(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a divisor with leading coefficient +-1."""
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dd] = c
                for j, dc in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * dc
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_quotient(self, divisor: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod(divisor)
        if r.coeffs:
            raise ArithmeticError(f"{self!r} is not divisible by {divisor!r}")
        return q

    def exact_div(self, d: int) -> IntPolynomial:
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"{self!r} is not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)


ONE_MINUS_T = IntPolynomial([1, -1])


def f_poly(q: int) -> IntPolynomial:
    """``f_q(t) = (1 - t**q) / (1 - t) = 1 + t + ... + t**(q-1)``."""
    return (IntPolynomial([1]) - IntPolynomial([0] * q + [1])).exact_quotient(ONE_MINUS_T)


def g_poly(q: int) -> IntPolynomial:
    """``g_q(t) = ((1 - t)**(q-1) - f_q(t)) / q``."""
    return (ONE_MINUS_T ** (q - 1) - f_poly(q)).exact_div(q)


def h_poly(p: int) -> IntPolynomial:
    """``h(t) = (p - f_p(t)) / (1 - t)``, of degree ``p - 2``."""
    return (IntPolynomial([p]) - f_poly(p)).exact_quotient(ONE_MINUS_T)


def eval_poly(f: IntPolynomial, y: GroupElement, group: AbelianGroup) -> RingElement:
    """``sum_j f_j * y**j`` as an element of Z[G]."""
    return RingElement.from_terms(
        group, ((group.pow(y, j), c) for j, c in enumerate(f.coeffs))
    )


def binomial_row(n: int) -> list[int]:
    """Row ``n`` of Pascal's triangle, built by additions only."""
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row
