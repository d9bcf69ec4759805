"""Characters of a primary abelian group and their equivalence classes.

A character ``rho`` is stored by its exponents ``(a_1, ..., a_r)``, meaning
``rho(g_i) = exp(2 pi i a_i / c_i)`` on the cyclic generators.  Character
values are never evaluated numerically; :func:`value_exponent` returns the
residue ``t mod n`` with ``rho(x) = exp(2 pi i t / n)``.

Two characters are equivalent when they have the same kernel.  The class
representatives returned by :func:`classes` are chosen so that ``psi`` of a
representative (``x -> rho(x**p)``) is exactly the representative of the
parent class.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .groupring import RingElement
from .groups import GroupElement, PrimaryGroup


@dataclass(frozen=True)
class Character:
    group: PrimaryGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.group.rank or not all(
            0 <= a < c for a, c in zip(self.exps, self.group.orders)
        ):
            raise ValueError(f"bad character exponents {self.exps} for {self.group!r}")

    @property
    def order(self) -> int:
        """Order of the character in the dual group."""
        o = 1
        for a, c in zip(self.exps, self.group.orders):
            o = max(o, c // gcd(a, c))
        return o

    @property
    def level(self) -> int:
        k, o = 0, self.order
        while o > 1:
            o //= self.group.p
            k += 1
        return k

    @property
    def is_trivial(self) -> bool:
        return not any(self.exps)

    def value_exponent(self, x: GroupElement) -> int:
        return value_exponent(self, x)

    def kernel(self) -> tuple[GroupElement, ...]:
        return tuple(x for x in self.group.elements if value_exponent(self, x) == 0)

    def power(self, m: int) -> Character:
        return Character(
            self.group, tuple(m * a % c for a, c in zip(self.exps, self.group.orders))
        )


def value_exponent(rho: Character, x: GroupElement) -> int:
    n = rho.group.order
    return sum(a * xi * (n // c) for a, xi, c in zip(rho.exps, x, rho.group.orders)) % n


def psi_of(rho: Character) -> Character:
    """The character ``x -> rho(x**p)``; lowers the level by one."""
    if rho.is_trivial:
        raise ValueError("psi is only defined on characters of positive level")
    return rho.power(rho.group.p)


def _check_same_group(rho: Character, tau: Character):
    if rho.group != tau.group:
        raise ValueError("characters of different groups")


def are_equivalent(rho: Character, tau: Character) -> bool:
    """Same kernel."""
    _check_same_group(rho, tau)
    return set(rho.kernel()) == set(tau.kernel())


def are_power_related(rho: Character, tau: Character) -> bool:
    """Is ``tau = rho**m`` for some ``m`` prime to ``p``?"""
    _check_same_group(rho, tau)
    n, p = rho.group.order, rho.group.p
    return any(rho.power(m) == tau for m in range(1, n + 1) if m % p)


def all_characters(group: PrimaryGroup) -> list[Character]:
    return [
        Character(group, exps)
        for exps in itertools.product(*(range(c) for c in group.orders))
    ]


def kernel_sum(rho: Character) -> RingElement:
    return RingElement.indicator(rho.group, rho.kernel())


@dataclass(frozen=True)
class CharacterClass:
    index: int
    representative: Character
    members: tuple[Character, ...]
    level: int
    y: GroupElement | None
    parent: int | None
    kernel: tuple[GroupElement, ...] = field(repr=False)

    @property
    def is_trivial(self) -> bool:
        return self.level == 0

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "representative": list(self.representative.exps),
            "members": len(self.members),
            "y": None if self.y is None else list(self.y),
            "parent": self.parent,
        }


@lru_cache(maxsize=None)
def classes(group: PrimaryGroup) -> tuple[CharacterClass, ...]:
    """Equivalence classes of characters with psi-compatible representatives.

    Ordered by ``(level, representative exponents)``.
    """
    p, n = group.p, group.order
    by_kernel: dict[frozenset, list[Character]] = {}
    for chi in all_characters(group):
        by_kernel.setdefault(frozenset(chi.kernel()), []).append(chi)

    by_level: dict[int, list[tuple[Character, ...]]] = {}
    for members in by_kernel.values():
        by_level.setdefault(members[0].level, []).append(tuple(members))

    reps: dict[frozenset, Character] = {}
    pending = []
    for k in sorted(by_level):
        for members in by_level[k]:
            if k == 0:
                rep = members[0]
            else:
                parent_rep = reps[frozenset(psi_of(members[0]).kernel())]
                # members already sorted lexicographically by exponents
                admissible = [tau for tau in members if psi_of(tau) == parent_rep]
                if not admissible:
                    raise AssertionError(f"no psi-compatible representative at level {k}")
                rep = admissible[0]
            reps[frozenset(members[0].kernel())] = rep
            pending.append((k, rep, members))

    pending.sort(key=lambda item: (item[0], item[1].exps))
    index_of_rep = {rep.exps: i for i, (_, rep, _) in enumerate(pending)}
    out = []
    for i, (k, rep, members) in enumerate(pending):
        if k == 0:
            y = None
            parent = None
        else:
            y = next(x for x in group.elements if value_exponent(rep, x) == n // p)
            parent = index_of_rep[psi_of(rep).exps]
        out.append(
            CharacterClass(
                index=i,
                representative=rep,
                members=members,
                level=k,
                y=y,
                parent=parent,
                kernel=rep.kernel(),
            )
        )
    return tuple(out)


def children(group: PrimaryGroup, index: int) -> list[CharacterClass]:
    """Classes ``tau`` of positive level with ``psi(tau)`` in class ``index``."""
    return [c for c in classes(group) if c.parent == index]


def classes_report(group: PrimaryGroup) -> str:
    return json.dumps([c.to_dict() for c in classes(group)])
