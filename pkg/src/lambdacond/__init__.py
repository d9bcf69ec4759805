"""Conductors and lambda-conductors of integral group rings of finite abelian groups."""

from .characters import Character, CharacterClass, classes
from .conductor import conductor_oracle, conductor_span, verify_group
from .cyclotomic import CycRing, CyclotomicInteger, NormalClosure, normal_closure
from .groupring import RingElement, adams, theta
from .groups import PrimaryGroup, ProductGroup, make_group, parse_group_spec
from .lattice import IntegerLattice, hnf, kron
from .product import product_conductor

__all__ = [
    "Character",
    "CharacterClass",
    "CycRing",
    "CyclotomicInteger",
    "IntegerLattice",
    "NormalClosure",
    "PrimaryGroup",
    "ProductGroup",
    "RingElement",
    "adams",
    "classes",
    "conductor_oracle",
    "conductor_span",
    "hnf",
    "kron",
    "make_group",
    "normal_closure",
    "parse_group_spec",
    "product_conductor",
    "theta",
    "verify_group",
]
