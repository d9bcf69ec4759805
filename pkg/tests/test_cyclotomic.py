import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lambdacond.characters import classes
from lambdacond.conductor import b_rho
from lambdacond.cyclotomic import (
    CycRing,
    CyclotomicInteger,
    FractionalLattice,
    cyc_add,
    cyc_mul,
    embed_R_in_S,
    embed_up,
    galois,
    j_rho,
    normal_closure,
    principal_fractional,
    s_adams,
    trace_dual,
)
from lambdacond.groupring import RingElement, adams
from lambdacond.groups import PrimaryGroup, primary_groups_up_to
from lambdacond.lattice import determinant

RINGS = [CycRing(p, k) for p, k in [(2, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]]
GROUPS_27 = primary_groups_up_to(27)
C2 = PrimaryGroup(2, [2])


def numeric(a: CyclotomicInteger) -> complex:
    w = cmath.exp(2j * cmath.pi / a.ring.root_order)
    return sum(c * w**i for i, c in enumerate(a.coeffs))


@st.composite
def cyc_elements(draw, ring=None):
    if ring is None:
        ring = draw(st.sampled_from(RINGS))
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=ring.degree, max_size=ring.degree))
    return CyclotomicInteger(ring, tuple(coeffs))


@st.composite
def cyc_pairs(draw):
    ring = draw(st.sampled_from(RINGS))
    return draw(cyc_elements(ring)), draw(cyc_elements(ring))


def test_cyc_mul_examples():
    zi = CycRing(2, 2)
    w = zi.root_power(1)
    assert (1 + w) * (1 - w) == zi.integer(2)
    z3 = CycRing(3, 1)
    w3 = z3.root_power(1)
    assert w3 * w3 == CyclotomicInteger(z3, (-1, -1))
    a = CyclotomicInteger(z3, (4, -7))
    assert a * z3.one() == a
    with pytest.raises(ValueError):
        zi.one() * z3.one()


@given(cyc_pairs())
def test_arithmetic_matches_complex_evaluation(ab):
    a, b = ab
    assert abs(numeric(cyc_mul(a, b)) - numeric(a) * numeric(b)) < 1e-7
    assert abs(numeric(cyc_add(a, b)) - numeric(a) - numeric(b)) < 1e-9


def test_cyclotomic_relation():
    for ring in RINGS[1:]:
        assert ring.root_power(ring.root_order) == ring.one()
        total = ring.zero()
        for j in range(ring.p):
            total = total + ring.root_power(j * ring.root_order // ring.p)
        assert total == ring.zero()


def test_embed_up_examples():
    assert embed_up(CycRing(2, 0).integer(3)) == CycRing(2, 1).integer(3)
    assert embed_up(CycRing(2, 1).integer(-1)) == CycRing(2, 2).integer(-1)
    image = embed_up(CycRing(3, 1).root_power(1))
    assert image.coeffs == (0, 0, 0, 1, 0, 0)


@given(cyc_pairs())
def test_embed_up_is_ring_homomorphism(ab):
    a, b = ab
    assert embed_up(a * b) == embed_up(a) * embed_up(b)
    assert abs(numeric(embed_up(a)) - numeric(a)) < 1e-7


def test_galois_examples():
    zi = CycRing(2, 2)
    assert galois(3, zi.root_power(1)) == -zi.root_power(1)
    a = CyclotomicInteger(zi, (2, 5))
    assert galois(1, a) == a
    z3 = CycRing(3, 1)
    assert galois(2, z3.root_power(1)) == CyclotomicInteger(z3, (-1, -1))
    with pytest.raises(ValueError):
        galois(3, z3.root_power(1))


@given(cyc_pairs(), st.sampled_from([1, 3, 7, 11, 13]))
def test_galois_is_ring_automorphism(ab, m):
    a, b = ab
    if m % a.ring.p == 0:
        return
    assert galois(m, a * b) == galois(m, a) * galois(m, b)
    w = cmath.exp(2j * cmath.pi * m / a.ring.root_order)
    expected = sum(c * w**i for i, c in enumerate(a.coeffs))
    assert abs(numeric(galois(m, a)) - expected) < 1e-7


def test_trace_matches_conjugate_sum():
    for ring in RINGS:
        n = ring.root_order
        units = [m for m in range(1, n + 1) if m % ring.p] if ring.k else [1]
        for j in range(n):
            w = ring.root_power(j)
            total = sum(numeric(galois(m, w)) if ring.k else numeric(w) for m in units)
            assert abs(total - w.trace()) < 1e-9
            assert ring.trace_of_power(j) == w.trace()


def test_trace_dual_examples():
    assert trace_dual(CycRing(2, 0)) == FractionalLattice.make([[1]], 1, 1)
    zi = CycRing(2, 2)
    assert zi.gram_matrix() == [[2, 0], [0, -2]]
    dual = trace_dual(zi)
    assert dual.denominator == 2 and dual.lattice.basis == ((1, 0), (0, 1))
    assert principal_fractional(zi.one() - zi.omega, 4) == dual
    z3 = CycRing(3, 1)
    # Tr(w^2) = -1, so the trace-form Gram matrix is not the Hermitian one
    assert z3.gram_matrix() == [[2, -1], [-1, -1]]
    assert trace_dual(z3) == principal_fractional(z3.one() - z3.omega, 3)


@pytest.mark.parametrize("p, k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_trace_dual_is_generated_by_inverse_different(p, k):
    ring = CycRing(p, k)
    dual = trace_dual(ring)
    assert dual == principal_fractional(ring.one() - ring.omega, p**k)
    # every dual basis vector pairs integrally with Z[w], and the index is |disc|
    for row in dual.lattice.basis:
        for j in range(ring.degree):
            x = CyclotomicInteger(ring, row) * ring.root_power(j)
            assert Fraction(x.trace(), dual.denominator).denominator == 1
    disc = abs(determinant(ring.gram_matrix()))
    covolume = Fraction(dual.lattice.determinant(), dual.denominator**ring.degree)
    assert covolume == Fraction(1, disc)


def test_j_rho_examples():
    c4 = PrimaryGroup(2, [4])
    cls = classes(c4)
    faithful = cls[2]
    img = j_rho(faithful, RingElement(c4, [1, 0, -1, 0]))
    assert img == CycRing(2, 2).integer(2)
    assert j_rho(cls[0], RingElement(c4, [1, 1, 1, 1])) == CycRing(2, 0).integer(4)
    with pytest.raises(ValueError):
        j_rho(faithful, RingElement.one(C2))


@pytest.mark.parametrize("group", GROUPS_27[:14], ids=lambda g: g.spec_string())
def test_j_rho_matches_complex_character(group):
    rng = random.Random(7)
    n = group.order
    for cls in classes(group):
        a = RingElement(group, [rng.randint(-5, 5) for _ in range(n)])
        b = RingElement(group, [rng.randint(-5, 5) for _ in range(n)])
        expected = sum(
            c * cmath.exp(2j * cmath.pi * cls.representative.value_exponent(x) / n)
            for x, c in zip(group.elements, a.coeffs)
        )
        assert abs(numeric(j_rho(cls, a)) - expected) < 1e-7
        assert j_rho(cls, a * b) == j_rho(cls, a) * j_rho(cls, b)


def test_embed_examples():
    one = RingElement.one(C2)
    g = RingElement.monomial(C2, (1,))
    assert embed_R_in_S(one).coords() == (1, 1)
    assert embed_R_in_S(g).coords() == (1, -1)
    assert embed_R_in_S(one - g).coords() == (0, 2)


@pytest.mark.parametrize("group", GROUPS_27, ids=lambda g: g.spec_string())
def test_embedding_is_injective(group):
    closure = normal_closure(group)
    assert closure.rank == group.order
    assert determinant(closure.embedding_matrix) != 0


def test_s_adams_example():
    s = embed_R_in_S(RingElement(C2, [1, 1]))
    assert s_adams(2, s, C2).coords() == (2, 2)


@pytest.mark.parametrize("group", GROUPS_27[:20], ids=lambda g: g.spec_string())
def test_s_adams_naturality(group):
    closure = normal_closure(group)
    rng = random.Random(11)
    for m in (2, 3, 4, 5, 6):
        for _ in range(10):
            a = RingElement(group, [rng.randint(-9, 9) for _ in range(group.order)])
            assert closure.s_adams(m, closure.embed(a)) == closure.embed(adams(m, a))


def test_pull_back():
    group = PrimaryGroup(3, [9])
    closure = normal_closure(group)
    a = RingElement(group, range(9))
    assert closure.pull_back(closure.embed(a)) == a
    assert closure.pull_back(closure.idempotent(0)) is None


def test_idempotents_are_orthogonal():
    closure = normal_closure(PrimaryGroup(2, [2, 4]))
    total = closure.zero()
    for i in range(len(closure.classes)):
        e = closure.idempotent(i)
        assert e * e == e
        total = total + e
    assert total == closure.one()


def test_b_images_under_j():
    group = PrimaryGroup(2, [4])
    cls = classes(group)
    images = [[j_rho(r, b_rho(t)) for t in cls] for r in cls]
    assert images[2][2] == CycRing(2, 2).integer(2)
    assert not images[1][2] and not images[2][1]
