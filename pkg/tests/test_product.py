import pytest

from lambdacond.conductor import conductor_span
from lambdacond.groupring import RingElement, theta
from lambdacond.groups import PrimaryGroup, ProductGroup
from lambdacond.lattice import IntegerLattice, kron, kron_vec
from lambdacond.product import product_conductor, product_oracle

C2, C3, C4, C9 = (PrimaryGroup(2, [2]), PrimaryGroup(3, [3]), PrimaryGroup(2, [4]), PrimaryGroup(3, [9]))


def test_c6_oracle():
    d1, d2 = conductor_span(C2), conductor_span(C3)
    assert product_oracle(d1, d2) == kron(d1.I, d2.I)


def test_c6_lambda_rank():
    rep, payload = product_conductor(C2, C3, samples=30)
    assert rep.passed
    assert payload["ranks"] == {"I1_lambda": 1, "I2_lambda": 2, "I_lambda": 2}


@pytest.mark.parametrize("g1, g2", [(C4, C3), (C2, C9), (C3, C2)], ids=["C4xC3", "C2xC9", "C3xC2"])
def test_product_suite(g1, g2):
    rep, _ = product_conductor(g1, g2, samples=30)
    assert rep.passed, [c.name for c in rep.failures()]


def test_product_errors():
    with pytest.raises(ValueError):
        product_conductor(C2, C4)
    with pytest.raises(ValueError):
        product_conductor(C4, C9, max_order=20)


def test_product_group_ring_is_tensor_product():
    group = ProductGroup(C2, C3)
    a = RingElement(C2, [1, -2])
    b = RingElement(C3, [3, 0, 1])
    c = RingElement(C2, [0, 5])
    d = RingElement(C3, [1, 1, -1])
    ab = RingElement(group, kron_vec(a.coeffs, b.coeffs))
    cd = RingElement(group, kron_vec(c.coeffs, d.coeffs))
    assert ab * cd == RingElement(group, kron_vec((a * c).coeffs, (b * d).coeffs))


def test_full_conductor_not_theta_stable():
    d1, d2 = conductor_span(C2), conductor_span(C3)
    I = kron(d1.I, d2.I)
    group = ProductGroup(C2, C3)
    top = RingElement(group, kron_vec(d1.generators[0].coeffs, d2.generators[0].coeffs))
    assert not I.contains(theta(2, top).coeffs) or not I.contains(theta(3, top).coeffs)


def test_directions_escape_by_the_other_prime():
    _, payload = product_conductor(C2, C3, samples=0)
    for probe in payload["probes"]:
        if probe["direction"].startswith("I1_lambda"):
            assert probe["escapes"]["3"]
        elif probe["direction"].startswith("b1(x)I2"):
            assert probe["escapes"]["2"]
