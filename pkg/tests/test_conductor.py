import dataclasses

import pytest

from lambdacond.characters import classes
from lambdacond.conductor import (
    augmentation_ideal,
    b_rho,
    check_adams_on_generators,
    check_b_algebra,
    check_idempotents,
    check_jacobinski,
    check_s_ideal,
    check_theta_on_generators,
    conductor_oracle,
    conductor_span,
    instability_probe,
    lambda_conductor,
    pullback_summary,
    verify_group,
)
from lambdacond.groupring import RingElement, adams, theta
from lambdacond.groups import PrimaryGroup
from lambdacond.lattice import INFINITE_INDEX, IntegerLattice, hnf

C2 = PrimaryGroup(2, [2])
C3 = PrimaryGroup(3, [3])
C4 = PrimaryGroup(2, [4])


def el(group, *coeffs):
    return RingElement(group, coeffs)


def test_b_rho_examples():
    cls = classes(C2)
    assert b_rho(cls[0]) == el(C2, 1, 1)
    assert b_rho(cls[1]) == el(C2, 1, -1)
    assert b_rho(classes(C4)[1]) == el(C4, 1, -1, 1, -1)
    assert b_rho(classes(C4)[2]) == el(C4, 1, 0, -1, 0)


def test_b_algebra_examples():
    assert el(C2, 1, 1) * el(C2, 1, -1) == RingElement.zero(C2)
    y = RingElement.monomial(C2, (1,))
    assert el(C2, 1, -1) * el(C2, 1, -1) == (1 - y) * el(C2, 1, -1) == el(C2, 2, -2)
    faithful = el(C4, 1, 0, -1, 0)
    assert faithful * faithful == faithful * 2
    y = RingElement.monomial(C4, (2,))
    assert faithful * faithful == (1 - y) * faithful * 2 ** (2 - 2)


def test_conductor_span_examples():
    d = conductor_span(C2)
    assert d.I == hnf([[1, 1], [0, 2]])
    assert d.indices["R/I"] == 2
    assert d.I_lambda == hnf([[1, -1]])
    assert d.I_lambda.rank == 1
    d4 = conductor_span(C4)
    assert d4.I.rank == 4 and d4.I_lambda.rank == 3
    assert d4.indices["R/I_lambda"] == INFINITE_INDEX


@pytest.mark.parametrize("group", [C2, C4, C3, PrimaryGroup(2, [2, 2]), PrimaryGroup(3, [9])],
                         ids=lambda g: g.spec_string())
def test_oracle_matches_span(group):
    d = conductor_span(group)
    assert conductor_oracle(group) == d.I
    assert d.I.contains_lattice(d.I_lambda)


def test_oracle_bound():
    with pytest.raises(ValueError):
        conductor_oracle(PrimaryGroup(2, [4, 4]), max_order=8)


def test_oracle_contains_nS():
    group = PrimaryGroup(2, [2, 4])
    closure = conductor_span(group).closure
    oracle = conductor_oracle(group)
    for s in closure.basis():
        x = closure.pull_back(s * group.order)
        assert x is not None and oracle.contains(x.coeffs)


def test_adams_examples():
    b1, bs = el(C2, 1, 1), el(C2, 1, -1)
    assert adams(2, b1) == b1 + bs
    level1, faithful = el(C4, 1, -1, 1, -1), el(C4, 1, 0, -1, 0)
    assert adams(2, level1) == faithful * 2
    assert adams(2, faithful) == RingElement.zero(C4)


def test_theta_examples():
    b1, bs = el(C2, 1, 1), el(C2, 1, -1)
    assert theta(2, b1) == el(C2, 0, 1)
    # 2 theta = 2 b1 - b1 - b_sigma
    assert theta(2, b1) * 2 == b1 * 2 - b1 - bs
    assert theta(2, bs) == el(C2, 1, -1)
    assert theta(2, bs) == RingElement.monomial(C2, (1,)) * -1 * bs
    level1 = el(C4, 1, -1, 1, -1)
    assert theta(2, level1) == el(C4, 1, -2, 3, -2)
    g = RingElement.monomial(C4, (1,))
    faithful = el(C4, 1, 0, -1, 0)
    assert theta(2, level1) == (1 - g) * level1 - faithful


def test_lambda_examples():
    d = conductor_span(C2)
    assert d.I.intersect(augmentation_ideal(2)) == hnf([[1, -1]])
    assert d.I_lambda.contains(theta(2, el(C2, 1, -1)).coeffs)


def test_instability_examples():
    d = conductor_span(C2)
    assert not d.I.contains(theta(2, el(C2, 1, 1)).coeffs)
    image = theta(2, el(C2, 2, 2))
    assert image == (el(C2, 2, 2) * el(C2, 2, 2) - adams(2, el(C2, 2, 2))).exact_div(2)
    assert not hnf([[1, -1], [2, 2]]).contains(image.coeffs)
    d3 = conductor_span(C3)
    b1 = d3.generators[0]
    assert not d3.I_lambda.sum(IntegerLattice(3, [b1.coeffs])).contains(theta(3, b1).coeffs)
    rep = instability_probe(conductor_span(PrimaryGroup(3, [3, 3])))
    assert rep.passed and len(rep.checks) == 2 * 2 + 1


def test_pullback_examples():
    s = pullback_summary(conductor_span(C2))
    assert s["R/I"] == 2 and s["S/I"] == 4
    s4 = pullback_summary(conductor_span(C4))
    assert s4["S/j(R)"] * s4["R/I"] == s4["S/I"]
    assert s4["R/I_lambda"] == INFINITE_INDEX
    assert pullback_summary(conductor_span(C3))["R/I"] == 3


@pytest.mark.parametrize("group", [C2, C4, C3, PrimaryGroup(2, [2, 4]), PrimaryGroup(5, [5])],
                         ids=lambda g: g.spec_string())
def test_check_suites_pass(group):
    d = conductor_span(group)
    for rep in (
        check_b_algebra(d),
        check_adams_on_generators(d),
        check_theta_on_generators(d),
        check_idempotents(d),
        check_jacobinski(d),
        check_s_ideal(d, d.I, "I"),
        lambda_conductor(d, samples=40)[0],
        instability_probe(d),
    ):
        assert rep.passed, [c.name for c in rep.failures()]


def _perturbed(d, index):
    gens = list(d.generators)
    gens[index] = gens[index] + RingElement.one(d.group)
    return dataclasses.replace(d, generators=tuple(gens))


def test_checks_detect_wrong_generators():
    d = conductor_span(C4)
    bad = _perturbed(d, 2)
    assert not check_b_algebra(bad).passed
    assert not check_adams_on_generators(bad).passed
    assert not check_theta_on_generators(bad).passed


def test_checks_detect_wrong_lattices():
    d = conductor_span(C4)
    assert not check_jacobinski(d, I=d.I.scale(2)).passed
    too_big = dataclasses.replace(d, I_lambda=d.I)
    assert not lambda_conductor(too_big, samples=10)[0].passed
    wrong = d.I_lambda.sum(IntegerLattice(4, [[1, -1, 0, 0]]))
    assert not check_s_ideal(d, wrong, "wrong").passed


def test_generator_fixed_by_group():
    d = conductor_span(PrimaryGroup(3, [3, 3]))
    b1 = d.generators[0]
    assert all(b1.translate(g) == b1 for g in d.group.elements)


def test_verify_group_payload():
    rep, payload = verify_group(C4, samples=20)
    assert rep.passed
    assert payload["group"] == "2:4"
    assert len(payload["classes"]) == 3
    assert payload["I"]["rank"] == 4
    assert payload["indices"]["R/I_lambda"] == "infinite"
    assert all(set(c) >= {"name", "paper_ref", "pass"} for c in payload["checks"])
    assert any("sum e_tau" in n for n in payload["notes"])
