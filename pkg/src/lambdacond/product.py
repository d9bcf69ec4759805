"""Conductors for ``G1 x G2`` with ``|G1| = p**e`` and ``|G2| = q**f``, ``p != q``.

Z[G1 x G2] is identified with ``R1 (x) R2`` and its normal closure with
``S1 (x) S2``; coordinates are Kronecker products of the factor coordinates,
which matches the element order of :class:`~lambdacond.groups.ProductGroup`.
"""

from __future__ import annotations

import random
from math import gcd

from .conductor import (
    COEFF_BOUND,
    DEFAULT_PRIMES,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    ConductorData,
    augmentation_ideal,
    conductor_from_order,
    conductor_span,
    theta_violations,
)
from .groupring import RingElement, theta
from .groups import PrimaryGroup, ProductGroup
from .lattice import IntegerLattice, kron, kron_mat, kron_vec, rational_inverse, vec_mat
from .report import Report, witness_of

MAX_PRODUCT_ORDER = 36


def product_oracle(d1: ConductorData, d2: ConductorData) -> IntegerLattice:
    """Brute-force conductor of ``S1 (x) S2`` into ``R1 (x) R2``."""
    c1, c2 = d1.closure, d2.closure
    mats1 = [c1.mult_matrix(s) for s in c1.basis()]
    mats2 = [c2.mult_matrix(s) for s in c2.basis()]
    embedding = kron_mat(c1.embedding_matrix, c2.embedding_matrix)
    return conductor_from_order(embedding, (kron_mat(a, b) for a in mats1 for b in mats2))


def _check_s_ideal(d1: ConductorData, d2: ConductorData, lattice: IntegerLattice) -> dict | None:
    c1, c2 = d1.closure, d2.closure
    m = kron_mat(c1.embedding_matrix, c2.embedding_matrix)
    inv, d = rational_inverse(m)
    images = [vec_mat(v, m) for v in lattice.basis]
    for s1 in c1.basis():
        t1 = c1.mult_matrix(s1)
        for s2 in c2.basis():
            t = kron_mat(t1, c2.mult_matrix(s2))
            for v, w in zip(lattice.basis, images):
                u = vec_mat(vec_mat(w, t), inv)
                if any(x % d for x in u) or not lattice.contains([x // d for x in u]):
                    return {"v": [str(a) for a in v]}
    return None


def _direction_probe(group, ideal_base, direction, ell, c):
    """Is ``theta^ell(c a)`` outside ``ideal_base + R c a``?"""
    ca = direction * c
    rows = [ca.translate(g).coeffs for g in group.elements]
    extended = ideal_base.sum(IntegerLattice(group.order, rows))
    image = theta(ell, ca)
    return not extended.contains(image.coeffs), image


def product_conductor(
    g1: PrimaryGroup,
    g2: PrimaryGroup,
    primes=DEFAULT_PRIMES,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    max_order: int = MAX_PRODUCT_ORDER,
) -> tuple[Report, dict]:
    if gcd(g1.order, g2.order) != 1:
        raise ValueError("product factors must have coprime orders")
    if g1.order * g2.order > max_order:
        raise ValueError(f"product order {g1.order * g2.order} exceeds bound {max_order}")
    d1, d2 = conductor_span(g1), conductor_span(g2)
    group = ProductGroup(g1, g2)
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    full1, full2 = IntegerLattice.full(n1), IntegerLattice.full(n2)
    rep = Report()

    I = kron(d1.I, d2.I)
    lemma_rhs = kron(full1, d2.I).intersect(kron(d1.I, full2))
    rep.add(
        "tensor_lemma",
        "I1 (x) I2 = (R1 (x) I2) cap (I1 (x) R2)",
        I == lemma_rhs,
        {"lhs": I.to_dict(), "rhs": lemma_rhs.to_dict()},
    )
    oracle = product_oracle(d1, d2)
    rep.add(
        "product_oracle_equivalence",
        "the conductor of S1 (x) S2 into R1 (x) R2 is I1 (x) I2",
        oracle == I,
        {"oracle": oracle.to_dict()},
    )

    T = kron(d1.I_lambda, d2.I_lambda)
    rep.add(
        "lambda_rank",
        "rank of I1_lambda (x) I2_lambda is the product of the ranks",
        T.rank == d1.I_lambda.rank * d2.I_lambda.rank,
    )
    rep.add("lambda_in_I", "I1_lambda (x) I2_lambda is contained in I", I.contains_lattice(T))
    bad = _check_s_ideal(d1, d2, T)
    rep.add("lambda_s_ideal", "I1_lambda (x) I2_lambda is an ideal of S1 (x) S2", bad is None, bad)

    generators = [
        RingElement(group, kron_vec(a.coeffs, b.coeffs))
        for a in d1.lambda_generators
        for b in d2.lambda_generators
    ]
    violations = theta_violations(group, T, generators, primes, samples, seed)
    rep.add(
        "theta_stability",
        "theta^l(I1_lambda (x) I2_lambda) is contained in I1_lambda (x) I2_lambda",
        not violations,
        violations[:3],
    )

    b1, b2 = d1.generators[0], d2.generators[0]
    top = IntegerLattice(n, [kron_vec(b1.coeffs, b2.coeffs)])
    left = kron(d1.I_lambda, IntegerLattice(n2, [b2.coeffs]))
    right = kron(IntegerLattice(n1, [b1.coeffs]), d2.I_lambda)
    decomposition = top.sum(left).sum(right).sum(T)
    rep.add(
        "decomposition",
        "I = Z b1(x)b1 + I1_lambda(x)b1 + b1(x)I2_lambda + I1_lambda(x)I2_lambda, direct",
        decomposition == I and top.rank + left.rank + right.rank + T.rank == n,
    )
    partial = I.intersect(kron(augmentation_ideal(n1), full2)).intersect(
        kron(full1, augmentation_ideal(n2))
    )
    rep.add(
        "lambda_is_partial_augmentation_kernel",
        "I1_lambda (x) I2_lambda is I cut by both partial augmentations",
        partial == T,
    )

    p, q = g1.p, g2.p
    directions = [("b1(x)b1", RingElement(group, kron_vec(b1.coeffs, b2.coeffs)))]
    for cls, x in zip(d1.classes, d1.generators):
        if cls.level > 0:
            directions.append(
                (f"I1_lambda(x)b1[{cls.index}]", RingElement(group, kron_vec(x.coeffs, b2.coeffs)))
            )
    for cls, x in zip(d2.classes, d2.generators):
        if cls.level > 0:
            directions.append(
                (f"b1(x)I2_lambda[{cls.index}]", RingElement(group, kron_vec(b1.coeffs, x.coeffs)))
            )
    probes = []
    scales = sorted({p**i * q**j for i in range(g1.e * (p - 1) + 1) for j in range(g2.e * (q - 1) + 1)})
    for label, a in directions:
        for c in scales:
            escaped = {}
            for ell in (p, q):
                ok, image = _direction_probe(group, T, a, ell, c)
                escaped[ell] = ok
            rep.add(
                f"instability[{label},c={c}]",
                "theta^p or theta^q of c times the direction escapes I_lambda + R c a",
                any(escaped.values()),
                witness_of(a),
            )
            probes.append({"direction": label, "c": str(c), "escapes": {str(k): v for k, v in escaped.items()}})

    payload = {
        "group": [g1.spec_string(), g2.spec_string()],
        "order": n,
        "I": I.to_dict(),
        "I_lambda": T.to_dict(),
        "ranks": {
            "I1_lambda": d1.I_lambda.rank,
            "I2_lambda": d2.I_lambda.rank,
            "I_lambda": T.rank,
        },
        "probes": probes,
        "checks": [c.to_dict() for c in rep.checks],
        "notes": rep.notes,
    }
    return rep, payload


def random_product_element(group: ProductGroup, rng: random.Random) -> RingElement:
    return RingElement(group, [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(group.order)])
