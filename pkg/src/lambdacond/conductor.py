"""Conductor and lambda-conductor of the normal closure S into Z[G], G primary.

The generators ``b_rho`` (one per character class) span the conductor ``I``
as an ideal; dropping ``b_1`` gives the lambda-conductor ``I_lambda``.  Each
closed form is checked here against an independent computation:

* the conductor against a brute-force solve of ``{x in S : x S in j(R)}``,
  and against ``n`` times the trace dual of each cyclotomic component;
* the Adams and theta closed forms against the operations computed from
  their definitions;
* ``I_lambda`` against ``I`` intersected with the augmentation ideal, with
  theta-stability sampled on random lattice elements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from .characters import CharacterClass, are_equivalent, children, kernel_sum
from .cyclotomic import NormalClosure, j_rho, normal_closure, trace_dual
from .groupring import (
    RingElement,
    adams,
    eval_poly,
    f_poly,
    g_poly,
    h_poly,
    theta,
)
from .groups import PrimaryGroup
from .lattice import (
    INFINITE_INDEX,
    IntegerLattice,
    determinant,
    elementary_divisors,
    kernel_mod,
    rational_inverse,
    vec_mat,
)
from .report import Report, witness_of

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)
DEFAULT_SEED = 20240229
DEFAULT_SAMPLES = 200
COEFF_BOUND = 9
MAX_PRIMARY_ORDER = 32


def b_rho(cls: CharacterClass) -> RingElement:
    """Conductor generator: ``(sum of ker rho) * (1 - y_rho)``, or the sum of G at level 0."""
    group = cls.representative.group
    if cls.level == 0:
        return RingElement.indicator(group, group.elements)
    return kernel_sum(cls.representative) * (1 - RingElement.monomial(group, cls.y))


def b_rho_two_sums(cls: CharacterClass) -> RingElement:
    """``sum_{rho x = 1} x - sum_{rho xi = omega} xi`` evaluated directly."""
    rep = cls.representative
    group = rep.group
    if cls.level == 0:
        return RingElement.indicator(group, group.elements)
    omega_exp = group.order // group.p
    terms = []
    for x in group.elements:
        t = rep.value_exponent(x)
        if t == 0:
            terms.append((x, 1))
        elif t == omega_exp:
            terms.append((x, -1))
    return RingElement.from_terms(group, terms)


def augmentation_ideal(n: int) -> IntegerLattice:
    return IntegerLattice(n, [[-1] + [int(j == i) for j in range(1, n)] for i in range(1, n)])


def ideal_span(elements) -> list[list[int]]:
    """Z-spanning rows of the R-ideal generated by ``elements``."""
    rows = []
    for b in elements:
        for g in b.group.elements:
            rows.append(list(b.translate(g).coeffs))
    return rows


def random_lattice_element(lattice: IntegerLattice, rng: random.Random, bound: int = COEFF_BOUND):
    coeffs = [0] * lattice.dimension
    for row in lattice.basis:
        c = rng.randint(-bound, bound)
        if c:
            for j, a in enumerate(row):
                coeffs[j] += c * a
    return coeffs


@dataclass
class ConductorData:
    group: PrimaryGroup
    closure: NormalClosure
    generators: tuple[RingElement, ...]
    I: IntegerLattice
    I_lambda: IntegerLattice
    indices: dict = field(default_factory=dict)

    @property
    def classes(self) -> tuple[CharacterClass, ...]:
        return self.closure.classes

    @property
    def n(self) -> int:
        return self.group.order

    @cached_property
    def lambda_generators(self) -> list[RingElement]:
        return [
            b.translate(g)
            for cls, b in zip(self.classes, self.generators)
            if cls.level > 0
            for g in self.group.elements
        ]

    def to_dict(self) -> dict:
        return {
            "group": self.group.spec_string(),
            "classes": [c.to_dict() for c in self.classes],
            "generators": [witness_of(b) for b in self.generators],
            "I": self.I.to_dict(),
            "I_lambda": self.I_lambda.to_dict(),
            "indices": {k: _index_json(v) for k, v in self.indices.items()},
        }


def _index_json(v):
    if v == INFINITE_INDEX:
        return "infinite"
    return str(v)


def conductor_span(group: PrimaryGroup) -> ConductorData:
    closure = normal_closure(group)
    gens = tuple(b_rho(c) for c in closure.classes)
    n = group.order
    I = IntegerLattice(n, ideal_span(gens))
    I_lambda = IntegerLattice(
        n, ideal_span(b for c, b in zip(closure.classes, gens) if c.level > 0)
    )
    full = IntegerLattice.full(n)
    indices = {
        "R/I": I.index_in(full),
        "S/j(R)": abs(determinant(closure.embedding_matrix)),
        "R/I_lambda": I_lambda.index_in(full),
    }
    return ConductorData(group, closure, gens, I, I_lambda, indices)


def conductor_from_order(embedding: list[list[int]], mult_matrices) -> IntegerLattice:
    """``{x in S : x S in j(R)}`` pulled back to R-coordinates.

    ``embedding`` has the S-coordinates of the R-basis as rows; ``mult_matrices``
    yields the matrix of multiplication by each S-basis element.
    """
    inv, d = rational_inverse(embedding)
    n = len(embedding)
    columns: list[list[int]] = [[] for _ in range(n)]
    for t in mult_matrices:
        # x -> (x t) inv must be integral modulo d
        for i, row in enumerate(t):
            columns[i].extend(x % d for x in vec_mat(row, inv))
    solutions = kernel_mod(columns, d)
    rows = []
    for r in solutions.basis:
        v = vec_mat(r, inv)
        if any(x % d for x in v):
            raise AssertionError("conductor is not contained in the image of R")
        rows.append([x // d for x in v])
    return IntegerLattice(n, rows)


def conductor_oracle(group: PrimaryGroup, max_order: int = MAX_PRIMARY_ORDER) -> IntegerLattice:
    if group.order > max_order:
        raise ValueError(f"group order {group.order} exceeds bound {max_order}")
    closure = normal_closure(group)
    return conductor_from_order(
        closure.embedding_matrix,
        (closure.mult_matrix(s) for s in closure.basis()),
    )


# -- identity checks --------------------------------------------------------


def check_b_algebra(data: ConductorData) -> Report:
    rep = Report()
    group, p, e = data.group, data.group.p, data.group.e
    for cls, b in zip(data.classes, data.generators):
        rep.add(
            f"b_definition[{cls.index}]",
            "b_rho = (sum_{rho x=1} x)(1 - y_rho) = sum_{rho x=1} x - sum_{rho xi=omega} xi",
            b == b_rho_two_sums(cls),
            witness_of(b),
        )
    for c1, b1 in zip(data.classes, data.generators):
        for c2, b2 in zip(data.classes, data.generators):
            if c2.index <= c1.index or are_equivalent(c1.representative, c2.representative):
                continue
            prod = b1 * b2
            rep.add(
                f"b_orthogonal[{c1.index},{c2.index}]",
                "b_rho b_tau = 0 for inequivalent rho, tau",
                not prod,
                witness_of(prod),
            )
    for cls, b in zip(data.classes, data.generators):
        if cls.level == 0:
            rhs = b * p**e
            stmt = "b_1^2 = p^e b_1"
        else:
            y = RingElement.monomial(group, cls.y)
            rhs = (1 - y) * b * p ** (e - cls.level)
            stmt = "b_rho^2 = p^(e-k) (1 - y_rho) b_rho"
        rep.add(f"b_square[{cls.index}]", stmt, b * b == rhs, witness_of(b * b - rhs))
    one = data.generators[0]
    rep.add(
        "b1_fixed",
        "g b_1 = b_1 for every g in G",
        all(one.translate(g) == one for g in group.elements),
    )
    return rep


def check_j_images(data: ConductorData) -> Report:
    rep = Report()
    p, e = data.group.p, data.group.e
    for rho in data.classes:
        ring = data.closure.rings[rho.index]
        for tau, b in zip(data.classes, data.generators):
            img = j_rho(rho, b)
            if rho.index == tau.index:
                if rho.level == 0:
                    expected = ring.integer(p**e)
                    stmt = "j_1(b_1) = p^e"
                else:
                    expected = (1 - ring.omega) * p ** (e - rho.level)
                    stmt = "j_rho(b_rho) = p^(e-k) (1 - omega)"
            else:
                expected = ring.zero()
                stmt = "j_rho(b_tau) = 0 for inequivalent rho, tau"
            rep.add(f"j_image[{rho.index},{tau.index}]", stmt, img == expected, witness_of(img))
    return rep


def check_jacobinski(data: ConductorData, I: IntegerLattice | None = None) -> Report:
    """j(I) equals the direct sum of n times the trace duals, per class."""
    rep = Report()
    I = data.I if I is None else I
    closure, n = data.closure, data.n
    image = I.image(closure.embedding_matrix)
    rows = []
    integral = True
    for cls, ring in zip(data.classes, closure.rings):
        dual = trace_dual(ring).scale(n)
        if dual.denominator != 1:
            integral = False
            continue
        off = closure.offsets[cls.index]
        for r in dual.lattice.basis:
            rows.append([0] * off + list(r) + [0] * (n - off - len(r)))
    rep.add("jacobinski_integral", "n D^-1 is integral in every component", integral)
    expected = IntegerLattice(n, rows)
    rep.add(
        "jacobinski",
        "the conductor is the sum over classes of n D_rho^-1",
        integral and image == expected,
        {"image": image.to_dict(), "expected": expected.to_dict()},
    )
    return rep


def check_s_ideal(data: ConductorData, lattice: IntegerLattice, name: str) -> Report:
    """``lattice`` (in R-coordinates) is stable under multiplication by S."""
    closure = data.closure
    inv, d = rational_inverse(closure.embedding_matrix)
    bad = None
    for s in closure.basis():
        t = closure.mult_matrix(s)
        for v in lattice.basis:
            w = vec_mat(vec_mat(vec_mat(v, closure.embedding_matrix), t), inv)
            if any(x % d for x in w) or not lattice.contains([x // d for x in w]):
                bad = {"s": list(s.coords()), "v": [str(a) for a in v]}
                break
        if bad:
            break
    rep = Report()
    rep.add(f"s_ideal[{name}]", f"{name} is an ideal of S contained in R", bad is None, bad)
    return rep


def check_adams_on_generators(data: ConductorData, primes=DEFAULT_PRIMES) -> Report:
    rep = Report()
    group, p = data.group, data.group.p
    gens = data.generators
    for cls, b in zip(data.classes, gens):
        kids = children(group, cls.index)
        lhs = adams(p, b)
        if cls.level == 0:
            rhs = b + _sum(
                (eval_poly(h_poly(p), c.y, group) * gens[c.index] for c in kids), group
            )
            rep.add(
                "adams_p_b1",
                "psi^p(b_1) = b_1 + sum_{tau != 1, psi tau = 1} h(y_tau) b_tau",
                lhs == rhs,
                witness_of(lhs - rhs),
            )
        else:
            rhs = _sum((gens[c.index] * p for c in kids), group)
            rep.add(
                f"adams_p[{cls.index}]",
                "psi^p(b_rho) = sum_{psi tau = rho} p b_tau",
                lhs == rhs,
                witness_of(lhs - rhs),
            )
            if not kids:
                rep.add(
                    f"adams_p_no_preimage[{cls.index}]",
                    "psi^p b_rho = 0 when no tau has psi tau = rho",
                    not lhs,
                    witness_of(lhs),
                )
        for q in primes:
            if q == p:
                continue
            lhs = adams(q, b)
            if cls.level == 0:
                rhs, stmt = b, "psi^q(b_1) = b_1"
            else:
                rhs = eval_poly(f_poly(q), cls.y, group) * b
                stmt = "psi^q(b_rho) = f_q(y_rho) b_rho"
            rep.add(f"adams_q[{cls.index},{q}]", stmt, lhs == rhs, witness_of(lhs - rhs))
    return rep


def check_theta_on_generators(data: ConductorData, primes=DEFAULT_PRIMES) -> Report:
    """theta closed forms, compared after multiplying both sides by the prime."""
    rep = Report()
    group, p, e = data.group, data.group.p, data.group.e
    gens = data.generators
    one = RingElement.one(group)
    for cls, b in zip(data.classes, gens):
        k = cls.level
        kids = children(group, cls.index)
        lhs = theta(p, b) * p
        if k == 0:
            rhs = b * p ** (e * (p - 1)) - b - _sum(
                (eval_poly(h_poly(p), c.y, group) * gens[c.index] for c in kids), group
            )
            stmt = "theta^p(b_1) = p^(e(p-1)-1) b_1 - p^-1 b_1 - p^-1 sum h(y_tau) b_tau"
        else:
            y = RingElement.monomial(group, cls.y)
            if k < e:
                rhs = (one - y) ** (p - 1) * b * p ** ((e - k) * (p - 1)) - _sum(
                    (gens[c.index] * p for c in kids), group
                )
                stmt = "theta^p(b_rho) = p^((e-k)(p-1)-1) (1-y)^(p-1) b_rho - sum_{psi tau = rho} b_tau  (k < e)"
            else:
                rhs = eval_poly(g_poly(p), cls.y, group) * b * p
                stmt = "theta^p(b_rho) = g_p(y_rho) b_rho  (k = e)"
        rep.add(f"theta_p[{cls.index}]", stmt, lhs == rhs, witness_of(lhs - rhs))

        for q in primes:
            if q == p:
                continue
            lhs = theta(q, b) * q
            if k == 0:
                rhs = b * (p ** (e * (q - 1)) - 1)
                stmt = "theta^q(b_1) = (p^(e(q-1)) - 1)/q b_1"
            else:
                y = RingElement.monomial(group, cls.y)
                rhs = (
                    (one - y) ** (q - 1) * (p ** ((e - k) * (q - 1)) - 1)
                    + eval_poly(g_poly(q), cls.y, group) * q
                ) * b
                stmt = "theta^q(b_rho) = ((p^((e-k)(q-1)) - 1)/q (1-y)^(q-1) + g_q(y)) b_rho"
            rep.add(f"theta_q[{cls.index},{q}]", stmt, lhs == rhs, witness_of(lhs - rhs))

    for cls, b in zip(data.classes, gens):
        if cls.level == e and cls.level > 0:
            y = RingElement.monomial(group, cls.y)
            remark = (one - y) ** p == eval_poly(g_poly(p), cls.y, group) * (one - y) * p
            rep.notes.append(
                f"class {cls.index}: b_rho^p = (1-y)^p = p(1-y)g_p(y) "
                f"{'holds' if remark and b == one - y else 'does not hold'} (informational)"
            )
    return rep


def check_idempotents(data: ConductorData, primes=DEFAULT_PRIMES) -> Report:
    """Adams operations on the idempotents of S."""
    rep = Report()
    closure, p = data.closure, data.group.p
    for cls in data.classes:
        e_rho = closure.idempotent(cls.index)
        kids = children(data.group, cls.index)
        lhs = closure.s_adams(p, e_rho)
        if cls.level == 0:
            rhs = e_rho
            for c in kids:
                rhs = rhs + closure.idempotent(c.index)
            stmt = "psi^p(e_1) = e_1 + sum_{tau != 1, psi tau = 1} e_tau"
        else:
            rhs = closure.zero()
            for c in kids:
                rhs = rhs + closure.idempotent(c.index)
            stmt = "psi^p(e_rho) = sum_{psi tau = rho} e_tau  (rho != 1)"
            printed = e_rho * len(kids)
            if printed != lhs:
                rep.notes.append(
                    f"class {cls.index}: psi^p(e_rho) = sum e_tau, not "
                    f"{len(kids)} e_rho as the summand e_rho would give"
                )
        rep.add(f"idempotent_p[{cls.index}]", stmt, lhs == rhs, lhs.to_json())
        for q in primes:
            if q == p:
                continue
            lhs = closure.s_adams(q, e_rho)
            rep.add(
                f"idempotent_q[{cls.index},{q}]",
                "psi^q(e_rho) = e_rho for q != p",
                lhs == e_rho,
                lhs.to_json(),
            )
    return rep


def check_naturality(
    data: ConductorData, ms=(2, 3, 4, 5, 6), samples: int = 50, seed: int = DEFAULT_SEED
) -> Report:
    """``s_adams(m, embed(a)) == embed(adams(m, a))`` on random ``a``."""
    rep = Report()
    rng = random.Random(seed)
    closure, group = data.closure, data.group
    for m in ms:
        bad = None
        for _ in range(samples):
            a = RingElement(group, [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(group.order)])
            if closure.s_adams(m, closure.embed(a)) != closure.embed(adams(m, a)):
                bad = witness_of(a)
                break
        rep.add(f"naturality[{m}]", "psi^m on S restricts to psi^m on R", bad is None, bad)
    return rep


def lambda_conductor(
    data: ConductorData,
    primes=DEFAULT_PRIMES,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> tuple[Report, dict]:
    rep = Report()
    n = data.n
    meet = data.I.intersect(augmentation_ideal(n))
    rep.add(
        "lambda_equals_I_cap_augmentation",
        "I_lambda is the intersection of the augmentation ideal and I",
        meet == data.I_lambda,
        {"I_cap_aug": meet.to_dict(), "I_lambda": data.I_lambda.to_dict()},
    )
    rep.add("lambda_in_I", "I_lambda is contained in I", data.I.contains_lattice(data.I_lambda))
    rep.add("rank_I", "I has full rank n", data.I.rank == n)
    rep.add("rank_I_lambda", "I_lambda has rank n - 1", data.I_lambda.rank == n - 1)

    violations = theta_violations(
        data.group, data.I_lambda, data.lambda_generators, primes, samples, seed
    )
    rep.add(
        "theta_stability",
        "theta^l(I_lambda) is contained in I_lambda for every prime l",
        not violations,
        violations[:3],
    )
    coords = [data.I.coordinates(r) for r in data.I_lambda.basis]
    info = {
        "rank": data.I_lambda.rank,
        "divisors_in_I": elementary_divisors(IntegerLattice(data.I.rank, coords)),
        "samples": samples,
        "primes": list(primes),
    }
    return rep, info


def theta_violations(group, lattice, generators, primes, samples, seed) -> list[dict]:
    rng = random.Random(seed)
    elements = list(generators) + [
        RingElement(group, random_lattice_element(lattice, rng)) for _ in range(samples)
    ]
    bad = []
    for x in elements:
        for ell in primes:
            if not lattice.contains(theta(ell, x).coeffs):
                bad.append({"ell": ell, "x": witness_of(x)})
    return bad


def instability_probe(data: ConductorData) -> Report:
    """``theta^p(c b_1)`` escapes ``I_lambda + Z c b_1`` for ``c = p^m``, ``0 <= m <= e(p-1)``."""
    rep = Report()
    p, e = data.group.p, data.group.e
    b1 = data.generators[0]
    for m in range(e * (p - 1) + 1):
        c = p**m
        cb1 = b1 * c
        extended = data.I_lambda.sum(IntegerLattice(data.n, [cb1.coeffs]))
        image = theta(p, cb1)
        rep.add(
            f"instability[{m}]",
            "theta^p(c b_1) is not in I_lambda + Z c b_1",
            not extended.contains(image.coeffs),
            witness_of(image),
        )
    return rep


def pullback_summary(data: ConductorData) -> dict:
    closure = data.closure
    full = IntegerLattice.full(data.n)
    jI = data.I.image(closure.embedding_matrix)
    r_mod_i = data.I.index_in(full)
    s_mod_jr = abs(determinant(closure.embedding_matrix))
    s_mod_i = jI.index_in(full)
    return {
        "R/I": r_mod_i,
        "S/j(R)": s_mod_jr,
        "S/I": s_mod_i,
        "R/I divisors": [d for d in elementary_divisors(data.I) if d != 1],
        "S/I divisors": [d for d in elementary_divisors(jI) if d != 1],
        "R/I_lambda": data.I_lambda.index_in(full),
        "R/I_lambda torsion": [d for d in elementary_divisors(data.I_lambda) if d != 1],
        "multiplicative": s_mod_jr * r_mod_i == s_mod_i,
    }


def summary_json(summary: dict) -> dict:
    out = {}
    for k, v in summary.items():
        if isinstance(v, bool):
            out[k] = v
        elif isinstance(v, list):
            out[k] = [str(d) for d in v]
        else:
            out[k] = _index_json(v)
    return out


def _sum(elements, group=None) -> RingElement:
    elements = list(elements)
    if not elements:
        return RingElement.zero(group)
    total = elements[0]
    for x in elements[1:]:
        total = total + x
    return total


def verify_group(
    group: PrimaryGroup,
    primes=DEFAULT_PRIMES,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    max_order: int = MAX_PRIMARY_ORDER,
) -> tuple[Report, dict]:
    """Run every check on one primary group; returns the report and the JSON payload."""
    data = conductor_span(group)
    rep = Report()
    oracle = conductor_oracle(group, max_order)
    rep.add(
        "oracle_equivalence",
        "the b_rho generate the conductor ideal I",
        oracle == data.I,
        {"oracle": oracle.to_dict()},
    )
    rep.add(
        "nS_in_conductor",
        "nS is contained in the conductor",
        oracle.contains_lattice(_nS_in_R(data)),
    )
    rep.extend(check_jacobinski(data))
    rep.extend(check_s_ideal(data, data.I, "I"))
    rep.extend(check_s_ideal(data, data.I_lambda, "I_lambda"))
    rep.extend(check_b_algebra(data))
    rep.extend(check_j_images(data))
    rep.extend(check_adams_on_generators(data, primes))
    rep.extend(check_theta_on_generators(data, primes))
    rep.extend(check_idempotents(data, primes))
    rep.extend(check_naturality(data, seed=seed))
    lam_rep, lam_info = lambda_conductor(data, primes, samples, seed)
    rep.extend(lam_rep)
    rep.extend(instability_probe(data))
    summary = pullback_summary(data)
    rep.add("index_multiplicative", "|S/j(R)| |R/I| = |S/I|", summary["multiplicative"])
    payload = data.to_dict()
    payload["pullback"] = summary_json(summary)
    payload["lambda"] = lam_info
    payload["checks"] = [c.to_dict() for c in rep.checks]
    payload["notes"] = rep.notes
    return rep, payload


def _nS_in_R(data: ConductorData) -> IntegerLattice:
    """n S pulled back to R-coordinates."""
    inv, d = rational_inverse(data.closure.embedding_matrix)
    rows = []
    for i in range(data.n):
        v = [x * data.n for x in inv[i]]
        if any(x % d for x in v):
            raise AssertionError("n S is not contained in R")
        rows.append([x // d for x in v])
    return IntegerLattice(data.n, rows)
