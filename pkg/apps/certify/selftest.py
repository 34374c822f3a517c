"""
Oracle-equivalence and invariant suites run by the ``selftest`` command.

Every suite takes a seeded ``random.Random`` and a sample count, and records
each comparison it makes; a suite passes when no comparison failed.
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from sympy.ntheory import primefactors

from apps.building.actions import act, nu_det
from apps.building.ball import ball
from apps.building.lattices import (
    canonicalize,
    neighbor_count,
    neighbors,
    standard_vertex,
    subspaces,
)
from apps.core.exceptions import NonIntegralCoefficient
from apps.core.serializers import GeneratorSetSerializer, render_json, validate_input
from apps.exactnum.fields import QQ, prime_field, rational_function_field
from apps.exactnum.scalars import RationalFunction
from apps.exactnum.valuations import (
    Valuation,
    in_valuation_ring,
    relevant_valuations,
    t_adic,
    valuate,
)
from apps.grouporder.closure import group_closure
from apps.grouporder.orders import (
    brute_force_order,
    least_power_at_least,
    order_char_p,
    order_rational,
)
from apps.kronecker.cyclotomic import cyclotomic, cyclotomic_factorization, cyclotomic_table
from apps.kronecker.enumeration import PRODUCTS_MAX_DEGREE, compare_methods, enumerate_by_products
from apps.linalg.charpoly import char_poly, evaluate_polynomial
from apps.linalg.matrices import SquareMatrix, determinant, mat_inverse
from apps.linalg.polynomials import MonicIntPoly, product, to_int_poly
from apps.linalg.sampling import random_invertible, random_matrix, random_p_integral, random_scalar

from .pipeline import Verdict, replay_witness
from .services import certify_request

logger = logging.getLogger(__name__)

KRONECKER_COUNTS = {1: 2, 2: 6, 3: 10}
NEIGHBOR_COUNTS = {(2, 2): 3, (5, 2): 6, (2, 3): 14}
BALL_SIZES = {(2, 2, 2): 10, (3, 2, 2): 17}
ADJACENCY_CASES = [(2, 2), (3, 2), (2, 3), (3, 3)]


def _generators(field_, *matrices):
    return {"field": field_, "dim": len(matrices[0]), "generators": [list(m) for m in matrices]}


# (name, generator-set document, verdict, group order)
CERTIFY_CORPUS = [
    ("quarter turn", _generators("Q", [["0", "-1"], ["1", "0"]]), "finite", 4),
    ("sixth turn", _generators("Q", [["0", "1"], ["-1", "1"]]), "finite", 6),
    ("minus identity", _generators("Q", [["-1", "0"], ["0", "-1"]]), "finite", 2),
    (
        "Klein four",
        _generators("Q", [["-1", "0"], ["0", "1"]], [["1", "0"], ["0", "-1"]]),
        "finite",
        4,
    ),
    (
        "dihedral of order 8",
        _generators("Q", [["0", "-1"], ["1", "0"]], [["1", "0"], ["0", "-1"]]),
        "finite",
        8,
    ),
    (
        "3-cycle",
        _generators("Q", [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]]),
        "finite",
        3,
    ),
    (
        "signed 3x3 permutations",
        _generators(
            "Q",
            [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]],
            [["0", "0", "1"], ["1", "0", "0"], ["0", "1", "0"]],
            [["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        ),
        "finite",
        48,
    ),
    (
        "companion of Phi_5",
        _generators(
            "Q",
            [["0", "0", "0", "-1"], ["1", "0", "0", "-1"], ["0", "1", "0", "-1"],
             ["0", "0", "1", "-1"]],
        ),
        "finite",
        5,
    ),
    ("shear", _generators("Q", [["1", "1"], ["0", "1"]]), "infinite", None),
    ("diag(2, 1/2)", _generators("Q", [["2", "0"], ["0", "1/2"]]), "infinite", None),
    ("diag(2, 1)", _generators("Q", [["2", "0"], ["0", "1"]]), "infinite", None),
    ("hyperbolic", _generators("Q", [["2", "1"], ["1", "1"]]), "infinite", None),
    (
        "two reflections",
        _generators("Q", [["-1", "0"], ["0", "1"]], [["-1", "1"], ["0", "1"]]),
        "infinite",
        None,
    ),
    (
        "cube root of 1/2",
        _generators("Q", [["0", "0", "1/2"], ["1", "0", "0"], ["0", "1", "0"]]),
        "infinite",
        None,
    ),
    (
        "SL_2(F_3)",
        _generators(["Fp", 3], [["1", "1"], ["0", "1"]], [["1", "0"], ["1", "1"]]),
        "finite",
        24,
    ),
    ("shear over F_2", _generators(["Fp", 2], [["1", "1"], ["0", "1"]]), "finite", 2),
    ("diag(2, 1) over F_5", _generators(["Fp", 5], [["2", "0"], ["0", "1"]]), "finite", 4),
    (
        "companion of t^3 + t + 1 over F_2",
        _generators(["Fp", 2], [["0", "0", "1"], ["1", "0", "1"], ["0", "1", "0"]]),
        "finite",
        7,
    ),
    (
        "GL_2(F_2)",
        _generators(["Fp", 2], [["1", "1"], ["0", "1"]], [["0", "1"], ["1", "0"]]),
        "finite",
        6,
    ),
    (
        "diag(t, 1/t) over F_2(t)",
        _generators(["Fp(t)", 2], [["t", "0"], ["0", "(1)/(t)"]]),
        "infinite",
        None,
    ),
    ("diag(t, 1) over F_2(t)", _generators(["Fp(t)", 2], [["t", "0"], ["0", "1"]]), "infinite", None),
    ("t-shear over F_2(t)", _generators(["Fp(t)", 2], [["1", "t"], ["0", "1"]]), "finite", 2),
    (
        "t-shears over F_3(t)",
        _generators(["Fp(t)", 3], [["1", "t"], ["0", "1"]], [["1", "0"], ["1", "1"]]),
        "infinite",
        None,
    ),
    (
        "block rotation over Q",
        _generators(
            "Q",
            [["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "-1"],
             ["0", "0", "1", "0"]],
        ),
        "finite",
        4,
    ),
]


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, message):
        self.checks += 1
        if not ok:
            self.failures.append(message)
            logger.warning("%s: %s", self.name, message)

    def as_dict(self):
        return {"passed": self.passed, "checks": self.checks, "failures": self.failures}


def jordan_block(field_, d, eigenvalue=1):
    rows = [
        [eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(d)]
        for i in range(d)
    ]
    return SquareMatrix.from_rows(field_, rows)


def signed_permutation(d, rng):
    perm = list(range(d))
    rng.shuffle(perm)
    rows = [[0] * d for _ in range(d)]
    for i, j in enumerate(perm):
        rows[i][j] = rng.choice((1, -1))
    return SquareMatrix.from_rows(QQ, rows)


def _random_cyclotomic_product(rng, max_degree):
    """
    A random multiset of cyclotomic indices of total degree in 1..max_degree.
    """
    indices = cyclotomic_table(max_degree)
    chosen = Counter()
    remaining = max_degree
    while remaining:
        options = [m for m, phi in indices.items() if phi.degree <= remaining]
        m = rng.choice(options)
        chosen[m] += 1
        remaining -= indices[m].degree
        if rng.random() < 0.3:
            break
    return sorted(chosen.items())


def kronecker_suite(rng, samples, max_degree=5):
    """
    Both enumerations agree and every member reads the same reversed up to
    sign; members obey the binomial coefficient bound; cyclotomic
    polynomials divide X^m - 1 and factor back into the chosen multiset.
    """
    result = SuiteResult("kronecker")
    for d in range(1, max_degree + 1):
        by_products, by_bounds, agree = compare_methods(d)
        result.check(agree, f"degree {d}: products and bounds differ")
        if d in KRONECKER_COUNTS:
            result.check(
                by_bounds.count == KRONECKER_COUNTS[d],
                f"degree {d}: {by_bounds.count} polynomials, expected {KRONECKER_COUNTS[d]}",
            )
        for poly in by_bounds.polynomials:
            result.check(poly.is_self_reciprocal(), f"{poly} is not self-reciprocal")
    for d in range(1, PRODUCTS_MAX_DEGREE + 1):
        for poly in enumerate_by_products(d).polynomials:
            result.check(
                all(abs(c) <= comb(d, j) for j, c in enumerate(poly.coeffs)),
                f"{poly} exceeds the binomial coefficient bound",
            )
    for m, phi in cyclotomic_table().items():
        _, remainder = MonicIntPoly.from_dense([-1] + [0] * (m - 1) + [1]).divmod(phi)
        result.check(not any(remainder), f"Phi_{m} does not divide X^{m} - 1")
    for _ in range(max(1, samples // 2)):
        chosen = _random_cyclotomic_product(rng, PRODUCTS_MAX_DEGREE)
        poly = product(cyclotomic(m) for m, k in chosen for _ in range(k))
        found = cyclotomic_factorization(poly)
        result.check(found == chosen, f"{poly} factors as {found}, built from {chosen}")
    return result


def order_suite(rng, samples, dims=(2, 3, 4), primes=(2, 3, 5), cap=None):
    """
    Eigenvalue-lcm orders against the brute-force power search over F_p, and
    cyclotomic orders of signed permutations over Q.
    """
    result = SuiteResult("order")
    for d in dims:
        for p in primes:
            field_ = prime_field(p)
            bound = cap or 10 * p**d
            for _ in range(samples):
                a = random_invertible(field_, d, rng)
                fast = order_char_p(a).order
                slow = brute_force_order(a, bound)
                result.check(fast == slow, f"F_{p}, d={d}: order {fast} vs brute force {slow}")
        for _ in range(max(1, samples // 10)):
            a = signed_permutation(d, rng)
            fast = order_rational(a).order
            slow = brute_force_order(a, 100)
            result.check(fast == slow, f"Q, d={d}: order {fast} vs brute force {slow}")
    return result


def unipotent_suite(rng, samples, max_dim=6, primes=(2, 3, 5)):
    """
    A Jordan block J_d(1) over F_p has order the least p-power >= d, and
    so does every conjugate.
    """
    result = SuiteResult("unipotent")
    conjugates = max(1, samples // 50)
    for p in primes:
        field_ = prime_field(p)
        for d in range(1, max_dim + 1):
            expected = least_power_at_least(p, d)
            j = jordan_block(field_, d)
            found = order_char_p(j)
            result.check(found.order == expected, f"J_{d}(1) over F_{p}: {found.order}")
            result.check(found.eigenvalue_orders == [1], f"J_{d}(1) over F_{p}: eigenvalue orders")
            for _ in range(conjugates):
                g = random_invertible(field_, d, rng)
                order = order_char_p(g @ j @ mat_inverse(g)).order
                result.check(order == expected, f"conjugate of J_{d}(1) over F_{p}: {order}")
    return result


def closure_suite(rng, samples):
    result = SuiteResult("closure")
    f3 = prime_field(3)
    cases = [
        ("rotation by a quarter turn", [SquareMatrix.from_rows(QQ, [[0, -1], [1, 0]])], 4),
        (
            "SL_2(F_3)",
            [
                SquareMatrix.from_rows(f3, [[1, 1], [0, 1]]),
                SquareMatrix.from_rows(f3, [[1, 0], [1, 1]]),
            ],
            24,
        ),
        (
            "signed 3x3 permutations",
            [
                SquareMatrix.from_rows(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
                SquareMatrix.from_rows(QQ, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
                SquareMatrix.from_rows(QQ, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            ],
            48,
        ),
    ]
    for name, gens, expected in cases:
        closure = group_closure(gens, 1000, with_edges=False)
        result.check(closure.order == expected, f"{name}: {closure.order}, expected {expected}")
        if closure.is_finite:
            result.check(
                all(element.power(closure.order).is_identity() for element in closure.elements),
                f"{name}: some element^{closure.order} is not the identity",
            )
    shear = group_closure([SquareMatrix.from_rows(QQ, [[1, 1], [0, 1]])], 500, with_edges=False)
    result.check(not shear.is_finite, "unipotent shear over Q closed below the cap")
    return result


def building_suite(rng, samples):
    result = SuiteResult("building")
    for (p, d), expected in NEIGHBOR_COUNTS.items():
        brute = sum(1 for _ in subspaces(d, p))
        listed = len(set(neighbors(standard_vertex(p, d))))
        result.check(
            neighbor_count(p, d) == brute == listed == expected,
            f"p={p}, d={d}: neighbors {neighbor_count(p, d)}/{brute}/{listed}, expected {expected}",
        )
    for (p, d, r), expected in BALL_SIZES.items():
        b = ball(standard_vertex(p, d), r)
        result.check(len(b.vertices) == expected, f"ball p={p} d={d} r={r}: {len(b.vertices)}")
        result.check(len(b.edges) == len(b.vertices) - 1, f"ball p={p} d={d} r={r} has a cycle")
        types = b.types
        result.check(
            all(types[i] != types[j] for i, j in b.edges),
            f"ball p={p} d={d} r={r}: an edge joins vertices of equal type",
        )
    for p, d in ADJACENCY_CASES:
        for u in ball(standard_vertex(p, d), 1).vertices:
            for w in neighbors(u):
                result.check(
                    u in set(neighbors(w)),
                    f"p={p}, d={d}: {w} is adjacent to {u} but not conversely",
                )
    return result


def _invariant_fields():
    return [QQ, prime_field(3), prime_field(5), rational_function_field(2)]


def _valuation_cases():
    """
    One valuation of each kind with a uniformizer for it.
    """
    f2t, f3t = rational_function_field(2), rational_function_field(3)
    cases = [(Valuation.p_adic(q), Fraction(q)) for q in (2, 3, 5)]
    cases.append((t_adic(2), f2t.variable()))
    cases.append((Valuation.pi_adic(f3t, (1, 0, 1)), RationalFunction.from_parts((1, 0, 1), (1,), 3)))
    cases.append((Valuation.degree(f2t), f2t.variable().inverse()))
    return cases


def _random_valued(v, uniformizer, rng):
    return random_scalar(v.field, rng) * uniformizer ** rng.randint(-2, 2)


def _poly_mul(f, g, zero):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def _block_upper(field_, a, b, c):
    """
    [[a, c], [0, b]] from 2x2 blocks.
    """
    zero = field_.zero()
    rows = [list(a.rows[i]) + list(c.rows[i]) for i in range(2)]
    rows += [[zero, zero] + list(b.rows[i]) for i in range(2)]
    return SquareMatrix.from_rows(field_, rows)


def _integrality_cross_check(result, rng, samples):
    for _ in range(samples):
        x = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
        try:
            to_int_poly([-x, 1])
            integral = True
        except NonIntegralCoefficient:
            integral = False
        in_rings = all(
            in_valuation_ring(Valuation.p_adic(q), x) for q in primefactors(x.denominator)
        )
        relevant = all(in_valuation_ring(v, x) for v in relevant_valuations([x]))
        result.check(
            integral == (x.denominator == 1) == in_rings == relevant,
            f"integrality of {x}: over Z {integral}, valuation rings {in_rings}/{relevant}",
        )


def invariants_suite(rng, samples, max_dim=4):
    """
    Cayley-Hamilton, the trace and constant coefficients of char_poly, the
    block-triangular product rule, multiplicativity of det and of every
    valuation kind, the ultrametric law, integrality by valuations,
    canonical-form idempotence, homothety invariance, the action law and
    equivariance of adjacency on lattice vertices.
    """
    result = SuiteResult("invariants")
    per_case = max(1, samples // 20)
    pairs = max(1, samples * 5 // 2)
    for field_ in _invariant_fields():
        for d in range(1, max_dim + 1):
            for _ in range(per_case):
                a = random_invertible(field_, d, rng)
                b = random_invertible(field_, d, rng)
                result.check(
                    evaluate_polynomial(char_poly(a), a).is_zero(),
                    f"Cayley-Hamilton over {field_}, d={d}",
                )
                result.check(
                    determinant(a @ b) == determinant(a) * determinant(b),
                    f"det(AB) over {field_}, d={d}",
                )
        for d in range(1, 6):
            for _ in range(max(1, pairs // 5)):
                a = random_matrix(field_, d, rng)
                coeffs = char_poly(a)
                det = determinant(a)
                result.check(coeffs[d - 1] == -a.trace(), f"X^{d - 1} coefficient over {field_}")
                result.check(
                    coeffs[0] == (det if d % 2 == 0 else -det),
                    f"constant coefficient over {field_}, d={d}",
                )
        for _ in range(per_case):
            a, b, c = (random_matrix(field_, 2, rng) for _ in range(3))
            expected = _poly_mul(char_poly(a), char_poly(b), field_.zero())
            result.check(
                char_poly(_block_upper(field_, a, b, c)) == expected,
                f"block-triangular char_poly over {field_}",
            )
    for v, uniformizer in _valuation_cases():
        for _ in range(pairs):
            x = _random_valued(v, uniformizer, rng)
            y = _random_valued(v, uniformizer, rng)
            vx, vy = valuate(v, x), valuate(v, y)
            result.check(valuate(v, x * y) == vx + vy, f"{v.label}: nu({x} * {y})")
            vs = valuate(v, x + y)
            result.check(vs >= min(vx, vy), f"{v.label}: nu({x} + {y}) below the minimum")
            if vx != vy:
                result.check(vs == min(vx, vy), f"{v.label}: nu({x} + {y}) is not the minimum")
    _integrality_cross_check(result, rng, samples)
    for p in (2, 3):
        for d in (2, 3):
            for _ in range(per_case):
                g = random_p_integral(p, d, rng)
                h = random_p_integral(p, d, rng)
                vertex = canonicalize(g, p)
                result.check(
                    canonicalize(vertex.matrix(), p) == vertex,
                    f"canonical form not idempotent at p={p}, d={d}",
                )
                k = rng.randint(-3, 3)
                result.check(
                    canonicalize(g.scale(Fraction(p) ** k), p) == vertex,
                    f"homothety by {p}^{k} moved a vertex at p={p}, d={d}",
                )
                standard = standard_vertex(p, d)
                result.check(
                    act(g @ h, vertex) == act(g, act(h, vertex)),
                    f"action law fails at p={p}, d={d}",
                )
                result.check(
                    set(neighbors(act(g, vertex))) == {act(g, w) for w in neighbors(vertex)},
                    f"neighbors do not commute with the action at p={p}, d={d}",
                )
                result.check(
                    act(h, standard).type == nu_det(h, p) % d,
                    f"type shift differs from nu_det at p={p}, d={d}",
                )
                result.check(
                    act(signed_permutation(d, rng), standard) == standard,
                    f"a signed permutation moved the standard vertex at p={p}, d={d}",
                )
    return result


def certify_suite(rng, samples, cap=200, oracle_factor=10):
    """
    Verdicts on a fixed corpus against closures run with a larger cap:
    finite verdicts match the closure order, infinite ones keep running past
    it and replay their witness. Two runs on one document render identically.
    """
    result = SuiteResult("certify")
    for name, data, verdict, order in CERTIFY_CORPUS:
        certificate, payload, _ = certify_request(data, cap=cap)
        result.check(
            certificate.verdict.value == verdict,
            f"{name}: verdict {certificate.verdict.value}, expected {verdict}",
        )
        gens = validate_input(GeneratorSetSerializer, data)["matrices"]
        truth = group_closure(gens, cap * oracle_factor, with_edges=False)
        if certificate.verdict is Verdict.FINITE:
            result.check(
                truth.order == certificate.order == order,
                f"{name}: order {certificate.order}, closure {truth.order}, expected {order}",
            )
            result.check(
                all(brute_force_order(g, cap) is not None for g in gens),
                f"{name}: a generator has no order below {cap}",
            )
        elif certificate.verdict is Verdict.INFINITE:
            result.check(not truth.is_finite, f"{name}: closed at {truth.order} elements")
            result.check(
                replay_witness(certificate.witness, gens),
                f"{name}: witness {certificate.witness.kind.value} does not replay",
            )
        again = certify_request(data, cap=cap)[1]
        result.check(render_json(again) == render_json(payload), f"{name}: output differs")
    return result


SUITES = {
    "kronecker": kronecker_suite,
    "order": order_suite,
    "unipotent": unipotent_suite,
    "closure": closure_suite,
    "building": building_suite,
    "invariants": invariants_suite,
    "certify": certify_suite,
}


def run_selftest(samples, seed, names=None):
    """
    Run the named suites (all by default), each from its own generator
    seeded with ``seed``.
    """
    results = {}
    for name in names or SUITES:
        logger.info("selftest suite %s: %d samples, seed %d", name, samples, seed)
        results[name] = SUITES[name](random.Random(seed), samples)
    return results
