"""
Finiteness certification for a finite set of invertible matrices.

Stages run in a fixed order: integrality of characteristic polynomials,
nu(det) images, element orders (generators, then short words), and finally
the breadth-first closure. The first stage that fails decides the verdict.
"""

import enum
import itertools
import logging
from dataclasses import dataclass, field

from apps.core.conf import resolve_cap, rigidity_setting, warn_dimension
from apps.core.exceptions import (
    EX_INCONCLUSIVE,
    EX_INFINITE,
    EX_OK,
    DimensionMismatch,
    FieldMismatch,
    MalformedInput,
    NotUnitCircle,
    SingularMatrix,
)
from apps.exactnum.fields import QQ, PrimeField
from apps.exactnum.valuations import valuate, valuation_from_label
from apps.grouporder.closure import group_closure
from apps.grouporder.orders import NOT_UNIT_CIRCLE, compute_order
from apps.kronecker.cyclotomic import cyclotomic_factorization
from apps.linalg.charpoly import char_poly
from apps.linalg.matrices import SquareMatrix, determinant, mat_inverse
from apps.linalg.polynomials import to_int_poly

from .integrality import check_matrix, integrality_check, nu_det_check

logger = logging.getLogger(__name__)

INCONCLUSIVE_BY_CLOSURE = "inconclusive by closure, see integrality certificate"


class Verdict(str, enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    INCONCLUSIVE = "inconclusive"

    @property
    def exit_code(self):
        return {
            Verdict.FINITE: EX_OK,
            Verdict.INFINITE: EX_INFINITE,
            Verdict.INCONCLUSIVE: EX_INCONCLUSIVE,
        }[self]


class WitnessKind(str, enum.Enum):
    NON_INTEGRAL_COEFFICIENT = "non_integral_coefficient"
    NOT_UNIT_CIRCLE = "not_unit_circle"
    NON_TORSION = "non_torsion_element"
    NU_DET_SURJECTION = "nu_det_surjection"


def letter_name(letter):
    return f"g{letter // 2}" + ("^-1" if letter % 2 else "")


def word_matrix(gens, word):
    """
    Product of the letters of ``word``, left to right; letter 2i is g_i and
    2i + 1 its inverse.
    """
    result = SquareMatrix.identity(gens[0].field, gens[0].dim)
    for letter in word:
        g = gens[letter // 2]
        result = result @ (mat_inverse(g) if letter % 2 else g)
    return result


@dataclass
class Witness:
    kind: WitnessKind
    word: tuple = ()
    statement: str = ""
    valuation: str = None
    coefficient_index: int = None
    coefficient: str = None
    polynomial: str = None
    nu_det: list = None

    @property
    def word_labels(self):
        return [letter_name(letter) for letter in self.word]

    @property
    def element(self):
        return " ".join(self.word_labels) or "e"


@dataclass
class FormReport:
    """
    Whether a rational form F is symmetric, positive definite and preserved
    by every generator (g^T F g = F).
    """

    symmetric: bool
    positive_definite: bool
    invariant: list = field(default_factory=list)

    @property
    def holds(self):
        return self.symmetric and self.positive_definite and all(self.invariant)


@dataclass
class Certificate:
    field: object
    dim: int
    generator_count: int
    verdict: Verdict = Verdict.INCONCLUSIVE
    order: int = None
    reason: str = ""
    witness: Witness = None
    integrality: object = None
    nu_det: object = None
    orders: list = field(default_factory=list)
    closure: object = None
    form: FormReport = None
    carrier_bound: int = None
    schema: int = 1

    @property
    def exit_code(self):
        return self.verdict.exit_code


def validate_generators(gens):
    if not gens:
        raise MalformedInput("generators: at least one generator is required")
    first = gens[0]
    for i, g in enumerate(gens[1:], start=1):
        if g.field != first.field:
            raise FieldMismatch(f"generators[{i}]: over {g.field}, expected {first.field}")
        if g.dim != first.dim:
            raise DimensionMismatch(f"generators[{i}]: dimension {g.dim}, expected {first.dim}")
    for i, g in enumerate(gens):
        if not determinant(g):
            raise SingularMatrix(f"generators[{i}]: matrix is singular")
    warn_dimension(first.dim, logger)


def general_linear_order(p, d):
    """
    |GL_d(F_p)| = prod (p^d - p^i), i < d.
    """
    total = 1
    for i in range(d):
        total *= p**d - p**i
    return total


def invariant_form_check(gens, form):
    if form.field != QQ or any(g.field != QQ for g in gens):
        raise FieldMismatch("form: invariant forms are checked over Q only")
    if any(g.dim != form.dim for g in gens):
        raise DimensionMismatch(f"form: dimension {form.dim} does not match the generators")
    d = form.dim
    symmetric = form == form.transpose()
    minors = [
        determinant(SquareMatrix(QQ, tuple(row[:k] for row in form.rows[:k])))
        for k in range(1, d + 1)
    ]
    positive_definite = symmetric and all(minor > 0 for minor in minors)
    invariant = [g.transpose() @ form @ g == form for g in gens]
    return FormReport(symmetric, positive_definite, invariant)


def _integrality_witness(entry, word, field_):
    coefficient = field_.format(entry.coefficient)
    return Witness(
        kind=WitnessKind.NON_INTEGRAL_COEFFICIENT,
        word=tuple(word),
        valuation=entry.valuation,
        coefficient_index=entry.coefficient_index,
        coefficient=coefficient,
        statement=(
            f"the coefficient of X^{entry.coefficient_index} in the characteristic "
            f"polynomial of {' '.join(letter_name(x) for x in word)} is {coefficient}, "
            f"outside the {entry.valuation} valuation ring, so the generated matrix "
            f"group is infinite"
        ),
    )


def _order_witness(result, word, matrix):
    element = " ".join(letter_name(x) for x in word)
    if result.failure == NOT_UNIT_CIRCLE:
        poly = to_int_poly(char_poly(matrix))
        return Witness(
            kind=WitnessKind.NOT_UNIT_CIRCLE,
            word=tuple(word),
            polynomial=str(poly),
            statement=(
                f"the characteristic polynomial {poly} of {element} is not a product of "
                f"cyclotomic polynomials, so {element} has infinite order"
            ),
        )
    return Witness(
        kind=WitnessKind.NON_TORSION,
        word=tuple(word),
        statement=f"{element} has infinite order: {result.obstruction}",
    )


def _reduced_words(letters, length):
    for word in itertools.product(range(letters), repeat=length):
        if all(word[i] != word[i + 1] ^ 1 for i in range(length - 1)):
            yield word


def search_words(gens, max_length):
    """
    First reduced word of length 2..max_length that fails integrality or is
    not torsion, as a Witness; None when every word passes.
    """
    field_ = gens[0].field
    if isinstance(field_, PrimeField):
        return None
    for length in range(2, max_length + 1):
        for word in _reduced_words(2 * len(gens), length):
            matrix = word_matrix(gens, word)
            entry = check_matrix(None, matrix)
            if not entry.passed:
                return _integrality_witness(entry, word, field_)
            result = compute_order(matrix)
            if not result.is_finite:
                return _order_witness(result, word, matrix)
    return None


def _conclude(cert, verdict, reason, witness=None, order=None):
    cert.verdict = verdict
    cert.reason = reason
    cert.witness = witness
    cert.order = order
    logger.info("verdict %s: %s", verdict.value, reason)
    return cert


def certify_finiteness(gens, cap=None, form=None, word_length=None, with_cayley=False):
    """
    Certificate for the group generated by ``gens``.
    """
    validate_generators(gens)
    cap = resolve_cap(cap, "CLOSURE_CAP")
    word_length = word_length if word_length is not None else rigidity_setting(
        "WITNESS_WORD_LENGTH"
    )
    field_, d = gens[0].field, gens[0].dim
    cert = Certificate(field_, d, len(gens), schema=rigidity_setting("SCHEMA_VERSION"))
    if isinstance(field_, PrimeField):
        cert.carrier_bound = general_linear_order(field_.p, d)
    if form is not None:
        cert.form = invariant_form_check(gens, form)

    logger.debug("integrality stage over %s, d=%d, %d generators", field_, d, len(gens))
    cert.integrality = integrality_check(gens)
    failure = cert.integrality.first_failure
    if failure is not None:
        witness = _integrality_witness(failure, (2 * failure.generator,), field_)
        return _conclude(cert, Verdict.INFINITE, "integrality", witness)

    cert.nu_det = nu_det_check(gens)
    label = cert.nu_det.surjecting_valuation
    if label is not None:
        values = cert.nu_det.values[label]
        witness = Witness(
            kind=WitnessKind.NU_DET_SURJECTION,
            valuation=label,
            nu_det=values,
            statement=(
                f"nu_det at the {label} valuation takes the values {values}; the generated "
                f"matrix group maps onto a nontrivial subgroup of Z"
            ),
        )
        return _conclude(cert, Verdict.INFINITE, "nu_det", witness)

    logger.debug("order stage")
    cert.orders = [compute_order(g) for g in gens]
    for i, result in enumerate(cert.orders):
        if not result.is_finite:
            witness = _order_witness(result, (2 * i,), gens[i])
            return _conclude(cert, Verdict.INFINITE, "element order", witness)
    witness = search_words(gens, word_length)
    if witness is not None:
        return _conclude(cert, Verdict.INFINITE, "element order", witness)

    logger.debug("closure stage with cap %d", cap)
    cert.closure = group_closure(gens, cap, with_edges=with_cayley)
    if cert.closure.is_finite:
        return _conclude(
            cert,
            Verdict.FINITE,
            f"the generated matrix group closes with {cert.closure.order} elements",
            order=cert.closure.order,
        )
    reason = INCONCLUSIVE_BY_CLOSURE
    if cert.carrier_bound is not None:
        reason += (
            f"; the carrier field F_{field_.p} is finite, so the generated matrix group "
            f"has order dividing {cert.carrier_bound}"
        )
    return _conclude(cert, Verdict.INCONCLUSIVE, reason)


def replay_witness(witness, gens):
    """
    Re-run the single operation behind a witness; True iff it fails again.
    """
    field_ = gens[0].field
    if witness.kind is WitnessKind.NU_DET_SURJECTION:
        v = valuation_from_label(field_, witness.valuation)
        return any(valuate(v, determinant(g)) for g in gens)
    matrix = word_matrix(gens, witness.word)
    if witness.kind is WitnessKind.NON_INTEGRAL_COEFFICIENT:
        v = valuation_from_label(field_, witness.valuation)
        coefficient = char_poly(matrix)[witness.coefficient_index]
        return valuate(v, coefficient) < 0
    if witness.kind is WitnessKind.NOT_UNIT_CIRCLE:
        try:
            cyclotomic_factorization(to_int_poly(char_poly(matrix)))
        except NotUnitCircle:
            return True
        return False
    return not compute_order(matrix).is_finite
