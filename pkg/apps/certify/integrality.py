"""
Integrality of characteristic polynomial coefficients and nu(det) images.

Over Q a coefficient is integral iff it lies in every p-adic valuation ring;
over F_p(t) the elements integral over F_p are the constants, i.e. the
elements lying in every pi-adic ring and in the degree valuation ring.
"""

import logging
from dataclasses import dataclass, field

from apps.exactnum.fields import QQ, RationalFunctionField
from apps.exactnum.valuations import relevant_valuations, valuate
from apps.linalg.charpoly import char_poly
from apps.linalg.matrices import determinant

logger = logging.getLogger(__name__)


@dataclass
class ValuationCheck:
    """
    One valuation against every non-leading coefficient; on failure, the
    lowest power of X whose coefficient leaves the valuation ring.
    """

    valuation: str
    passed: bool = True
    coefficient_index: int = None
    coefficient_text: str = None
    valuation_value: int = None


@dataclass
class IntegralityEntry:
    """
    Result for one matrix, with a row per checked valuation. On failure the
    flat fields repeat the first coefficient (lowest power of X) outside the
    valuation ring of the first listed valuation.
    """

    generator: int
    char_poly: list
    valuations: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    passed: bool = True
    valuation: str = None
    coefficient_index: int = None
    coefficient: object = None
    coefficient_text: str = None
    valuation_value: int = None


@dataclass
class IntegralityReport:
    field: object
    entries: list = field(default_factory=list)

    @property
    def passed(self):
        return all(entry.passed for entry in self.entries)

    @property
    def first_failure(self):
        return next((entry for entry in self.entries if not entry.passed), None)


def check_matrix(index, g):
    """
    Integrality of the characteristic polynomial of one matrix.
    """
    coeffs = char_poly(g)
    field_ = g.field
    entry = IntegralityEntry(generator=index, char_poly=[field_.format(c) for c in coeffs])
    if field_ != QQ and not isinstance(field_, RationalFunctionField):
        return entry
    valuations = relevant_valuations(coeffs)
    entry.valuations = [v.label for v in valuations]
    first = None
    for v in valuations:
        check = ValuationCheck(v.label)
        for k, c in enumerate(coeffs[:-1]):
            value = valuate(v, c)
            if value < 0:
                check.passed = False
                check.coefficient_index = k
                check.coefficient_text = field_.format(c)
                check.valuation_value = value
                if first is None or k < first[0]:
                    first = (k, c, check)
                break
        entry.checks.append(check)
    if first is not None:
        k, c, check = first
        entry.passed = False
        entry.valuation = check.valuation
        entry.coefficient_index = k
        entry.coefficient = c
        entry.coefficient_text = check.coefficient_text
        entry.valuation_value = check.valuation_value
        logger.debug(
            "generator %s: coefficient of X^%d = %s fails at %s",
            index, k, check.coefficient_text, check.valuation,
        )
    return entry


def integrality_check(gens):
    """
    Per-generator integrality; failure is reported as data.
    """
    field_ = gens[0].field if gens else QQ
    return IntegralityReport(field_, [check_matrix(i, g) for i, g in enumerate(gens)])


@dataclass
class NuDetReport:
    """
    nu(det g_i) for every valuation that can be nonzero on some det g_i.
    """

    values: dict = field(default_factory=dict)

    @property
    def surjecting_valuation(self):
        """
        First valuation with a nonzero value: its image in Z is a nontrivial
        subgroup.
        """
        return next((label for label, vals in self.values.items() if any(vals)), None)


def nu_det_check(gens):
    if not gens:
        return NuDetReport()
    field_ = gens[0].field
    if field_ != QQ and not isinstance(field_, RationalFunctionField):
        return NuDetReport()
    dets = [determinant(g) for g in gens]
    valuations = relevant_valuations(dets + [1 / det for det in dets])
    return NuDetReport({v.label: [valuate(v, det) for det in dets] for v in valuations})
