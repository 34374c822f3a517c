"""
The finite set of monic integer polynomials of degree d with every root on
the unit circle, enumerated two independent ways.
"""

import itertools
import logging
from dataclasses import dataclass, field
from math import comb, lcm

from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.domains import ZZ
from sympy.polys.sqfreetools import dup_sqf_part

from apps.core.exceptions import DegreeOutOfRange
from apps.linalg.polynomials import MonicIntPoly, product

from .cyclotomic import cyclotomic, cyclotomic_factorization, indices_up_to_degree

logger = logging.getLogger(__name__)

PRODUCTS_MAX_DEGREE = 8
BOUNDS_MAX_DEGREE = 6
FULL_GRID_MAX_DEGREE = 5


@dataclass
class KroneckerSet:
    degree: int
    polynomials: list = field(default_factory=list)
    factorizations: list = field(default_factory=list)

    @property
    def count(self):
        return len(self.polynomials)

    def as_set(self):
        return set(self.polynomials)

    def items(self):
        return zip(self.polynomials, self.factorizations)


def _check_degree(d, upper):
    if not isinstance(d, int) or d < 1 or d > upper:
        raise DegreeOutOfRange(f"degree must be between 1 and {upper}, got {d!r}")


def n_max(d):
    """
    lcm of every m with phi(m) <= d: each root of unity of degree at most d
    has an order dividing it.
    """
    return lcm(*indices_up_to_degree(d))


def _build(d, polys):
    polys = sorted(set(polys))
    return KroneckerSet(d, polys, [cyclotomic_factorization(poly) for poly in polys])


def enumerate_by_products(d):
    """
    Every product of cyclotomic polynomials whose degrees sum to d.
    """
    _check_degree(d, PRODUCTS_MAX_DEGREE)
    indices = [m for m in indices_up_to_degree(d)]
    found = []

    def extend(start, remaining, chosen):
        if remaining == 0:
            found.append(product(cyclotomic(m) for m in chosen))
            return
        for i in range(start, len(indices)):
            m = indices[i]
            if cyclotomic(m).degree <= remaining:
                extend(i, remaining - cyclotomic(m).degree, chosen + [m])

    extend(0, d, [])
    logger.debug("degree %d: %d cyclotomic products", d, len(found))
    return _build(d, found)


def _power_mod(base, n, modulus):
    result = [ZZ(1)]
    while n:
        if n & 1:
            result = dup_rem(dup_mul(result, base, ZZ), modulus, ZZ)
        n >>= 1
        if n:
            base = dup_rem(dup_mul(base, base, ZZ), modulus, ZZ)
    return result


def has_unit_circle_roots(poly, n=None):
    """
    True iff the squarefree part of poly divides X^N - 1, N = n_max(deg).

    Any N' <= n_max(deg) with that property divides n_max(deg), so this is
    the same as dividing X^N' - 1 for some N' in range.
    """
    if poly.degree == 0:
        return True
    dup = poly.dup()
    if not dup[-1]:
        return False
    radical = dup_sqf_part(dup, ZZ)
    if radical[0] < 0:
        radical = [-c for c in radical]
    if len(radical) == 1:
        return True
    n = n if n is not None else n_max(poly.degree)
    return _power_mod([ZZ(1), ZZ(0)], n, radical) == [ZZ(1)]


def coefficient_bounds(d):
    """
    |a_j| <= binom(d, j) for a monic degree-d polynomial with roots of
    modulus one.
    """
    return [comb(d, j) for j in range(d)]


def _self_reciprocal(dense):
    rev = dense[::-1]
    return dense == rev or dense == [-c for c in rev]


def enumerate_by_bounds(d):
    """
    Brute force over the coefficient grid |a_j| <= binom(d, j).

    Up to FULL_GRID_MAX_DEGREE every grid point goes through the exact
    divisibility test. Above it the constant term is restricted to +-1 and
    the coefficient list must read the same reversed up to sign first; both
    hold for every polynomial whose roots lie on the unit circle.
    """
    _check_degree(d, BOUNDS_MAX_DEGREE)
    n = n_max(d)
    ranges = [range(-b, b + 1) for b in coefficient_bounds(d)]
    shortcuts = d > FULL_GRID_MAX_DEGREE
    if shortcuts:
        ranges[0] = (-1, 1)
    found = []
    examined = 0
    for coeffs in itertools.product(*ranges):
        examined += 1
        if shortcuts and not _self_reciprocal(list(coeffs) + [1]):
            continue
        poly = MonicIntPoly(coeffs)
        if has_unit_circle_roots(poly, n):
            found.append(poly)
    logger.debug("degree %d: %d grid points, %d kept", d, examined, len(found))
    return _build(d, found)


def compare_methods(d):
    """
    Run both enumerations; returns (by_products, by_bounds, agree).
    """
    by_products = enumerate_by_products(d)
    by_bounds = enumerate_by_bounds(d)
    agree = by_products.polynomials == by_bounds.polynomials
    if not agree:
        logger.warning(
            "degree %d: products give %d polynomials, bounds give %d",
            d, by_products.count, by_bounds.count,
        )
    return by_products, by_bounds, agree


def enumerate_kronecker(d, method="products"):
    if method == "products":
        return enumerate_by_products(d)
    if method == "bounds":
        return enumerate_by_bounds(d)
    raise ValueError(f"unknown enumeration method {method!r}")
