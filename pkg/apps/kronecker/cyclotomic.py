"""
Cyclotomic polynomials and exact factorization into them.
"""

import logging
from functools import lru_cache
from math import lcm

from sympy.functions.combinatorial.numbers import totient
from sympy.ntheory import divisors

from apps.core.exceptions import NotUnitCircle
from apps.linalg.polynomials import MonicIntPoly

logger = logging.getLogger(__name__)

# Degree bound of the precomputed table.
TABLE_DEGREE = 16


@lru_cache(maxsize=None)
def cyclotomic(m):
    """
    Phi_m, by dividing X^m - 1 by every Phi_e with e | m, e < m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic index must be positive, got {m}")
    poly = MonicIntPoly.from_dense([-1] + [0] * (m - 1) + [1])
    for e in divisors(m)[:-1]:
        poly, remainder = poly.divmod(cyclotomic(e))
        if any(remainder):
            raise ArithmeticError(f"Phi_{e} does not divide X^{m} - 1")
    return poly


@lru_cache(maxsize=None)
def indices_up_to_degree(n):
    """
    Sorted indices m with phi(m) <= n.

    phi(m) >= sqrt(m / 2), so every such m is at most 2 n^2.
    """
    return tuple(m for m in range(1, 2 * n * n + 3) if totient(m) <= n)


def cyclotomic_table(max_degree=TABLE_DEGREE):
    """
    {m: Phi_m} for every m with phi(m) <= max_degree.
    """
    return {m: cyclotomic(m) for m in indices_up_to_degree(max_degree)}


def cyclotomic_factorization(poly):
    """
    Split poly into cyclotomic factors by greedy exact division.

    Returns [(m, multiplicity), ...] sorted by m. Raises NotUnitCircle with
    the non-cyclotomic cofactor when something is left over.
    """
    remaining = poly
    result = []
    for m in indices_up_to_degree(max(poly.degree, 1)):
        phi = cyclotomic(m)
        if phi.degree > remaining.degree:
            continue
        k = 0
        while remaining.degree >= phi.degree:
            quotient, remainder = remaining.divmod(phi)
            if any(remainder):
                break
            remaining = quotient
            k += 1
        if k:
            result.append((m, k))
        if remaining.degree == 0:
            break
    if remaining.degree > 0:
        logger.debug("non-cyclotomic cofactor %s of %s", remaining, poly)
        raise NotUnitCircle(remaining, result)
    return result


def order_of_indices(factorization):
    """
    lcm of the cyclotomic indices in a factorization.
    """
    return lcm(*(m for m, _ in factorization)) if factorization else 1
