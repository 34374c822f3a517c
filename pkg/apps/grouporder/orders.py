"""
Exact orders of invertible matrices.

In characteristic p the order is read off the eigenvalue orders and the
unipotent part; over Q the characteristic polynomial must be a product of
cyclotomic polynomials whose radical annihilates the matrix.
"""

import enum
import logging
from dataclasses import dataclass, field
from math import lcm

from sympy.ntheory import primefactors

from apps.core.exceptions import (
    FieldMismatch,
    NonIntegralCoefficient,
    NotTorsion,
    NotUnitCircle,
    OrderVerificationError,
    SingularMatrix,
)
from apps.exactnum.fields import QQ, PrimeField, RationalFunctionField
from apps.kronecker.cyclotomic import cyclotomic, cyclotomic_factorization, order_of_indices
from apps.linalg.charpoly import char_poly, evaluate_polynomial
from apps.linalg.matrices import SquareMatrix, determinant
from apps.linalg.polynomials import product, to_int_poly

from .extension import multiplicative_order, splitting_field_eigenvalues

logger = logging.getLogger(__name__)


# Reasons a matrix has infinite order.
NON_INTEGRAL = "non_integral"
NOT_UNIT_CIRCLE = "not_unit_circle"
NOT_DIAGONALIZABLE = "not_diagonalizable"
NOT_CONSTANT = "not_constant"


class OrderMethod(str, enum.Enum):
    CHAR_P = "char-p eigenvalue-lcm"
    CYCLOTOMIC = "cyclotomic"
    BRUTE_FORCE = "brute-force"


@dataclass
class OrderResult:
    """
    Order of one matrix; ``order`` is None when the matrix has infinite order.
    """

    order: int
    method: OrderMethod
    eigenvalue_orders: list = field(default_factory=list)
    unipotent_exponent: int = None
    extension_degree: int = None
    eigenvalues: list = field(default_factory=list)
    cyclotomic_indices: list = field(default_factory=list)
    obstruction: str = None
    failure: str = None

    @property
    def is_finite(self):
        return self.order is not None

    @property
    def semisimple_order(self):
        """
        k = lcm of the eigenvalue orders (characteristic p only).
        """
        return lcm(*self.eigenvalue_orders) if self.eigenvalue_orders else None


def least_power_at_least(p, d):
    """
    Least power p^l with p^l >= d.
    """
    q = 1
    while q < d:
        q *= p
    return q


def _require_invertible(a):
    if not determinant(a):
        raise SingularMatrix(f"a singular matrix has no order (over {a.field})")


def verify_order(a, n):
    """
    A^n = I and A^(n/r) != I for each prime r dividing n.
    """
    if not a.power(n).is_identity():
        raise OrderVerificationError(f"claimed order {n} but A^{n} != I")
    for r in primefactors(n):
        if a.power(n // r).is_identity():
            raise OrderVerificationError(f"claimed order {n} but A^{n // r} = I")


def exact_order_dividing(a, n):
    """
    Least divisor of n that is an order of A, given A^n = I.
    """
    for r in primefactors(n):
        while n % r == 0 and a.power(n // r).is_identity():
            n //= r
    return n


def order_char_p(a):
    """
    Order of A over F_p or F_p(t): k = lcm of eigenvalue orders, p^l the
    least p-power >= d; A^k must be unipotent, and then A^(k p^l) = I.

    Raises NotTorsion when A^k is not unipotent or, over F_p(t), when the
    characteristic polynomial is not constant.
    """
    if not isinstance(a.field, (PrimeField, RationalFunctionField)):
        raise FieldMismatch(f"order_char_p needs characteristic p, got {a.field}")
    _require_invertible(a)
    p, d = a.field.characteristic, a.dim
    eigenvalues, m = splitting_field_eigenvalues(a)
    orders = [multiplicative_order(value) for value, _ in eigenvalues]
    k = lcm(*orders)
    p_l = least_power_at_least(p, d)
    identity = SquareMatrix.identity(a.field, d)
    semisimple_power = a.power(k)
    if not (semisimple_power - identity).power(d).is_zero():
        raise NotTorsion(f"A^{k} is not unipotent, so A has infinite order")
    n = exact_order_dividing(a, k * p_l)
    verify_order(a, n)
    logger.debug("order %d over %s (k=%d, p^l=%d, m=%d)", n, a.field, k, p_l, m)
    return OrderResult(
        order=n,
        method=OrderMethod.CHAR_P,
        eigenvalue_orders=orders,
        unipotent_exponent=p_l,
        extension_degree=m,
        eigenvalues=[(str(value), mult) for value, mult in eigenvalues],
    )


def _infinite(method, failure, obstruction, **extra):
    return OrderResult(
        order=None, method=method, obstruction=obstruction, failure=failure, **extra
    )


def order_rational(a):
    if a.field != QQ:
        raise FieldMismatch(f"order_rational needs a matrix over Q, got {a.field}")
    _require_invertible(a)
    try:
        poly = to_int_poly(char_poly(a))
    except NonIntegralCoefficient as exc:
        return _infinite(
            OrderMethod.CYCLOTOMIC, NON_INTEGRAL, f"characteristic polynomial: {exc}"
        )
    try:
        factorization = cyclotomic_factorization(poly)
    except NotUnitCircle as exc:
        return _infinite(
            OrderMethod.CYCLOTOMIC, NOT_UNIT_CIRCLE, f"characteristic polynomial {poly}: {exc}"
        )
    radical = product(cyclotomic(m) for m, _ in factorization)
    if not evaluate_polynomial(radical.dense(), a).is_zero():
        return _infinite(
            OrderMethod.CYCLOTOMIC,
            NOT_DIAGONALIZABLE,
            f"the squarefree part {radical} of {poly} does not annihilate A, "
            f"so A is not diagonalizable",
            cyclotomic_indices=factorization,
        )
    n = order_of_indices(factorization)
    verify_order(a, n)
    return OrderResult(order=n, method=OrderMethod.CYCLOTOMIC, cyclotomic_indices=factorization)


def brute_force_order(a, cap):
    """
    Least k <= cap with A^k = I, or None.
    """
    current = a
    for k in range(1, cap + 1):
        if current.is_identity():
            return k
        current = current @ a
    return None


def compute_order(a):
    """
    Dispatch on the carrier field; a matrix that is not torsion yields an
    infinite result carrying the obstruction.
    """
    if a.field == QQ:
        result = order_rational(a)
    else:
        try:
            result = order_char_p(a)
        except NotTorsion as exc:
            result = _infinite(OrderMethod.CHAR_P, NOT_CONSTANT, exc.obstruction)
    logger.info(
        "order of %dx%d matrix over %s: %s",
        a.dim, a.dim, a.field, result.order if result.is_finite else "infinite",
    )
    return result
