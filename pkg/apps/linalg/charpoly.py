"""
Division-free characteristic polynomials (Berkowitz).

Only ring operations are used, so the result is valid in every
characteristic, including when d! vanishes in the field.
"""

import logging

from .matrices import SquareMatrix

logger = logging.getLogger(__name__)


def _dot(xs, ys, zero):
    total = zero
    for x, y in zip(xs, ys):
        if x and y:
            total = total + x * y
    return total


def char_poly(a):
    """
    Coefficients of det(X*I - A), low degree first; the list has length
    d + 1 and ends with 1.
    """
    field, d = a.field, a.dim
    zero, one = field.zero(), field.one()
    rows = a.rows
    # high-first coefficients of the leading r x r block
    vect = [one, -rows[0][0]]
    for r in range(1, d):
        row = list(rows[r][:r])
        column = [rows[i][r] for i in range(r)]
        col = [one, -rows[r][r]]
        power_c = column
        for _ in range(r):
            col.append(-_dot(row, power_c, zero))
            power_c = [_dot(rows[i][:r], power_c, zero) for i in range(r)]
        vect = [_toeplitz_entry(col, vect, i, zero) for i in range(r + 2)]
    coeffs = list(reversed(vect))
    logger.debug("char_poly over %s, d=%d", field, d)
    return coeffs


def _toeplitz_entry(col, vect, i, zero):
    total = zero
    for j, v in enumerate(vect):
        if j > i:
            break
        c = col[i - j]
        if c and v:
            total = total + c * v
    return total


def evaluate_polynomial(coeffs, a):
    """
    Horner evaluation of sum coeffs[k] * A^k (low degree first).
    """
    identity = SquareMatrix.identity(a.field, a.dim)
    result = SquareMatrix.zeros(a.field, a.dim)
    for c in reversed(list(coeffs)):
        result = result @ a + identity.scale(c)
    return result
