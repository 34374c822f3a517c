"""
Seeded random scalars and matrices for the oracle suites.
"""

from fractions import Fraction

from apps.exactnum.fields import QQ, PrimeField, RationalFunctionField
from apps.exactnum.scalars import RationalFunction

from .matrices import SquareMatrix, is_invertible


def random_scalar(field, rng, bound=9):
    if isinstance(field, PrimeField):
        return field.from_int(rng.randrange(field.p))
    if isinstance(field, RationalFunctionField):
        p = field.p
        num = [rng.randrange(p) for _ in range(rng.randint(1, 3))]
        den = [1] + [rng.randrange(p) for _ in range(rng.randint(0, 1))]
        return RationalFunction.from_parts(num, den, p)
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def random_matrix(field, d, rng):
    return SquareMatrix.from_rows(
        field, [[random_scalar(field, rng) for _ in range(d)] for _ in range(d)]
    )


def random_invertible(field, d, rng):
    while True:
        m = random_matrix(field, d, rng)
        if is_invertible(m):
            return m


def random_p_integral(p, d, rng, bound=4):
    """
    Invertible rational matrix with entries in Z[1/p].
    """
    while True:
        rows = [
            [Fraction(rng.randint(-bound, bound), p ** rng.randint(0, 1)) for _ in range(d)]
            for _ in range(d)
        ]
        m = SquareMatrix.from_rows(QQ, rows)
        if is_invertible(m):
            return m
