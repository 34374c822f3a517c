"""
Monic integer polynomials.

Coefficients are stored low degree first, leading 1 implicit:
X^d + a_{d-1} X^{d-1} + ... + a_0 is MonicIntPoly((a_0, ..., a_{d-1})).
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from sympy.polys.densearith import dup_div, dup_mul
from sympy.polys.domains import ZZ

from apps.core.exceptions import NonIntegralCoefficient, ScalarParseError

_TERM = re.compile(r"^(\d+)?\*?(?:X(?:\^(\d+))?)?$")


@dataclass(frozen=True, order=True)
class MonicIntPoly:
    coeffs: tuple = ()

    @classmethod
    def from_dense(cls, dense):
        """
        Build from a full low-first coefficient list whose last entry is 1.
        """
        dense = list(dense)
        while len(dense) > 1 and dense[-1] == 0:
            dense.pop()
        if not dense or dense[-1] != 1:
            raise ValueError(f"polynomial {dense!r} is not monic")
        return cls(tuple(int(c) for c in dense[:-1]))

    @classmethod
    def from_dup(cls, dup):
        return cls.from_dense([int(c) for c in reversed(dup)])

    @classmethod
    def one(cls):
        return cls(())

    @property
    def degree(self):
        return len(self.coeffs)

    def dense(self):
        return list(self.coeffs) + [1]

    def dup(self):
        return [ZZ(c) for c in reversed(self.dense())]

    def __mul__(self, other):
        return MonicIntPoly.from_dup(dup_mul(self.dup(), other.dup(), ZZ))

    def divmod(self, other):
        q, r = dup_div(self.dup(), other.dup(), ZZ)
        remainder = [int(c) for c in reversed(r)]
        return MonicIntPoly.from_dup(q), remainder

    def divides(self, other):
        """
        True iff self divides other exactly.
        """
        _, r = other.divmod(self)
        return not any(r)

    def evaluate(self, x):
        acc = 1
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_self_reciprocal(self):
        """
        True iff P(X) = +-X^d P(1/X), i.e. the coefficient list reversed is
        the same list up to one global sign.
        """
        dense = self.dense()
        rev = dense[::-1]
        return dense == rev or dense == [-c for c in rev]

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.dense()[k]
            if c == 0:
                continue
            power = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            magnitude = abs(c)
            body = power if magnitude == 1 and k > 0 else f"{magnitude}{power}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    @classmethod
    def parse(cls, text):
        """
        Parse "X^3 - 2X + 5" style text.
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ScalarParseError("empty polynomial")
        if compact[0] not in "+-":
            compact = "+" + compact
        terms = re.findall(r"[+-][^+-]*", compact)
        if "".join(terms) != compact:
            raise ScalarParseError(f"cannot parse polynomial {text!r}")
        coeffs = {}
        for term in terms:
            match = _TERM.match(term[1:])
            if not term[1:] or not match:
                raise ScalarParseError(f"cannot parse term {term!r} in {text!r}")
            digits, exponent = match.groups()
            has_x = "X" in term
            c = int(digits) if digits else 1
            k = (int(exponent) if exponent else 1) if has_x else 0
            coeffs[k] = coeffs.get(k, 0) + (-c if term[0] == "-" else c)
        top = max(coeffs)
        try:
            return cls.from_dense([coeffs.get(k, 0) for k in range(top + 1)])
        except ValueError as exc:
            raise ScalarParseError(f"{text!r} is not monic") from exc


def to_int_poly(coeffs):
    """
    Convert a monic low-first coefficient list over Q to a MonicIntPoly.

    Raises NonIntegralCoefficient naming the first offending power of X.
    """
    values = []
    for index, c in enumerate(coeffs):
        c = Fraction(c)
        if c.denominator != 1:
            raise NonIntegralCoefficient(index, c)
        values.append(c.numerator)
    return MonicIntPoly.from_dense(values)


def product(polys):
    result = MonicIntPoly.one()
    for poly in polys:
        result = result * poly
    return result
