"""
Scalar types for the prime fields F_p and the rational function fields F_p(t).

Rationals are plain fractions.Fraction values. Mixing scalars of two
different fields raises FieldMismatch; plain ints coerce into any field.
"""

from dataclasses import dataclass
from fractions import Fraction

from apps.core.exceptions import DivisionByZero, FieldMismatch

from . import polynomials as fp

Rational = Fraction


@dataclass(frozen=True, slots=True)
class PrimeFieldElem:
    """
    Residue class modulo a prime p, always stored as the least residue.
    """

    residue: int
    p: int

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p} scalars mixed")
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.p
        raise FieldMismatch(f"cannot combine F_{self.p} scalar with {other!r}")

    def _make(self, residue):
        return PrimeFieldElem(residue % self.p, self.p)

    def __add__(self, other):
        return self._make(self.residue + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._make(self.residue - self._coerce(other))

    def __rsub__(self, other):
        return self._make(self._coerce(other) - self.residue)

    def __mul__(self, other):
        return self._make(self.residue * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        divisor = self._coerce(other)
        if divisor == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return self._make(self.residue * pow(divisor, -1, self.p))

    def __rtruediv__(self, other):
        return self._make(self._coerce(other)) / self

    def __neg__(self):
        return self._make(-self.residue)

    def __pow__(self, n):
        if n < 0:
            return (self._make(1) / self) ** (-n)
        return self._make(pow(self.residue, n, self.p))

    def __bool__(self):
        return self.residue != 0

    def inverse(self):
        return self._make(1) / self

    def __str__(self):
        return f"{self.residue} mod {self.p}"


@dataclass(frozen=True, slots=True)
class RationalFunction:
    """
    Reduced fraction num/den of polynomials over F_p with den monic.

    Build instances through ``RationalFunction.from_parts`` so the canonical
    form holds.
    """

    num: tuple
    den: tuple
    p: int

    @classmethod
    def from_parts(cls, num, den, p):
        num = fp.normalize(num, p)
        den = fp.normalize(den, p)
        if not den:
            raise DivisionByZero(f"zero denominator in F_{p}(t)")
        if not num:
            return cls(fp.ZERO, fp.ONE, p)
        g = fp.gcd(num, den, p)
        num, den = fp.quo(num, g, p), fp.quo(den, g, p)
        lc, den = fp.monic(den, p)
        num = fp.scale(num, pow(lc, -1, p), p)
        return cls(num, den, p)

    @classmethod
    def constant(cls, c, p):
        return cls.from_parts((c,), fp.ONE, p)

    @classmethod
    def variable(cls, p):
        return cls.from_parts((1, 0), fp.ONE, p)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p}(t) and F_{other.p}(t) mixed")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RationalFunction.constant(other, self.p)
        raise FieldMismatch(f"cannot combine F_{self.p}(t) scalar with {other!r}")

    def __add__(self, other):
        o = self._coerce(other)
        p = self.p
        if self.den == o.den:
            return RationalFunction.from_parts(fp.add(self.num, o.num, p), self.den, p)
        num = fp.add(fp.mul(self.num, o.den, p), fp.mul(o.num, self.den, p), p)
        return RationalFunction.from_parts(num, fp.mul(self.den, o.den, p), p)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(fp.neg(self.num, self.p), self.den, self.p)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        p = self.p
        num = fp.mul(self.num, o.num, p)
        return RationalFunction.from_parts(num, fp.mul(self.den, o.den, p), p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if not o.num:
            raise DivisionByZero(f"division by zero in F_{self.p}(t)")
        p = self.p
        num = fp.mul(self.num, o.den, p)
        return RationalFunction.from_parts(num, fp.mul(self.den, o.num, p), p)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return (RationalFunction.constant(1, self.p) / self) ** (-n)
        result = RationalFunction.constant(1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.num)

    def inverse(self):
        return RationalFunction.constant(1, self.p) / self

    def is_constant(self):
        return len(self.num) <= 1 and self.den == fp.ONE

    def constant_value(self):
        """
        Residue of a constant rational function (0 for the zero function).
        """
        return self.num[0] if self.num else 0

    def __str__(self):
        num = fp.format_poly(self.num)
        den = fp.format_poly(self.den)
        return f"({num})/({den}) over F_{self.p}[t]"


def is_scalar(x):
    return isinstance(x, (Fraction, PrimeFieldElem, RationalFunction)) or (
        isinstance(x, int) and not isinstance(x, bool)
    )
