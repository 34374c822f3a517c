"""
Finite fields F_{p^m} = F_p[a]/(f) and eigenvalues of matrices over F_p.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm

from sympy.ntheory import factorint

from apps.core.exceptions import DivisionByZero, FieldMismatch, NotIrreducible, NotTorsion
from apps.exactnum import polynomials as fp
from apps.exactnum.fields import PrimeField, RationalFunctionField
from apps.linalg.charpoly import char_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteFieldExtension:
    """
    F_p[a]/(modulus) for a monic irreducible modulus over F_p.
    """

    p: int
    modulus: tuple

    @classmethod
    def of_degree(cls, p, m):
        return cls(p, fp.first_irreducible(m, p))

    @classmethod
    def from_modulus(cls, p, modulus):
        _, modulus = fp.monic(fp.normalize(modulus, p), p)
        if not fp.is_irreducible(modulus, p):
            raise NotIrreducible(f"{fp.format_poly(modulus, 'a')} is reducible over F_{p}")
        return cls(p, modulus)

    @property
    def degree(self):
        return fp.degree(self.modulus)

    @property
    def size(self):
        return self.p**self.degree

    def element(self, coeffs):
        return ExtensionElement(fp.rem(fp.normalize(coeffs, self.p), self.modulus, self.p), self)

    def zero(self):
        return ExtensionElement(fp.ZERO, self)

    def one(self):
        return ExtensionElement(fp.ONE, self)

    def generator(self):
        """
        The class of a, a root of the modulus.
        """
        return self.element((1, 0))

    def elements(self):
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield self.element(coeffs)

    @cached_property
    def primitive_element(self):
        """
        First element, in lexicographic order, generating the unit group.
        """
        n = self.size - 1
        primes = list(factorint(n))
        for x in self.elements():
            if x and all(x ** (n // r) != self.one() for r in primes):
                return x
        raise ValueError(f"no primitive element in {self}")

    def evaluate(self, f, x):
        """
        Value at x of a polynomial f over F_p (high-first tuple).
        """
        acc = self.zero()
        for c in f:
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.degree == 1:
            return f"F_{self.p}"
        return f"F_{self.size} = F_{self.p}[a]/({fp.format_poly(self.modulus, 'a')})"


@dataclass(frozen=True)
class ExtensionElement:
    coeffs: tuple
    field: FiniteFieldExtension

    def _lift(self, other):
        if isinstance(other, ExtensionElement):
            if other.field != self.field:
                raise FieldMismatch(f"elements of {self.field} and {other.field} mixed")
            return other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return fp.constant(other, self.field.p)
        raise FieldMismatch(f"cannot combine {self.field} element with {other!r}")

    def __add__(self, other):
        return self.field.element(fp.add(self.coeffs, self._lift(other), self.field.p))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.element(fp.sub(self.coeffs, self._lift(other), self.field.p))

    def __neg__(self):
        return self.field.element(fp.neg(self.coeffs, self.field.p))

    def __mul__(self, other):
        return self.field.element(fp.mul(self.coeffs, self._lift(other), self.field.p))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        if not self:
            raise DivisionByZero(f"zero is not invertible in {self.field}")
        return self ** (self.field.size - 2)

    def frobenius(self):
        return self**self.field.p

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return fp.format_poly(self.coeffs, "a")


def multiplicative_order(x):
    """
    Least k >= 1 with x^k = 1, found by stripping prime factors of p^m - 1.
    """
    if not x:
        raise DivisionByZero("zero has no multiplicative order")
    one = x.field.one()
    n = x.field.size - 1
    for r, e in factorint(n).items():
        for _ in range(e):
            if x ** (n // r) != one:
                break
            n //= r
    return n


def _prime_residues(a):
    """
    Char-poly coefficients of A as residues mod p, high degree first.
    """
    field = a.field
    coeffs = char_poly(a)
    if isinstance(field, PrimeField):
        residues = [c.residue for c in coeffs]
    elif isinstance(field, RationalFunctionField):
        for index, c in enumerate(coeffs):
            if not c.is_constant():
                raise NotTorsion(
                    f"coefficient of X^{index} in the characteristic polynomial is "
                    f"not constant: {c}"
                )
        residues = [c.constant_value() for c in coeffs]
    else:
        raise FieldMismatch(f"eigenvalues in a finite field need characteristic p, not {field}")
    return field.characteristic, tuple(reversed(residues))


def roots_in(extension, g):
    """
    All roots of the monic irreducible g inside ``extension``.

    A root has the same multiplicative order as the class of a in
    F_p[a]/(g); candidates are the elements of that order, tested in turn,
    and the rest are its Frobenius conjugates.
    """
    p = extension.p
    e = fp.degree(g)
    if e == 1:
        return [extension.element((-g[1],))]
    small = FiniteFieldExtension(p, g)
    o = multiplicative_order(small.generator())
    base = extension.primitive_element ** ((extension.size - 1) // o)
    root = None
    for j in range(1, o + 1):
        if gcd(j, o) != 1:
            continue
        candidate = base**j
        if not extension.evaluate(g, candidate):
            root = candidate
            break
    if root is None:
        raise ValueError(f"{fp.format_poly(g, 'X')} does not split in {extension}")
    roots = [root]
    for _ in range(e - 1):
        roots.append(roots[-1].frobenius())
    return roots


def splitting_field_eigenvalues(a):
    """
    Eigenvalues of A with multiplicity in F_{p^m}, m the lcm of the degrees
    of the irreducible factors of its characteristic polynomial.

    Returns ([(eigenvalue, multiplicity), ...], m). Over F_p(t) the
    characteristic polynomial must have constant coefficients; otherwise
    NotTorsion is raised.
    """
    p, f = _prime_residues(a)
    _, factors = fp.factor(f, p)
    m = lcm(*(fp.degree(g) for g, _ in factors)) if factors else 1
    extension = FiniteFieldExtension.of_degree(p, m)
    logger.debug(
        "char poly factor degrees %s over F_%d; splitting field %s",
        [fp.degree(g) for g, _ in factors], p, extension,
    )
    eigenvalues = []
    for g, k in factors:
        for root in roots_in(extension, g):
            eigenvalues.append((root, k))
    eigenvalues.sort(key=lambda pair: pair[0].coeffs)
    return eigenvalues, m
