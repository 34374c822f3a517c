"""
Discrete valuations on Q and F_p(t).

Q carries one p-adic valuation per prime. F_p(t) carries one pi-adic
valuation per monic irreducible pi and the degree valuation at infinity.
Together these are all discrete valuations of the two carriers, so an
element lies in every valuation ring iff it is integral over the prime ring.
"""

import enum
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy.ntheory import isprime, multiplicity, primefactors

from apps.core.exceptions import FieldMismatch, NotIrreducible, NotPrime

from . import polynomials as fp
from .fields import QQ, RationalFunctionField, common_field, rational_function_field

logger = logging.getLogger(__name__)


@functools.total_ordering
class _Infinity:
    """
    The value of nu(0): larger than every integer, absorbing under +.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("+inf")

    def __repr__(self):
        return "+inf"

    __str__ = __repr__


INFINITY = _Infinity()


class ValuationKind(str, enum.Enum):
    P_ADIC = "p-adic"
    PI_ADIC = "pi-adic"
    DEGREE = "degree"


@dataclass(frozen=True)
class Valuation:
    kind: ValuationKind
    field: object
    prime: int = None
    pi: tuple = None

    @classmethod
    def p_adic(cls, q):
        if not isprime(q):
            raise NotPrime(f"{q} is not prime")
        return cls(ValuationKind.P_ADIC, QQ, prime=q)

    @classmethod
    def pi_adic(cls, field, pi):
        if not isinstance(field, RationalFunctionField):
            raise FieldMismatch(f"pi-adic valuations live on F_p(t), not {field}")
        _, pi = fp.monic(fp.normalize(pi, field.p), field.p)
        if not fp.is_irreducible(pi, field.p):
            raise NotIrreducible(f"{fp.format_poly(pi)} is reducible over F_{field.p}")
        return cls(ValuationKind.PI_ADIC, field, pi=pi)

    @classmethod
    def degree(cls, field):
        if not isinstance(field, RationalFunctionField):
            raise FieldMismatch(f"the degree valuation lives on F_p(t), not {field}")
        return cls(ValuationKind.DEGREE, field)

    @property
    def label(self):
        if self.kind is ValuationKind.P_ADIC:
            return f"{self.prime}-adic"
        if self.kind is ValuationKind.PI_ADIC:
            text = fp.format_poly(self.pi)
            return f"{text}-adic" if len(self.pi) == 2 and self.pi[1] == 0 else f"({text})-adic"
        return "degree"

    def __str__(self):
        return self.label


def _poly_multiplicity(pi, f, p):
    count = 0
    q, r = fp.divmod_poly(f, pi, p)
    while not r:
        count += 1
        f = q
        q, r = fp.divmod_poly(f, pi, p)
    return count


def valuate(v, x):
    """
    nu(x) as an int, or INFINITY for x = 0.
    """
    x = v.field.coerce(x)
    if not x:
        return INFINITY
    if v.kind is ValuationKind.P_ADIC:
        return multiplicity(v.prime, x.numerator) - multiplicity(v.prime, x.denominator)
    if v.kind is ValuationKind.PI_ADIC:
        p = v.field.p
        return _poly_multiplicity(v.pi, x.num, p) - _poly_multiplicity(v.pi, x.den, p)
    return fp.degree(x.den) - fp.degree(x.num)


def in_valuation_ring(v, x):
    return valuate(v, x) >= 0


def relevant_valuations(entries):
    """
    Valuations at which some entry can fail to be integral.

    Q: one p-adic valuation per prime dividing a denominator. F_p(t): one
    pi-adic valuation per irreducible factor of a denominator, then the degree
    valuation. F_p: none.
    """
    field = common_field(entries)
    if field is None:
        return []
    if field == QQ:
        primes = set()
        for x in entries:
            primes.update(primefactors(Fraction(x).denominator))
        return [Valuation(ValuationKind.P_ADIC, QQ, prime=q) for q in sorted(primes)]
    if isinstance(field, RationalFunctionField):
        p = field.p
        factors = set()
        for x in entries:
            if len(x.den) > 1:
                factors.update(g for g, _ in fp.factor(x.den, p)[1])
        # gf_factor yields monic irreducibles
        result = [Valuation(ValuationKind.PI_ADIC, field, pi=g) for g in sorted(factors)]
        result.append(Valuation.degree(field))
        logger.debug("relevant valuations over %s: %s", field, [v.label for v in result])
        return result
    return []


def valuation_from_label(field, label):
    """
    Inverse of Valuation.label for the carrier ``field``.
    """
    if label == "degree":
        return Valuation.degree(field)
    head = label[: -len("-adic")] if label.endswith("-adic") else None
    if head is None:
        raise ValueError(f"not a valuation label: {label!r}")
    if field == QQ:
        return Valuation.p_adic(int(head))
    if isinstance(field, RationalFunctionField):
        return Valuation.pi_adic(field, fp.parse_poly(head.strip("()"), field.p))
    raise FieldMismatch(f"{field} carries no discrete valuations")


def t_adic(p):
    return Valuation(ValuationKind.PI_ADIC, rational_function_field(p), pi=(1, 0))
