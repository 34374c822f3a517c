"""
Field descriptors for Q, F_p and F_p(t), with the scalar text format.
"""

import re
from fractions import Fraction
from functools import lru_cache

from sympy.ntheory import isprime

from apps.core.exceptions import (
    DivisionByZero,
    FieldMismatch,
    MalformedInput,
    NotPrime,
    ScalarParseError,
)

from . import polynomials as fp
from .scalars import PrimeFieldElem, RationalFunction

MACHINE_WORD = 2**63

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")
_MOD = re.compile(r"^\s*([+-]?\d+)\s*(?:mod\s+(\d+))?\s*$")
_OVER = re.compile(r"\s*over\s+F_?(\d+)\s*\[\s*t\s*\]\s*$")
_FRACTION = re.compile(r"^\s*\((.*)\)\s*/\s*\((.*)\)\s*$")
_PARENS = re.compile(r"^\s*\((.*)\)\s*$")


class ExactField:
    """
    Common interface of the three supported fields.
    """

    tag = ""
    characteristic = 0

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        raise NotImplementedError

    def contains(self, x):
        raise NotImplementedError

    def coerce(self, x):
        if isinstance(x, int) and not isinstance(x, bool):
            return self.from_int(x)
        if not self.contains(x):
            raise FieldMismatch(f"{x!r} is not an element of {self}")
        return x

    def parse(self, text):
        raise NotImplementedError

    def format(self, x):
        return str(self.coerce(x))

    def descriptor(self):
        raise NotImplementedError


class RationalField(ExactField):
    tag = "Q"

    def from_int(self, n):
        return Fraction(n)

    def contains(self, x):
        return isinstance(x, Fraction)

    def parse(self, text):
        match = _RATIONAL.match(str(text))
        if not match:
            raise ScalarParseError(f"cannot parse rational {text!r}")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den is not None else 1)

    def format(self, x):
        x = self.coerce(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def descriptor(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(ExactField):
    tag = "Fp"

    def __init__(self, p):
        if not isinstance(p, int) or p >= MACHINE_WORD or not isprime(p):
            raise NotPrime(f"{p!r} is not a prime below 2^63")
        self.p = p
        self.characteristic = p

    def from_int(self, n):
        return PrimeFieldElem(n % self.p, self.p)

    def contains(self, x):
        return isinstance(x, PrimeFieldElem) and x.p == self.p

    def parse(self, text):
        match = _MOD.match(str(text))
        if not match:
            raise ScalarParseError(f"cannot parse F_{self.p} element {text!r}")
        modulus = match.group(2)
        if modulus is not None and int(modulus) != self.p:
            raise ScalarParseError(f"{text!r} is not an element of F_{self.p}")
        return self.from_int(int(match.group(1)))

    def descriptor(self):
        return ["Fp", self.p]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class RationalFunctionField(ExactField):
    tag = "Fp(t)"

    def __init__(self, p):
        self.base = prime_field(p)
        self.p = p
        self.characteristic = p

    def from_int(self, n):
        return RationalFunction.constant(n, self.p)

    def variable(self):
        return RationalFunction.variable(self.p)

    def contains(self, x):
        return isinstance(x, RationalFunction) and x.p == self.p

    def parse(self, text):
        text = str(text)
        over = _OVER.search(text)
        if over:
            if int(over.group(1)) != self.p:
                raise ScalarParseError(f"{text!r} is not an element of F_{self.p}(t)")
            text = text[: over.start()]
        fraction = _FRACTION.match(text)
        if fraction:
            num_text, den_text = fraction.groups()
        else:
            parens = _PARENS.match(text)
            num_text, den_text = (parens.group(1) if parens else text), "1"
        num = fp.parse_poly(num_text, self.p)
        den = fp.parse_poly(den_text, self.p)
        try:
            return RationalFunction.from_parts(num, den, self.p)
        except DivisionByZero as exc:
            raise ScalarParseError(f"zero denominator in {text!r}") from exc

    def descriptor(self):
        return ["Fp(t)", self.p]

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp(t)", self.p))

    def __repr__(self):
        return f"F_{self.p}(t)"


QQ = RationalField()


@lru_cache(maxsize=None)
def prime_field(p):
    return PrimeField(p)


@lru_cache(maxsize=None)
def rational_function_field(p):
    return RationalFunctionField(p)


def field_of(x):
    """
    Carrier field of a scalar; plain ints are read as rationals.
    """
    if isinstance(x, Fraction) or (isinstance(x, int) and not isinstance(x, bool)):
        return QQ
    if isinstance(x, PrimeFieldElem):
        return prime_field(x.p)
    if isinstance(x, RationalFunction):
        return rational_function_field(x.p)
    raise FieldMismatch(f"{x!r} is not an exact scalar")


def common_field(values):
    fields = {field_of(x) for x in values}
    if len(fields) > 1:
        raise FieldMismatch(f"scalars from several fields: {sorted(map(repr, fields))}")
    return fields.pop() if fields else None


def field_from_descriptor(descriptor):
    """
    Accepts "Q", ["Fp", p], ["Fp(t)", p] or {"name": ..., "p": ...}.
    """
    if isinstance(descriptor, dict):
        name, p = descriptor.get("name"), descriptor.get("p")
    elif isinstance(descriptor, (list, tuple)) and descriptor:
        name = descriptor[0]
        p = descriptor[1] if len(descriptor) > 1 else None
    else:
        name, p = descriptor, None
    if name == "Q":
        return QQ
    if name not in ("Fp", "Fp(t)"):
        raise MalformedInput(f"unknown field descriptor {descriptor!r}")
    if isinstance(p, bool) or not isinstance(p, int):
        raise MalformedInput(f"field {name} needs an integer prime p, got {p!r}")
    if name == "Fp":
        return prime_field(p)
    return rational_function_field(p)


def parse_scalar(field, text):
    return field.parse(text)


def format_scalar(field, x):
    return field.format(x)


_OPERATIONS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arithmetic(a, b, op):
    """
    Exact a <op> b for two scalars of one field, op in add/sub/mul/div.
    """
    if op not in _OPERATIONS:
        raise ValueError(f"unknown operation {op!r}")
    field = field_of(a)
    if field_of(b) != field:
        raise FieldMismatch(f"{field} and {field_of(b)} scalars mixed")
    a, b = field.coerce(a), field.coerce(b)
    if op == "div" and not b:
        raise DivisionByZero(f"division by zero in {field}")
    return _OPERATIONS[op](a, b)
