"""
Univariate polynomials over a prime field F_p.

A polynomial is a tuple of residues, highest degree first, with no leading
zeros; the zero polynomial is the empty tuple. Arithmetic is delegated to
sympy's galoistools.
"""

import itertools
import re

from sympy.polys import galoistools as gf
from sympy.polys.domains import ZZ

from apps.core.exceptions import ScalarParseError

ZERO = ()
ONE = (1,)

_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([a-zA-Z])(?:\^(\d+))?)?$")


def _in(f):
    return [ZZ(c) for c in f]


def _out(f):
    return tuple(int(c) for c in f)


def normalize(coeffs, p):
    return _out(gf.gf_strip([ZZ(int(c) % p) for c in coeffs]))


def constant(c, p):
    return normalize((c,), p)


def degree(f):
    return len(f) - 1


def add(f, g, p):
    return _out(gf.gf_add(_in(f), _in(g), p, ZZ))


def sub(f, g, p):
    return _out(gf.gf_sub(_in(f), _in(g), p, ZZ))


def mul(f, g, p):
    return _out(gf.gf_mul(_in(f), _in(g), p, ZZ))


def neg(f, p):
    return _out(gf.gf_neg(_in(f), p, ZZ))


def scale(f, c, p):
    return _out(gf.gf_mul_ground(_in(f), ZZ(c % p), p, ZZ))


def divmod_poly(f, g, p):
    q, r = gf.gf_div(_in(f), _in(g), p, ZZ)
    return _out(q), _out(r)


def quo(f, g, p):
    return _out(gf.gf_quo(_in(f), _in(g), p, ZZ))


def rem(f, g, p):
    return _out(gf.gf_rem(_in(f), _in(g), p, ZZ))


def gcd(f, g, p):
    return _out(gf.gf_gcd(_in(f), _in(g), p, ZZ))


def monic(f, p):
    """
    Return (leading coefficient, monic associate).
    """
    lc, h = gf.gf_monic(_in(f), p, ZZ)
    return int(lc), _out(h)


def factor(f, p):
    """
    Factor a nonzero polynomial into monic irreducibles.

    Returns (leading coefficient, [(factor, multiplicity), ...]) with the
    factors in sympy's sorted order.
    """
    lc, factors = gf.gf_factor(_in(f), p, ZZ)
    return int(lc), [(_out(g), int(k)) for g, k in factors]


def evaluate(f, x, one):
    """
    Horner evaluation of f at x, where x supports + and * with ints.
    """
    acc = one * 0
    for c in f:
        acc = acc * x + c
    return acc


def monic_polynomials(n, p):
    for tail in itertools.product(range(p), repeat=n):
        yield (1,) + tail


def is_irreducible(f, p):
    """
    Trial division by every monic polynomial of degree at most deg(f) / 2.
    """
    f = normalize(f, p)
    n = degree(f)
    if n < 1:
        return False
    for k in range(1, n // 2 + 1):
        for g in monic_polynomials(k, p):
            if not rem(f, g, p):
                return False
    return True


def format_poly(f, var="t"):
    if not f:
        return "0"
    n = degree(f)
    terms = []
    for i, c in enumerate(f):
        k = n - i
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        power = var if k == 1 else f"{var}^{k}"
        terms.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(terms)


def parse_poly(text, p, var="t"):
    """
    Parse the sparse form "c*t^k + ..." into a normalized polynomial.

    Signs are allowed on any term; coefficients are reduced modulo p.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ScalarParseError(f"empty polynomial over F_{p}")
    if compact[0] not in "+-":
        compact = "+" + compact
    terms = re.findall(r"[+-][^+-]*", compact)
    if "".join(terms) != compact:
        raise ScalarParseError(f"cannot parse polynomial {text!r}")
    coeffs = {}
    for term in terms:
        sign, body = term[0], term[1:]
        match = _TERM.match(body)
        if not body or not match or (match.group(2) and match.group(2) != var):
            raise ScalarParseError(f"cannot parse term {term!r} in {text!r}")
        digits, symbol, exponent = match.groups()
        if not digits and not symbol:
            raise ScalarParseError(f"cannot parse term {term!r} in {text!r}")
        c = int(digits) if digits else 1
        k = (int(exponent) if exponent else 1) if symbol else 0
        if sign == "-":
            c = -c
        coeffs[k] = coeffs.get(k, 0) + c
    top = max(coeffs)
    return normalize([coeffs.get(k, 0) for k in range(top, -1, -1)], p)


def first_irreducible(m, p):
    """
    Lexicographically first monic irreducible polynomial of degree m.
    """
    if m == 1:
        return (1, 0)
    for f in monic_polynomials(m, p):
        if gf.gf_irreducible_p(_in(f), p, ZZ):
            return f
    raise ValueError(f"no irreducible of degree {m} over F_{p}")
