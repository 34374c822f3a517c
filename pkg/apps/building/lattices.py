"""
Vertices of the building of GL_d over Q with the p-adic valuation.

A vertex is a homothety class of full-rank Z_(p)-lattices in Q^d, stored as
the canonical upper-triangular basis of one representative: column j holds
p^{a_j} on the diagonal, min a_j = 0, and every entry above a diagonal entry
p^{a_i} is reduced to the interval [0, p^{a_i}) inside Z[1/p].
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from apps.core.exceptions import SingularMatrix
from apps.exactnum.fields import QQ
from apps.exactnum.valuations import INFINITY, Valuation, valuate
from apps.linalg.matrices import SquareMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeVertex:
    p: int
    basis: tuple

    @property
    def d(self):
        return len(self.basis)

    @property
    def exponents(self):
        """
        a_1, ..., a_d with diagonal entries p^{a_i}.
        """
        nu = Valuation.p_adic(self.p)
        return [valuate(nu, self.basis[i][i]) for i in range(self.d)]

    @property
    def diag(self):
        return [int(self.basis[i][i]) for i in range(self.d)]

    @property
    def type(self):
        return vertex_type(self)

    def matrix(self):
        return SquareMatrix(QQ, self.basis)

    def format_basis(self):
        return SquareMatrix(QQ, self.basis).format_rows()

    def __str__(self):
        return f"[{self.p}-lattice diag={self.diag}]"


def _p_adic_split(x, p):
    """
    x = u * p^v with u a p-adic unit; returns (v, u).
    """
    v = valuate(Valuation.p_adic(p), x)
    return v, x / Fraction(p) ** v


def _reduce(x, a, p):
    """
    Representative of x modulo p^a Z_(p) in Z[1/p] cap [0, p^a).
    """
    if x == 0:
        return Fraction(0)
    v, _ = _p_adic_split(x, p)
    k = max(0, -v)
    scaled = x * p**k
    modulus = p ** (a + k)
    residue = scaled.numerator * pow(scaled.denominator, -1, modulus) % modulus
    return Fraction(residue, p**k)


def canonicalize(m, p):
    """
    Canonical vertex of the lattice spanned by the columns of ``m``.

    ``m`` is an invertible SquareMatrix over Q (or its rows). Only the
    p-adic structure matters: other primes are units in Z_(p).
    """
    rows = m.rows if isinstance(m, SquareMatrix) else m
    d = len(rows)
    cols = [[Fraction(rows[i][j]) for i in range(d)] for j in range(d)]
    for i in range(d - 1, -1, -1):
        best, best_v = None, INFINITY
        for j in range(i + 1):
            x = cols[j][i]
            if x:
                v, _ = _p_adic_split(x, p)
                if v < best_v:
                    best, best_v = j, v
        if best is None:
            raise SingularMatrix(f"lattice generators are linearly dependent (row {i})")
        cols[i], cols[best] = cols[best], cols[i]
        _, unit = _p_adic_split(cols[i][i], p)
        cols[i] = [x / unit for x in cols[i]]
        pivot = cols[i][i]
        for j in range(i):
            factor = cols[j][i] / pivot
            if factor:
                cols[j] = [x - factor * y for x, y in zip(cols[j], cols[i])]
    exponents = [_p_adic_split(cols[i][i], p)[0] for i in range(d)]
    shift = Fraction(p) ** min(exponents)
    cols = [[x / shift for x in col] for col in cols]
    exponents = [a - min(exponents) for a in exponents]
    for j in range(d):
        for i in range(j - 1, -1, -1):
            x = cols[j][i]
            r = _reduce(x, exponents[i], p)
            if r != x:
                q = (x - r) / cols[i][i]
                cols[j] = [y - q * z for y, z in zip(cols[j], cols[i])]
    basis = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    return LatticeVertex(p, basis)


def standard_vertex(p, d):
    return canonicalize(SquareMatrix.identity(QQ, d), p)


def vertex_type(v):
    """
    nu_p(det basis) mod d.
    """
    return sum(v.exponents) % v.d


def gaussian_binomial(n, k, q):
    """
    Number of k-dimensional subspaces of F_q^n.
    """
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def neighbor_count(p, d):
    """
    Proper nonzero subspaces of F_p^d, the degree of every vertex.
    """
    return sum(gaussian_binomial(d, k, p) for k in range(1, d))


def subspaces(d, p):
    """
    Proper nonzero subspaces of F_p^d as reduced row echelon bases.
    """
    for k in range(1, d):
        for pivots in itertools.combinations(range(d), k):
            free = [
                (r, c)
                for r, pivot in enumerate(pivots)
                for c in range(pivot + 1, d)
                if c not in pivots
            ]
            for values in itertools.product(range(p), repeat=len(free)):
                basis = [[0] * d for _ in range(k)]
                for r, pivot in enumerate(pivots):
                    basis[r][pivot] = 1
                for (r, c), value in zip(free, values):
                    basis[r][c] = value
                yield pivots, basis


def _sublattice_columns(d, p, pivots, basis):
    """
    Columns spanning the lift of a subspace plus pZ^d.
    """
    columns = [list(row) for row in basis]
    for j in range(d):
        if j not in pivots:
            columns.append([p if i == j else 0 for i in range(d)])
    return columns


def neighbors(v):
    """
    Every vertex [L'] with pL < L' < L, one per proper nonzero subspace of
    L/pL.
    """
    d, p = v.d, v.p
    result = []
    for pivots, basis in subspaces(d, p):
        columns = _sublattice_columns(d, p, pivots, basis)
        generating = [
            [sum(v.basis[i][k] * columns[j][k] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]
        result.append(canonicalize(generating, p))
    return result
