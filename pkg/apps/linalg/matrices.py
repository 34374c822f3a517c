"""
Dense square matrices over one exact field.
"""

from dataclasses import dataclass

from apps.core.exceptions import DimensionMismatch, FieldMismatch, SingularMatrix
from apps.exactnum.fields import PrimeField
from apps.exactnum.scalars import PrimeFieldElem


@dataclass(frozen=True)
class SquareMatrix:
    """
    Immutable d x d matrix; entries are kept in canonical form, so equal
    matrices compare and hash equal.
    """

    field: object
    rows: tuple

    @classmethod
    def from_rows(cls, field, rows):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        d = len(rows)
        if d < 1 or any(len(row) != d for row in rows):
            raise DimensionMismatch(f"expected a square matrix, got row lengths "
                                    f"{[len(row) for row in rows]}")
        return cls(field, rows)

    @classmethod
    def identity(cls, field, d):
        zero, one = field.zero(), field.one()
        return cls(field, tuple(
            tuple(one if i == j else zero for j in range(d)) for i in range(d)
        ))

    @classmethod
    def zeros(cls, field, d):
        zero = field.zero()
        return cls(field, tuple(tuple(zero for _ in range(d)) for _ in range(d)))

    @classmethod
    def diagonal(cls, field, values):
        d = len(values)
        zero = field.zero()
        return cls(field, tuple(
            tuple(field.coerce(values[i]) if i == j else zero for j in range(d))
            for i in range(d)
        ))

    @property
    def dim(self):
        return len(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def entries(self):
        return [x for row in self.rows for x in row]

    def key(self):
        """
        Hashable canonical form: field tag and row-major entries.
        """
        return (repr(self.field), self.rows)

    def _check(self, other):
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected a SquareMatrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"matrices over {self.field} and {other.field}")
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim}")

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        self._check(other)
        return SquareMatrix(self.field, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __sub__(self, other):
        self._check(other)
        return SquareMatrix(self.field, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def scale(self, c):
        c = self.field.coerce(c)
        return SquareMatrix(self.field, tuple(tuple(c * x for x in row) for row in self.rows))

    def transpose(self):
        return SquareMatrix(self.field, tuple(zip(*self.rows)))

    def trace(self):
        total = self.field.zero()
        for i in range(self.dim):
            total = total + self.rows[i][i]
        return total

    def is_zero(self):
        return not any(x for row in self.rows for x in row)

    def is_identity(self):
        return self == SquareMatrix.identity(self.field, self.dim)

    def power(self, n):
        if n < 0:
            return mat_inverse(self).power(-n)
        result = SquareMatrix.identity(self.field, self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def format_rows(self):
        return [[self.field.format(x) for x in row] for row in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.format_rows()) + "]"


def _mul_prime_field(a, b, p):
    d = a.dim
    left = [[x.residue for x in row] for row in a.rows]
    right_cols = [[b.rows[k][j].residue for k in range(d)] for j in range(d)]
    return tuple(
        tuple(
            PrimeFieldElem(sum(x * y for x, y in zip(row, col)) % p, p)
            for col in right_cols
        )
        for row in left
    )


def mat_mul(a, b):
    a._check(b)
    if isinstance(a.field, PrimeField):
        return SquareMatrix(a.field, _mul_prime_field(a, b, a.field.p))
    zero = a.field.zero()
    cols = list(zip(*b.rows))
    rows = []
    for row in a.rows:
        out = []
        for col in cols:
            total = zero
            for x, y in zip(row, col):
                if x and y:
                    total = total + x * y
            out.append(total)
        rows.append(tuple(out))
    return SquareMatrix(a.field, tuple(rows))


def mat_inverse(a):
    """
    Gauss-Jordan elimination on [A | I].
    """
    field, d = a.field, a.dim
    zero, one = field.zero(), field.one()
    work = [list(row) + [one if i == j else zero for j in range(d)]
            for i, row in enumerate(a.rows)]
    for col in range(d):
        pivot = next((r for r in range(col, d) if work[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"matrix is singular over {field}")
        work[col], work[pivot] = work[pivot], work[col]
        inv = one / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(d):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return SquareMatrix(field, tuple(tuple(row[d:]) for row in work))


def determinant(a):
    """
    Bareiss fraction-free elimination; every division is exact.
    """
    field, d = a.field, a.dim
    work = [list(row) for row in a.rows]
    sign = 1
    previous = field.one()
    for k in range(d - 1):
        if not work[k][k]:
            swap = next((r for r in range(k + 1, d) if work[r][k]), None)
            if swap is None:
                return field.zero()
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) / previous
        previous = work[k][k]
    result = work[d - 1][d - 1]
    return result if sign > 0 else -result


def is_invertible(a):
    return bool(determinant(a))
