from fractions import Fraction

import pytest

from apps.core.exceptions import (
    DimensionMismatch,
    FieldMismatch,
    NonIntegralCoefficient,
    ScalarParseError,
    SingularMatrix,
)
from apps.linalg.charpoly import char_poly, evaluate_polynomial
from apps.linalg.matrices import SquareMatrix, determinant, is_invertible, mat_inverse
from apps.linalg.polynomials import MonicIntPoly, product, to_int_poly
from apps.linalg.sampling import random_invertible, random_p_integral


class TestSquareMatrix:
    """Test dense matrices over exact fields."""

    def test_from_rows_coerces_ints(self, qq, make_matrix):
        """Test that int entries become field elements."""
        m = make_matrix(qq, [[1, 2], [3, 4]])
        assert m[1, 0] == Fraction(3)
        assert m.dim == 2

    def test_not_square(self, qq):
        """Test that ragged rows are refused."""
        with pytest.raises(DimensionMismatch):
            SquareMatrix.from_rows(qq, [[1, 2], [3]])
        with pytest.raises(DimensionMismatch):
            SquareMatrix.from_rows(qq, [])

    def test_equal_matrices_hash_equal(self, qq, make_matrix):
        """Test canonical keys."""
        a = make_matrix(qq, [[Fraction(2, 4), 0], [0, 1]])
        b = make_matrix(qq, [[Fraction(1, 2), 0], [0, 1]])
        assert a == b
        assert hash(a) == hash(b)
        assert a.key() == b.key()

    def test_product_and_power(self, rotation):
        """Test that a quarter turn has fourth power I."""
        assert not (rotation @ rotation).is_identity()
        assert rotation.power(4).is_identity()
        assert rotation.power(-1) == rotation.power(3)

    def test_mixed_fields(self, qq, f3, make_matrix):
        """Test that matrices over different fields do not multiply."""
        with pytest.raises(FieldMismatch):
            make_matrix(qq, [[1]]) @ make_matrix(f3, [[1]])

    def test_mixed_dimensions(self, qq, make_matrix):
        """Test that matrices of different sizes do not multiply."""
        with pytest.raises(DimensionMismatch):
            make_matrix(qq, [[1]]) @ make_matrix(qq, [[1, 0], [0, 1]])

    def test_prime_field_product(self, f3, make_matrix):
        """Test that the shear over F_3 has order 3."""
        shear = make_matrix(f3, [[1, 1], [0, 1]])
        assert shear.power(3).is_identity()
        assert not shear.power(2).is_identity()

    def test_trace_and_transpose(self, qq, make_matrix):
        """Test trace and transpose."""
        m = make_matrix(qq, [[1, 2], [3, 4]])
        assert m.trace() == 5
        assert m.transpose() == make_matrix(qq, [[1, 3], [2, 4]])

    def test_format_rows(self, qq, f5, make_matrix):
        """Test scalar text of matrix entries."""
        assert make_matrix(qq, [[Fraction(1, 2), -1], [0, 1]]).format_rows() == [
            ["1/2", "-1"],
            ["0", "1"],
        ]
        assert make_matrix(f5, [[4]]).format_rows() == [["4 mod 5"]]


class TestInverseAndDeterminant:
    """Test elimination-based operations."""

    def test_determinant(self, qq, make_matrix):
        """Test a 2x2 determinant over Q."""
        assert determinant(make_matrix(qq, [[1, 2], [3, 4]])) == -2

    def test_determinant_needs_pivot_swap(self, qq, make_matrix):
        """Test that a zero leading entry flips the sign."""
        assert determinant(make_matrix(qq, [[0, 1], [1, 0]])) == -1

    def test_singular(self, f2, make_matrix):
        """Test a singular matrix over F_2."""
        m = make_matrix(f2, [[1, 1], [1, 1]])
        assert not is_invertible(m)
        with pytest.raises(SingularMatrix):
            mat_inverse(m)

    def test_inverse_over_function_field(self, f2t):
        """Test diag(t, 1/t) times its inverse."""
        t = f2t.variable()
        m = SquareMatrix.diagonal(f2t, [t, t.inverse()])
        assert (m @ mat_inverse(m)).is_identity()

    def test_random_invertible(self, f5, rng):
        """Test that sampled matrices are invertible."""
        for _ in range(10):
            m = random_invertible(f5, 3, rng)
            assert (m @ mat_inverse(m)).is_identity()

    def test_random_p_integral(self, rng):
        """Test that sampled denominators are powers of p."""
        m = random_p_integral(3, 3, rng)
        assert all(Fraction(x).denominator in (1, 3) for x in m.entries())
        assert is_invertible(m)


class TestCharPoly:
    """Test division-free characteristic polynomials."""

    def test_two_by_two(self, qq, make_matrix):
        """Test det(XI - A) for a 2x2 rational matrix."""
        assert char_poly(make_matrix(qq, [[1, 2], [3, 4]])) == [-2, -5, 1]

    def test_one_by_one(self, qq, make_matrix):
        """Test the 1x1 case."""
        assert char_poly(make_matrix(qq, [[7]])) == [-7, 1]

    def test_rotation(self, rotation):
        """Test X^2 + 1."""
        assert char_poly(rotation) == [1, 0, 1]

    @pytest.mark.parametrize("fixture_name", ["qq", "f2", "f3", "f2t"])
    def test_cayley_hamilton(self, request, fixture_name, rng):
        """Test that every sampled matrix satisfies its characteristic polynomial."""
        field = request.getfixturevalue(fixture_name)
        for d in (1, 2, 3, 4):
            a = random_invertible(field, d, rng)
            coeffs = char_poly(a)
            assert len(coeffs) == d + 1
            assert coeffs[-1] == field.one()
            assert evaluate_polynomial(coeffs, a).is_zero()

    def test_constant_term_is_signed_determinant(self, f5, rng):
        """Test c_0 = (-1)^d det A."""
        a = random_invertible(f5, 3, rng)
        assert char_poly(a)[0] == -determinant(a)

    @pytest.mark.parametrize("fixture_name", ["qq", "f3", "f5", "f2t"])
    def test_trace_and_constant_coefficients(self, request, fixture_name, rng):
        """Test c_{d-1} = -tr A and c_0 = (-1)^d det A up to d = 5."""
        field = request.getfixturevalue(fixture_name)
        for d in range(1, 6):
            for _ in range(4):
                a = random_invertible(field, d, rng)
                coeffs = char_poly(a)
                det = determinant(a)
                assert coeffs[d - 1] == -a.trace()
                assert coeffs[0] == (det if d % 2 == 0 else -det)

    @pytest.mark.parametrize("fixture_name", ["qq", "f3", "f2t"])
    def test_block_triangular_product(self, request, fixture_name, rng):
        """Test that [[A, C], [0, B]] has char_poly(A) * char_poly(B)."""
        field = request.getfixturevalue(fixture_name)
        zero = field.zero()
        for _ in range(5):
            a, b, c = (random_invertible(field, 2, rng) for _ in range(3))
            rows = [list(a.rows[i]) + list(c.rows[i]) for i in range(2)]
            rows += [[zero, zero] + list(b.rows[i]) for i in range(2)]
            left, right = char_poly(a), char_poly(b)
            expected = [zero] * 5
            for i, x in enumerate(left):
                for j, y in enumerate(right):
                    expected[i + j] = expected[i + j] + x * y
            assert char_poly(SquareMatrix.from_rows(field, rows)) == expected


class TestMonicIntPoly:
    """Test monic integer polynomials."""

    def test_dense_includes_leading_one(self):
        """Test the dense coefficient list."""
        poly = MonicIntPoly((-1, 0))
        assert poly.degree == 2
        assert poly.dense() == [-1, 0, 1]
        assert str(poly) == "X^2 - 1"

    def test_parse(self):
        """Test polynomial text."""
        assert MonicIntPoly.parse("X^3 - 2X + 5") == MonicIntPoly((5, -2, 0))
        assert MonicIntPoly.parse("X + 1") == MonicIntPoly((1,))
        with pytest.raises(ScalarParseError):
            MonicIntPoly.parse("2X^2 + 1")
        with pytest.raises(ScalarParseError):
            MonicIntPoly.parse("Y + 1")

    def test_arithmetic(self):
        """Test (X - 1)(X + 1) = X^2 - 1 and exact division."""
        minus, plus = MonicIntPoly((-1,)), MonicIntPoly((1,))
        assert minus * plus == MonicIntPoly((-1, 0))
        assert plus.divides(MonicIntPoly((-1, 0)))
        assert not MonicIntPoly((0,)).divides(MonicIntPoly((-1, 0)))
        assert product([minus, plus, plus]) == MonicIntPoly((-1, -1, 1))

    def test_self_reciprocal(self):
        """Test palindromic and anti-palindromic coefficient lists."""
        assert MonicIntPoly((-1, 0)).is_self_reciprocal()
        assert MonicIntPoly((1, 1)).is_self_reciprocal()
        assert not MonicIntPoly((2, 0)).is_self_reciprocal()

    def test_to_int_poly(self):
        """Test integral and non-integral coefficient lists."""
        assert to_int_poly([Fraction(2), Fraction(-3), Fraction(1)]) == MonicIntPoly((2, -3))
        with pytest.raises(NonIntegralCoefficient) as excinfo:
            to_int_poly([Fraction(1), Fraction(-5, 2), Fraction(1)])
        assert excinfo.value.index == 1
        assert excinfo.value.coefficient == Fraction(-5, 2)
