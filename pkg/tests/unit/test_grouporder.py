from fractions import Fraction
from unittest import mock

import pytest

from apps.core.conf import rigidity_setting
from apps.core.exceptions import (
    FieldMismatch,
    MalformedInput,
    NotIrreducible,
    NotTorsion,
    OrderVerificationError,
    SingularMatrix,
)
from apps.grouporder.closure import ClosureStatus, group_closure
from apps.grouporder.export import cayley_to_dot
from apps.grouporder.extension import (
    FiniteFieldExtension,
    multiplicative_order,
    splitting_field_eigenvalues,
)
from apps.grouporder.orders import (
    NON_INTEGRAL,
    NOT_CONSTANT,
    NOT_DIAGONALIZABLE,
    NOT_UNIT_CIRCLE,
    OrderMethod,
    brute_force_order,
    compute_order,
    exact_order_dividing,
    least_power_at_least,
    order_char_p,
    order_rational,
    verify_order,
)
from apps.grouporder.serializers import ClosureResultSerializer, OrderResultSerializer
from apps.grouporder.services import order_request
from apps.linalg.matrices import SquareMatrix
from apps.linalg.sampling import random_invertible


def jordan(field, d):
    return SquareMatrix.from_rows(
        field, [[1 if j in (i, i + 1) else 0 for j in range(d)] for i in range(d)]
    )


class TestFiniteFieldExtension:
    """Test F_{p^m} arithmetic."""

    def test_of_degree(self):
        """Test F_4 built on the first irreducible quadratic."""
        f4 = FiniteFieldExtension.of_degree(2, 2)
        assert f4.modulus == (1, 1, 1)
        assert f4.size == 4
        assert multiplicative_order(f4.generator()) == 3
        assert len(list(f4.elements())) == 4

    def test_reducible_modulus(self):
        """Test that a reducible modulus is refused."""
        with pytest.raises(NotIrreducible):
            FiniteFieldExtension.from_modulus(2, (1, 0, 1))

    def test_inverse(self):
        """Test inverses in F_9."""
        f9 = FiniteFieldExtension.of_degree(3, 2)
        for x in f9.elements():
            if x:
                assert x * x.inverse() == f9.one()

    def test_primitive_element(self):
        """Test that the primitive element of F_8 has order 7."""
        f8 = FiniteFieldExtension.of_degree(2, 3)
        assert multiplicative_order(f8.primitive_element) == 7

    def test_eigenvalues_of_companion_matrix(self, f2, make_matrix):
        """Test eigenvalues of a matrix with irreducible quadratic char poly."""
        eigenvalues, m = splitting_field_eigenvalues(make_matrix(f2, [[0, 1], [1, 1]]))
        assert m == 2
        assert len(eigenvalues) == 2
        assert all(mult == 1 for _, mult in eigenvalues)


class TestOrderCharP:
    """Test orders in characteristic p."""

    def test_least_power(self):
        """Test the least p-power bound."""
        assert least_power_at_least(2, 1) == 1
        assert least_power_at_least(2, 3) == 4
        assert least_power_at_least(3, 4) == 9

    @pytest.mark.parametrize("d, expected", [(1, 1), (2, 2), (3, 4), (5, 8)])
    def test_jordan_block_over_f2(self, f2, d, expected):
        """Test the unipotent Jordan block over F_2."""
        result = order_char_p(jordan(f2, d))
        assert result.order == expected
        assert result.eigenvalue_orders == [1]
        assert result.method is OrderMethod.CHAR_P

    def test_companion_matrix(self, f2, make_matrix):
        """Test an element of order 3 whose eigenvalues live in F_4."""
        result = order_char_p(make_matrix(f2, [[0, 1], [1, 1]]))
        assert result.order == 3
        assert result.extension_degree == 2
        assert result.semisimple_order == 3
        assert result.unipotent_exponent == 2

    def test_agrees_with_brute_force(self, f3, rng):
        """Test sampled matrices over F_3."""
        for _ in range(20):
            a = random_invertible(f3, 3, rng)
            assert order_char_p(a).order == brute_force_order(a, 10 * 3**3)

    def test_constant_matrix_over_function_field(self, f2t, make_matrix):
        """Test a constant shear over F_2(t)."""
        assert order_char_p(make_matrix(f2t, [[1, 1], [0, 1]])).order == 2

    def test_non_constant_char_poly(self, f2t):
        """Test that diag(t, 1/t) is not torsion."""
        t = f2t.variable()
        with pytest.raises(NotTorsion):
            order_char_p(SquareMatrix.diagonal(f2t, [t, t.inverse()]))

    def test_wrong_field(self, rotation):
        """Test that Q matrices are refused."""
        with pytest.raises(FieldMismatch):
            order_char_p(rotation)

    def test_singular(self, f3, make_matrix):
        """Test that a singular matrix has no order."""
        with pytest.raises(SingularMatrix):
            order_char_p(make_matrix(f3, [[1, 2], [2, 1]]))


class TestOrderRational:
    """Test cyclotomic orders over Q."""

    def test_rotation(self, rotation):
        """Test the quarter turn."""
        result = order_rational(rotation)
        assert result.order == 4
        assert result.cyclotomic_indices == [(4, 1)]

    def test_order_six(self, qq, make_matrix):
        """Test a matrix with characteristic polynomial Phi_6."""
        assert order_rational(make_matrix(qq, [[0, 1], [-1, 1]])).order == 6

    def test_identity(self, qq):
        """Test the identity has order 1."""
        assert order_rational(SquareMatrix.identity(qq, 3)).order == 1

    def test_shear_not_diagonalizable(self, shear):
        """Test the unipotent shear over Q."""
        result = order_rational(shear)
        assert not result.is_finite
        assert result.failure == NOT_DIAGONALIZABLE
        assert result.cyclotomic_indices == [(1, 2)]

    def test_non_integral(self, qq):
        """Test diag(2, 1/2)."""
        result = order_rational(SquareMatrix.diagonal(qq, [2, Fraction(1, 2)]))
        assert result.failure == NON_INTEGRAL
        assert "X^1" in result.obstruction

    def test_not_unit_circle(self, qq):
        """Test diag(2, 1)."""
        result = order_rational(SquareMatrix.diagonal(qq, [2, 1]))
        assert result.failure == NOT_UNIT_CIRCLE

    def test_compute_order_dispatch(self, rotation, f2t):
        """Test dispatch by field, including the non-torsion case."""
        assert compute_order(rotation).order == 4
        t = f2t.variable()
        result = compute_order(SquareMatrix.diagonal(f2t, [t, t.inverse()]))
        assert result.failure == NOT_CONSTANT
        assert result.order is None


class TestVerification:
    """Test order verification helpers."""

    def test_verify_order(self, rotation):
        """Test wrong claims are refused."""
        verify_order(rotation, 4)
        with pytest.raises(OrderVerificationError):
            verify_order(rotation, 2)
        with pytest.raises(OrderVerificationError):
            verify_order(rotation, 8)

    def test_exact_order_dividing(self, rotation):
        """Test reduction from a multiple of the order."""
        assert exact_order_dividing(rotation, 24) == 4

    def test_brute_force(self, rotation, shear):
        """Test the power search and its cap."""
        assert brute_force_order(rotation, 10) == 4
        assert brute_force_order(rotation, 3) is None
        assert brute_force_order(shear, 50) is None


class TestGroupClosure:
    """Test breadth-first closure."""

    def test_cyclic(self, rotation):
        """Test the cyclic group of order 4."""
        closure = group_closure([rotation], 100)
        assert closure.status is ClosureStatus.FINITE
        assert closure.order == 4
        assert closure.generator_orders == [4]
        assert len(closure.cayley_edges) == 8
        assert closure.elements[0].is_identity()
        assert closure.letters == ["g0", "g0^-1"]

    def test_sl2_f3(self, f3, make_matrix):
        """Test SL_2(F_3), of order 24."""
        gens = [make_matrix(f3, [[1, 1], [0, 1]]), make_matrix(f3, [[1, 0], [1, 1]])]
        closure = group_closure(gens, 1000)
        assert closure.order == 24
        assert len(closure.cayley_edges) == 96
        assert closure.generator_orders == [3, 3]

    def test_edges_are_consistent(self, rotation):
        """Test that every edge is a right multiplication by its letter."""
        closure = group_closure([rotation], 100)
        letters = [rotation, rotation.power(-1)]
        for src, letter, dst in closure.cayley_edges:
            assert closure.elements[src] @ letters[letter] == closure.elements[dst]

    def test_cap_exceeded(self, shear):
        """Test that the infinite shear group stops at the cap."""
        closure = group_closure([shear], 50, with_edges=False)
        assert closure.status is ClosureStatus.CAP_EXCEEDED
        assert closure.order is None
        assert closure.generator_orders == [None]
        assert closure.cayley_edges == []

    def test_no_generators(self):
        """Test that an empty generator list is refused."""
        with pytest.raises(MalformedInput):
            group_closure([], 10)

    def test_cayley_dot(self, rotation):
        """Test dot export of the Cayley graph."""
        dot = cayley_to_dot(group_closure([rotation], 100))
        assert dot.startswith("digraph cayley {")
        assert dot.count("->") == 8
        assert 'label="e"' in dot
        assert "style=dashed" in dot


class TestOrderSerializers:
    """Test order and closure output."""

    def test_finite(self, rotation):
        """Test a finite order result."""
        data = OrderResultSerializer(order_rational(rotation)).data
        assert data["order"] == 4
        assert data["method"] == "cyclotomic"
        assert data["cyclotomic_indices"] == [[4, 1]]

    def test_infinite(self, shear):
        """Test that an infinite order is written as text."""
        data = OrderResultSerializer(order_rational(shear)).data
        assert data["order"] == "infinite"
        assert data["obstruction"]

    def test_closure_without_cayley(self, shear):
        """Test that the edge list is left out by default."""
        data = ClosureResultSerializer(group_closure([shear], 20, with_edges=False)).data
        assert data["status"] == "cap_exceeded"
        assert data["generator_orders"] == ["cap_exceeded"]
        assert "cayley" not in data

    def test_closure_with_cayley(self, rotation):
        """Test the edge list on request."""
        closure = group_closure([rotation], 100)
        data = ClosureResultSerializer(closure, context={"cayley": True}).data
        assert len(data["cayley"]) == 8


class TestElementOrders:
    """Test that closure elements have the orders their closures imply."""

    def test_sl2_f3_elements(self, f3, make_matrix):
        """Test g^|G| = I for every element of SL_2(F_3)."""
        gens = [make_matrix(f3, [[1, 1], [0, 1]]), make_matrix(f3, [[1, 0], [1, 1]])]
        closure = group_closure(gens, 1000, with_edges=False)
        assert all(g.power(closure.order).is_identity() for g in closure.elements)

    def test_signed_permutations(self, qq, make_matrix):
        """Test the 48 signed 3x3 permutation matrices."""
        gens = [
            make_matrix(qq, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
            make_matrix(qq, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
            make_matrix(qq, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        ]
        closure = group_closure(gens, 1000, with_edges=False)
        assert closure.order == 48
        for g in closure.elements:
            order = compute_order(g).order
            assert 48 % order == 0
            assert g.power(order).is_identity()


class TestOrderRequest:
    """Test order_request."""

    def test_check_agrees(self):
        """Test the brute-force check entry."""
        data = {"field": "Q", "dim": 2, "rows": [["0", "-1"], ["1", "0"]]}
        result, payload, agrees = order_request(data, check=True, cap=10)
        assert result.order == 4
        assert agrees
        assert payload["check"]["cap"] == 10

    @pytest.mark.parametrize("cap", [0, -3])
    def test_non_positive_cap(self, cap):
        """Test that a cap below one is refused rather than replaced by the default."""
        data = {"field": "Q", "dim": 2, "rows": [["0", "-1"], ["1", "0"]]}
        with pytest.raises(MalformedInput):
            order_request(data, check=True, cap=cap)

    def test_default_cap(self):
        """Test that no cap falls back to the configured brute-force cap."""
        data = {"field": "Q", "dim": 2, "rows": [["0", "-1"], ["1", "0"]]}
        _, payload, _ = order_request(data, check=True)
        assert payload["check"]["cap"] == rigidity_setting("BRUTE_FORCE_CAP")

    def test_large_dimension_warning(self):
        """Test the warning above the configured dimension."""
        rows = [["1" if i == j else "0" for j in range(9)] for i in range(9)]
        with mock.patch("apps.grouporder.services.logger") as log:
            result, _, _ = order_request({"field": "Q", "dim": 9, "rows": rows})
        assert result.order == 1
        log.warning.assert_called_once()
        assert log.warning.call_args.args[1] == 9

    def test_no_warning_at_desk_scale(self):
        """Test that small matrices log nothing."""
        with mock.patch("apps.grouporder.services.logger") as log:
            order_request({"field": "Q", "dim": 2, "rows": [["0", "-1"], ["1", "0"]]})
        log.warning.assert_not_called()
