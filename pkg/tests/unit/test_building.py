from fractions import Fraction

import pytest

from apps.building.actions import act, fixed_point_report, fixed_vertices, nu_det
from apps.building.ball import ball, projected_ball_size
from apps.building.export import ball_to_dot, ball_to_json
from apps.building.lattices import (
    canonicalize,
    gaussian_binomial,
    neighbor_count,
    neighbors,
    standard_vertex,
    subspaces,
)
from apps.building.services import ball_summary, fixed_point_request, standard_ball
from apps.core.exceptions import (
    DimensionMismatch,
    FieldMismatch,
    MalformedInput,
    NotPrime,
    SingularMatrix,
    TypeRotation,
)
from apps.linalg.matrices import SquareMatrix
from apps.linalg.sampling import random_p_integral


class TestLatticeVertices:
    """Test canonical lattice classes."""

    def test_standard_vertex(self):
        """Test the class of Z_(p)^d."""
        v = standard_vertex(2, 2)
        assert v.diag == [1, 1]
        assert v.exponents == [0, 0]
        assert v.type == 0
        assert v.format_basis() == [["1", "0"], ["0", "1"]]

    def test_homothety(self, qq):
        """Test that scalar multiples give the same vertex."""
        standard = standard_vertex(3, 2)
        assert canonicalize(SquareMatrix.diagonal(qq, [3, 3]), 3) == standard
        assert canonicalize(SquareMatrix.diagonal(qq, [Fraction(1, 9), Fraction(1, 9)]), 3) == standard

    def test_units_do_not_move_the_standard_vertex(self, qq, make_matrix):
        """Test matrices in GL_2(Z_(2))."""
        standard = standard_vertex(2, 2)
        assert canonicalize(make_matrix(qq, [[1, 3], [0, 1]]), 2) == standard
        assert canonicalize(SquareMatrix.diagonal(qq, [3, 5]), 2) == standard

    def test_type(self, qq):
        """Test the type of diag(2, 1)."""
        v = canonicalize(SquareMatrix.diagonal(qq, [2, 1]), 2)
        assert v.type == 1
        assert sorted(v.exponents) == [0, 1]

    def test_idempotent(self, qq, make_matrix):
        """Test that canonical bases are fixed by canonicalization."""
        v = canonicalize(make_matrix(qq, [[2, 1], [Fraction(1, 2), 4]]), 2)
        assert canonicalize(v.matrix(), 2) == v

    def test_singular(self, qq, make_matrix):
        """Test that dependent generators are refused."""
        with pytest.raises(SingularMatrix):
            canonicalize(make_matrix(qq, [[1, 2], [2, 4]]), 2)


class TestNeighbors:
    """Test the 1-skeleton around a vertex."""

    def test_gaussian_binomial(self):
        """Test subspace counts."""
        assert gaussian_binomial(3, 1, 2) == 7
        assert gaussian_binomial(4, 2, 2) == 35

    @pytest.mark.parametrize("p, d, count", [(2, 2, 3), (5, 2, 6), (2, 3, 14), (3, 3, 26)])
    def test_neighbor_count(self, p, d, count):
        """Test the degree of a vertex."""
        assert neighbor_count(p, d) == count
        assert sum(1 for _ in subspaces(d, p)) == count

    def test_neighbors_are_distinct(self):
        """Test that the neighbors of the standard vertex are distinct."""
        found = neighbors(standard_vertex(2, 3))
        assert len(found) == len(set(found)) == 14

    def test_neighbors_change_type(self):
        """Test that adjacent vertices have different types."""
        standard = standard_vertex(3, 2)
        assert all(w.type != standard.type for w in neighbors(standard))

    @pytest.mark.parametrize("p, d", [(2, 2), (3, 2), (2, 3), (3, 3)])
    def test_adjacency_is_symmetric(self, p, d):
        """Test that w neighbors u exactly when u neighbors w on a radius-one ball."""
        for u in ball(standard_vertex(p, d), 1).vertices:
            for w in neighbors(u):
                assert u in set(neighbors(w))


class TestBall:
    """Test balls in the building."""

    @pytest.mark.parametrize("p, r, size", [(2, 1, 4), (2, 2, 10), (3, 2, 17)])
    def test_tree_sizes(self, p, r, size):
        """Test balls in the tree of SL_2."""
        b = ball(standard_vertex(p, 2), r)
        assert len(b.vertices) == size
        assert len(b.edges) == size - 1
        assert projected_ball_size(p, 2, r) == size

    def test_rank_three(self):
        """Test the radius-one ball of rank three at p = 2."""
        b = ball(standard_vertex(2, 3), 1)
        assert len(b.vertices) == 15
        assert len(b.edges) == 35

    def test_radius_zero(self):
        """Test the one-vertex ball."""
        b = ball(standard_vertex(2, 2), 0)
        assert b.vertices == [b.center]
        assert b.edges == []

    def test_negative_radius(self):
        """Test that a negative radius is refused."""
        with pytest.raises(MalformedInput):
            ball(standard_vertex(2, 2), -1)

    def test_distances_and_boundary(self):
        """Test BFS distances and the boundary sphere."""
        b = ball(standard_vertex(2, 2), 2)
        assert b.distances[0] == 0
        assert len(b.boundary()) == 6
        assert standard_vertex(2, 2) in b

    def test_summary(self):
        """Test the ball summary."""
        summary = ball_summary(ball(standard_vertex(2, 2), 2))
        assert summary["vertex_count"] == 10
        assert summary["edge_count"] == 9
        assert summary["boundary_count"] == 6
        assert summary["types"] == {"0": 7, "1": 3}

    def test_standard_ball_preconditions(self):
        """Test the checks on p, d and r."""
        with pytest.raises(NotPrime):
            standard_ball(4, 2, 1)
        with pytest.raises(MalformedInput):
            standard_ball(2, 0, 1)
        with pytest.raises(MalformedInput):
            standard_ball(2, 2, -1)

    def test_dot_export(self):
        """Test graphviz export of a ball."""
        dot = ball_to_dot(ball(standard_vertex(2, 2), 2))
        assert dot.startswith("graph building {")
        assert dot.count(" -- ") == 9
        assert dot.count("doublecircle") == 1

    def test_json_export(self):
        """Test the serialized ball."""
        data = ball_to_json(ball(standard_vertex(2, 2), 1))
        assert data["p"] == 2
        assert data["radius"] == 1
        assert len(data["vertices"]) == 4
        assert data["vertices"][0] == {
            "id": 0,
            "distance": 0,
            "diag": [1, 1],
            "type": 0,
            "basis": [["1", "0"], ["0", "1"]],
        }
        assert len(data["edges"]) == 3


class TestActions:
    """Test matrix actions on vertices."""

    def test_nu_det(self, qq, rotation):
        """Test nu_p(det g)."""
        assert nu_det(SquareMatrix.diagonal(qq, [2, 1]), 2) == 1
        assert nu_det(SquareMatrix.diagonal(qq, [Fraction(1, 4), 1]), 2) == -2
        assert nu_det(rotation, 2) == 0

    def test_nu_det_singular(self, qq):
        """Test that a singular matrix has no nu_det."""
        with pytest.raises(SingularMatrix):
            nu_det(SquareMatrix.zeros(qq, 2), 2)

    def test_type_shift(self, qq):
        """Test that g shifts types by nu_det(g) mod d."""
        standard = standard_vertex(2, 3)
        g = SquareMatrix.diagonal(qq, [2, 1, 1])
        assert act(g, standard).type == nu_det(g, 2) % 3

    def test_action_law(self, qq, make_matrix, rotation):
        """Test (gh)L = g(hL)."""
        h = SquareMatrix.diagonal(qq, [2, 1])
        v = act(h, standard_vertex(2, 2))
        assert act(rotation @ h, standard_vertex(2, 2)) == act(rotation, v)

    def test_type_changing_action(self, qq):
        """Test that act moves a vertex to an adjacent vertex of another type."""
        standard = standard_vertex(2, 2)
        moved = act(SquareMatrix.diagonal(qq, [2, 1]), standard)
        assert moved.type == 1
        assert moved in set(neighbors(standard))

    @pytest.mark.parametrize("p, d", [(2, 2), (3, 2), (2, 3)])
    def test_neighbors_commute_with_action(self, p, d, rng):
        """Test that neighbors(gL) = g neighbors(L)."""
        for _ in range(3):
            g = random_p_integral(p, d, rng)
            vertex = canonicalize(random_p_integral(p, d, rng), p)
            assert set(neighbors(act(g, vertex))) == {act(g, w) for w in neighbors(vertex)}

    def test_dimension_mismatch(self, rotation):
        """Test that a 2x2 matrix cannot act on rank-3 lattices."""
        with pytest.raises(DimensionMismatch):
            act(rotation, standard_vertex(2, 3))

    def test_fixed_vertices(self, rotation):
        """Test the vertices fixed by a quarter turn at p = 2."""
        fixed = fixed_vertices([rotation], ball(standard_vertex(2, 2), 1))
        assert len(fixed) == 2
        assert fixed[0] == standard_vertex(2, 2)

    def test_type_rotation(self, qq):
        """Test that diag(2, 1) rotates types."""
        with pytest.raises(TypeRotation) as excinfo:
            fixed_vertices([SquareMatrix.diagonal(qq, [2, 1])], ball(standard_vertex(2, 2), 1))
        assert excinfo.value.nu_det_values == [1]
        assert excinfo.value.dimension == 2

    def test_report_for_scalar(self, qq):
        """Test that a scalar matrix fixes every vertex."""
        b = ball(standard_vertex(2, 2), 2)
        report = fixed_point_report([SquareMatrix.diagonal(qq, [2, 2])], b)
        assert report.found
        assert len(report.fixed) == 10
        assert report.nu_det == [2]
        assert not report.boundary_escape

    def test_report_for_type_rotation(self, qq):
        """Test the report when types rotate."""
        report = fixed_point_report(
            [SquareMatrix.diagonal(qq, [2, 1])], ball(standard_vertex(2, 2), 1)
        )
        assert report.type_rotation
        assert not report.found
        assert "fixes no vertex" in report.statement


class TestFixedPointRequest:
    """Test the fixed-point request helper."""

    def test_rotation(self):
        """Test a rational generator document."""
        data = {"field": "Q", "dim": 2, "generators": [[["0", "-1"], ["1", "0"]]]}
        report, payload = fixed_point_request(data, 2, 1)
        assert report.found
        assert len(payload["fixed"]) == 2
        assert payload["type_rotation"] is False

    def test_needs_rationals(self):
        """Test that generators over F_p are refused."""
        data = {"field": ["Fp", 3], "dim": 2, "generators": [[["0", "1"], ["1", "0"]]]}
        with pytest.raises(FieldMismatch):
            fixed_point_request(data, 3, 1)
