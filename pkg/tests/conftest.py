import json
import random

import pytest
from rest_framework.test import APIClient

from apps.exactnum.fields import QQ, prime_field, rational_function_field
from apps.linalg.matrices import SquareMatrix


@pytest.fixture
def qq():
    """The rationals."""
    return QQ


@pytest.fixture
def f2():
    return prime_field(2)


@pytest.fixture
def f3():
    return prime_field(3)


@pytest.fixture
def f5():
    return prime_field(5)


@pytest.fixture
def f2t():
    """F_2(t)."""
    return rational_function_field(2)


@pytest.fixture
def rng():
    """Seeded random generator; every test gets the same stream."""
    return random.Random(20240101)


@pytest.fixture
def make_matrix():
    """Build a SquareMatrix from rows of ints, Fractions or field elements."""

    def build(field, rows):
        return SquareMatrix.from_rows(field, rows)

    return build


@pytest.fixture
def rotation(qq):
    """Rotation by a quarter turn over Q."""
    return SquareMatrix.from_rows(qq, [[0, -1], [1, 0]])


@pytest.fixture
def shear(qq):
    """Unipotent shear over Q, of infinite order."""
    return SquareMatrix.from_rows(qq, [[1, 1], [0, 1]])


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""

    def write(data, name="input.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def api_client():
    """DRF API client."""
    return APIClient()
