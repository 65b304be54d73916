import numpy as np
import pytest
from numpy.testing import assert_allclose

from piezoceig.utils import as_vector, random_unit_vector, sign_pivot, \
    is_sign_normalized, sphere_grid, format_number, format_vector, \
    parse_vector, parse_key_values


def test_as_vector_copies_to_float():
    source = np.array([1, 2, 3])

    result = as_vector(source)
    result[0] = 7

    assert result.dtype == np.float64
    assert source[0] == 1
    with pytest.raises(ValueError):
        as_vector([[1.0, 2.0]])


def test_random_unit_vector(rng):
    for dim in (1, 2, 5):
        assert np.linalg.norm(random_unit_vector(rng, dim)) == \
            pytest.approx(1.0)


@pytest.mark.parametrize("vector,index", [
    ([0.0, -2.0, 1.0], 1),
    ([1e-9, 0.5, -1.0], 1),
    ([1e-9, -2e-9, 0.0], 1),
    ([3.0, 0.0], 0),
])
def test_sign_pivot(vector, index):
    assert sign_pivot(np.array(vector), 1e-6) == index


def test_is_sign_normalized():
    assert is_sign_normalized(np.array([0.0, 0.5, -1.0]), 1e-6)
    assert not is_sign_normalized(np.array([-1e-9, -0.5, 1.0]), 1e-6)
    assert is_sign_normalized(np.zeros(2), 1e-6)


def test_sphere_grid_shapes():
    circle = sphere_grid(2, 8)
    sphere = sphere_grid(3, 4)

    assert circle.shape == (8, 2)
    assert sphere.shape == (5 * 8, 3)
    assert_allclose(np.linalg.norm(sphere, axis=1), 1.0)
    assert_allclose(circle[0], [1.0, 0.0])
    with pytest.raises(ValueError):
        sphere_grid(4, 10)


@pytest.mark.parametrize("value,digits,text", [
    (-0.0, 6, "0"),
    (0.0, 17, "0"),
    (-1e-20, 6, "-1e-20"),
    (27.4628, 6, "27.4628"),
    (2 / 3 ** 0.5, 6, "1.1547"),
    (0.1, 17, "0.10000000000000001"),
])
def test_format_number(value, digits, text):
    assert format_number(value, digits) == text


def test_format_and_parse_vector():
    vector = np.array([0.1, -0.0, 1 / 3])

    text = format_vector(vector)

    assert text.split(",")[1] == "0"
    assert parse_vector(text).tolist() == [0.1, 0.0, 1 / 3]
    assert format_vector([1.5, 2.0], digits=3, separator=" ") == "1.5 2"
    with pytest.raises(ValueError):
        parse_vector("1,x")


def test_parse_key_values():
    record = parse_key_values("lambda=1.5 x=1,0 y=0,1 flags=")

    assert record == {"lambda": "1.5", "x": "1,0", "y": "0,1", "flags": ""}
    assert parse_key_values("") == {}
    with pytest.raises(ValueError):
        parse_key_values("lambda=1 stray")
