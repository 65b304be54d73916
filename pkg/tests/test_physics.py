import logging

import numpy as np
import pytest
from numpy.testing import assert_allclose

from piezoceig import UnitVector, polarization, max_polarization, strain, \
    max_strain_spectral_norm, spectral_norm, contract_xy, largest
from piezoceig.catalog import dataset, dataset_names
from piezoceig.exceptions import AsymmetricMatrixError, NotUnitError
from piezoceig.physics import StressDirection, FieldVector, StrainMatrix, \
    polarization_extremality, strain_extremality
from piezoceig.utils import random_unit_vector


S3 = 1.0 / np.sqrt(3.0)


def test_polarization_along_hexagonal_axis(barium_nickelate):
    assert_allclose(polarization(barium_nickelate, UnitVector([0, 0, 1])),
                    [0.0, 0.0, 27.4628])
    assert_allclose(polarization(barium_nickelate,
                                 StressDirection(UnitVector([1, 0, 0]))),
                    [0.0, 0.0, 6.89822])


def test_stress_direction():
    stress = StressDirection(UnitVector([0.6, 0.8])).stress

    assert_allclose(stress, [[0.36, 0.48], [0.48, 0.64]])
    with pytest.raises(NotUnitError):
        StressDirection([1.0, 1.0])


def test_strain_of_cubic_tensor(a_one):
    matrix = strain(a_one, UnitVector([0, 0, -1]))
    expected = np.zeros((3, 3))
    expected[0, 1] = expected[1, 0] = 1.0

    assert_allclose(np.asarray(matrix), expected)
    assert spectral_norm(matrix) == (pytest.approx(1.0), pytest.approx(1.0))


def test_strain_along_hexagonal_axis(barium_nickelate):
    matrix = strain(barium_nickelate, FieldVector(UnitVector([0, 0, 1])))

    assert_allclose(matrix.entries, np.diag([6.89822, 6.89822, 27.4628]))
    assert spectral_norm(matrix).signed == pytest.approx(27.4628)


def test_spectral_norm_distinguishes_sign():
    norms = spectral_norm(np.diag([1.0, -3.0]))

    assert norms.signed == pytest.approx(1.0)
    assert norms.absolute == pytest.approx(3.0)
    assert spectral_norm([[0.0, 2.0], [2.0, 0.0]]) == \
        (pytest.approx(2.0), pytest.approx(2.0))


def test_strain_matrix_must_be_symmetric():
    with pytest.raises(AsymmetricMatrixError):
        StrainMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(AsymmetricMatrixError):
        spectral_norm(np.zeros((2, 3)))

    matrix = StrainMatrix(np.eye(2))
    assert matrix == matrix
    assert matrix != StrainMatrix(np.eye(2))


def test_max_polarization_of_cubic_crystal(caplog):
    with caplog.at_level(logging.INFO, logger="piezoceig.physics"):
        value, direction = max_polarization(dataset("VFeSb").tensor)

    assert value == pytest.approx(4.25138, abs=1e-5)
    assert_allclose(np.abs(direction.components), [S3, S3, S3], atol=1e-8)
    assert "Largest polarization 4.25138" in caplog.text


def test_max_polarization_of_orthorhombic_crystal():
    tensor = dataset("NaBiS2").tensor

    value, direction = max_polarization(tensor)

    assert value == pytest.approx(11.6674, abs=1e-4)
    assert_allclose(np.abs(direction.components),
                    [0.693139, 0.0, 0.720804], atol=1e-4)
    assert np.linalg.norm(polarization(tensor, direction)) == \
        pytest.approx(value, rel=1e-10)


def test_max_strain_of_hexagonal_crystal(barium_nickelate):
    value, field, direction = max_strain_spectral_norm(barium_nickelate)

    assert value == pytest.approx(27.4628)
    assert_allclose(np.abs(field.components), [0.0, 0.0, 1.0], atol=1e-8)
    assert_allclose(np.abs(direction.components), [0.0, 0.0, 1.0],
                    atol=1e-8)


@pytest.mark.parametrize("name", dataset_names())
def test_largest_pair_is_stationary_for_both_effects(name):
    tensor = dataset(name).tensor
    pair = largest(tensor)

    induced = polarization(tensor, UnitVector(pair.right))
    matrix = strain(tensor, UnitVector(pair.left))

    assert_allclose(induced, pair.value * pair.left, atol=1e-9)
    assert_allclose(matrix.entries @ pair.right, pair.value * pair.right,
                    atol=1e-9)
    assert_allclose(contract_xy(tensor, pair.left, pair.right),
                    pair.value * pair.right, atol=1e-9)
    assert spectral_norm(matrix).signed == pytest.approx(pair.value,
                                                         abs=1e-8)


@pytest.mark.parametrize("name", dataset_names())
def test_samples_never_exceed_largest_value(rng, name):
    tensor = dataset(name).tensor
    top = largest(tensor).value
    samples = np.array([random_unit_vector(rng, 3) for _ in range(200)])

    sampled_polarization = polarization_extremality(tensor, samples)
    sampled_strain = strain_extremality(tensor, samples)

    assert sampled_polarization <= top + 1e-8
    assert sampled_strain <= top + 1e-8
    assert sampled_polarization > 0.0


def test_sampling_the_optimum_attains_it(barium_nickelate):
    samples = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])

    assert polarization_extremality(barium_nickelate, samples) == \
        pytest.approx(27.4628)
    assert strain_extremality(barium_nickelate, samples) == \
        pytest.approx(27.4628)
