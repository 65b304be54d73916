import numpy as np
import pytest
from numpy.testing import assert_allclose

from piezoceig import PiezoTensor, UnitVector, OrthogonalMatrix, \
    Rank1PiezoTensor, SymmetryMode, contract_yy, contract_xy, scalar_form, \
    inner, frobenius_norm, rotate, rank1_residual
from piezoceig.catalog import a_alpha, dataset
from piezoceig.exceptions import DimensionMismatchError, \
    SymmetryViolationError, NotUnitError, NotOrthogonalError

from conftest import random_tensor


S2 = 1.0 / np.sqrt(2.0)
S3 = 1.0 / np.sqrt(3.0)


def test_zero_dense_entries_give_zero_tensor():
    tensor = PiezoTensor.from_dense(3, np.zeros(27))

    assert tensor == PiezoTensor.zeros(3)
    assert tensor.nonzero_entries() == {}


def test_dense_cubic_entries_give_vfesb():
    dense = np.zeros((3, 3, 3))
    for i, j, k in [(0, 1, 2), (1, 0, 2), (2, 0, 1)]:
        dense[i, j, k] = dense[i, k, j] = -3.68180667

    assert PiezoTensor.from_dense(3, dense) == dataset("VFeSb").tensor


def test_symmetrize_mode_averages_both_orders():
    dense = np.zeros((2, 2, 2))
    dense[0, 0, 1] = 0.7
    dense[0, 1, 0] = 0.9

    tensor = PiezoTensor.from_dense(2, dense, SymmetryMode.SYMMETRIZE)

    assert tensor.dense[0, 0, 1] == pytest.approx(0.8)
    assert tensor.dense[0, 1, 0] == pytest.approx(0.8)
    assert tensor.asymmetry == pytest.approx(0.2)


def test_strict_mode_reports_worst_index():
    dense = np.zeros((2, 2, 2))
    dense[0, 0, 1] = 0.7
    dense[0, 1, 0] = 0.9

    with pytest.raises(SymmetryViolationError) as info:
        PiezoTensor.from_dense(2, dense)

    assert info.value.index in {(1, 1, 2), (1, 2, 1)}
    assert info.value.deviation == pytest.approx(0.2)


def test_wrong_entry_count_is_rejected():
    with pytest.raises(DimensionMismatchError):
        PiezoTensor.from_dense(3, np.zeros(26))


def test_from_entries_sets_both_orders():
    tensor = PiezoTensor.from_entries(3, {(1, 3, 2): 2.0})

    assert tensor.dense[0, 1, 2] == 2.0
    assert tensor.dense[0, 2, 1] == 2.0
    assert tensor.nonzero_entries() == {(1, 2, 3): 2.0}


def test_arrays_are_read_only(a_one):
    with pytest.raises(ValueError):
        a_one.packed[0, 0] = 1.0
    with pytest.raises(ValueError):
        a_one.dense[0, 0, 0] = 1.0


def test_arithmetic():
    first = a_alpha(1.0)
    second = a_alpha(2.0)

    assert first + first == second
    assert second - first == first
    assert 2 * first == second
    assert -first == a_alpha(-1.0)


def test_contract_yy_at_cube_diagonal(a_one):
    image = contract_yy(a_one, [S3, S3, S3])

    assert_allclose(image, [-2 / 3, -2 / 3, -2 / 3], atol=1e-15)


def test_contract_yy_with_basis_vector_gives_first_diagonal(rng):
    tensor = random_tensor(rng, 4)

    image = contract_yy(tensor, UnitVector.basis(4, 0))

    assert_allclose(image, tensor.dense[:, 0, 0])


def test_contract_yy_of_quartz(quartz):
    image = contract_yy(quartz, [0.0, 0.997515, -0.0704604])

    assert np.linalg.norm(image) == pytest.approx(0.137536, abs=1e-5)
    assert_allclose(image[1:], [0.0, 0.0], atol=1e-12)


def test_contract_xy(a_one, witness):
    assert_allclose(contract_xy(a_one, [0, 0, -1], [S2, S2, 0]),
                    [S2, S2, 0], atol=1e-15)
    assert_allclose(contract_xy(witness, [0, 1], [0, 1]), [0, 1])
    assert_allclose(contract_xy(PiezoTensor.zeros(3), [1, 0, 0],
                                [0, 1, 0]), np.zeros(3))


def test_scalar_form(a_one, barium_nickelate):
    assert scalar_form(a_one, [-S3, -S3, -S3], [S3, S3, S3]) == \
        pytest.approx(2 * S3)
    assert scalar_form(a_one, [0, 0, 0], [S3, S3, S3]) == 0.0
    assert scalar_form(barium_nickelate, [0, 0, 1], [0, 0, 1]) == \
        pytest.approx(27.4628)


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_contractions_are_adjoint(rng, dim):
    for _ in range(20):
        tensor = random_tensor(rng, dim)
        x = rng.standard_normal(dim)
        y = rng.standard_normal(dim)
        value = scalar_form(tensor, x, y)

        assert x @ contract_yy(tensor, y) == pytest.approx(value, rel=1e-12)
        assert contract_xy(tensor, x, y) @ y == \
            pytest.approx(value, rel=1e-12)


def test_contraction_dimension_mismatch(a_one):
    with pytest.raises(DimensionMismatchError):
        contract_yy(a_one, [1.0, 0.0])


@pytest.mark.parametrize("alpha", [1.0, -2.5, 3.68180667])
def test_frobenius_norm_of_cubic_tensor(alpha):
    assert frobenius_norm(a_alpha(alpha)) == \
        pytest.approx(np.sqrt(6) * abs(alpha))


def test_frobenius_norm_of_rank_one_tensor():
    rank1 = Rank1PiezoTensor(-2.5, UnitVector([S3, S3, S3]),
                             UnitVector([S2, 0, S2]))

    assert frobenius_norm(rank1.materialize()) == pytest.approx(2.5)
    assert frobenius_norm(PiezoTensor.zeros(3)) == 0.0


def test_inner(a_one, rng):
    tensor = random_tensor(rng, 3)
    x = UnitVector.normalized(rng.standard_normal(3))
    y = UnitVector.normalized(rng.standard_normal(3))
    rank1 = Rank1PiezoTensor(1.7, x, y)

    assert inner(a_one, a_alpha(2.0)) == pytest.approx(12.0)
    assert inner(tensor, PiezoTensor.zeros(3)) == 0.0
    assert inner(tensor, tensor) == pytest.approx(frobenius_norm(tensor) ** 2)
    assert inner(tensor, rank1.materialize()) == \
        pytest.approx(1.7 * scalar_form(tensor, x, y))
    assert inner(tensor, a_one) == pytest.approx(inner(a_one, tensor))


def test_rotation_by_identity_and_minus_identity(quartz):
    assert_allclose(rotate(quartz, OrthogonalMatrix.identity(3)).packed,
                    quartz.packed)
    assert_allclose(rotate(quartz, -np.eye(3)).packed, -quartz.packed)


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_rotation_round_trip_preserves_tensor(rng, dim):
    tensor = random_tensor(rng, dim)
    matrix = OrthogonalMatrix.random(rng, dim)

    rotated = rotate(tensor, matrix)

    assert frobenius_norm(rotated) == \
        pytest.approx(frobenius_norm(tensor), rel=1e-10)
    assert_allclose(rotate(rotated, matrix.transpose()).packed,
                    tensor.packed, atol=1e-10)


def test_rank1_residual_special_cases(a_one, quartz):
    rank1 = Rank1PiezoTensor(1.3, UnitVector([S3, S3, S3]),
                             UnitVector([0, S2, S2]))
    top = Rank1PiezoTensor(2 * S3, UnitVector([-S3, -S3, -S3]),
                           UnitVector([S3, S3, S3]))

    assert rank1_residual(rank1.materialize(), rank1) == \
        pytest.approx(0.0, abs=1e-7)
    assert rank1_residual(quartz, Rank1PiezoTensor(
        0.0, UnitVector.basis(3, 0), UnitVector.basis(3, 1))) == \
        pytest.approx(frobenius_norm(quartz))
    assert rank1_residual(a_one, top) == pytest.approx(np.sqrt(6 - 4 / 3))


@pytest.mark.parametrize("dim", [2, 3, 4])
def test_rank1_residual_matches_dense_subtraction(rng, dim):
    for _ in range(100):
        tensor = random_tensor(rng, dim)
        rank1 = Rank1PiezoTensor(
            rng.standard_normal(),
            UnitVector.normalized(rng.standard_normal(dim)),
            UnitVector.normalized(rng.standard_normal(dim)))

        expected = np.linalg.norm(tensor.dense - rank1.materialize().dense)

        assert rank1_residual(tensor, rank1) == \
            pytest.approx(expected, rel=1e-10, abs=1e-12)


def test_unit_vector_validation():
    with pytest.raises(NotUnitError):
        UnitVector([1.0, 1.0])
    with pytest.raises(NotUnitError):
        UnitVector.normalized([0.0, 0.0])

    assert UnitVector.normalized([3.0, 4.0]) == UnitVector([0.6, 0.8])


def test_orthogonal_matrix_validation(rng):
    with pytest.raises(NotOrthogonalError):
        OrthogonalMatrix(np.array([[1.0, 0.1], [0.0, 1.0]]))

    matrix = OrthogonalMatrix.random(rng, 3)

    assert_allclose(np.asarray(matrix).T @ np.asarray(matrix), np.eye(3),
                    atol=1e-12)


def test_rotation_rejects_non_orthogonal_arrays(quartz):
    with pytest.raises(NotOrthogonalError):
        rotate(quartz, 2.0 * np.eye(3))
    with pytest.raises(DimensionMismatchError):
        rotate(quartz, np.eye(2))


@pytest.mark.parametrize("scale", [1e5, 1e8, -3e10])
def test_rank_one_tensor_materializes_at_large_scale(rng, scale):
    for _ in range(200):
        x = UnitVector.normalized(rng.standard_normal(3))
        y = UnitVector.normalized(rng.standard_normal(3))

        tensor = Rank1PiezoTensor(scale, x, y).materialize()

        assert_allclose(tensor.dense,
                        scale * np.einsum("i,j,k->ijk", x.components,
                                          y.components, y.components),
                        rtol=1e-12, atol=1e-12 * abs(scale))


def test_value_objects_compare_without_array_truth_values(rng):
    matrix = OrthogonalMatrix.random(rng, 3)

    assert matrix == matrix
    assert OrthogonalMatrix.identity(3) != OrthogonalMatrix.identity(3)
    assert len({UnitVector([0.6, 0.8]), UnitVector([0.6, 0.8]),
                UnitVector([0.8, 0.6])}) == 2
    assert hash(Rank1PiezoTensor(1.0, UnitVector([1.0, 0.0]),
                                 UnitVector([0.0, 1.0]))) == \
        hash(Rank1PiezoTensor(1.0, UnitVector([1.0, 0.0]),
                              UnitVector([0.0, 1.0])))
