import numpy as np
import pytest
from numpy.testing import assert_allclose

from piezoceig import PointGroup, PiezoTensor
from piezoceig.catalog import PATTERNS, CrystalSpec, build, param_count, \
    dataset, dataset_names, point_group_of, load_bundled, a_alpha, \
    analytic_spectrum_a_alpha, witness_tensor, analytic_spectrum_witness
from piezoceig.exceptions import ParameterCountError, UnknownDatasetError, \
    CatalogError
from piezoceig.solver import residuals


PARAM_COUNTS = {
    PointGroup.CUBIC_23_OR_M43M: 1,
    PointGroup.TRIGONAL_32: 2,
    PointGroup.TETRAGONAL_M4: 4,
    PointGroup.TRIGONAL_3M: 4,
    PointGroup.ORTHORHOMBIC_MM2: 5,
    PointGroup.MONOCLINIC_2: 8,
    PointGroup.TRICLINIC_1: 18,
    PointGroup.HEXAGONAL_6: 3,
}


def test_every_point_group_has_a_pattern():
    assert set(PATTERNS) == set(PointGroup)
    for group, count in PARAM_COUNTS.items():
        assert param_count(group) == count


@pytest.mark.parametrize("group", list(PointGroup))
def test_wrong_parameter_count_is_rejected(group):
    with pytest.raises(ParameterCountError):
        CrystalSpec(group, (1.0,) * (PARAM_COUNTS[group] + 1))


@pytest.mark.parametrize("group", list(PointGroup))
def test_zero_parameters_give_zero_tensor(group):
    spec = CrystalSpec(group, (0.0,) * PARAM_COUNTS[group])

    assert build(spec) == PiezoTensor.zeros(3)


@pytest.mark.parametrize("group", list(PointGroup))
def test_build_is_linear(group):
    rng = np.random.default_rng(3)
    first = rng.standard_normal(PARAM_COUNTS[group])
    second = rng.standard_normal(PARAM_COUNTS[group])

    total = build(CrystalSpec(group, tuple(first + second)))
    parts = build(CrystalSpec(group, tuple(first))) + \
        build(CrystalSpec(group, tuple(second)))

    assert_allclose(total.packed, parts.packed, atol=1e-14)


def test_cubic_pattern_gives_vfesb():
    tensor = build(CrystalSpec(PointGroup.CUBIC_23_OR_M43M, (3.68180667,)))

    assert tensor.nonzero_entries() == {(1, 2, 3): -3.68180667,
                                        (2, 1, 3): -3.68180667,
                                        (3, 1, 2): -3.68180667}


def test_trigonal_pattern_gives_quartz():
    tensor = build(CrystalSpec(PointGroup.TRIGONAL_32,
                               (-0.13685, -0.009715)))

    assert tensor.nonzero_entries() == {(1, 1, 1): -0.13685,
                                        (1, 2, 2): 0.13685,
                                        (1, 2, 3): -0.009715,
                                        (2, 1, 2): 0.13685,
                                        (2, 1, 3): 0.009715}
    assert tensor.dense[1, 1, 0] == 0.13685


def test_trigonal_3m_pattern():
    tensor = dataset("RbTaO3").tensor
    entries = tensor.nonzero_entries()

    assert entries[(2, 2, 2)] == -5.412525
    assert entries[(1, 1, 2)] == 5.412525
    assert entries[(2, 1, 1)] == 5.412525
    assert (2, 1, 2) not in entries


def test_dataset_entries():
    assert len(dataset("KBi2F7").tensor.nonzero_entries()) == 18
    assert dataset("KBi2F7").tensor.nonzero_entries()[(1, 1, 1)] == 12.64393
    assert dataset("KBi2F7").tensor.nonzero_entries()[(3, 1, 2)] == 0.08381
    assert dataset("BaNiO3").tensor.nonzero_entries() == {
        (1, 1, 3): 0.038385, (2, 2, 3): 0.038385, (3, 1, 1): 6.89822,
        (3, 2, 2): 6.89822, (3, 3, 3): 27.4628}
    assert dataset("NaBiS2").tensor.nonzero_entries() == {
        (1, 1, 3): -8.90808, (2, 2, 3): -0.00842, (3, 1, 1): -7.11526,
        (3, 2, 2): -0.6222, (3, 3, 3): -7.93831}
    assert dataset("LiBiB2O5").tensor.nonzero_entries()[(3, 2, 3)] == 6.91074


def test_dataset_metadata():
    assert dataset_names() == ("VFeSb", "SiO2", "Cr2AgBiO8", "RbTaO3",
                               "NaBiS2", "LiBiB2O5", "KBi2F7", "BaNiO3")
    assert point_group_of("LiBiB2O5") is PointGroup.MONOCLINIC_2
    assert dataset("SiO2").params == (-0.13685, -0.009715)
    assert dataset("SiO2").point_group is PointGroup.TRIGONAL_32


def test_unknown_dataset_lists_available_names():
    with pytest.raises(UnknownDatasetError) as info:
        dataset("Quartz")

    assert info.value.name == "Quartz"
    assert "BaNiO3" in str(info.value)
    with pytest.raises(UnknownDatasetError):
        load_bundled("Quartz")


@pytest.mark.parametrize("name", dataset_names())
def test_bundled_files_match_embedded_data(name):
    assert load_bundled(name) == dataset(name).tensor


@pytest.mark.parametrize("alpha", [1.0, -1.0, 3.68180667, -0.25])
def test_closed_form_pairs_solve_the_cubic_tensor(alpha):
    tensor = a_alpha(alpha)
    spectrum = analytic_spectrum_a_alpha(alpha)

    assert len(spectrum) == 13
    for pair in spectrum:
        assert pair.value >= 0.0
        assert max(residuals(tensor, pair)) < 1e-12 * max(1.0, abs(alpha))
    assert spectrum.distinct_values() == pytest.approx(
        (2 * abs(alpha) / np.sqrt(3), abs(alpha), 0.0))


def test_closed_form_spectrum_of_unit_cubic_tensor():
    spectrum = analytic_spectrum_a_alpha(1.0)
    groups = [pair for pair in spectrum if pair.value == pytest.approx(1.0)]

    assert spectrum[0].value == pytest.approx(2 / np.sqrt(3))
    assert sum(pair.value == pytest.approx(2 / np.sqrt(3))
               for pair in spectrum) == 4
    assert any(np.allclose(pair.left, [0, 0, -1]) and
               np.allclose(pair.right, [1 / np.sqrt(2), 1 / np.sqrt(2), 0])
               for pair in groups)
    assert analytic_spectrum_a_alpha(3.68180667)[0].value == \
        pytest.approx(4.25138, abs=1e-5)


def test_closed_form_rejects_zero_alpha():
    with pytest.raises(CatalogError):
        analytic_spectrum_a_alpha(0.0)


def test_witness_closed_form():
    tensor = witness_tensor()
    spectrum = analytic_spectrum_witness()

    assert tensor.nonzero_entries() == {(1, 1, 2): 1.0, (2, 2, 2): 1.0}
    assert spectrum.values == pytest.approx(
        (2 / np.sqrt(3), 2 / np.sqrt(3), 1.0, 0.0))
    for pair in spectrum:
        assert max(residuals(tensor, pair)) < 1e-14
