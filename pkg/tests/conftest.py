import numpy as np
import pytest

from piezoceig import PiezoTensor
from piezoceig.catalog import a_alpha, witness_tensor, dataset


#: Largest C-eigenvalue of each bundled dataset, 6 significant digits
LARGEST_VALUES = {
    "VFeSb": 4.25138,
    "SiO2": 0.137536,
    "Cr2AgBiO8": 2.6258,
    "RbTaO3": 12.4234,
    "NaBiS2": 11.6674,
    "LiBiB2O5": 7.73762,
    "KBi2F7": 13.5021,
    "BaNiO3": 27.4628,
}


def random_tensor(rng, dim):
    dense = rng.standard_normal((dim, dim, dim))
    return PiezoTensor.from_dense(dim, dense + dense.transpose(0, 2, 1))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def a_one():
    return a_alpha(1.0)


@pytest.fixture
def witness():
    return witness_tensor()


@pytest.fixture
def barium_nickelate():
    return dataset("BaNiO3").tensor


@pytest.fixture
def quartz():
    return dataset("SiO2").tensor
