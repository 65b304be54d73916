"""Direct and converse piezoelectric effect

Under a uniaxial stress ``T = y y^T`` the polarization is ``P = A y y``;
an electric field ``E`` produces the strain ``S_jk = sum_i a_ijk E_i``.
The largest C-eigenpair ``(lambda*, x*, y*)`` gives both extremes:
``max ||P||_2 = lambda*`` is attained at ``y*``, and the largest strain
quadratic form ``max y^T S y = lambda*`` is attained at ``E = x*``,
``y = y*``.
"""
import logging
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from .constants import SYMMETRY_TOL
from .exceptions import AsymmetricMatrixError
from .solver import SolverConfig, largest
from .tensor import PiezoTensor, UnitVector, contract_yy, slice_combination
from .typing import Matrix, Vector, VectorLike


LOGGER = logging.getLogger(__name__)


def _unit_vector(values: Union[VectorLike, UnitVector]) -> UnitVector:
    if isinstance(values, UnitVector):
        return values
    return UnitVector(values)  # type: ignore


@dataclass(frozen=True)
class StressDirection:
    """Axis ``y`` of the uniaxial stress ``T = y y^T``"""
    #: Unit stress axis
    direction: UnitVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "direction", _unit_vector(self.direction))

    @property
    def stress(self) -> Matrix:
        """The stress tensor ``y y^T``"""
        y = self.direction.components
        return np.outer(y, y)


@dataclass(frozen=True)
class FieldVector:
    """Unit electric field strength direction"""
    #: Unit field
    field: UnitVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", _unit_vector(self.field))


@dataclass(frozen=True, eq=False)
class StrainMatrix:
    """Symmetric strain tensor ``S``"""
    #: Entries (read-only)
    entries: Matrix

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise AsymmetricMatrixError("Expected a square matrix, got shape "
                                        "{}".format(entries.shape))
        if np.max(np.abs(entries - entries.T)) > SYMMETRY_TOL:
            raise AsymmetricMatrixError("Strain matrix is not symmetric")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def __array__(self, dtype: Any = None,
                  copy: Optional[bool] = None) -> Matrix:
        return np.array(self.entries, dtype=dtype)


class SpectralNorm(NamedTuple):
    """Both readings of ``||S||_2`` for a symmetric S"""
    #: Largest eigenvalue, the maximum of ``y^T S y`` over unit y
    signed: float
    #: Largest eigenvalue magnitude, the operator 2-norm
    absolute: float


def polarization(tensor: PiezoTensor,
                 stress: Union[StressDirection, UnitVector]) -> Vector:
    """Polarization ``P_i = sum_jk a_ijk T_jk`` under ``T = y y^T``"""
    if not isinstance(stress, StressDirection):
        stress = StressDirection(stress)
    return contract_yy(tensor, stress.direction)


def max_polarization(tensor: PiezoTensor,
                     cfg: Optional[SolverConfig] = None) \
        -> Tuple[float, UnitVector]:
    """Largest polarization norm over unit uniaxial stresses

    :return: ``(lambda*, y*)`` of the largest C-eigenpair
    :raise SolverMissError: If the largest pair can't be certified
    """
    pair = largest(tensor, cfg)
    LOGGER.info("Largest polarization %.6g under stress along %s",
                pair.value, pair.right)
    return pair.value, UnitVector(pair.right)


def strain(tensor: PiezoTensor,
           field: Union[FieldVector, UnitVector]) -> StrainMatrix:
    """Strain ``S_jk = sum_i a_ijk E_i`` caused by a unit field"""
    if not isinstance(field, FieldVector):
        field = FieldVector(field)
    return StrainMatrix(slice_combination(tensor, field.field))


def max_strain_spectral_norm(tensor: PiezoTensor,
                             cfg: Optional[SolverConfig] = None) \
        -> Tuple[float, UnitVector, UnitVector]:
    """Largest strain quadratic form over unit fields

    :return: ``(lambda*, x*, y*)``: the value, the field attaining it and
             the direction maximizing ``y^T S y`` under that field
    :raise SolverMissError: If the largest pair can't be certified
    """
    pair = largest(tensor, cfg)
    LOGGER.info("Largest strain %.6g under field along %s",
                pair.value, pair.left)
    return pair.value, UnitVector(pair.left), UnitVector(pair.right)


def spectral_norm(matrix: Union[StrainMatrix, npt.ArrayLike]) -> SpectralNorm:
    """Largest eigenvalue and largest eigenvalue magnitude of *matrix*

    :raise AsymmetricMatrixError: If *matrix* isn't symmetric
    """
    if not isinstance(matrix, StrainMatrix):
        matrix = StrainMatrix(matrix)  # type: ignore
    eigenvalues = np.linalg.eigvalsh(matrix.entries)
    return SpectralNorm(float(eigenvalues[-1]),
                        float(np.max(np.abs(eigenvalues))))


def polarization_extremality(tensor: PiezoTensor,
                             directions: npt.ArrayLike) -> float:
    """Largest ``||P||_2`` over sampled stress axes

    :param tensor: The tensor
    :param directions: Array of shape ``(m, n)`` of unit vectors
    :return: The largest observed polarization norm
    """
    samples = np.atleast_2d(np.asarray(directions, dtype=float))
    images = np.einsum("ijk,mj,mk->mi", tensor.dense, samples, samples)
    return float(np.max(np.linalg.norm(images, axis=1)))


def strain_extremality(tensor: PiezoTensor, fields: npt.ArrayLike) -> float:
    """Largest strain eigenvalue over sampled unit fields

    :param tensor: The tensor
    :param fields: Array of shape ``(m, n)`` of unit vectors
    :return: The largest observed ``max y^T S y``
    """
    samples = np.atleast_2d(np.asarray(fields, dtype=float))
    strains = np.einsum("mi,ijk->mjk", samples, tensor.dense)
    return float(np.max(np.linalg.eigvalsh(strains)[:, -1]))
