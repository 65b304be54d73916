"""Piezoelectric-type tensors, unit vectors and orthogonal matrices

A piezoelectric-type tensor is an order-3 real tensor ``A = [a_ijk]``
symmetric in its last two indices. It is stored as ``n`` symmetric slices
``A[i, :, :]``, each packed by the upper triangle of the slice, so the
partial symmetry holds by construction.
"""
import logging
import reprlib
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Mapping, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from .constants import SymmetryMode, SYMMETRY_TOL, UNIT_TOL, ORTHOGONAL_TOL
from .exceptions import DimensionMismatchError, SymmetryViolationError, \
    NotUnitError, NotOrthogonalError
from .typing import EntryMap, Matrix, Vector, VectorLike
from .utils import as_vector


LOGGER = logging.getLogger(__name__)


def packed_size(dim: int) -> int:
    """Number of unique entries of an *dim* x *dim* symmetric matrix"""
    return dim * (dim + 1) // 2


def _read_only(array: npt.NDArray[Any]) -> npt.NDArray[Any]:
    array.setflags(write=False)
    return array


def _pack(dense: npt.NDArray[np.float64]) -> Matrix:
    rows, cols = np.triu_indices(dense.shape[0])
    return dense[:, rows, cols]


class PiezoTensor:
    """Order-3, dimension-n real tensor with ``a_ijk = a_ikj``

    Instances are immutable; arithmetic returns new tensors.
    """
    def __init__(self, packed: npt.ArrayLike, *,
                 asymmetry: float = 0.0) -> None:
        """
        :param packed: Array of shape ``(n, n(n+1)/2)``, row ``i`` holding
                       the upper triangle of slice ``i`` in row-major order
        :param asymmetry: Largest ``|a_ijk - a_ikj|`` of the dense data this
                          tensor was symmetrized from
        :raise DimensionMismatchError: If the shape isn't a packed layout
        """
        array = np.array(packed, dtype=float)
        if (array.ndim != 2 or array.shape[0] < 1 or
                array.shape[1] != packed_size(array.shape[0])):
            raise DimensionMismatchError(
                "Packed layout must have shape (n, n(n+1)/2), got {}"
                .format(array.shape))
        #: packed slices
        self._packed = _read_only(array)
        #: asymmetry diagnostic of the source data
        self._asymmetry = float(asymmetry)

    @classmethod
    def zeros(cls, dim: int) -> "PiezoTensor":
        """The zero tensor of dimension *dim*"""
        if dim < 1:
            raise DimensionMismatchError("Dimension must be positive")
        return cls(np.zeros((dim, packed_size(dim))))

    @classmethod
    def from_dense(cls, dim: int, entries: npt.ArrayLike,
                   mode: SymmetryMode = SymmetryMode.STRICT) \
            -> "PiezoTensor":
        """Build a tensor from its ``n**3`` dense entries

        :param dim: Dimension n
        :param entries: Entries indexed ``(i, j, k)``, either flat in
                        row-major order or of shape ``(n, n, n)``
        :param mode: :obj:`~SymmetryMode.STRICT` rejects asymmetric input,
                     :obj:`~SymmetryMode.SYMMETRIZE` averages the two
                     (j, k) orders
        :return: The tensor
        :raise DimensionMismatchError: If there aren't ``n**3`` entries
        :raise SymmetryViolationError: In strict mode, if some
                                       ``|a_ijk - a_ikj|`` exceeds 1e-12
        """
        if dim < 1:
            raise DimensionMismatchError("Dimension must be positive")
        dense = np.array(entries, dtype=float)
        if dense.size != dim ** 3:
            raise DimensionMismatchError(
                "Expected {} entries for dimension {}, got {}"
                .format(dim ** 3, dim, dense.size))
        dense = dense.reshape(dim, dim, dim)

        deviation = np.abs(dense - dense.transpose(0, 2, 1))
        worst = np.unravel_index(int(np.argmax(deviation)), deviation.shape)
        asymmetry = float(deviation[worst])
        if mode is SymmetryMode.STRICT:
            if asymmetry > SYMMETRY_TOL:
                index = tuple(int(i) + 1 for i in worst)
                raise SymmetryViolationError(
                    "Entries a{0}{1}{2} and a{0}{2}{1} differ by {3:.3g}"
                    .format(index[0], index[1], index[2], asymmetry),
                    index,  # type: ignore
                    asymmetry)
            return cls(_pack(dense), asymmetry=asymmetry)

        if asymmetry > SYMMETRY_TOL:
            LOGGER.warning("Symmetrizing input with asymmetry %.3g",
                           asymmetry)
        return cls(_pack(0.5 * (dense + dense.transpose(0, 2, 1))),
                   asymmetry=asymmetry)

    @classmethod
    def from_entries(cls, dim: int,
                     entries: Mapping[Tuple[int, int, int], float]) \
            -> "PiezoTensor":
        """Build a tensor from a map of nonzero entries

        Each entry sets both ``a_ijk`` and ``a_ikj``.

        :param dim: Dimension n
        :param entries: Values keyed by 1-based ``(i, j, k)``
        :return: The tensor
        :raise DimensionMismatchError: If an index is out of range
        """
        dense = np.zeros((dim, dim, dim))
        for (i, j, k), value in entries.items():
            if not all(1 <= index <= dim for index in (i, j, k)):
                raise DimensionMismatchError(
                    "Index ({}, {}, {}) out of range for dimension {}"
                    .format(i, j, k, dim))
            dense[i - 1, j - 1, k - 1] = value
            dense[i - 1, k - 1, j - 1] = value
        return cls(_pack(dense))

    @property
    def dim(self) -> int:
        """Dimension n"""
        return int(self._packed.shape[0])

    @property
    def packed(self) -> Matrix:
        """Packed slices, shape ``(n, n(n+1)/2)`` (read-only)"""
        return self._packed

    @property
    def asymmetry(self) -> float:
        """Largest ``|a_ijk - a_ikj|`` of the data the tensor was built from"""
        return self._asymmetry

    @cached_property
    def dense(self) -> npt.NDArray[np.float64]:
        """Dense ``(n, n, n)`` view (read-only)"""
        dim = self.dim
        rows, cols = np.triu_indices(dim)
        dense = np.zeros((dim, dim, dim))
        dense[:, rows, cols] = self._packed
        dense[:, cols, rows] = self._packed
        return _read_only(dense)

    def slice(self, index: int) -> Matrix:
        """Symmetric slice ``[a_ijk]_{j,k}`` for the 0-based *index* ``i``"""
        return np.array(self.dense[index])

    def nonzero_entries(self) -> EntryMap:
        """Nonzero entries with ``j <= k``, keyed by 1-based index, in
        lexicographic order"""
        rows, cols = np.triu_indices(self.dim)
        result: EntryMap = {}
        for i in range(self.dim):
            for value, j, k in zip(self._packed[i], rows, cols):
                if value != 0.0:
                    result[(i + 1, int(j) + 1, int(k) + 1)] = float(value)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiezoTensor):
            return NotImplemented
        return bool(self.dim == other.dim and
                    np.array_equal(self._packed, other._packed))

    __hash__ = None  # type: ignore

    def __add__(self, other: "PiezoTensor") -> "PiezoTensor":
        _check_same_dim(self, other)
        return PiezoTensor(self._packed + other._packed)

    def __sub__(self, other: "PiezoTensor") -> "PiezoTensor":
        _check_same_dim(self, other)
        return PiezoTensor(self._packed - other._packed)

    def __neg__(self) -> "PiezoTensor":
        return PiezoTensor(-self._packed)

    def __mul__(self, scale: float) -> "PiezoTensor":
        return PiezoTensor(float(scale) * self._packed)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        """Formal string representation"""
        return "{}(dim={}, entries={})".format(
            type(self).__name__, self.dim,
            reprlib.repr(self.nonzero_entries()))


@dataclass(frozen=True)
class UnitVector:
    """Real vector of Euclidean norm 1"""
    #: Components (read-only)
    components: Vector

    def __post_init__(self) -> None:
        components = as_vector(self.components)
        if components.size < 1:
            raise NotUnitError("A unit vector needs at least one component")
        norm = float(np.linalg.norm(components))
        if abs(norm - 1.0) > UNIT_TOL:
            raise NotUnitError("Vector norm is {!r}, expected 1".format(norm))
        object.__setattr__(self, "components", _read_only(components))

    @classmethod
    def normalized(cls, values: VectorLike) -> "UnitVector":
        """Scale *values* to unit norm

        :raise NotUnitError: If *values* is the zero vector
        """
        vector = as_vector(values)
        norm = np.linalg.norm(vector)
        if norm == 0.0:
            raise NotUnitError("The zero vector has no direction")
        return cls(vector / norm)

    @classmethod
    def basis(cls, dim: int, index: int) -> "UnitVector":
        """The 0-based *index*-th standard basis vector"""
        vector = np.zeros(dim)
        vector[index] = 1.0
        return cls(vector)

    @property
    def dim(self) -> int:
        """Number of components"""
        return int(self.components.size)

    def __array__(self, dtype: Any = None, copy: Optional[bool] = None) \
            -> Vector:
        return np.array(self.components, dtype=dtype)

    def __len__(self) -> int:
        return self.dim

    def __neg__(self) -> "UnitVector":
        return UnitVector(-self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitVector):
            return NotImplemented
        return bool(np.array_equal(self.components, other.components))

    def __hash__(self) -> int:
        return hash(tuple(self.components.tolist()))


@dataclass(frozen=True, eq=False)
class OrthogonalMatrix:
    """Real square matrix Q with ``Q^T Q = I``"""
    #: Entries (read-only)
    entries: Matrix

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise NotOrthogonalError("An orthogonal matrix must be square")
        defect = np.max(np.abs(entries.T @ entries -
                               np.eye(entries.shape[0])))
        if defect > ORTHOGONAL_TOL:
            raise NotOrthogonalError(
                "Q^T Q differs from the identity by {:.3g}".format(defect))
        object.__setattr__(self, "entries", _read_only(entries))

    @classmethod
    def identity(cls, dim: int) -> "OrthogonalMatrix":
        """The *dim* x *dim* identity"""
        return cls(np.eye(dim))

    @classmethod
    def random(cls, rng: np.random.Generator, dim: int) \
            -> "OrthogonalMatrix":
        """Orthonormalize a Gaussian matrix drawn from *rng*

        The determinant may be either sign.
        """
        q_factor, r_factor = np.linalg.qr(rng.standard_normal((dim, dim)))
        # fix the column signs so the distribution doesn't depend on the
        # QR implementation's sign convention
        signs = np.sign(np.diag(r_factor))
        signs[signs == 0.0] = 1.0
        return cls(q_factor * signs)

    @property
    def dim(self) -> int:
        """Order of the matrix"""
        return int(self.entries.shape[0])

    def transpose(self) -> "OrthogonalMatrix":
        """Q^T, which is also the inverse"""
        return OrthogonalMatrix(self.entries.T)

    def __array__(self, dtype: Any = None, copy: Optional[bool] = None) \
            -> Matrix:
        return np.array(self.entries, dtype=dtype)


@dataclass(frozen=True)
class Rank1PiezoTensor:
    """The rank-one piezoelectric-type tensor ``scale * x o y o y``"""
    #: The scale lambda
    scale: float
    #: Left factor x
    left: UnitVector
    #: Right factor y, appearing twice
    right: UnitVector

    def __post_init__(self) -> None:
        if self.left.dim != self.right.dim:
            raise DimensionMismatchError(
                "Factors have dimensions {} and {}"
                .format(self.left.dim, self.right.dim))

    @property
    def dim(self) -> int:
        """Dimension n"""
        return self.left.dim

    def materialize(self) -> PiezoTensor:
        """Entries ``scale * x_i * y_j * y_k`` as a :obj:`PiezoTensor`"""
        x = self.left.components
        y = self.right.components
        rows, cols = np.triu_indices(self.dim)
        # packed directly so y_j y_k and y_k y_j are the same float
        return PiezoTensor(self.scale * np.outer(x, y[rows] * y[cols]))


def _check_same_dim(first: PiezoTensor, second: PiezoTensor) -> None:
    if first.dim != second.dim:
        raise DimensionMismatchError(
            "Tensors have dimensions {} and {}".format(first.dim, second.dim))


def _vector_for(tensor: PiezoTensor, values: Union[VectorLike, UnitVector],
                name: str) -> Vector:
    vector = as_vector(values)
    if vector.size != tensor.dim:
        raise DimensionMismatchError(
            "{} has {} components, the tensor has dimension {}"
            .format(name, vector.size, tensor.dim))
    return vector


def contract_yy(tensor: PiezoTensor, y: Union[VectorLike, UnitVector]) \
        -> Vector:
    """The vector ``A y y`` with components ``sum_jk a_ijk y_j y_k``

    :raise DimensionMismatchError: If ``len(y) != n``
    """
    y_vec = _vector_for(tensor, y, "y")
    return tensor.dense @ y_vec @ y_vec


def contract_xy(tensor: PiezoTensor, x: Union[VectorLike, UnitVector],
                y: Union[VectorLike, UnitVector]) -> Vector:
    """The vector ``x A y`` with components ``sum_ij x_i a_ijk y_j``

    :raise DimensionMismatchError: If ``len(x)`` or ``len(y)`` isn't ``n``
    """
    x_vec = _vector_for(tensor, x, "x")
    y_vec = _vector_for(tensor, y, "y")
    return y_vec @ slice_combination(tensor, x_vec)


def slice_combination(tensor: PiezoTensor,
                      x: Union[VectorLike, UnitVector]) -> Matrix:
    """The symmetric matrix ``G(x)`` with ``G_jk = sum_i x_i a_ijk``"""
    x_vec = _vector_for(tensor, x, "x")
    return np.tensordot(x_vec, tensor.dense, axes=1)


def scalar_form(tensor: PiezoTensor, x: Union[VectorLike, UnitVector],
                y: Union[VectorLike, UnitVector]) -> float:
    """The scalar ``x A y y = sum_ijk a_ijk x_i y_j y_k``"""
    x_vec = _vector_for(tensor, x, "x")
    return float(x_vec @ contract_yy(tensor, y))


def _weights(dim: int) -> Vector:
    rows, cols = np.triu_indices(dim)
    return np.where(rows == cols, 1.0, 2.0)


def inner(first: PiezoTensor, second: PiezoTensor) -> float:
    """Inner product ``sum_ijk a_ijk b_ijk`` over all dense entries"""
    _check_same_dim(first, second)
    return float(np.sum(_weights(first.dim) *
                        first.packed * second.packed))


def frobenius_norm(tensor: PiezoTensor) -> float:
    """Frobenius norm over all ``n**3`` dense entries"""
    return float(np.sqrt(np.sum(_weights(tensor.dim) * tensor.packed ** 2)))


def rotate(tensor: PiezoTensor,
           matrix: Union[OrthogonalMatrix, Matrix]) -> PiezoTensor:
    """The tensor ``A Q^3`` with entries
    ``sum_ijk a_ijk q_ir q_js q_kt``

    :raise NotOrthogonalError: If a raw array isn't orthogonal
    :raise DimensionMismatchError: If Q isn't n x n
    """
    if not isinstance(matrix, OrthogonalMatrix):
        matrix = OrthogonalMatrix(matrix)
    q_mat = matrix.entries
    if q_mat.shape != (tensor.dim, tensor.dim):
        raise DimensionMismatchError(
            "Rotation has shape {}, the tensor has dimension {}"
            .format(q_mat.shape, tensor.dim))
    dense = np.einsum("ijk,ir,js,kt->rst", tensor.dense, q_mat, q_mat, q_mat)
    # the result is symmetric up to rounding
    return PiezoTensor(_pack(0.5 * (dense + dense.transpose(0, 2, 1))))


def rank1_residual(tensor: PiezoTensor, rank1: Rank1PiezoTensor) -> float:
    """``||A - scale x o y o y||_F`` through the closed form
    ``||A||^2 - 2 scale <A, x o y o y> + scale^2``

    :raise DimensionMismatchError: If the dimensions differ
    """
    if rank1.dim != tensor.dim:
        raise DimensionMismatchError(
            "Rank-one term has dimension {}, the tensor {}"
            .format(rank1.dim, tensor.dim))
    overlap = scalar_form(tensor, rank1.left, rank1.right)
    squared = (frobenius_norm(tensor) ** 2 - 2.0 * rank1.scale * overlap +
               rank1.scale ** 2)
    return float(np.sqrt(max(squared, 0.0)))
