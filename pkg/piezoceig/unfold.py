"""Matrix unfolding of piezoelectric-type tensors

Symmetric matrices are vectorized with the off-diagonal entries weighted
by ``sqrt(2)``, which makes the vectorization an isometry. Row ``i`` of the
unfolding ``M(A)`` is the vectorization of slice ``i``, so that
``A y y = M(A) vec(y y^T)``. The largest singular value ``mu*`` of ``M(A)``
bounds the largest C-eigenvalue ``lambda*`` from above.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from .constants import MATRIX_SYMMETRY_TOL, COMPARE_SLACK, STRICT_GAP
from .exceptions import AsymmetricMatrixError, DimensionMismatchError, \
    SolverMissError
from .solver import SolverConfig, largest
from .tensor import PiezoTensor, packed_size
from .typing import Matrix, Vector
from .utils import as_vector, is_sign_normalized


LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _offdiagonal(dim: int) -> Tuple[Tuple[int, int], ...]:
    # (n-1, n), ..., (1, 3), (1, 2) in 1-based terms
    pairs: List[Tuple[int, int]] = [(j, k) for j in range(dim)
                                    for k in range(j + 1, dim)]
    return tuple(sorted(pairs, reverse=True))


def vec_sym(matrix: npt.ArrayLike) -> Vector:
    """Vectorize a symmetric matrix

    The result lists the diagonal first, then ``sqrt(2) * s_jk`` for
    ``j < k`` ordered by descending ``j`` and, within equal ``j``,
    descending ``k``. For n = 3 this is the Voigt order 11, 22, 33, 23, 13,
    12.

    :param matrix: Symmetric n x n matrix
    :return: Vector of length ``n (n + 1) / 2`` with the same 2-norm as the
             Frobenius norm of *matrix*
    :raise AsymmetricMatrixError: If *matrix* isn't square and symmetric
                                  within 1e-10
    """
    array = np.asarray(matrix, dtype=float)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise AsymmetricMatrixError("Expected a square matrix, got shape {}"
                                    .format(array.shape))
    if np.max(np.abs(array - array.T), initial=0.0) > MATRIX_SYMMETRY_TOL:
        raise AsymmetricMatrixError("Matrix is not symmetric")
    pairs = _offdiagonal(array.shape[0])
    off = [np.sqrt(2.0) * array[j, k] for j, k in pairs]
    return np.concatenate((np.diag(array), off))


def unvec_sym(vector: npt.ArrayLike, dim: int) -> Matrix:
    """Inverse of :func:`vec_sym`

    :raise DimensionMismatchError: If the length isn't ``n (n + 1) / 2``
    """
    values = as_vector(vector)
    if values.size != packed_size(dim):
        raise DimensionMismatchError(
            "Expected {} components for dimension {}, got {}"
            .format(packed_size(dim), dim, values.size))
    matrix = np.diag(values[:dim])
    for (j, k), value in zip(_offdiagonal(dim), values[dim:]):
        matrix[j, k] = matrix[k, j] = value / np.sqrt(2.0)
    return matrix


@dataclass(frozen=True, eq=False)
class UnfoldMatrix:
    """The ``n x n(n+1)/2`` unfolding ``M(A)``"""
    #: Entries (read-only)
    entries: Matrix

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or \
                entries.shape[1] != packed_size(entries.shape[0]):
            raise DimensionMismatchError(
                "An unfolding has shape (n, n(n+1)/2), got {}"
                .format(entries.shape))
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def rows(self) -> int:
        """Number of rows, n"""
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        """Number of columns, ``n(n+1)/2``"""
        return int(self.entries.shape[1])

    def __array__(self, dtype: Any = None, copy: Optional[bool] = None) \
            -> Matrix:
        return np.array(self.entries, dtype=dtype)


def unfold(tensor: PiezoTensor) -> UnfoldMatrix:
    """The unfolding ``M(A)`` whose row i is ``vec_sym`` of slice i"""
    return UnfoldMatrix(np.vstack([vec_sym(tensor.slice(index))
                                   for index in range(tensor.dim)]))


def singular_pair(matrix: UnfoldMatrix) -> Tuple[float, Vector, Vector]:
    """Largest singular value with its singular vectors

    Computed from the eigendecomposition of the n x n Gram matrix
    ``M M^T``. The left vector is sign normalized (first significant
    component positive).

    :return: ``(mu*, u, v)`` with ``M v = mu* u`` and ``M^T u = mu* v``
    """
    entries = matrix.entries
    eigenvalues, eigenvectors = np.linalg.eigh(entries @ entries.T)
    left = eigenvectors[:, -1]
    if not is_sign_normalized(left, 1e-12):
        left = -left
    value = float(np.sqrt(max(float(eigenvalues[-1]), 0.0)))
    if value == 0.0:
        right = np.zeros(matrix.cols)
        right[0] = 1.0
        return 0.0, left, right
    right = entries.T @ left / value
    return value, left, right / np.linalg.norm(right)


def largest_singular_value(matrix: UnfoldMatrix) -> float:
    """The spectral norm ``mu*`` of *matrix*"""
    eigenvalues = np.linalg.eigvalsh(matrix.entries @ matrix.entries.T)
    return float(np.sqrt(max(float(eigenvalues[-1]), 0.0)))


@dataclass(frozen=True)
class ComparisonReport:
    """Largest C-eigenvalue against the largest singular value"""
    #: Largest C-eigenvalue
    lambda_star: float
    #: Largest singular value of the unfolding
    mu_star: float
    #: ``mu_star - lambda_star``
    gap: float
    #: Whether the gap exceeds 1e-6
    strict: bool


def compare(tensor: PiezoTensor,
            cfg: Optional[SolverConfig] = None) -> ComparisonReport:
    """Compare ``lambda*`` with ``mu*``

    :param tensor: The tensor
    :param cfg: Solver configuration for ``lambda*``
    :return: The report
    :raise SolverMissError: If ``lambda*`` exceeds ``mu*`` by more than
                            1e-8, which can't happen for a correct
                            ``lambda*``, or if :func:`largest` fails
    """
    lambda_star = largest(tensor, cfg).value
    mu_star = largest_singular_value(unfold(tensor))
    gap = mu_star - lambda_star
    LOGGER.info("lambda* = %.9g, mu* = %.9g", lambda_star, mu_star)
    if gap < -COMPARE_SLACK:
        raise SolverMissError(
            "Largest C-eigenvalue {:.9g} exceeds the largest singular value "
            "{:.9g}".format(lambda_star, mu_star), lambda_star, mu_star)
    return ComparisonReport(lambda_star, mu_star, gap, gap > STRICT_GAP)
