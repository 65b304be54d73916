"""Closed-form C-eigenpairs of two small tensors

``A(alpha)`` is the cubic tensor with ``a_123 = a_213 = a_312 = -alpha``.
The witness tensor has dimension 2 with ``a_112 = a_222 = 1``; its largest
C-eigenvalue is strictly below the largest singular value of its unfolding.
"""
from dataclasses import replace
from typing import Iterable, Tuple

import numpy as np

from ..constants import PointGroup
from ..exceptions import CatalogError
from ..solver import CEigenPair, EigenSpectrum, canonicalize, residuals
from ..tensor import PiezoTensor
from .registry import build_pattern


_S2 = 1.0 / np.sqrt(2.0)
_S3 = 1.0 / np.sqrt(3.0)

#: ``(lambda / alpha, x, y)`` of the C-eigenpairs of ``A(alpha)``
_A_ALPHA_SOLUTIONS = (
    (0.0, (1.0, 0.0, 0.0), (1.0, 0.0, 0.0)),
    (0.0, (0.0, 1.0, 0.0), (0.0, 1.0, 0.0)),
    (0.0, (0.0, 0.0, 1.0), (0.0, 0.0, 1.0)),
    (1.0, (0.0, 0.0, -1.0), (_S2, _S2, 0.0)),
    (1.0, (0.0, 0.0, 1.0), (_S2, -_S2, 0.0)),
    (1.0, (0.0, -1.0, 0.0), (_S2, 0.0, _S2)),
    (1.0, (0.0, 1.0, 0.0), (_S2, 0.0, -_S2)),
    (1.0, (-1.0, 0.0, 0.0), (0.0, _S2, _S2)),
    (1.0, (1.0, 0.0, 0.0), (0.0, _S2, -_S2)),
    (2.0 * _S3, (-_S3, -_S3, -_S3), (_S3, _S3, _S3)),
    (2.0 * _S3, (_S3, -_S3, _S3), (_S3, -_S3, _S3)),
    (2.0 * _S3, (_S3, _S3, -_S3), (_S3, _S3, -_S3)),
    (2.0 * _S3, (-_S3, _S3, _S3), (_S3, -_S3, -_S3)),
)


def a_alpha(alpha: float) -> PiezoTensor:
    """The cubic tensor ``A(alpha)``"""
    return build_pattern(PointGroup.CUBIC_23_OR_M43M, (alpha,))


def _spectrum(tensor: PiezoTensor,
              solutions: Iterable[Tuple[float, Tuple[float, ...],
                                        Tuple[float, ...]]]) \
        -> EigenSpectrum:
    pairs = []
    for value, left, right in solutions:
        pair = canonicalize(CEigenPair(value, left, right))
        pairs.append(replace(pair, residual=max(residuals(tensor, pair))))
    pairs.sort(key=lambda pair: (-pair.value,) + tuple(pair.left) +
               tuple(pair.right))
    return EigenSpectrum(tuple(pairs), (1,) * len(pairs))


def analytic_spectrum_a_alpha(alpha: float) -> EigenSpectrum:
    """The 13 canonical C-eigenpair groups of ``A(alpha)``

    Three groups at 0, six at ``|alpha|`` and four at
    ``2 |alpha| / sqrt(3)``. For negative *alpha* the listed solutions are
    mapped through the sign group.

    :param alpha: Nonzero parameter
    :return: Spectrum with residuals against ``A(alpha)``
    :raise CatalogError: If *alpha* is zero
    """
    if alpha == 0.0:
        raise CatalogError("A(alpha) is the zero tensor for alpha = 0")
    return _spectrum(a_alpha(alpha),
                     ((ratio * alpha, left, right)
                      for ratio, left, right in _A_ALPHA_SOLUTIONS))


def witness_tensor() -> PiezoTensor:
    """The dimension 2 tensor with ``a_112 = a_222 = 1``"""
    return PiezoTensor.from_entries(2, {(1, 1, 2): 1.0, (2, 2, 2): 1.0})


def analytic_spectrum_witness() -> EigenSpectrum:
    """The four canonical C-eigenpairs of :func:`witness_tensor`"""
    root2 = np.sqrt(2.0)
    return _spectrum(witness_tensor(), (
        (2.0 * _S3, (root2 * _S3, _S3), (_S3, root2 * _S3)),
        (2.0 * _S3, (-root2 * _S3, _S3), (_S3, -root2 * _S3)),
        (1.0, (0.0, 1.0), (0.0, 1.0)),
        (0.0, (0.0, 1.0), (1.0, 0.0)),
    ))
