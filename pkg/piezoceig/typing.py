"""Type definitions"""
from typing import Dict, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt


#: Real vector
Vector = npt.NDArray[np.float64]
#: Real matrix
Matrix = npt.NDArray[np.float64]
#: Anything :func:`numpy.asarray` turns into a real vector
VectorLike = Union[npt.ArrayLike, Sequence[float]]
#: 1-based tensor index (i, j, k)
IndexTriple = Tuple[int, int, int]
#: Nonzero tensor entries keyed by 1-based index
EntryMap = Dict[IndexTriple, float]
