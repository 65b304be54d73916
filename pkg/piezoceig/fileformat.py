"""Reader and writer of the ``piezo-tensor v1`` text format

Example::

    piezo-tensor v1 dim=3
    1 2 3 -3.68180667
    2 1 3 -3.68180667
    3 1 2 -3.68180667

Each entry line is ``i j k value`` with 1-based indices and sets both
``a_ijk`` and ``a_ikj``. Blank lines and lines starting with ``#`` are
ignored.
"""
import logging
import re
from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np

from .constants import SymmetryMode, TENSOR_FILE_MAGIC, TENSOR_FILE_DIGITS, \
    SYMMETRY_TOL
from .exceptions import TensorFormatError, SymmetryViolationError
from .tensor import PiezoTensor
from .utils import format_number


LOGGER = logging.getLogger(__name__)

_HEADER_PATTERN = re.compile(re.escape(TENSOR_FILE_MAGIC) + r"\s+dim=(\d+)")


def parse_tensor(text: str, mode: SymmetryMode = SymmetryMode.STRICT) \
        -> PiezoTensor:
    """Parse tensor text

    :param text: File contents
    :param mode: What to do when both ``(i, j, k)`` and ``(i, k, j)`` are
                 listed with different values
    :return: The tensor
    :raise TensorFormatError: On malformed input, naming the line
    :raise SymmetryViolationError: In strict mode, if the two orders of an
                                   entry disagree by more than 1e-12
    """
    lines = text.splitlines()
    content = [(number, line.strip()) for number, line
               in enumerate(lines, start=1)
               if line.strip() and not line.strip().startswith("#")]
    if not content:
        raise TensorFormatError("Missing header", None)

    header_number, header = content[0]
    match = _HEADER_PATTERN.fullmatch(header)
    if not match:
        raise TensorFormatError(
            "Expected header {!r}".format(TENSOR_FILE_MAGIC + " dim=<n>"),
            header_number)
    dim = int(match[1])
    if dim < 1:
        raise TensorFormatError("Dimension must be positive", header_number)

    # values keyed by the canonical (i, j<=k) index, then by listing order
    values: Dict[Tuple[int, int, int], Dict[bool, Tuple[float, int]]] = {}
    for number, line in content[1:]:
        fields = line.split()
        if len(fields) != 4:
            raise TensorFormatError("Expected 'i j k value'", number)
        try:
            i, j, k = (int(field) for field in fields[:3])
            value = float(fields[3])
        except ValueError as error:
            raise TensorFormatError(str(error), number) from error
        if not all(1 <= index <= dim for index in (i, j, k)):
            raise TensorFormatError(
                "Index ({}, {}, {}) out of range for dimension {}"
                .format(i, j, k, dim), number)
        if not np.isfinite(value):
            raise TensorFormatError("Non-finite value", number)

        key = (i, min(j, k), max(j, k))
        swapped = j > k
        orders = values.setdefault(key, {})
        if swapped in orders:
            raise TensorFormatError(
                "Duplicate entry ({}, {}, {}), first given on line {}"
                .format(i, j, k, orders[swapped][1]), number)
        orders[swapped] = (value, number)

    entries = {}
    for key, orders in values.items():
        if len(orders) == 1:
            entries[key] = next(iter(orders.values()))[0]
            continue
        (first, _), (second, number) = orders[False], orders[True]
        deviation = abs(first - second)
        if deviation > SYMMETRY_TOL and mode is SymmetryMode.STRICT:
            i, j, k = key
            raise SymmetryViolationError(
                "line {}: entries a{}{}{} and a{}{}{} differ by {:.3g}"
                .format(number, i, j, k, i, k, j, deviation),
                (i, k, j), deviation)
        entries[key] = 0.5 * (first + second)
    return PiezoTensor.from_entries(dim, entries)


def read_tensor(path: Union[str, Path],
                mode: SymmetryMode = SymmetryMode.STRICT) -> PiezoTensor:
    """Read a tensor file, see :func:`parse_tensor`"""
    LOGGER.debug("Reading tensor from %s", path)
    return parse_tensor(Path(path).read_text(encoding="utf-8"), mode)


def format_tensor(tensor: PiezoTensor) -> str:
    """Canonical text: ``j <= k`` entries only, sorted, 9 significant
    digits"""
    lines = ["{} dim={}".format(TENSOR_FILE_MAGIC, tensor.dim)]
    for (i, j, k), value in sorted(tensor.nonzero_entries().items()):
        lines.append("{} {} {} {}".format(
            i, j, k, format_number(value, TENSOR_FILE_DIGITS)))
    return "\n".join(lines) + "\n"


def write_tensor(tensor: PiezoTensor, path: Union[str, Path]) -> None:
    """Write the canonical text of *tensor* to *path*"""
    Path(path).write_text(format_tensor(tensor), encoding="utf-8")
