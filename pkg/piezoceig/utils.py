"""Utility functions"""
import re
from typing import Dict, List

import numpy as np

from .typing import Vector, Matrix, VectorLike


def as_vector(values: VectorLike) -> Vector:
    """Convert *values* to a 1-D float array

    :param values: A sequence of reals, a numpy array or any object
                   implementing ``__array__``
    :return: A new float64 array
    :raise ValueError: If *values* isn't one dimensional
    """
    result = np.array(values, dtype=float)
    if result.ndim != 1:
        raise ValueError("Expected a vector, got an array of shape {}"
                         .format(result.shape))
    return result


def random_unit_vector(rng: np.random.Generator, dim: int) -> Vector:
    """Draw a point uniformly from the unit sphere in *dim* dimensions

    :param rng: Random generator, advanced by the call
    :param dim: Dimension
    :return: Unit vector
    """
    while True:
        sample = rng.standard_normal(dim)
        norm = np.linalg.norm(sample)
        if norm > 1e-12:
            return sample / norm


def sign_pivot(vector: Vector, tol: float) -> int:
    """Index of the first component with magnitude above *tol*

    :param vector: A vector
    :param tol: Magnitude threshold
    :return: The index, or the index of the largest magnitude component if
             every component is below *tol*
    """
    above = np.flatnonzero(np.abs(vector) > tol)
    if above.size:
        return int(above[0])
    return int(np.argmax(np.abs(vector)))


def is_sign_normalized(vector: Vector, tol: float) -> bool:
    """Check whether the first significant component of *vector* is positive

    :param vector: A vector
    :param tol: Magnitude threshold defining "significant"
    :return: True if flipping the sign is not required
    """
    return bool(vector[sign_pivot(vector, tol)] >= 0.0)


def sphere_grid(dim: int, resolution: int) -> Matrix:
    """Points on a spherical-coordinate grid of the unit sphere

    Only half of the sphere is sampled for *dim* = 2 since the callers'
    objectives are even in the direction.

    :param dim: 2 or 3
    :param resolution: Number of polar angle steps over ``[0, pi]``
    :return: Array of shape ``(m, dim)`` of unit vectors
    :raise ValueError: If *dim* is not 2 or 3
    """
    if dim == 2:
        angle = np.linspace(0.0, np.pi, resolution, endpoint=False)
        return np.column_stack((np.cos(angle), np.sin(angle)))
    if dim == 3:
        theta = np.linspace(0.0, np.pi, resolution + 1)
        phi = np.linspace(0.0, 2.0 * np.pi, 2 * resolution, endpoint=False)
        theta, phi = np.meshgrid(theta, phi, indexing="ij")
        points = np.stack((np.sin(theta) * np.cos(phi),
                           np.sin(theta) * np.sin(phi),
                           np.cos(theta)), axis=-1)
        return points.reshape(-1, 3)
    raise ValueError("Sphere grids exist for dimension 2 and 3 only")


def format_number(value: float, digits: int) -> str:
    """Format *value* with *digits* significant digits

    Negative zero is printed as ``0``.

    :param value: A real number
    :param digits: Significant digits
    :return: Formatted number
    """
    if value == 0.0:
        value = 0.0
    text = "{:.{}g}".format(value, digits)
    return "0" if text == "-0" else text


def format_vector(vector: VectorLike, digits: int = 17,
                  separator: str = ",") -> str:
    """Format the components of *vector*

    :param vector: A vector
    :param digits: Significant digits per component
    :param separator: Text between components
    :return: Formatted vector
    """
    return separator.join(format_number(float(value), digits)
                          for value in as_vector(vector))


def parse_vector(text: str) -> Vector:
    """Parse a comma separated list of reals, e.g. ``"0,0,1"``

    :param text: Comma separated numbers
    :return: The vector
    :raise ValueError: If a component isn't a number
    """
    return as_vector([float(part) for part in text.split(",")])


def parse_key_values(line: str) -> Dict[str, str]:
    """Split a ``key=value key=value`` record

    :param line: A record
    :return: Mapping of keys to raw values
    :raise ValueError: If a token has no ``=``
    """
    result: Dict[str, str] = {}
    tokens: List[str] = line.split()
    for token in tokens:
        match = re.fullmatch(r"([A-Za-z_]+)=(\S*)", token)
        if not match:
            raise ValueError("Malformed record token {!r}".format(token))
        result[match[1]] = match[2]
    return result
