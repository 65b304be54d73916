"""Functions for point group pattern registration and tensor construction"""
from dataclasses import dataclass
from typing import Callable, Dict, Sequence, Tuple

from ..constants import PointGroup
from ..exceptions import CatalogError, ParameterCountError
from ..tensor import PiezoTensor
from ..typing import EntryMap


#: Builder mapping free parameters to nonzero entries
PatternFunction = Callable[..., EntryMap]

PATTERNS: Dict[PointGroup, PatternFunction] = {}


def register_pattern(point_group: PointGroup, param_count: int) \
        -> Callable[[PatternFunction], PatternFunction]:
    """Function decorator for registering entry pattern builders

    The function's ``point_group`` and ``param_count`` attributes will be
    also defined.

    :param point_group: The point group the pattern belongs to
    :param param_count: Number of free parameters the builder takes
    :return: The updated function
    """
    def decorator(func: PatternFunction) -> PatternFunction:
        PATTERNS[point_group] = func
        func.point_group = point_group  # type: ignore
        func.param_count = param_count  # type: ignore
        return func
    return decorator


def param_count(point_group: PointGroup) -> int:
    """Number of free parameters of *point_group*'s pattern

    :raise CatalogError: If the group has no registered pattern
    """
    if point_group not in PATTERNS:
        raise CatalogError("There is no pattern for point group {!r}"
                           .format(point_group))
    return PATTERNS[point_group].param_count  # type: ignore


@dataclass(frozen=True)
class CrystalSpec:
    """Point group plus the free parameters of its entry pattern"""
    #: Point group
    point_group: PointGroup
    #: Free parameters, in the order of the group's pattern builder
    params: Tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "point_group", PointGroup(self.point_group))
        object.__setattr__(self, "params",
                           tuple(float(value) for value in self.params))
        expected = param_count(self.point_group)
        if len(self.params) != expected:
            raise ParameterCountError(
                "Point group {} takes {} parameters, got {}"
                .format(self.point_group.value, expected, len(self.params)))


def build(spec: CrystalSpec) -> PiezoTensor:
    """Create the dimension 3 tensor described by *spec*"""
    return PiezoTensor.from_entries(
        3, PATTERNS[spec.point_group](*spec.params))


def build_pattern(point_group: PointGroup, params: Sequence[float]) \
        -> PiezoTensor:
    """Shorthand for ``build(CrystalSpec(point_group, params))``"""
    return build(CrystalSpec(point_group, tuple(params)))
