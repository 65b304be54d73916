"""Entry patterns of piezoelectric tensors for several point groups

Each builder returns the nonzero entries ``a_ijk`` (1-based, ``j <= k``)
as a linear function of the group's free parameters.
"""
from ..constants import PointGroup
from ..typing import EntryMap
from .registry import register_pattern


@register_pattern(PointGroup.CUBIC_23_OR_M43M, 1)
def cubic(alpha: float) -> EntryMap:
    """``a_123 = a_213 = a_312 = -alpha``"""
    return {(1, 2, 3): -alpha, (2, 1, 3): -alpha, (3, 1, 2): -alpha}


@register_pattern(PointGroup.TRIGONAL_32, 2)
def trigonal_32(a111: float, a123: float) -> EntryMap:
    """``a_111 = -a_122 = -a_212`` and ``a_123 = -a_213``"""
    return {(1, 1, 1): a111, (1, 2, 2): -a111, (2, 1, 2): -a111,
            (1, 2, 3): a123, (2, 1, 3): -a123}


@register_pattern(PointGroup.TETRAGONAL_M4, 4)
def tetragonal_m4(a123: float, a113: float, a311: float,
                  a312: float) -> EntryMap:
    """``a_123 = a_213``, ``a_113 = -a_223``, ``a_311 = -a_322``, ``a_312``"""
    return {(1, 2, 3): a123, (2, 1, 3): a123,
            (1, 1, 3): a113, (2, 2, 3): -a113,
            (3, 1, 1): a311, (3, 2, 2): -a311,
            (3, 1, 2): a312}


@register_pattern(PointGroup.TRIGONAL_3M, 4)
def trigonal_3m(a113: float, a222: float, a311: float,
                a333: float) -> EntryMap:
    """``a_113 = a_223``, ``a_222 = -a_112 = -a_211``, ``a_311 = a_322``,
    ``a_333``"""
    return {(1, 1, 3): a113, (2, 2, 3): a113,
            (2, 2, 2): a222, (1, 1, 2): -a222, (2, 1, 1): -a222,
            (3, 1, 1): a311, (3, 2, 2): a311,
            (3, 3, 3): a333}


@register_pattern(PointGroup.ORTHORHOMBIC_MM2, 5)
def orthorhombic_mm2(a113: float, a223: float, a311: float, a322: float,
                     a333: float) -> EntryMap:
    """Five independent entries ``a_113, a_223, a_311, a_322, a_333``"""
    return {(1, 1, 3): a113, (2, 2, 3): a223, (3, 1, 1): a311,
            (3, 2, 2): a322, (3, 3, 3): a333}


@register_pattern(PointGroup.MONOCLINIC_2, 8)
def monoclinic_2(a123: float, a112: float, a211: float, a222: float,
                 a233: float, a213: float, a323: float,
                 a312: float) -> EntryMap:
    """Eight independent entries, twofold axis along the second axis"""
    return {(1, 2, 3): a123, (1, 1, 2): a112, (2, 1, 1): a211,
            (2, 2, 2): a222, (2, 3, 3): a233, (2, 1, 3): a213,
            (3, 2, 3): a323, (3, 1, 2): a312}


#: Parameter order of the triclinic builder
TRICLINIC_ORDER = ((1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 2, 3), (1, 1, 3),
                   (1, 1, 2), (2, 1, 1), (2, 2, 2), (2, 3, 3), (2, 2, 3),
                   (2, 1, 3), (2, 1, 2), (3, 1, 1), (3, 2, 2), (3, 3, 3),
                   (3, 2, 3), (3, 1, 3), (3, 1, 2))


@register_pattern(PointGroup.TRICLINIC_1, 18)
def triclinic_1(*params: float) -> EntryMap:
    """All eighteen entries, in :obj:`TRICLINIC_ORDER`"""
    return dict(zip(TRICLINIC_ORDER, params))


@register_pattern(PointGroup.HEXAGONAL_6, 3)
def hexagonal_6(a113: float, a311: float, a333: float) -> EntryMap:
    """``a_113 = a_223``, ``a_311 = a_322``, ``a_333``"""
    return {(1, 1, 3): a113, (2, 2, 3): a113,
            (3, 1, 1): a311, (3, 2, 2): a311,
            (3, 3, 3): a333}
