"""Measured piezoelectric tensors of eight crystals (pC/N)

Every dataset is embedded as the free parameters of its point group's
pattern and also shipped as a tensor file under ``data/``.
"""
import logging
from dataclasses import dataclass
from importlib import resources
from typing import Dict, Tuple

from ..constants import PointGroup
from ..exceptions import UnknownDatasetError
from ..fileformat import parse_tensor
from ..tensor import PiezoTensor
from .registry import CrystalSpec, build


LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class NamedDataset:
    """A named crystal with its measured tensor"""
    #: Chemical formula used as the dataset name
    name: str
    #: Point group and parameters of the tensor
    spec: CrystalSpec
    #: The tensor, built from :obj:`spec`
    tensor: PiezoTensor

    @property
    def point_group(self) -> PointGroup:
        """Point group of the crystal"""
        return self.spec.point_group

    @property
    def params(self) -> Tuple[float, ...]:
        """Free parameters of the point group's pattern"""
        return self.spec.params


_SPECS: Dict[str, CrystalSpec] = {
    "VFeSb": CrystalSpec(PointGroup.CUBIC_23_OR_M43M, (3.68180667,)),
    "SiO2": CrystalSpec(PointGroup.TRIGONAL_32, (-0.13685, -0.009715)),
    "Cr2AgBiO8": CrystalSpec(PointGroup.TETRAGONAL_M4,
                             (-0.22163, 2.608665, 0.152485, -0.37153)),
    "RbTaO3": CrystalSpec(PointGroup.TRIGONAL_3M,
                          (-8.40955, -5.412525, -4.3031, -5.14766)),
    "NaBiS2": CrystalSpec(PointGroup.ORTHORHOMBIC_MM2,
                          (-8.90808, -0.00842, -7.11526, -0.6222, -7.93831)),
    "LiBiB2O5": CrystalSpec(PointGroup.MONOCLINIC_2,
                            (2.35682, 0.34929, 0.16101, 0.12562, 0.1361,
                             -0.05587, 6.91074, 2.57812)),
    "KBi2F7": CrystalSpec(PointGroup.TRICLINIC_1,
                          (12.64393, 1.08802, 4.14350, 1.59052, 1.96801,
                           0.22465, 2.59187, 0.08263, 0.81041, 0.51165,
                           0.71432, 0.10570, 1.51254, 0.68235, -0.23019,
                           0.19013, 0.39030, 0.08381)),
    "BaNiO3": CrystalSpec(PointGroup.HEXAGONAL_6,
                          (0.038385, 6.89822, 27.4628)),
}


def dataset_names() -> Tuple[str, ...]:
    """Names of the bundled datasets"""
    return tuple(_SPECS)


def _spec_of(name: str) -> CrystalSpec:
    if name not in _SPECS:
        raise UnknownDatasetError(name, dataset_names())
    return _SPECS[name]


def dataset(name: str) -> NamedDataset:
    """Get the embedded dataset called *name*

    :param name: One of :func:`dataset_names`, case sensitive
    :return: The dataset
    :raise UnknownDatasetError: If there is no such dataset
    """
    spec = _spec_of(name)
    return NamedDataset(name, spec, build(spec))


def point_group_of(name: str) -> PointGroup:
    """Point group of the dataset called *name*"""
    return _spec_of(name).point_group


def load_bundled(name: str) -> PiezoTensor:
    """Read the tensor file shipped for the dataset called *name*

    :raise UnknownDatasetError: If there is no such dataset
    """
    _spec_of(name)
    resource = resources.files(__package__) / "data" / (name + ".pz")
    LOGGER.debug("Loading bundled dataset %s", name)
    return parse_tensor(resource.read_text(encoding="utf-8"))
