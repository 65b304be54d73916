"""Point group patterns, measured datasets and closed-form spectra"""
from .registry import PATTERNS, CrystalSpec, build, build_pattern, \
    param_count  # noqa: F401
from . import patterns  # noqa: F401
from .datasets import NamedDataset, dataset, dataset_names, \
    point_group_of, load_bundled  # noqa: F401
from .analytic import a_alpha, analytic_spectrum_a_alpha, \
    witness_tensor, analytic_spectrum_witness  # noqa: F401
