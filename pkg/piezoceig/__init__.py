"""C-eigenvalues of piezoelectric-type tensors"""
import logging

from .constants import SymmetryMode, PointGroup, PairFlag  # noqa: F401
from .tensor import PiezoTensor, UnitVector, OrthogonalMatrix, \
    Rank1PiezoTensor, contract_yy, contract_xy, scalar_form, inner, \
    frobenius_norm, rotate, rank1_residual  # noqa: F401
from .fileformat import parse_tensor, read_tensor, format_tensor, \
    write_tensor  # noqa: F401
from .solver import SolverConfig, CEigenPair, EigenSpectrum, \
    alternating_ascent, refine, canonicalize, solve_spectrum, \
    brute_force_lower_bound, largest, best_rank_one, \
    map_pair  # noqa: F401
from .unfold import UnfoldMatrix, vec_sym, unvec_sym, unfold, \
    largest_singular_value, singular_pair, compare  # noqa: F401
from .physics import polarization, max_polarization, strain, \
    max_strain_spectral_norm, spectral_norm  # noqa: F401
from . import catalog  # noqa: F401

# Create a default handler to avoid warnings in applications without logging
# configuration
logging.getLogger(__name__).addHandler(logging.NullHandler())
