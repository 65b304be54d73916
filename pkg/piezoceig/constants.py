"""Enumerations, tolerances and defaults"""
from enum import Enum, unique, auto


@unique
class SymmetryMode(Enum):
    """How dense input that breaks ``a_ijk = a_ikj`` is treated"""
    #: Reject the input and report the worst offending index triple
    STRICT = "strict"
    #: Store the average of the two (j, k) orders
    SYMMETRIZE = "symmetrize"


@unique
class PointGroup(str, Enum):
    """Crystallographic point groups with a built-in entry pattern"""
    #: Cubic classes 23 and -43m
    CUBIC_23_OR_M43M = "cubic_23_or_m43m"
    #: Trigonal class 32
    TRIGONAL_32 = "trigonal_32"
    #: Tetragonal class -4
    TETRAGONAL_M4 = "tetragonal_m4"
    #: Trigonal class 3m
    TRIGONAL_3M = "trigonal_3m"
    #: Orthorhombic class mm2
    ORTHORHOMBIC_MM2 = "orthorhombic_mm2"
    #: Monoclinic class 2
    MONOCLINIC_2 = "monoclinic_2"
    #: Triclinic class 1
    TRICLINIC_1 = "triclinic_1"
    #: Hexagonal class 6
    HEXAGONAL_6 = "hexagonal_6"


@unique
class PairFlag(Enum):
    """Diagnostics attached to a computed C-eigenpair"""
    #: The objective vanished along the ascent path, restarts were exhausted
    DEGENERATE = auto()
    #: Refinement could not bring the residual under the target
    NO_PROGRESS = auto()
    #: A ridge term was added to singular normal equations
    RIDGE = auto()
    #: The pair lies on a continuous family of solutions
    FAMILY = auto()


@unique
class OutputFormat(str, Enum):
    """CLI output formats"""
    #: Aligned text table, 6 significant digits
    TABLE = "table"
    #: One ``key=value`` record per line, full precision
    LINES = "lines"


@unique
class Command(str, Enum):
    """CLI subcommands"""
    SOLVE = "solve"
    LARGEST = "largest"
    RANK1 = "rank1"
    COMPARE = "compare"
    UNFOLD = "unfold"
    PHYSICS = "physics"
    ROTATE_CHECK = "rotate-check"
    CATALOG = "catalog"


@unique
class PhysicsMode(str, Enum):
    """Quantities reported by the ``physics`` subcommand"""
    POLARIZATION = "polarization"
    STRAIN = "strain"
    MAX = "max"


#: Header prefix of the tensor text format
TENSOR_FILE_MAGIC = "piezo-tensor v1"
#: Significant digits written by the tensor file writer
TENSOR_FILE_DIGITS = 9
#: Significant digits of the table output
TABLE_DIGITS = 6

#: Largest tolerated |a_ijk - a_ikj| in strict mode
SYMMETRY_TOL = 1e-12
#: Largest tolerated deviation of a unit vector's norm from 1
UNIT_TOL = 1e-12
#: Largest tolerated deviation of a stored eigenvector's norm from 1
PAIR_UNIT_TOL = 1e-10
#: Largest tolerated entry of Q^T Q - I
ORTHOGONAL_TOL = 1e-10
#: Largest tolerated asymmetry of a symmetric matrix argument
MATRIX_SYMMETRY_TOL = 1e-10

#: Default number of random starts of a spectrum solve
DEFAULT_NUM_STARTS = 100
#: Default cap on alternating-ascent sweeps
DEFAULT_MAX_OUTER_ITERS = 500
#: Default stopping threshold on the change of the ascent objective
DEFAULT_ASCENT_TOL = 1e-12
#: Default residual target of the Gauss-Newton refinement
DEFAULT_REFINE_TOL = 1e-12
#: Default tolerance used to merge eigenpairs
DEFAULT_DEDUP_TOL = 1e-6
#: Default seed of the start generator
DEFAULT_SEED = 0

#: Consecutive degenerate restarts before the ascent gives up
MAX_DEGENERATE_RESTARTS = 10
#: Relative size of A y y below which the x-update is undefined
DEGENERATE_TOL = 1e-14
#: Gauss-Newton iterations before refinement reports no progress
MAX_REFINE_ITERS = 50
#: Step halvings tried per Gauss-Newton iteration
MAX_STEP_HALVINGS = 40
#: Ridge added to singular normal equations
RIDGE = 1e-10
#: Relative smallest Jacobian singular value that marks a solution family
FAMILY_TOL = 1e-6
#: Eigenvector distance factor, applied to the merge tolerance
EIGENVECTOR_MERGE_FACTOR = 100.0

#: Angular resolution of the grid oracle used to certify the largest pair
CERTIFY_RESOLUTION = 200
#: Slack allowed between the largest pair and the grid oracle
CERTIFY_SLACK = 1e-6
#: Most negative mu* - lambda* accepted by the singular value comparison
COMPARE_SLACK = 1e-8
#: Gap above which the singular value comparison is reported as strict
STRICT_GAP = 1e-6
#: Largest spectrum deviation accepted by the rotation check
ROTATION_TOL = 1e-6

#: Exit status for success
EXIT_OK = 0
#: Exit status for bad input (files, names, flags)
EXIT_INPUT_ERROR = 2
#: Exit status for a failed certification or comparison
EXIT_SOLVER_MISS = 3
