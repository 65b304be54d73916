"""Exception types

Exception hierarchy::

    PiezoCeigException
        TensorError
            DimensionMismatchError
            SymmetryViolationError
            TensorFormatError
            NotUnitError
            NotOrthogonalError
            AsymmetricMatrixError
        SolverError
            SolverMissError
            UnsupportedDimensionError
            InvalidConfigError
        CatalogError
            UnknownDatasetError
            ParameterCountError
"""
from typing import Optional, Sequence, Tuple, cast


class PiezoCeigException(Exception):
    """Base exception type.

    All exceptions of the package inherit from this class.
    """


class TensorError(PiezoCeigException):
    """Invalid tensor, vector or matrix data"""


class DimensionMismatchError(TensorError):
    """Operands of an operation have incompatible dimensions"""


class SymmetryViolationError(TensorError):
    """Dense input breaks the partial symmetry a_ijk = a_ikj"""
    # pylint: disable=useless-super-delegation
    def __init__(self, message: str, index: Tuple[int, int, int],
                 deviation: float) -> None:
        """
        :param message: Error description
        :param index: Worst offending (i, j, k), 1-based
        :param deviation: The value of |a_ijk - a_ikj| at *index*
        """
        super().__init__(message, index, deviation)

    # pylint: enable=useless-super-delegation

    def __str__(self) -> str:
        return self.message

    @property
    def message(self) -> str:
        """Error description"""
        return cast(str, self.args[0])

    @property
    def index(self) -> Tuple[int, int, int]:
        """Worst offending index triple, 1-based"""
        return cast(Tuple[int, int, int], self.args[1])

    @property
    def deviation(self) -> float:
        """Size of the asymmetry at :obj:`index`"""
        return cast(float, self.args[2])


class TensorFormatError(TensorError):
    """Malformed tensor text"""
    def __init__(self, message: str, line_number: Optional[int]) -> None:
        """
        :param message: Error description
        :param line_number: 1-based line of the offending input, ``None``
                            if the error is not tied to a line
        """
        super().__init__(message, line_number)

    def __str__(self) -> str:
        if self.line_number is None:
            return self.message
        return "line {}: {}".format(self.line_number, self.message)

    @property
    def message(self) -> str:
        """Error description"""
        return cast(str, self.args[0])

    @property
    def line_number(self) -> Optional[int]:
        """1-based line number of the offending input"""
        return cast(Optional[int], self.args[1])


class NotUnitError(TensorError):
    """A vector required to have unit norm does not"""


class NotOrthogonalError(TensorError):
    """A matrix required to be orthogonal is not"""


class AsymmetricMatrixError(TensorError):
    """A matrix required to be symmetric is not"""


class SolverError(PiezoCeigException):
    """Error raised by the eigenpair solvers"""


class SolverMissError(SolverError):
    """The computed largest C-eigenvalue fails a certification check

    Usually fixed by re-running with more starts.
    """
    def __init__(self, message: str, lambda_star: float,
                 bound: float) -> None:
        """
        :param message: Error description
        :param lambda_star: Largest C-eigenvalue found by the solver
        :param bound: The value it was checked against
        """
        super().__init__(message, lambda_star, bound)

    def __str__(self) -> str:
        return self.message

    @property
    def message(self) -> str:
        """Error description"""
        return cast(str, self.args[0])

    @property
    def lambda_star(self) -> float:
        """Largest C-eigenvalue found by the solver"""
        return cast(float, self.args[1])

    @property
    def bound(self) -> float:
        """The certified value :obj:`lambda_star` fell short of"""
        return cast(float, self.args[2])


class UnsupportedDimensionError(SolverError):
    """The requested computation is not available for this dimension"""


class InvalidConfigError(SolverError):
    """Solver or run configuration out of its valid range"""


class CatalogError(PiezoCeigException):
    """Error raised by the crystal catalog"""


class UnknownDatasetError(CatalogError):
    """No bundled dataset has the requested name"""
    def __init__(self, name: str, available: Sequence[str]) -> None:
        """
        :param name: Requested name
        :param available: Names of the bundled datasets
        """
        super().__init__(name, tuple(available))

    def __str__(self) -> str:
        return "Unknown dataset {!r}, available: {}".format(
            self.name, ", ".join(self.available))

    @property
    def name(self) -> str:
        """Requested name"""
        return cast(str, self.args[0])

    @property
    def available(self) -> Tuple[str, ...]:
        """Names of the bundled datasets"""
        return cast(Tuple[str, ...], self.args[1])


class ParameterCountError(CatalogError):
    """A crystal spec carries the wrong number of free parameters"""
