"""Command line interface

Usage examples::

    piezoceig solve --catalog SiO2 --starts 500 --seed 0
    piezoceig compare --tensor my.pz --format lines
    piezoceig catalog show BaNiO3
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, \
    Tuple

import numpy as np

from .catalog import dataset, dataset_names, point_group_of
from .constants import Command, OutputFormat, PhysicsMode, SymmetryMode, \
    TABLE_DIGITS, ROTATION_TOL, EXIT_OK, EXIT_INPUT_ERROR, \
    EXIT_SOLVER_MISS, DEFAULT_NUM_STARTS, DEFAULT_SEED, DEFAULT_REFINE_TOL, \
    DEFAULT_DEDUP_TOL
from .exceptions import TensorError, CatalogError, InvalidConfigError, \
    SolverMissError, UnsupportedDimensionError
from .fileformat import read_tensor, format_tensor
from .physics import polarization, strain, spectral_norm, \
    max_strain_spectral_norm, polarization_extremality, strain_extremality
from .solver import SolverConfig, CEigenPair, EigenSpectrum, \
    solve_spectrum, largest, best_rank_one
from .tensor import PiezoTensor, OrthogonalMatrix, UnitVector, rotate, \
    rank1_residual
from .unfold import unfold, largest_singular_value, compare
from .utils import format_number, format_vector, parse_key_values, \
    parse_vector, random_unit_vector


LOGGER = logging.getLogger(__name__)

#: Number of random rotations tried by ``rotate-check``
DEFAULT_TRIALS = 20
#: Number of random unit vectors sampled by ``physics --mode max``
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class RunConfig:
    """Everything a single CLI invocation needs"""
    #: Subcommand
    command: Command
    #: Tensor file to read
    tensor_path: Optional[Path] = None
    #: Name of a bundled dataset to use as input
    catalog: Optional[str] = None
    #: Treatment of asymmetric tensor files
    symmetry_mode: SymmetryMode = SymmetryMode.STRICT
    #: Solver parameters
    solver: SolverConfig = field(default_factory=SolverConfig)
    #: Output format
    output_format: OutputFormat = OutputFormat.TABLE
    #: Output file, standard output if None
    out: Optional[Path] = None
    #: Number of rotations for ``rotate-check``
    trials: int = DEFAULT_TRIALS
    #: Quantity computed by ``physics``
    physics_mode: PhysicsMode = PhysicsMode.MAX
    #: Stress axis for ``physics --mode polarization``
    direction: Optional[Tuple[float, ...]] = None
    #: Electric field for ``physics --mode strain``
    electric_field: Optional[Tuple[float, ...]] = None
    #: Number of sampled vectors for ``physics --mode max``
    samples: int = DEFAULT_SAMPLES
    #: ``list`` or ``show`` for the ``catalog`` command
    catalog_action: Optional[str] = None
    #: Dataset name for ``catalog show``
    name: Optional[str] = None

    def __post_init__(self) -> None:
        if self.command is Command.CATALOG:
            if self.catalog_action not in ("list", "show"):
                raise InvalidConfigError("catalog needs 'list' or 'show'")
            if self.catalog_action == "show" and self.name is None:
                raise InvalidConfigError("catalog show needs a dataset name")
        elif (self.tensor_path is None) == (self.catalog is None):
            raise InvalidConfigError(
                "Exactly one of --tensor and --catalog is required")
        if self.trials < 1:
            raise InvalidConfigError("--trials must be at least 1")
        if self.samples < 1:
            raise InvalidConfigError("--samples must be at least 1")
        if self.command is Command.PHYSICS:
            if self.physics_mode is PhysicsMode.POLARIZATION and \
                    self.direction is None:
                raise InvalidConfigError(
                    "--mode polarization needs --direction")
            if self.physics_mode is PhysicsMode.STRAIN and \
                    self.electric_field is None:
                raise InvalidConfigError("--mode strain needs --field")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """Create a configuration from parsed command line arguments

        :raise InvalidConfigError: If an override is out of range
        """
        command = Command(args.command)
        if command is Command.CATALOG:
            return cls(command, catalog_action=args.action,
                       name=getattr(args, "name", None))

        solver = SolverConfig(num_starts=args.starts,
                              refine_tol=args.tol,
                              dedup_tol=args.dedup_tol,
                              rng_seed=args.seed)
        direction = getattr(args, "direction", None)
        field_vector = getattr(args, "field", None)
        return cls(
            command,
            tensor_path=Path(args.tensor) if args.tensor else None,
            catalog=args.catalog,
            symmetry_mode=(SymmetryMode.SYMMETRIZE if args.symmetrize
                           else SymmetryMode.STRICT),
            solver=solver,
            output_format=OutputFormat(args.format),
            out=Path(args.out) if args.out else None,
            trials=getattr(args, "trials", DEFAULT_TRIALS),
            physics_mode=PhysicsMode(getattr(args, "mode",
                                             PhysicsMode.MAX.value)),
            direction=(tuple(parse_vector(direction))
                       if direction else None),
            electric_field=(tuple(parse_vector(field_vector))
                            if field_vector else None),
            samples=getattr(args, "samples", DEFAULT_SAMPLES))


def load_input(config: RunConfig) -> PiezoTensor:
    """Read the tensor named by *config*

    :raise TensorError: On an unreadable tensor file
    :raise UnknownDatasetError: On an unknown catalog name
    """
    if config.tensor_path is not None:
        return read_tensor(config.tensor_path, config.symmetry_mode)
    return dataset(config.catalog).tensor  # type: ignore


def _num(value: float, digits: int = TABLE_DIGITS) -> str:
    return format_number(value, digits)


def _vec(vector: Iterable[float]) -> str:
    return "(" + ", ".join(_num(float(value)) for value in vector) + ")"


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(cell) for cell in column)
              for column in zip(header, *rows)]
    lines = []
    for row in [list(header)] + [list(row) for row in rows]:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def _flags(pair: CEigenPair) -> str:
    return ",".join(sorted(flag.name.lower() for flag in pair.flags))


def format_pair_record(pair: CEigenPair) -> str:
    """Full precision ``lambda=... x=... y=... residual=...`` record"""
    record = "lambda={} x={} y={} residual={}".format(
        format_number(pair.value, 17), format_vector(pair.left),
        format_vector(pair.right), format_number(pair.residual, 17))
    if pair.flags:
        record += " flags=" + _flags(pair)
    return record


def parse_pair_record(line: str) -> CEigenPair:
    """Read back a record written by :func:`format_pair_record`

    :raise ValueError: If a required key is missing or malformed
    """
    values = parse_key_values(line)
    missing = {"lambda", "x", "y"} - set(values)
    if missing:
        raise ValueError("Record lacks {}".format(", ".join(sorted(missing))))
    return CEigenPair(float(values["lambda"]),
                      parse_vector(values["x"]),
                      parse_vector(values["y"]),
                      float(values.get("residual", 0.0)))


def format_pairs(pairs: Sequence[CEigenPair], fmt: OutputFormat) -> str:
    """Pairs as a numbered table or as records"""
    if fmt is OutputFormat.LINES:
        return "\n".join(format_pair_record(pair) for pair in pairs)
    rows = [(str(number), _num(pair.value), _vec(pair.left),
             _vec(pair.right), _flags(pair))
            for number, pair in enumerate(pairs, start=1)]
    return _table(("No.", "lambda", "x", "y", "flags"), rows)


def value_set_distance(first: Sequence[float],
                       second: Sequence[float]) -> float:
    """Symmetric max-min distance between two sets of reals"""
    if not first and not second:
        return 0.0
    if not first or not second:
        return float("inf")
    left = np.asarray(first)[:, None]
    right = np.asarray(second)[None, :]
    distance = np.abs(left - right)
    return float(max(np.max(np.min(distance, axis=1)),
                     np.max(np.min(distance, axis=0))))


@dataclass(frozen=True)
class RotationReport:
    """Outcome of ``rotate-check``"""
    #: Number of random rotations
    trials: int
    #: Distinct positive C-eigenvalues of the input tensor
    values: Tuple[float, ...]
    #: Largest distance between the value sets before and after rotation
    max_deviation: float

    @property
    def passed(self) -> bool:
        """Whether the deviation is within 1e-6"""
        return self.max_deviation <= ROTATION_TOL


def _positive_values(spectrum: EigenSpectrum, cfg: SolverConfig) \
        -> Tuple[float, ...]:
    return spectrum.positive(cfg.dedup_tol).distinct_values(cfg.dedup_tol)


def rotate_check(config: RunConfig, trials: Optional[int] = None) \
        -> RotationReport:
    """Compare spectra of the input tensor and of random rotations of it

    :param config: Run configuration; rotations are drawn from
                   ``config.solver.rng_seed``
    :param trials: Number of rotations, ``config.trials`` if None
    :return: The report
    :raise InvalidConfigError: If *trials* is less than 1
    """
    if trials is None:
        trials = config.trials
    elif trials < 1:
        raise InvalidConfigError("trials must be at least 1")
    cfg = config.solver
    tensor = load_input(config)
    values = _positive_values(solve_spectrum(tensor, cfg), cfg)
    rng = np.random.default_rng(cfg.rng_seed)
    deviation = 0.0
    for trial in range(trials):
        matrix = OrthogonalMatrix.random(rng, tensor.dim)
        rotated = _positive_values(solve_spectrum(rotate(tensor, matrix),
                                                  cfg), cfg)
        trial_deviation = value_set_distance(values, rotated)
        LOGGER.debug("Rotation %d: deviation %.3g", trial, trial_deviation)
        deviation = max(deviation, trial_deviation)
    return RotationReport(trials, values, deviation)


#: Command handler, returns the output text and the exit status
Handler = Callable[[RunConfig], Tuple[str, int]]


def _solve(config: RunConfig) -> Tuple[str, int]:
    spectrum = solve_spectrum(load_input(config), config.solver)
    return format_pairs(spectrum.pairs, config.output_format), EXIT_OK


def _largest(config: RunConfig) -> Tuple[str, int]:
    pair = largest(load_input(config), config.solver)
    return format_pairs([pair], config.output_format), EXIT_OK


def _rank1(config: RunConfig) -> Tuple[str, int]:
    tensor = load_input(config)
    rank1 = best_rank_one(tensor, config.solver)
    error = rank1_residual(tensor, rank1)
    if config.output_format is OutputFormat.LINES:
        return "lambda={} x={} y={} error={}".format(
            format_number(rank1.scale, 17), format_vector(rank1.left),
            format_vector(rank1.right), format_number(error, 17)), EXIT_OK
    return _table(("lambda", "x", "y", "error"),
                  [(_num(rank1.scale), _vec(rank1.left.components),
                    _vec(rank1.right.components),
                    _num(error))]), EXIT_OK


def _compare(config: RunConfig) -> Tuple[str, int]:
    report = compare(load_input(config), config.solver)
    strict = "true" if report.strict else "false"
    if config.output_format is OutputFormat.LINES:
        return "lambda_star={} mu_star={} gap={} strict={}".format(
            format_number(report.lambda_star, 17),
            format_number(report.mu_star, 17),
            format_number(report.gap, 17), strict), EXIT_OK
    return _table(("quantity", "value"),
                  [("lambda*", _num(report.lambda_star)),
                   ("mu*", _num(report.mu_star)),
                   ("gap", _num(report.gap)),
                   ("strict", strict)]), EXIT_OK


def _unfold(config: RunConfig) -> Tuple[str, int]:
    matrix = unfold(load_input(config))
    mu_star = largest_singular_value(matrix)
    if config.output_format is OutputFormat.LINES:
        rows = ["row={}".format(format_vector(row))
                for row in matrix.entries]
        return "\n".join(rows + ["mu_star={}".format(
            format_number(mu_star, 17))]), EXIT_OK
    rows = [[_num(float(value)) for value in row] for row in matrix.entries]
    header = ["c{}".format(index + 1) for index in range(matrix.cols)]
    return _table(header, rows) + "\nmu* = {}".format(_num(mu_star)), \
        EXIT_OK


def _physics(config: RunConfig) -> Tuple[str, int]:
    tensor = load_input(config)
    lines = config.output_format is OutputFormat.LINES
    if config.physics_mode is PhysicsMode.POLARIZATION:
        vector = polarization(tensor, UnitVector.normalized(config.direction))
        norm = float(np.linalg.norm(vector))
        if lines:
            return "polarization={} norm={}".format(
                format_vector(vector), format_number(norm, 17)), EXIT_OK
        return _table(("quantity", "value"),
                      [("P", _vec(vector)), ("||P||", _num(norm))]), EXIT_OK

    if config.physics_mode is PhysicsMode.STRAIN:
        matrix = strain(tensor, UnitVector.normalized(config.electric_field))
        norms = spectral_norm(matrix)
        if lines:
            return "strain={} max_eigenvalue={} norm={}".format(
                format_vector(matrix.entries.ravel()),
                format_number(norms.signed, 17),
                format_number(norms.absolute, 17)), EXIT_OK
        rows = [[_num(float(value)) for value in row]
                for row in matrix.entries]
        header = ["S{}".format(index + 1) for index in range(tensor.dim)]
        return _table(header, rows) + \
            "\nmax eigenvalue = {}\nspectral norm = {}".format(
                _num(norms.signed), _num(norms.absolute)), EXIT_OK

    value, field_vector, direction = max_strain_spectral_norm(
        tensor, config.solver)
    rng = np.random.default_rng(config.solver.rng_seed)
    samples = np.array([random_unit_vector(rng, tensor.dim)
                        for _ in range(config.samples)])
    sampled_polarization = polarization_extremality(tensor, samples)
    sampled_strain = strain_extremality(tensor, samples)
    if lines:
        return ("lambda_star={} direction={} field={} "
                "sampled_polarization={} sampled_strain={}".format(
                    format_number(value, 17), format_vector(direction),
                    format_vector(field_vector),
                    format_number(sampled_polarization, 17),
                    format_number(sampled_strain, 17))), EXIT_OK
    return _table(("quantity", "value"), [
        ("max ||P||", _num(value)),
        ("stress axis", _vec(direction.components)),
        ("max strain", _num(value)),
        ("field", _vec(field_vector.components)),
        ("sampled ||P||", _num(sampled_polarization)),
        ("sampled strain", _num(sampled_strain))]), EXIT_OK


def _rotate_check(config: RunConfig) -> Tuple[str, int]:
    report = rotate_check(config)
    status = EXIT_OK if report.passed else EXIT_SOLVER_MISS
    if config.output_format is OutputFormat.LINES:
        return "trials={} values={} max_deviation={}".format(
            report.trials, format_vector(report.values),
            format_number(report.max_deviation, 17)), status
    return _table(("quantity", "value"), [
        ("trials", str(report.trials)),
        ("values", _vec(report.values)),
        ("max deviation", _num(report.max_deviation))]), status


def _catalog(config: RunConfig) -> Tuple[str, int]:
    if config.catalog_action == "list":
        return _table(("name", "point group"),
                      [(name, point_group_of(name).value)
                       for name in dataset_names()]), EXIT_OK
    text = format_tensor(dataset(config.name).tensor)  # type: ignore
    return text.rstrip("\n"), EXIT_OK


_HANDLERS: Dict[Command, Handler] = {
    Command.SOLVE: _solve,
    Command.LARGEST: _largest,
    Command.RANK1: _rank1,
    Command.COMPARE: _compare,
    Command.UNFOLD: _unfold,
    Command.PHYSICS: _physics,
    Command.ROTATE_CHECK: _rotate_check,
    Command.CATALOG: _catalog,
}


def run(config: RunConfig) -> int:
    """Execute *config* and write its output

    :return: 0 on success, 2 on input errors, 3 if a solver result
             failed certification
    """
    LOGGER.info("Running %s", config.command.value)
    try:
        text, status = _HANDLERS[config.command](config)
        if config.out is None:
            sys.stdout.write(text + "\n")
        else:
            config.out.write_text(text + "\n", encoding="utf-8")
    except SolverMissError as error:
        print("piezoceig: solver miss: {}".format(error), file=sys.stderr)
        return EXIT_SOLVER_MISS
    except (TensorError, CatalogError, InvalidConfigError,
            UnsupportedDimensionError, OSError) as error:
        print("piezoceig: error: {}".format(error), file=sys.stderr)
        return EXIT_INPUT_ERROR
    return status


def _input_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--tensor", help="tensor file to read")
    source.add_argument("--catalog", help="bundled dataset name")
    parser.add_argument("--symmetrize", action="store_true",
                        help="average entries given in both (j, k) orders "
                             "instead of rejecting a mismatch")
    parser.add_argument("--starts", type=int, default=DEFAULT_NUM_STARTS,
                        help="number of random starts")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="random seed")
    parser.add_argument("--tol", type=float, default=DEFAULT_REFINE_TOL,
                        help="residual target of the refinement")
    parser.add_argument("--dedup-tol", type=float, default=DEFAULT_DEDUP_TOL,
                        help="merge tolerance for eigenpairs")
    parser.add_argument("--format", choices=[fmt.value for fmt
                                             in OutputFormat],
                        default=OutputFormat.TABLE.value)
    parser.add_argument("--out", help="output file, default standard output")
    return parser


def _log_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``piezoceig`` command"""
    logs = _log_parser()
    inputs = _input_parser()
    parser = argparse.ArgumentParser(
        prog="piezoceig",
        description="C-eigenvalues of piezoelectric-type tensors")
    commands = parser.add_subparsers(dest="command", required=True)

    help_texts = {
        Command.SOLVE: "all C-eigenpairs found by the multi-start solver",
        Command.LARGEST: "certified largest C-eigenpair",
        Command.RANK1: "best rank-one approximation",
        Command.COMPARE: "largest C-eigenvalue against the largest "
                         "singular value of the unfolding",
        Command.UNFOLD: "unfolding matrix and its largest singular value",
    }
    for command, text in help_texts.items():
        commands.add_parser(command.value, parents=[logs, inputs], help=text)

    physics = commands.add_parser(
        Command.PHYSICS.value, parents=[logs, inputs],
        help="polarization and strain responses")
    physics.add_argument("--mode", default=PhysicsMode.MAX.value,
                         choices=[mode.value for mode in PhysicsMode])
    physics.add_argument("--direction", help="stress axis, e.g. 0,0,1")
    physics.add_argument("--field", help="electric field, e.g. 0,0,1")
    physics.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                         help="random vectors sampled by --mode max")

    rotation = commands.add_parser(
        Command.ROTATE_CHECK.value, parents=[logs, inputs],
        help="spectrum invariance under random orthogonal matrices")
    rotation.add_argument("--trials", type=int, default=DEFAULT_TRIALS)

    catalog = commands.add_parser(Command.CATALOG.value, parents=[logs],
                                  help="bundled datasets")
    actions = catalog.add_subparsers(dest="action", required=True)
    actions.add_parser("list", help="list datasets")
    show = actions.add_parser("show", help="print a dataset as a tensor file")
    show.add_argument("name")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``piezoceig`` command

    :param argv: Arguments without the program name, ``sys.argv[1:]`` if
                 None
    :return: Exit status
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = RunConfig.from_args(args)
    except (InvalidConfigError, ValueError) as error:
        print("piezoceig: error: {}".format(error), file=sys.stderr)
        return EXIT_INPUT_ERROR
    return run(config)
