"""C-eigenpair solvers

A C-eigenpair of a piezoelectric-type tensor ``A`` is a real ``lambda``
with unit vectors ``x`` and ``y`` such that::

    A y y = lambda x,    x A y = lambda y

The largest C-eigenvalue is the maximum of ``x A y y`` over pairs of unit
vectors. Spectra are computed by multi-start local solves: every start runs
an alternating ascent on ``x A y y`` (which converges to local maxima) and
a Gauss-Newton solve of the system above (which also reaches saddle-type
solutions). Results are canonicalized modulo the sign group
``(lambda, x, -y)``, ``(-lambda, -x, y)``, ``(-lambda, -x, -y)`` and merged.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Any, FrozenSet, Iterable, Iterator, List, Optional, \
    Tuple, Union

import numpy as np

from .constants import PairFlag, DEFAULT_NUM_STARTS, \
    DEFAULT_MAX_OUTER_ITERS, DEFAULT_ASCENT_TOL, DEFAULT_REFINE_TOL, \
    DEFAULT_DEDUP_TOL, DEFAULT_SEED, PAIR_UNIT_TOL, MAX_DEGENERATE_RESTARTS, \
    DEGENERATE_TOL, MAX_REFINE_ITERS, MAX_STEP_HALVINGS, RIDGE, FAMILY_TOL, \
    EIGENVECTOR_MERGE_FACTOR, CERTIFY_RESOLUTION, CERTIFY_SLACK
from .exceptions import DimensionMismatchError, NotUnitError, \
    InvalidConfigError, SolverMissError, UnsupportedDimensionError
from .tensor import PiezoTensor, UnitVector, OrthogonalMatrix, \
    Rank1PiezoTensor, contract_yy, contract_xy, slice_combination, \
    scalar_form, frobenius_norm
from .typing import Matrix, Vector, VectorLike
from .utils import as_vector, random_unit_vector, is_sign_normalized, \
    sphere_grid


LOGGER = logging.getLogger(__name__)

#: Condition number of the normal equations treated as singular
_SINGULAR_COND = 1e12


@dataclass(frozen=True)
class SolverConfig:
    """Parameters of the multi-start solver"""
    #: Number of random starts
    num_starts: int = DEFAULT_NUM_STARTS
    #: Cap on alternating-ascent sweeps per start
    max_outer_iters: int = DEFAULT_MAX_OUTER_ITERS
    #: Ascent stops when the objective grows by less than this
    ascent_tol: float = DEFAULT_ASCENT_TOL
    #: Residual target of the refinement, relative to max(1, ||A||_F)
    refine_tol: float = DEFAULT_REFINE_TOL
    #: Merge tolerance for eigenvalues (relative) and eigenvectors
    dedup_tol: float = DEFAULT_DEDUP_TOL
    #: Seed of the start generator
    rng_seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.num_starts < 1:
            raise InvalidConfigError("num_starts must be at least 1")
        if self.max_outer_iters < 1:
            raise InvalidConfigError("max_outer_iters must be at least 1")
        for name in ("ascent_tol", "refine_tol", "dedup_tol"):
            if not getattr(self, name) > 0.0:
                raise InvalidConfigError("{} must be positive".format(name))
        if not 0 <= self.rng_seed < 2 ** 64:
            raise InvalidConfigError("rng_seed must fit in 64 bits")

    def replace(self, **overrides: Any) -> "SolverConfig":
        """Copy with some fields replaced, validated again"""
        return replace(self, **overrides)


@dataclass(frozen=True, eq=False)
class CEigenPair:
    """One solution ``(lambda, x, y)`` with its residual and diagnostics"""
    #: The C-eigenvalue lambda
    value: float
    #: Left C-eigenvector x (read-only)
    left: Vector
    #: Right C-eigenvector y (read-only)
    right: Vector
    #: max(||A y y - lambda x||, ||x A y - lambda y||)
    residual: float = 0.0
    #: Diagnostics
    flags: FrozenSet[PairFlag] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        left = as_vector(self.left)
        right = as_vector(self.right)
        if left.size != right.size:
            raise DimensionMismatchError(
                "Eigenvectors have dimensions {} and {}"
                .format(left.size, right.size))
        for name, vector in (("x", left), ("y", right)):
            if abs(float(np.linalg.norm(vector)) - 1.0) > PAIR_UNIT_TOL:
                raise NotUnitError("{} is not a unit vector".format(name))
            vector.setflags(write=False)
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "flags", frozenset(self.flags))

    @property
    def dim(self) -> int:
        """Dimension of the eigenvectors"""
        return int(self.left.size)

    def sign_variants(self) -> Tuple["CEigenPair", ...]:
        """The pair and its three images under the sign group"""
        return (self,
                replace(self, right=-self.right),
                replace(self, value=-self.value, left=-self.left),
                replace(self, value=-self.value, left=-self.left,
                        right=-self.right))

    def with_flags(self, *flags: PairFlag) -> "CEigenPair":
        """Copy with *flags* added"""
        return replace(self, flags=self.flags | frozenset(flags))

    def as_rank1(self) -> Rank1PiezoTensor:
        """The rank-one tensor ``lambda x o y o y``"""
        return Rank1PiezoTensor(self.value, UnitVector(self.left),
                                UnitVector(self.right))


@dataclass(frozen=True, eq=False)
class EigenSpectrum:
    """Canonical C-eigenpairs, sorted by eigenvalue descending"""
    #: Canonical pairs, all with value >= 0
    pairs: Tuple[CEigenPair, ...]
    #: Number of local solves that converged to each pair
    basin_counts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.basin_counts):
            raise ValueError("One basin count per pair is required")

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[CEigenPair]:
        return iter(self.pairs)

    def __getitem__(self, index: int) -> CEigenPair:
        return self.pairs[index]

    @property
    def values(self) -> Tuple[float, ...]:
        """Eigenvalues of the stored pairs"""
        return tuple(pair.value for pair in self.pairs)

    @property
    def residuals(self) -> Tuple[float, ...]:
        """Residuals of the stored pairs"""
        return tuple(pair.residual for pair in self.pairs)

    def distinct_values(self, tol: float = DEFAULT_DEDUP_TOL) \
            -> Tuple[float, ...]:
        """Eigenvalues with repeats within ``tol * max(1, |value|)``
        removed, descending"""
        result: List[float] = []
        for value in sorted(self.values, reverse=True):
            if not result or abs(result[-1] - value) > \
                    tol * max(1.0, abs(value)):
                result.append(value)
        return tuple(result)

    def positive(self, tol: float = DEFAULT_DEDUP_TOL) -> "EigenSpectrum":
        """The pairs with value above *tol*"""
        kept = [(pair, count) for pair, count
                in zip(self.pairs, self.basin_counts) if pair.value > tol]
        return EigenSpectrum(tuple(pair for pair, _ in kept),
                             tuple(count for _, count in kept))

    def expanded(self) -> List[CEigenPair]:
        """Every pair together with its sign-group images"""
        return [variant for pair in self.pairs
                for variant in pair.sign_variants()]


def _unit(tensor: PiezoTensor, values: Union[VectorLike, UnitVector],
          name: str) -> Vector:
    vector = as_vector(values)
    if vector.size != tensor.dim:
        raise DimensionMismatchError(
            "{} has {} components, the tensor has dimension {}"
            .format(name, vector.size, tensor.dim))
    norm = np.linalg.norm(vector)
    if norm == 0.0:
        raise NotUnitError("{} is the zero vector".format(name))
    return vector / norm


def residuals(tensor: PiezoTensor, pair: CEigenPair) -> Tuple[float, float]:
    """Residuals of the C-eigenpair system

    :return: ``(||A y y - lambda x||, ||x A y - lambda y||)``
    :raise DimensionMismatchError: If the dimensions differ
    """
    first = contract_yy(tensor, pair.right) - pair.value * pair.left
    second = contract_xy(tensor, pair.left, pair.right) - \
        pair.value * pair.right
    return float(np.linalg.norm(first)), float(np.linalg.norm(second))


def _make_pair(tensor: PiezoTensor, x: Vector, y: Vector,
               flags: Iterable[PairFlag] = ()) -> CEigenPair:
    pair = CEigenPair(scalar_form(tensor, x, y), x, y, flags=frozenset(flags))
    return replace(pair, residual=max(residuals(tensor, pair)))


def alternating_ascent(tensor: PiezoTensor,
                       x0: Union[VectorLike, UnitVector],
                       y0: Union[VectorLike, UnitVector],
                       cfg: Optional[SolverConfig] = None,
                       rng: Optional[np.random.Generator] = None) \
        -> CEigenPair:
    """Maximize ``x A y y`` over unit vectors, alternating between x and y

    Each sweep sets ``x = A y y / ||A y y||`` (the best x for the current
    y), then takes y as the eigenvector of ``G(x) = [sum_i x_i a_ijk]`` of
    largest magnitude eigenvalue, negating x when that eigenvalue is
    negative. The objective never decreases.

    :param tensor: The tensor
    :param x0: Starting left vector, normalized if needed
    :param y0: Starting right vector, normalized if needed
    :param cfg: Solver configuration
    :param rng: Generator for restarts; seeded from ``cfg.rng_seed`` if
                ``None``
    :return: The final pair, flagged :obj:`~PairFlag.DEGENERATE` if
             ``A y y`` vanished at too many consecutive restarts
    """
    cfg = cfg or SolverConfig()
    if rng is None:
        rng = np.random.default_rng(cfg.rng_seed)
    dim = tensor.dim
    x = _unit(tensor, x0, "x0")
    y = _unit(tensor, y0, "y0")
    threshold = DEGENERATE_TOL * max(1.0, frobenius_norm(tensor))

    objective = scalar_form(tensor, x, y)
    best = (objective, x, y)
    restarts = 0
    for _ in range(cfg.max_outer_iters):
        image = contract_yy(tensor, y)
        norm = float(np.linalg.norm(image))
        if norm <= threshold:
            restarts += 1
            if restarts > MAX_DEGENERATE_RESTARTS:
                LOGGER.debug("Ascent degenerate after %d restarts",
                             MAX_DEGENERATE_RESTARTS)
                _, x, y = best
                return _make_pair(tensor, x, y, {PairFlag.DEGENERATE})
            x = random_unit_vector(rng, dim)
            y = random_unit_vector(rng, dim)
            objective = scalar_form(tensor, x, y)
            continue
        restarts = 0

        x = image / norm
        eigenvalues, eigenvectors = np.linalg.eigh(
            slice_combination(tensor, x))
        top = int(np.argmax(np.abs(eigenvalues)))
        value = float(eigenvalues[top])
        y = eigenvectors[:, top]
        if value < 0.0:
            x, value = -x, -value
        if not is_sign_normalized(y, cfg.dedup_tol):
            y = -y

        change = value - objective
        objective = value
        if objective > best[0]:
            best = (objective, x, y)
        if change < cfg.ascent_tol:
            break
    return _make_pair(tensor, x, y)


def _split(state: Vector, dim: int) -> Tuple[float, Vector, Vector]:
    return float(state[0]), state[1:dim + 1], state[dim + 1:]


def _system(tensor: PiezoTensor, state: Vector) -> Vector:
    value, x, y = _split(state, tensor.dim)
    return np.concatenate((
        contract_yy(tensor, y) - value * x,
        contract_xy(tensor, x, y) - value * y,
        [0.5 * (x @ x - 1.0), 0.5 * (y @ y - 1.0)]))


def _jacobian(tensor: PiezoTensor, state: Vector) -> Matrix:
    dim = tensor.dim
    value, x, y = _split(state, dim)
    # b[i, m] = sum_k a_imk y_k
    b_mat = tensor.dense @ y
    g_mat = slice_combination(tensor, x)
    identity = np.eye(dim)

    jacobian = np.zeros((2 * dim + 2, 2 * dim + 1))
    jacobian[:dim, 0] = -x
    jacobian[:dim, 1:dim + 1] = -value * identity
    jacobian[:dim, dim + 1:] = 2.0 * b_mat
    jacobian[dim:2 * dim, 0] = -y
    jacobian[dim:2 * dim, 1:dim + 1] = b_mat.T
    jacobian[dim:2 * dim, dim + 1:] = g_mat - value * identity
    jacobian[2 * dim, 1:dim + 1] = x
    jacobian[2 * dim + 1, dim + 1:] = y
    return jacobian


def _state(pair: CEigenPair) -> Vector:
    return np.concatenate(([pair.value], pair.left, pair.right))


def _gauss_newton_step(jacobian: Matrix, system: Vector) \
        -> Tuple[Vector, bool]:
    normal = jacobian.T @ jacobian
    gradient = jacobian.T @ system
    # one decomposition gives the condition number and the solve
    eigenvalues, eigenvectors = np.linalg.eigh(normal)
    eigenvalues = np.maximum(eigenvalues, 0.0)
    ridged = bool(eigenvalues[0] * _SINGULAR_COND <= eigenvalues[-1])
    if ridged:
        eigenvalues = eigenvalues + RIDGE
    step = -eigenvectors @ ((eigenvectors.T @ gradient) / eigenvalues)
    return step, ridged


def _pair_from_state(tensor: PiezoTensor, state: Vector,
                     flags: Iterable[PairFlag]) -> Optional[CEigenPair]:
    _, x, y = _split(state, tensor.dim)
    x_norm, y_norm = np.linalg.norm(x), np.linalg.norm(y)
    if x_norm == 0.0 or y_norm == 0.0:
        return None
    return _make_pair(tensor, x / x_norm, y / y_norm, flags)


def _refine_target(tensor: PiezoTensor, cfg: SolverConfig) -> float:
    return cfg.refine_tol * max(1.0, frobenius_norm(tensor))


def refine(tensor: PiezoTensor, pair: CEigenPair,
           cfg: Optional[SolverConfig] = None) -> CEigenPair:
    """Polish *pair* by Gauss-Newton on the C-eigenpair system

    Solves the ``2n + 2`` equations ``A y y = lambda x``,
    ``x A y = lambda y``, ``x^T x = 1``, ``y^T y = 1`` in the ``2n + 1``
    unknowns in the least squares sense, halving steps until the residual
    decreases.

    :param tensor: The tensor
    :param pair: Starting pair; it need not be close to a solution
    :param cfg: Solver configuration
    :return: A pair with residual at most ``refine_tol * max(1, ||A||_F)``,
             or *pair* itself flagged :obj:`~PairFlag.NO_PROGRESS`
    """
    cfg = cfg or SolverConfig()
    target = _refine_target(tensor, cfg)
    start = replace(pair, residual=max(residuals(tensor, pair)),
                    flags=pair.flags - {PairFlag.NO_PROGRESS})
    if start.residual <= target:
        return start

    flags = set(start.flags)
    best = start
    state = _state(start)
    system = _system(tensor, state)
    cost = float(np.linalg.norm(system))
    for _ in range(MAX_REFINE_ITERS):
        step, ridged = _gauss_newton_step(_jacobian(tensor, state), system)
        if ridged and PairFlag.RIDGE not in flags:
            LOGGER.debug("Singular normal equations, ridge %g added", RIDGE)
            flags.add(PairFlag.RIDGE)

        length = 1.0
        for _ in range(MAX_STEP_HALVINGS):
            trial = state + length * step
            trial_system = _system(tensor, trial)
            trial_cost = float(np.linalg.norm(trial_system))
            if trial_cost < cost:
                break
            length *= 0.5
        else:
            break
        state, system, cost = trial, trial_system, trial_cost

        candidate = _pair_from_state(tensor, state, flags)
        if candidate is not None and candidate.residual < best.residual:
            best = candidate
        if best.residual <= target:
            return best

    LOGGER.debug("Refinement stalled at residual %.3g", best.residual)
    return start.with_flags(PairFlag.NO_PROGRESS)


def canonicalize(pair: CEigenPair, tol: float = DEFAULT_DEDUP_TOL) \
        -> CEigenPair:
    """Pick the sign-group representative with ``lambda >= 0`` whose y
    has a positive first significant component

    For ``lambda = 0`` (within *tol*) x is normalized the same way.

    :param pair: Any C-eigenpair
    :param tol: Components with magnitude up to *tol* are not significant
    :return: The canonical representative; idempotent
    """
    value, x, y = pair.value, pair.left, pair.right
    if value < 0.0:
        value, x = -value, -x
    if not is_sign_normalized(y, tol):
        y = -y
    if abs(value) <= tol and not is_sign_normalized(x, tol):
        x = -x
    return replace(pair, value=value, left=x, right=y)


def pair_distance(first: CEigenPair, second: CEigenPair) -> float:
    """Eigenvector distance modulo the sign group

    ``min max(||x1 - s x2||, ||y1 - t y2||)`` over signs ``s``, ``t``.
    """
    return min(max(float(np.linalg.norm(first.left - s * second.left)),
                   float(np.linalg.norm(first.right - t * second.right)))
               for s in (1.0, -1.0) for t in (1.0, -1.0))


def _same_group(first: CEigenPair, second: CEigenPair, tol: float) -> bool:
    if abs(first.value - second.value) > tol * max(1.0, abs(first.value)):
        return False
    if PairFlag.FAMILY in first.flags and PairFlag.FAMILY in second.flags:
        return True
    return pair_distance(first, second) <= EIGENVECTOR_MERGE_FACTOR * tol


def _is_family(tensor: PiezoTensor, pair: CEigenPair) -> bool:
    singular_values = np.linalg.svd(_jacobian(tensor, _state(pair)),
                                    compute_uv=False)
    return bool(singular_values[-1] <=
                FAMILY_TOL * max(1.0, frobenius_norm(tensor)))


def _sort_key(pair: CEigenPair) -> Tuple[float, ...]:
    return (-pair.value,) + tuple(pair.left) + tuple(pair.right)


def _matching_group(groups: List[List[CEigenPair]], pair: CEigenPair,
                    tol: float) -> Optional[List[CEigenPair]]:
    return next((group for group in groups
                 if _same_group(group[0], pair, tol)), None)


def merge_pairs(tensor: PiezoTensor, candidates: Iterable[CEigenPair],
                cfg: Optional[SolverConfig] = None) -> EigenSpectrum:
    """Canonicalize and deduplicate converged pairs

    Pairs flagged :obj:`~PairFlag.NO_PROGRESS` are dropped. Pairs on a
    continuous family of solutions that share an eigenvalue collapse to a
    single representative flagged :obj:`~PairFlag.FAMILY`.

    :param tensor: The tensor the pairs belong to
    :param candidates: Local solve results
    :param cfg: Solver configuration, for ``dedup_tol``
    :return: The spectrum
    """
    cfg = cfg or SolverConfig()
    zero_tol = cfg.dedup_tol * max(1.0, frobenius_norm(tensor))
    pairs = []
    for candidate in candidates:
        if PairFlag.NO_PROGRESS in candidate.flags:
            continue
        pair = canonicalize(candidate, cfg.dedup_tol)
        if pair.value <= zero_tol:
            pair = pair.with_flags(PairFlag.DEGENERATE)
        pairs.append(pair)
    pairs.sort(key=_sort_key)

    groups: List[List[CEigenPair]] = []
    for pair in pairs:
        group = _matching_group(groups, pair, cfg.dedup_tol)
        # only pairs that start a group or sit far out on a family need
        # the Jacobian test
        if group is None and _is_family(tensor, pair):
            pair = pair.with_flags(PairFlag.FAMILY)
            group = _matching_group(groups, pair, cfg.dedup_tol)
        if group is None:
            groups.append([pair])
        else:
            group.append(pair)

    merged = []
    for group in groups:
        flags = frozenset().union(*(member.flags for member in group))
        merged.append((group[0].with_flags(*flags), len(group)))
    merged.sort(key=lambda item: _sort_key(item[0]))
    return EigenSpectrum(tuple(pair for pair, _ in merged),
                         tuple(count for _, count in merged))


def solve_spectrum(tensor: PiezoTensor,
                   cfg: Optional[SolverConfig] = None) -> EigenSpectrum:
    """Multi-start computation of the C-eigenpairs of *tensor*

    Every start draws ``(x0, y0)`` uniformly from the product of unit
    spheres using its own generator spawned from ``cfg.rng_seed``, and
    contributes two local solves: the refined alternating ascent from
    ``(x0, y0)`` and a Gauss-Newton solve started at ``(x0, y0)``.
    Completeness isn't guaranteed, see :obj:`EigenSpectrum.basin_counts`.

    :param tensor: The tensor
    :param cfg: Solver configuration
    :return: The canonical spectrum, deterministic given *cfg*
    """
    cfg = cfg or SolverConfig()
    LOGGER.info("Solving dimension %d tensor from %d starts",
                tensor.dim, cfg.num_starts)
    seeds = np.random.SeedSequence(cfg.rng_seed).spawn(cfg.num_starts)

    candidates = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        x0 = random_unit_vector(rng, tensor.dim)
        y0 = random_unit_vector(rng, tensor.dim)
        ascent = alternating_ascent(tensor, x0, y0, cfg, rng)
        candidates.append(refine(tensor, ascent, cfg))
        candidates.append(refine(tensor, _make_pair(tensor, x0, y0), cfg))

    stalled = sum(PairFlag.NO_PROGRESS in pair.flags for pair in candidates)
    if stalled == len(candidates):
        LOGGER.warning("None of the %d local solves converged", stalled)
    elif stalled:
        LOGGER.debug("%d of %d local solves did not converge",
                     stalled, len(candidates))
    spectrum = merge_pairs(tensor, candidates, cfg)
    LOGGER.info("Found %d canonical C-eigenpairs", len(spectrum))
    return spectrum


def brute_force_lower_bound(tensor: PiezoTensor,
                            resolution: int = CERTIFY_RESOLUTION) -> float:
    """Maximize ``x A y y`` over a spherical grid of y

    For fixed y the best x is ``A y y / ||A y y||``, so the objective on
    the grid is ``||A y y||``. The result is a lower bound of the largest
    C-eigenvalue.

    :param tensor: Tensor of dimension 2 or 3
    :param resolution: Number of polar angle steps
    :return: The best grid value
    :raise UnsupportedDimensionError: For other dimensions
    """
    if tensor.dim not in (2, 3):
        raise UnsupportedDimensionError(
            "The grid oracle supports dimension 2 and 3, not {}"
            .format(tensor.dim))
    if resolution < 1:
        raise InvalidConfigError("resolution must be positive")
    grid = sphere_grid(tensor.dim, resolution)
    images = np.einsum("ijk,mj,mk->mi", tensor.dense, grid, grid)
    return float(np.max(np.linalg.norm(images, axis=1)))


def largest(tensor: PiezoTensor,
            cfg: Optional[SolverConfig] = None) -> CEigenPair:
    """The largest C-eigenpair, certified against the grid oracle

    :param tensor: The tensor
    :param cfg: Solver configuration
    :return: The top pair of :func:`solve_spectrum`
    :raise SolverMissError: If the pair falls below the grid oracle's
                            value by more than 1e-6
    """
    spectrum = solve_spectrum(tensor, cfg)
    if tensor.dim not in (2, 3):
        LOGGER.warning("Largest pair of a dimension %d tensor is not "
                       "certified", tensor.dim)
        if not spectrum.pairs:
            raise SolverMissError("No local solve converged",
                                  float("nan"), float("nan"))
        return spectrum.pairs[0]

    bound = brute_force_lower_bound(tensor, CERTIFY_RESOLUTION)
    if not spectrum.pairs:
        raise SolverMissError("No local solve converged", float("nan"), bound)
    top = spectrum.pairs[0]
    if top.value < bound - CERTIFY_SLACK:
        raise SolverMissError(
            "Largest C-eigenvalue {:.9g} is below the grid bound {:.9g}"
            .format(top.value, bound), top.value, bound)
    return top


def best_rank_one(tensor: PiezoTensor,
                  cfg: Optional[SolverConfig] = None) -> Rank1PiezoTensor:
    """Best rank-one approximation ``lambda* x* o y* o y*`` of *tensor*"""
    return largest(tensor, cfg).as_rank1()


def map_pair(pair: CEigenPair,
             matrix: Union[OrthogonalMatrix, Matrix]) -> CEigenPair:
    """Image ``(lambda, Q^T x, Q^T y)`` of a C-eigenpair of ``A`` as a
    C-eigenpair of the rotated tensor ``A Q^3``"""
    q_mat = np.asarray(matrix, dtype=float)
    left = q_mat.T @ pair.left
    right = q_mat.T @ pair.right
    return replace(pair, left=left / np.linalg.norm(left),
                   right=right / np.linalg.norm(right))
