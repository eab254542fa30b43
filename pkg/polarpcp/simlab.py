"""
Synthetic low-rank plus sparse recovery experiments.

A trial draws two complex instances M = X Y* + S, packs them into one
hypercomplex matrix, runs PCP on it and checks, for every threshold epsilon,
whether each recovered low-rank part is within relative error epsilon of the
truth. A grid repeats trials over (rank, sparsity) cells.

All randomness comes from counter-based generators keyed by the base seed,
the cell, the trial and the instance, so any trial can be reproduced alone
and results do not depend on the number of worker threads.
"""
import csv
import dataclasses
import enum
import logging
import math
import time
from multiprocessing.pool import ThreadPool

import numpy as np

from .errors import DimensionMismatch, ParameterError
from .hyperalgebra import Field
from .hypermatrix import HyperMatrix
from .solvers import SolverConfig, Variant, decompose

logger = logging.getLogger(__name__)

PARTS = ('M1', 'M2')

CSV_COLUMNS = (
    'embedding', 'r', 'rho', 'epsilon', 'part', 'successes', 'trials', 'seed')

DEFAULT_FRACTIONS = tuple(round(0.02 * i, 2) for i in range(1, 11))


class Embedding(enum.Enum):
    POLAR4COMPLEX = 'polar4complex'
    POLAR2BICOMPLEX = 'polar2bicomplex'


@dataclasses.dataclass(frozen=True, order=True)
class Cell:
    r: int
    rho: float


@dataclasses.dataclass
class TrialSpec:
    """
    What to run: matrix side, the (rank, sparsity) grid, thresholds, the
    embeddings to compare and how many trials per cell.

    Without explicit ranks the grid uses r/m from 0.02 to 0.20:

    >>> TrialSpec(m=100).ranks
    (2, 4, 6, 8, 10, 12, 14, 16, 18, 20)
    >>> TrialSpec(m=10, ranks=(0,))
    Traceback (most recent call last):
      ...
    polarpcp.errors.ParameterError: Rank 0 is outside (0, 10].
    """
    m: int = 100
    ranks: tuple = ()
    rhos: tuple = DEFAULT_FRACTIONS
    epsilons: tuple = (0.1, 0.05, 0.01)
    embeddings: tuple = tuple(Embedding)
    trials: int = 10
    seed: int = 0
    variant: Variant = Variant.FREQUENCY
    tol: float = 1e-7
    max_iters: int = 1000

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(
                'Matrix side must be positive, got {}.'.format(self.m))
        if not self.ranks:
            self.ranks = tuple(
                sorted({max(1, round(f * self.m)) for f in DEFAULT_FRACTIONS}))
        self.ranks = tuple(int(r) for r in self.ranks)
        self.rhos = tuple(float(rho) for rho in self.rhos)
        self.epsilons = tuple(float(eps) for eps in self.epsilons)
        self.embeddings = tuple(Embedding(e) for e in self.embeddings)
        self.variant = Variant(self.variant)

        for r in self.ranks:
            _check_rank(r, self.m)
        for rho in self.rhos:
            _check_rho(rho)
        for eps in self.epsilons:
            if not 0 < eps < 1:
                raise ParameterError(
                    'Threshold {} is outside (0, 1).'.format(eps))
        if not self.embeddings or not self.epsilons:
            raise ParameterError('Nothing to run.')
        if self.trials < 1:
            raise ParameterError(
                'At least one trial is needed, got {}.'.format(self.trials))
        if self.seed < 0:
            raise ParameterError(
                'Seeds must be nonnegative, got {}.'.format(self.seed))

    @property
    def cells(self):
        return [Cell(r, rho) for r in self.ranks for rho in self.rhos]

    def solver_config(self):
        # c = 1, so lambda = 1 / sqrt(m)
        return SolverConfig(
            c=1.0, tol=self.tol, max_iters=self.max_iters,
            variant=self.variant)


@dataclasses.dataclass(frozen=True)
class TrialOutcome:
    embedding: Embedding
    cell: Cell
    trial: int
    errors: dict
    successes: dict
    iterations: int
    converged: bool
    runtime: float


@dataclasses.dataclass
class GridResult:
    """
    Success counts keyed by (embedding, r, rho, epsilon, part).
    """
    spec: TrialSpec
    counts: dict
    runtimes: dict = dataclasses.field(default_factory=dict)

    def fraction(self, embedding, cell, epsilon, part):
        key = (Embedding(embedding), cell.r, cell.rho, float(epsilon), part)
        return self.counts[key] / self.spec.trials

    def rows(self):
        """
        CSV rows in sorted order.
        """
        rows = [
            (embedding.value, r, rho, epsilon, part, successes,
             self.spec.trials, self.spec.seed)
            for (embedding, r, rho, epsilon, part), successes
            in self.counts.items()]
        return sorted(rows)


def _check_rank(r, m):
    if not 0 < r <= m:
        raise ParameterError('Rank {} is outside (0, {}].'.format(r, m))


def _check_rho(rho):
    if not 0 <= rho <= 1:
        raise ParameterError('Sparsity {} is outside [0, 1].'.format(rho))


def instance_seed(base_seed, cell, trial, instance):
    """
    The seed of one random instance, derived from its coordinates.

    Sparsities enter in millionths so that the key is an integer.
    """
    return np.random.SeedSequence(
        base_seed,
        spawn_key=(cell.r, int(round(cell.rho * 1e6)), trial, instance))


def complex_normal(rng, shape, variance):
    """
    Circularly symmetric complex Gaussian samples of the given total
    variance.
    """
    scale = math.sqrt(variance / 2)
    return scale * (
        rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def gen_low_rank_sparse(m, r, rho, seed):
    """
    Draw M = X Y* + S with X, Y of size m x r and entries CN(0, 1/m), and S
    with a Bernoulli(rho) support of unit-modulus entries of uniform phase.

    Returns (M, L0, S0).

    >>> M, L0, S0 = gen_low_rank_sparse(6, 2, 0.0, seed=1)
    >>> int(np.linalg.matrix_rank(M))
    2
    >>> bool(np.all(S0 == 0))
    True
    """
    _check_rank(r, m)
    _check_rho(rho)
    rng = np.random.Generator(np.random.Philox(seed))

    X = complex_normal(rng, (m, r), 1 / m)
    Y = complex_normal(rng, (m, r), 1 / m)
    L0 = X @ Y.conj().T

    support = rng.random((m, m)) < rho
    phases = rng.uniform(0, 2 * np.pi, (m, m))
    S0 = np.where(support, np.exp(1j * phases), 0)

    return L0 + S0, L0, S0


def embed(M1, M2, mode):
    """
    Pack two complex matrices into one hypercomplex matrix.

    >>> H = embed(np.array([[1 + 2j]]), np.array([[3 + 4j]]), 'polar4complex')
    >>> H.data.tolist(), H.field
    ([[[1.0, 2.0, 3.0, 4.0]]], <Field.REAL: 'real'>)
    >>> embed(np.array([[1 + 2j]]), np.array([[3 + 4j]]), 'polar2bicomplex').n
    2
    """
    M1, M2 = np.asarray(M1), np.asarray(M2)
    if M1.shape != M2.shape or M1.ndim != 2:
        raise DimensionMismatch(
            'Cannot embed matrices of shapes {} and {}.'.format(
                M1.shape, M2.shape))
    mode = Embedding(mode)
    if mode is Embedding.POLAR4COMPLEX:
        return HyperMatrix(
            np.stack([M1.real, M1.imag, M2.real, M2.imag], axis=-1),
            Field.REAL)
    return HyperMatrix(
        np.stack([M1, M2], axis=-1).astype(np.complex128), Field.COMPLEX)


def extract(H, mode):
    """
    Unpack the two complex matrices held by an embedded matrix.
    """
    mode = Embedding(mode)
    data = H.data
    if mode is Embedding.POLAR4COMPLEX:
        if H.n != 4:
            raise DimensionMismatch('polar4complex matrices have n = 4.')
        return data[..., 0] + 1j * data[..., 1], \
            data[..., 2] + 1j * data[..., 3]
    if H.n != 2:
        raise DimensionMismatch('polar2bicomplex matrices have n = 2.')
    return data[..., 0].astype(np.complex128), \
        data[..., 1].astype(np.complex128)


def relative_error(estimate, truth):
    norm = np.linalg.norm(truth)
    gap = np.linalg.norm(estimate - truth)
    return float(gap / norm) if norm > 0 else float(gap)


def run_trial(spec, cell, trial, embedding):
    """
    Run one trial of one embedding and score both parts against every
    threshold.
    """
    _check_rank(cell.r, spec.m)
    _check_rho(cell.rho)
    embedding = Embedding(embedding)

    instances = [
        gen_low_rank_sparse(
            spec.m, cell.r, cell.rho,
            instance_seed(spec.seed, cell, trial, instance))
        for instance in range(len(PARTS))]

    start = time.perf_counter()
    H = embed(instances[0][0], instances[1][0], embedding)
    result = decompose(H, spec.solver_config())
    recovered = extract(result.L, embedding)
    runtime = time.perf_counter() - start

    errors = {
        part: relative_error(estimate, truth)
        for part, estimate, (_, truth, _) in zip(PARTS, recovered, instances)}
    successes = {
        (eps, part): errors[part] < eps
        for eps in spec.epsilons for part in PARTS}

    logger.debug(
        '%s r=%d rho=%g trial %d: errors %s after %d iterations',
        embedding.value, cell.r, cell.rho, trial, errors, result.iterations)

    return TrialOutcome(
        embedding, cell, trial, errors, successes, result.iterations,
        result.converged, runtime)


def run_grid(spec, threads=1):
    """
    Run every (embedding, cell, trial) of ``spec`` on a pool of threads.
    """
    tasks = [
        (embedding, cell, trial)
        for embedding in spec.embeddings
        for cell in spec.cells
        for trial in range(spec.trials)]
    logger.info(
        'Running %d trials on %d thread(s).', len(tasks), max(1, threads))

    def work(task):
        return run_trial(spec, task[1], task[2], task[0])

    with ThreadPool(processes=max(1, threads)) as pool:
        outcomes = pool.map(work, tasks)

    counts = {}
    runtimes = {}
    for embedding in spec.embeddings:
        for cell in spec.cells:
            for eps in spec.epsilons:
                for part in PARTS:
                    counts[(embedding, cell.r, cell.rho, eps, part)] = 0

    for outcome in outcomes:
        for (eps, part), success in outcome.successes.items():
            key = (outcome.embedding, outcome.cell.r, outcome.cell.rho, eps,
                   part)
            counts[key] += int(success)
        runtime_key = (outcome.embedding, outcome.cell)
        runtimes[runtime_key] = (
            runtimes.get(runtime_key, 0.0) + outcome.runtime)

    logger.info('Finished %d trials.', len(outcomes))
    return GridResult(spec, counts, runtimes)


def write_csv(result, path):
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        writer.writerows(result.rows())
