"""
Principal component pursuit over K_n and CK_n by inexact augmented Lagrange
multipliers.

Given X the solvers look for a low-rank L and a sparse S with X = L + S,
minimizing ||L||_* + lambda ||S||_1. Three variants are available:

* ``naive`` alternates prox_trace and prox_l1 on hypercomplex matrices;
* ``frequency`` does the same iterations without ever leaving the transform
  domain, so each iteration costs n slice SVDs and elementwise work;
* ``tensor-rpca`` thresholds every slice's singular values on their own,
  which penalizes the nuclear norm of cft(L) instead of the trace norm.

>>> result = decompose(HyperMatrix.zeros(3, 3, 2))
>>> result.iterations, result.converged
(1, True)
"""
import dataclasses
import enum
import logging
import math

import numpy as np

from .errors import DimensionMismatch, NonFiniteInput, ParameterError
from .hyperalgebra import Field
from .hypermatrix import (
    HyperMatrix, SpectralMatrix, cft, frobenius, icft, max_modulus,
    spectral_norm)
from .prox import (
    l1_norm, prox_l1, prox_trace, shrink_singular_values, shrink_tubes,
    slice_nuclear_norm, trace_norm)
from .transforms import TubeTransform
from .tsvd import OperationCounter

logger = logging.getLogger(__name__)


class Variant(enum.Enum):
    NAIVE = 'naive'
    FREQUENCY = 'frequency'
    TENSOR_RPCA = 'tensor-rpca'


@dataclasses.dataclass(frozen=True)
class SolverConfig:
    """
    Parameters of one PCP run.

    lambda defaults to c / sqrt(max(l, m)); ``lam`` overrides it. The penalty
    sequence starts at mu_factor / ||X||_2 and grows by rho_mu every
    iteration.

    >>> SolverConfig().lambda_for(100, 25)
    0.1
    >>> SolverConfig(rho_mu=1.0)
    Traceback (most recent call last):
      ...
    polarpcp.errors.ParameterError: The penalty growth must exceed 1, got 1.0.
    """
    c: float = 1.0
    lam: float = None
    mu_factor: float = 1.25
    rho_mu: float = 1.5
    tol: float = 1e-7
    max_iters: int = 1000
    variant: Variant = Variant.FREQUENCY
    transform: str = 'dft'

    def __post_init__(self):
        object.__setattr__(self, 'variant', Variant(self.variant))
        if self.c <= 0:
            raise ParameterError(
                'c must be positive, got {}.'.format(self.c))
        if self.lam is not None and self.lam < 0:
            raise ParameterError(
                'lambda must be nonnegative, got {}.'.format(self.lam))
        if self.mu_factor <= 0:
            raise ParameterError(
                'The penalty factor must be positive, got {}.'.format(
                    self.mu_factor))
        if self.rho_mu <= 1:
            raise ParameterError(
                'The penalty growth must exceed 1, got {}.'.format(
                    self.rho_mu))
        if self.tol <= 0:
            raise ParameterError(
                'Tolerance must be positive, got {}.'.format(self.tol))
        if self.max_iters < 1:
            raise ParameterError(
                'At least one iteration is needed, got {}.'.format(
                    self.max_iters))

    def lambda_for(self, l, m):
        if self.lam is not None:
            return self.lam
        return self.c / math.sqrt(max(l, m))

    def tube_transform(self, n):
        return TubeTransform.from_name(self.transform, n)


@dataclasses.dataclass
class PcpResult:
    L: HyperMatrix
    S: HyperMatrix
    iterations: int
    residual_history: list
    converged: bool
    lam: float
    mu_trace: list = dataclasses.field(default_factory=list)
    objective: float = 0.0
    counter: OperationCounter = dataclasses.field(
        default_factory=OperationCounter)

    def report(self):
        """
        Summary suitable for JSON.
        """
        return {
            'iterations': self.iterations,
            'converged': self.converged,
            'residuals': list(self.residual_history),
            'lambda': self.lam,
            'mu': list(self.mu_trace),
            'objective': self.objective,
            'operations': self.counter.as_dict(),
        }


def residual(X, L, S):
    """
    Relative feasibility ||X - L - S||_F / ||X||_F, or the absolute one when
    X is zero.

    >>> X = HyperMatrix.identity(2, 2)
    >>> residual(X, X, HyperMatrix.zeros(2, 2, 2))
    0.0
    >>> residual(X, HyperMatrix.zeros(2, 2, 2), HyperMatrix.zeros(2, 2, 2))
    1.0
    """
    gap = frobenius(X - L - S)
    scale = frobenius(X)
    return gap / scale if scale > 0 else gap


def mu_schedule(X, cfg):
    """
    The penalties mu_k = mu_factor / ||X||_2 * rho_mu^k.

    >>> X = HyperMatrix([[[1.25]]])
    >>> mus = mu_schedule(X, SolverConfig())
    >>> next(mus), next(mus)
    (1.0, 1.5)
    """
    norm = spectral_norm(X, cfg.tube_transform(X.n))
    if norm <= 0:
        raise ParameterError('The penalty schedule needs a nonzero input.')
    mu = cfg.mu_factor / norm
    while True:
        yield mu
        mu *= cfg.rho_mu


def _check_input(X):
    if X.l < 1 or X.m < 1:
        raise DimensionMismatch('Cannot decompose an empty matrix.')
    if not np.all(np.isfinite(X.data)):
        raise NonFiniteInput('The input holds NaN or infinite values.')


def _zero_result(X, lam):
    zero = HyperMatrix.zeros(X.l, X.m, X.n, X.field)
    return PcpResult(
        L=zero, S=zero, iterations=1, residual_history=[0.0],
        converged=True, lam=lam)


def _initial_dual_scale(X, lam, transform):
    # Y_1 = X / max(||X||_2, ||X||_inf / lambda)
    dual_norm = spectral_norm(X, transform)
    if lam > 0:
        dual_norm = max(dual_norm, max_modulus(X) / lam)
    return dual_norm


def _finish(result, X, cfg, label):
    if result.converged:
        logger.info(
            '%s PCP on %r converged after %d iterations (residual %.3g).',
            label, X, result.iterations,
            result.residual_history[-1])
    else:
        logger.warning(
            '%s PCP on %r stopped after %d iterations with residual %.3g '
            '(tolerance %g).', label, X, result.iterations,
            result.residual_history[-1], cfg.tol)
    return result


def pcp_ialm(X, cfg=None):
    """
    Hypercomplex PCP with the trace norm as low-rank penalty, using the
    naive or the frequency iterations as ``cfg.variant`` says.
    """
    cfg = cfg if cfg is not None else SolverConfig()
    if cfg.variant is Variant.TENSOR_RPCA:
        raise ParameterError('Use tensor_rpca() for the tensor RPCA variant.')
    if cfg.variant is Variant.NAIVE:
        return _pcp_naive(X, cfg)
    return _pcp_spectral(X, cfg, grouped=True)


def tensor_rpca(X, cfg=None):
    """
    The tensor RPCA baseline: slice-wise singular value thresholding in the
    transform domain, with the same sparse step as pcp_ialm().
    """
    cfg = cfg if cfg is not None else SolverConfig(
        variant=Variant.TENSOR_RPCA)
    return _pcp_spectral(X, cfg, grouped=False)


def decompose(X, cfg=None):
    """
    Run the variant named by ``cfg.variant``.
    """
    cfg = cfg if cfg is not None else SolverConfig()
    if cfg.variant is Variant.TENSOR_RPCA:
        return tensor_rpca(X, cfg)
    return pcp_ialm(X, cfg)


def _pcp_naive(X, cfg):
    _check_input(X)
    transform = cfg.tube_transform(X.n)
    lam = cfg.lambda_for(X.l, X.m)
    norm_x = frobenius(X)
    if norm_x == 0:
        return _zero_result(X, lam)

    counter = OperationCounter()
    Y = X / _initial_dual_scale(X, lam, transform)
    S = HyperMatrix.zeros(X.l, X.m, X.n, X.field)
    history, mu_trace = [], []
    converged = False

    for k, mu in enumerate(mu_schedule(X, cfg), 1):
        L = prox_trace(X - S + Y / mu, 1 / mu, transform, counter)
        S = prox_l1(X - L + Y / mu, lam / mu)
        gap = X - L - S
        Y = Y + mu * gap

        history.append(frobenius(gap) / norm_x)
        mu_trace.append(mu)
        logger.debug('iteration %d: mu %.4g, residual %.3g', k, mu,
                     history[-1])
        if history[-1] < cfg.tol:
            converged = True
        if converged or k >= cfg.max_iters:
            break

    result = PcpResult(
        L=L, S=S, iterations=k, residual_history=history,
        converged=converged, lam=lam, mu_trace=mu_trace,
        objective=trace_norm(L, transform) + lam * l1_norm(S),
        counter=counter)
    return _finish(result, X, cfg, 'naive')


def _pcp_spectral(X, cfg, grouped):
    _check_input(X)
    transform = cfg.tube_transform(X.n)
    lam = cfg.lambda_for(X.l, X.m)
    if frobenius(X) == 0:
        return _zero_result(X, lam)

    counter = OperationCounter()
    spectral = cft(X, transform)
    X_hat = spectral.data
    Y_hat = X_hat / _initial_dual_scale(X, lam, transform)
    counter.count_transforms(2 * X.l * X.m)

    scale = spectral.scale
    low_rank_scale = scale if grouped else 1.0
    mirror = transform.mirror if X.field is Field.REAL else None
    norm_x = np.linalg.norm(X_hat)

    S_hat = np.zeros_like(X_hat)
    history, mu_trace = [], []
    converged = False

    for k, mu in enumerate(mu_schedule(X, cfg), 1):
        L_hat = shrink_singular_values(
            X_hat - S_hat + Y_hat / mu, low_rank_scale / mu,
            grouped=grouped, mirror=mirror, counter=counter)
        S_hat = shrink_tubes(X_hat - L_hat + Y_hat / mu, lam * scale / mu)
        gap = X_hat - L_hat - S_hat
        Y_hat = Y_hat + mu * gap

        history.append(float(np.linalg.norm(gap) / norm_x))
        mu_trace.append(mu)
        logger.debug('iteration %d: mu %.4g, residual %.3g', k, mu,
                     history[-1])
        if history[-1] < cfg.tol:
            converged = True
        if converged or k >= cfg.max_iters:
            break

    L = icft(SpectralMatrix(L_hat, transform), X.field)
    S = icft(SpectralMatrix(S_hat, transform), X.field)
    counter.count_transforms(2 * X.l * X.m)

    if grouped:
        objective = trace_norm(L, transform) + lam * l1_norm(S)
    else:
        objective = slice_nuclear_norm(L, transform) + lam * l1_norm(S)

    result = PcpResult(
        L=L, S=S, iterations=k, residual_history=history,
        converged=converged, lam=lam, mu_trace=mu_trace,
        objective=objective, counter=counter)
    return _finish(
        result, X, cfg, 'frequency' if grouped else 'tensor-rpca')
