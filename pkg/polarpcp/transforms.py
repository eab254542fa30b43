"""
Tube transforms that diagonalize the algebras a hypercomplex matrix can live
in.

* ``dft``: circulant algebra (polar n-complex numbers), plain n-point DFT.
* ``skew-dft``: skew-circulant algebra (planar n-complex numbers), where
  A_k = sum_i a_i exp(-pi j i (2k+1) / n).
* ``group-dft``: algebra of a finite commutative group Z_n1 x ... x Z_nm,
  diagonalized by F_n1 (x) ... (x) F_nm. With every factor 2 this is the
  Walsh-Hadamard transform.

Each transform is used either unnormalized (what ``numpy.fft`` computes,
and what conjugating the adjoint by unitary blocks produces) or unitary. For
every kind the two differ by exactly sqrt(n):

>>> t = TubeTransform.walsh_hadamard(4)
>>> t.matrix().real.astype(int).tolist()
[[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]
"""
import dataclasses
import enum
import functools
import math

import numpy as np
import scipy.fft

from .errors import DimensionMismatch, ParameterError


class TransformKind(enum.Enum):
    DFT = 'dft'
    SKEW_DFT = 'skew-dft'
    GROUP_DFT = 'group-dft'


class Normalization(enum.Enum):
    """
    How a spectrum is scaled relative to the coefficients it came from.
    """
    UNNORMALIZED = 'unnormalized'
    UNITARY = 'unitary'

    @property
    def fft_norm(self):
        return 'backward' if self is Normalization.UNNORMALIZED else 'ortho'

    def scale(self, n):
        """
        Ratio between the norm of a spectral tube and its coefficient tube:

        >>> Normalization.UNNORMALIZED.scale(4)
        2.0
        >>> Normalization.UNITARY.scale(4)
        1.0
        """
        if self is Normalization.UNNORMALIZED:
            return math.sqrt(n)
        return 1.0


@dataclasses.dataclass(frozen=True)
class TubeTransform:
    """
    A length-n tube transform.

    >>> TubeTransform.dft(3)
    TubeTransform(kind=<TransformKind.DFT: 'dft'>, n=3, factors=())
    >>> TubeTransform.group_dft((2, 3)).n
    6
    """
    kind: TransformKind
    n: int
    factors: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(
                'Tube length must be positive, got {}.'.format(self.n))
        if self.kind is TransformKind.GROUP_DFT:
            if not self.factors or any(f < 1 for f in self.factors):
                raise ParameterError(
                    'Invalid group factors {}.'.format(self.factors))
            if math.prod(self.factors) != self.n:
                raise ParameterError(
                    'Group factors {} do not multiply to {}.'.format(
                        self.factors, self.n))
        elif self.factors:
            raise ParameterError(
                'Only group-dft transforms take factors.')

    @classmethod
    def dft(cls, n):
        return cls(TransformKind.DFT, n)

    @classmethod
    def skew_dft(cls, n):
        return cls(TransformKind.SKEW_DFT, n)

    @classmethod
    def group_dft(cls, factors):
        factors = tuple(int(f) for f in factors)
        return cls(TransformKind.GROUP_DFT, math.prod(factors), factors)

    @classmethod
    def walsh_hadamard(cls, n):
        """
        Group transform of Z_2 x ... x Z_2; n must be a power of two.
        """
        if n < 1 or n & (n - 1):
            raise ParameterError(
                'Walsh-Hadamard needs a power of two, got {}.'.format(n))
        if n == 1:
            return cls.group_dft((1,))
        return cls.group_dft((2,) * (n.bit_length() - 1))

    @classmethod
    def from_name(cls, name, n):
        """
        Build a transform from its command-line name:

        >>> TubeTransform.from_name('wht', 8).factors
        (2, 2, 2)
        """
        if name == 'dft':
            return cls.dft(n)
        if name == 'skew-dft':
            return cls.skew_dft(n)
        if name == 'wht':
            return cls.walsh_hadamard(n)
        raise ParameterError('Unknown transform "{}".'.format(name))

    def check_length(self, n):
        if n != self.n:
            raise DimensionMismatch(
                'Transform of length {} applied to tubes of length {}.'
                .format(self.n, n))

    @functools.cached_property
    def _twiddle(self):
        return np.exp(-1j * np.pi * np.arange(self.n) / self.n)

    def forward(self, values, axis=-1,
                normalization=Normalization.UNNORMALIZED):
        values = np.moveaxis(np.asarray(values), axis, -1)
        self.check_length(values.shape[-1])
        norm = Normalization(normalization).fft_norm

        if self.kind is TransformKind.DFT:
            result = scipy.fft.fft(values, axis=-1, norm=norm)
        elif self.kind is TransformKind.SKEW_DFT:
            result = scipy.fft.fft(values * self._twiddle, axis=-1, norm=norm)
        else:
            lead = values.shape[:-1]
            grid = values.reshape(lead + self.factors)
            result = scipy.fft.fftn(
                grid, axes=self._group_axes(len(lead)), norm=norm)
            result = result.reshape(lead + (self.n,))

        return np.moveaxis(result, -1, axis)

    def inverse(self, values, axis=-1,
                normalization=Normalization.UNNORMALIZED):
        values = np.moveaxis(np.asarray(values), axis, -1)
        self.check_length(values.shape[-1])
        norm = Normalization(normalization).fft_norm

        if self.kind is TransformKind.DFT:
            result = scipy.fft.ifft(values, axis=-1, norm=norm)
        elif self.kind is TransformKind.SKEW_DFT:
            result = scipy.fft.ifft(values, axis=-1, norm=norm)
            result = result * np.conj(self._twiddle)
        else:
            lead = values.shape[:-1]
            grid = values.reshape(lead + self.factors)
            result = scipy.fft.ifftn(
                grid, axes=self._group_axes(len(lead)), norm=norm)
            result = result.reshape(lead + (self.n,))

        return np.moveaxis(result, -1, axis)

    def _group_axes(self, offset):
        return tuple(range(offset, offset + len(self.factors)))

    def matrix(self, normalization=Normalization.UNNORMALIZED):
        """
        Dense n x n transform matrix; column i is the spectrum of e_i.
        """
        return self.forward(
            np.eye(self.n), axis=0, normalization=normalization)

    def representation(self, coeffs):
        """
        Matrix of multiplication by ``coeffs`` in this algebra.

        For the DFT this is the circulant matrix of the tube:

        >>> TubeTransform.dft(2).representation([1.0, 2.0]).real.tolist()
        [[1.0, 2.0], [2.0, 1.0]]
        """
        values = self.forward(np.asarray(coeffs))
        return self.inverse(values[:, None] * self.matrix(), axis=0)

    @functools.cached_property
    def mirror(self):
        """
        Index k' such that spectrum[k'] = conj(spectrum[k]) for real tubes.

        >>> TubeTransform.dft(4).mirror.tolist()
        [0, 3, 2, 1]
        >>> TubeTransform.skew_dft(4).mirror.tolist()
        [3, 2, 1, 0]
        """
        k = np.arange(self.n)
        if self.kind is TransformKind.DFT:
            return (-k) % self.n
        if self.kind is TransformKind.SKEW_DFT:
            return self.n - 1 - k
        coords = np.unravel_index(k, self.factors)
        negated = tuple((-c) % f for c, f in zip(coords, self.factors))
        return np.ravel_multi_index(negated, self.factors)
