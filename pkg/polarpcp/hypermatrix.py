"""
Matrices whose entries are polar n-complex or n-bicomplex numbers.

An l x m hypercomplex matrix is stored as an l x m x n coefficient tensor,
tube (i, k, :) holding the coefficients of entry A_ik. The tube axis is the
fastest varying one.

The circulant Fourier transform (cft) block diagonalizes the adjoint matrix,
so products, norms and SVDs are computed blockwise on n small complex
matrices. Take the 2 x 2 matrix over K_2

    [[a_0 + a_1 e_1, c_0 + c_1 e_1],
     [b_0 + b_1 e_1, d_0 + d_1 e_1]]

with a = (1, 2), b = (3, 4), c = (5, 6) and d = (7, 8). Its cft blocks hold
the sums and the differences of the coefficients:

>>> A = HyperMatrix([[[1, 2], [5, 6]], [[3, 4], [7, 8]]])
>>> blocks = cft(A).blocks.real
>>> blocks[0].tolist()
[[3.0, 11.0], [7.0, 15.0]]
>>> blocks[1].tolist()
[[-1.0, -1.0], [-1.0, -1.0]]
"""
import numpy as np

from .errors import DimensionMismatch, FieldError, SingularScalar
from .hyperalgebra import Field, PolarScalar
from .transforms import Normalization, TubeTransform, TransformKind

# Relative tolerance when deciding whether a spectrum came from real tubes.
SYMMETRY_TOLERANCE = 1e-12


class HyperMatrix:
    """
    An l x m matrix over K_n (Field.REAL) or CK_n (Field.COMPLEX).

    >>> I = HyperMatrix.identity(2, 3)
    >>> I.shape
    (2, 2, 3)
    >>> I.entry(0, 0)
    PolarScalar([1.0, 0.0, 0.0], field='real')
    """
    __slots__ = ('data', 'field')
    # numpy scalars defer to __rmul__ instead of broadcasting
    __array_ufunc__ = None

    def __init__(self, data, field=None):
        data = np.asarray(data)
        if data.ndim != 3 or min(data.shape) < 1:
            raise DimensionMismatch(
                'A hypercomplex matrix needs an l x m x n coefficient '
                'tensor, got shape {}.'.format(data.shape))

        if field is None:
            field = Field.COMPLEX if np.iscomplexobj(data) else Field.REAL
        field = Field(field)

        if field is Field.REAL and np.iscomplexobj(data):
            if np.any(data.imag != 0):
                raise FieldError('K_n matrices must have real coefficients.')
            data = data.real

        self.data = np.asarray(data, dtype=field.dtype)
        self.field = field

    @classmethod
    def zeros(cls, l, m, n, field=Field.REAL):
        return cls(np.zeros((l, m, n), dtype=Field(field).dtype), field)

    @classmethod
    def identity(cls, m, n, field=Field.REAL):
        data = np.zeros((m, m, n), dtype=Field(field).dtype)
        data[np.arange(m), np.arange(m), 0] = 1
        return cls(data, field)

    @classmethod
    def from_scalars(cls, rows):
        """
        Build a matrix from nested lists of PolarScalar.
        """
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch('Cannot build an empty matrix.')
        field = Field.promote(*(p.field for row in rows for p in row))
        ns = {p.n for row in rows for p in row}
        if len(ns) != 1 or len({len(row) for row in rows}) != 1:
            raise DimensionMismatch('Entries must share n and rows a length.')
        return cls(
            np.array([[p.coeffs for p in row] for row in rows],
                     dtype=field.dtype),
            field)

    @classmethod
    def from_slabs(cls, slabs, field=None):
        """
        Stack coefficient matrices Im_0 A, Im_1 A, ... along the tube axis.
        """
        return cls(np.stack([np.asarray(s) for s in slabs], axis=-1), field)

    @property
    def shape(self):
        return self.data.shape

    @property
    def l(self):
        return self.data.shape[0]

    @property
    def m(self):
        return self.data.shape[1]

    @property
    def n(self):
        return self.data.shape[2]

    def entry(self, i, k):
        return PolarScalar(self.data[i, k], self.field)

    def slab(self, t):
        """
        The matrix Im_t A of coefficients of e_t.
        """
        return self.data[:, :, t]

    def as_field(self, field):
        """
        The same matrix over another field; complex to real requires zero
        imaginary parts.
        """
        return HyperMatrix(self.data, field)

    def allclose(self, other, rtol=1e-10, atol=1e-12):
        return self.shape == other.shape and bool(
            np.allclose(self.data, other.data, rtol=rtol, atol=atol))

    @property
    def H(self):
        return conj_transpose(self)

    def __add__(self, other):
        _check_same_shape(self, other)
        return HyperMatrix(
            self.data + other.data, Field.promote(self.field, other.field))

    def __sub__(self, other):
        _check_same_shape(self, other)
        return HyperMatrix(
            self.data - other.data, Field.promote(self.field, other.field))

    def __neg__(self):
        return HyperMatrix(-self.data, self.field)

    def __mul__(self, scalar):
        values = self.data * scalar
        return HyperMatrix(values, Field.promote(
            self.field,
            Field.COMPLEX if np.iscomplexobj(values) else Field.REAL))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / scalar)

    def __matmul__(self, other):
        return matmul(self, other)

    def __repr__(self):
        return 'HyperMatrix(shape={}, field={!r})'.format(
            self.shape, self.field.value)


class SpectralMatrix:
    """
    Transform-domain form of a hypercomplex matrix: n complex l x m blocks.

    The coefficients are kept tube-last like in HyperMatrix, ``blocks`` is a
    view with the block index first. ``normalization`` and ``transform``
    record how the blocks were obtained so that every consumer can apply
    the right scaling.
    """
    __slots__ = ('data', 'normalization', 'transform')

    def __init__(self, data, transform,
                 normalization=Normalization.UNNORMALIZED):
        data = np.asarray(data, dtype=np.complex128)
        if data.ndim != 3:
            raise DimensionMismatch(
                'Spectral data must be l x m x n, got shape {}.'.format(
                    data.shape))
        transform.check_length(data.shape[2])
        self.data = data
        self.transform = transform
        self.normalization = Normalization(normalization)

    @property
    def blocks(self):
        return np.moveaxis(self.data, -1, 0)

    @property
    def n(self):
        return self.data.shape[2]

    @property
    def scale(self):
        return self.normalization.scale(self.n)

    def _check_compatible(self, other):
        if (self.transform != other.transform
                or self.normalization != other.normalization):
            raise DimensionMismatch(
                'Spectra use different transforms or normalizations.')

    def __matmul__(self, other):
        self._check_compatible(other)
        if self.data.shape[1] != other.data.shape[0]:
            raise DimensionMismatch(
                'Cannot multiply {} by {} blocks.'.format(
                    self.data.shape[:2], other.data.shape[:2]))
        product = np.matmul(self.blocks, other.blocks)
        if self.normalization is Normalization.UNITARY:
            product = product * np.sqrt(self.n)
        return SpectralMatrix(
            np.moveaxis(product, 0, -1), self.transform, self.normalization)

    def conj_transpose(self):
        return SpectralMatrix(
            np.conj(self.data.transpose(1, 0, 2)), self.transform,
            self.normalization)

    def is_conjugate_symmetric(self, tolerance=SYMMETRY_TOLERANCE):
        """
        Whether the blocks are those of a matrix with real coefficients.
        """
        partner = np.conj(self.data[:, :, self.transform.mirror])
        bound = tolerance * max(1.0, float(np.max(np.abs(self.data))))
        return bool(np.all(np.abs(self.data - partner) <= bound))


def _check_same_shape(A, B):
    if A.shape != B.shape:
        raise DimensionMismatch(
            'Shapes {} and {} differ.'.format(A.shape, B.shape))


def _transform_for(A, transform):
    if transform is None:
        return TubeTransform.dft(A.n)
    transform.check_length(A.n)
    return transform


def adjoint(A):
    """
    The ln x mn real (or complex) block matrix whose block (i, k) is the
    circulant of A_ik.

    >>> adjoint(HyperMatrix([[[1, 2]]])).tolist()
    [[1.0, 2.0], [2.0, 1.0]]
    """
    l, m, n = A.shape
    offsets = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    blocks = A.data[:, :, offsets]
    return blocks.transpose(0, 2, 1, 3).reshape(l * n, m * n)


def stride_perm(m, s):
    """
    Index form of the stride-by-s permutation of order m: applying it to x
    gives x[stride_perm(m, s)].

    >>> stride_perm(4, 2).tolist()
    [0, 2, 1, 3]
    >>> stride_perm(4, 3)
    Traceback (most recent call last):
      ...
    polarpcp.errors.DimensionMismatch: Stride 3 does not divide order 4.
    """
    if m < 1 or s < 1:
        raise DimensionMismatch(
            'Order and stride must be positive, got {} and {}.'.format(m, s))
    if m % s:
        raise DimensionMismatch(
            'Stride {} does not divide order {}.'.format(s, m))
    i = np.arange(m)
    return i * s - (m - 1) * ((i * s) // m)


def stride_perm_matrix(m, s):
    return np.eye(m)[stride_perm(m, s)]


def cft(A, transform=None, normalization=Normalization.UNNORMALIZED):
    """
    Circulant Fourier transform of A.

    Block b is the b-th frontal slice of the tube transform of A; this is
    the same as permuting (I (x) F_n) adjoint(A) (I (x) F_n^*) with the stride
    permutations, without ever building the adjoint. Under the default
    normalization the blocks are the unnormalized spectra.
    """
    transform = _transform_for(A, transform)
    return SpectralMatrix(
        transform.forward(A.data, axis=-1, normalization=normalization),
        transform, normalization)


def icft(S, field=None):
    """
    Inverse of cft. Without an explicit field the result is real exactly
    when the spectrum is conjugate symmetric.
    """
    values = S.transform.inverse(
        S.data, axis=-1, normalization=S.normalization)
    if field is None:
        field = Field.REAL if S.is_conjugate_symmetric() else Field.COMPLEX
    field = Field(field)
    return HyperMatrix(field.coerce(values), field)


def matmul(A, B, transform=None):
    """
    Product of two hypercomplex matrices, computed blockwise in the
    transform domain.

    >>> A = HyperMatrix([[[1.0, 2.0]]])
    >>> (A @ HyperMatrix.identity(1, 2)).allclose(A)
    True
    """
    if A.m != B.l or A.n != B.n:
        raise DimensionMismatch(
            'Cannot multiply {} by {}.'.format(A.shape, B.shape))
    transform = _transform_for(A, transform)
    product = cft(A, transform) @ cft(B, transform)
    return icft(product, field=Field.promote(A.field, B.field))


def conj_transpose(A, transform=None):
    """
    The matrix A* with entry (i, k) equal to the conjugate of A_ki.

    >>> A = HyperMatrix([[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]])
    >>> conj_transpose(A).data[:, 0].tolist()
    [[1.0, 3.0, 2.0], [4.0, 6.0, 5.0]]
    """
    if transform is None or transform.kind is TransformKind.DFT:
        swapped = A.data.transpose(1, 0, 2)
        return HyperMatrix(
            np.conj(np.roll(swapped[:, :, ::-1], 1, axis=-1)), A.field)
    transform = _transform_for(A, transform)
    return icft(cft(A, transform).conj_transpose(), field=A.field)


def inverse(A, transform=None):
    """
    Inverse of a square matrix whose every spectral block is invertible.
    """
    if A.l != A.m:
        raise DimensionMismatch('Only square matrices have inverses.')
    spectral = cft(A, transform)
    try:
        blocks = np.linalg.inv(spectral.blocks)
    except np.linalg.LinAlgError:
        raise SingularScalar('{!r} is not invertible.'.format(A))
    return icft(
        SpectralMatrix(np.moveaxis(blocks, 0, -1), spectral.transform),
        field=A.field)


def inner(A, B):
    """
    Re tr(A B*), which is the Euclidean product of all coefficients.
    """
    _check_same_shape(A, B)
    return float(np.real(np.vdot(B.data, A.data)))


def frobenius(A):
    """
    >>> frobenius(HyperMatrix.identity(4, 3))
    2.0
    """
    return float(np.linalg.norm(A.data))


def unfold(A):
    """
    The l x mn (or l x 2mn for CK_n) real matrix [Im_0 A, Im_1 A, ...];
    complex coefficients contribute their real and imaginary slabs in turn.

    >>> unfold(HyperMatrix([[[1, 2], [3, 4]]])).tolist()
    [[1.0, 3.0, 2.0, 4.0]]
    """
    slabs = _real_tubes(A.data)
    l, m, count = slabs.shape
    return slabs.transpose(0, 2, 1).reshape(l, count * m)


def vec(A):
    """
    Column-major vectorization of unfold(A).
    """
    return unfold(A).reshape(-1, order='F')


def _real_tubes(data):
    # (re a_0, im a_0, re a_1, ...) for complex tubes
    if np.iscomplexobj(data):
        return np.ascontiguousarray(data).view(np.float64)
    return data


def spectral_norm(A, transform=None):
    """
    Operator norm of the adjoint, i.e. the largest singular value over all
    cft blocks.

    >>> spectral_norm(HyperMatrix.identity(3, 2))
    1.0
    """
    blocks = cft(A, transform).blocks
    return float(np.max(np.linalg.norm(blocks, ord=2, axis=(1, 2))))


def max_modulus(A):
    """
    Largest entry modulus, the infinity norm over entries.
    """
    return float(np.max(np.linalg.norm(A.data, axis=-1)))
