"""
This module contains the PolarScalar class (to represent polar n-complex and
polar n-bicomplex numbers) as well as the scalar operations on them.

A number p = a_0 + a_1 e_1 + ... + a_{n-1} e_{n-1} is stored as its tube of n
coefficients. With real coefficients it belongs to K_n; with complex
coefficients it belongs to CK_n. The units multiply cyclically, that is,
e_i e_k = e_{(i+k) mod n}:

>>> e1 = PolarScalar.unit(3, 1)
>>> (e1 * e1).isclose(PolarScalar.unit(3, 2))
True

Multiplication is circular convolution, so it is done in the Fourier domain.
Scalar code uses the unnormalized DFT (inverse scaled by 1/n); the unitary
DFT only shows up where angles are computed. The two spectra differ by
exactly sqrt(n):

>>> p = PolarScalar([1.0, 2.0, 3.0, 4.0])
>>> bool(np.allclose(spectrum(p), 2 * unitary_spectrum(p)))
True
"""
import dataclasses
import enum

import numpy as np
import scipy.fft
import scipy.linalg

from .errors import DimensionMismatch, FieldError, SingularScalar

# Relative to the largest spectrum magnitude.
SINGULAR_TOLERANCE = 1e-12


class Field(enum.Enum):
    """
    Coefficient field: REAL gives K_n, COMPLEX gives CK_n.
    """
    REAL = 'real'
    COMPLEX = 'complex'

    @property
    def dtype(self):
        return np.float64 if self is Field.REAL else np.complex128

    @classmethod
    def promote(cls, *fields):
        """
        The field of a result combining operands of the given fields:

        >>> Field.promote(Field.REAL, Field.REAL)
        <Field.REAL: 'real'>
        >>> Field.promote(Field.REAL, Field.COMPLEX)
        <Field.COMPLEX: 'complex'>
        """
        if any(Field(f) is cls.COMPLEX for f in fields):
            return cls.COMPLEX
        return cls.REAL

    def coerce(self, values):
        """
        Drop the imaginary part of a computed array when the field is real.
        """
        if self is Field.REAL:
            return np.real(values)
        return values


class PolarScalar:
    """
    One element of K_n or CK_n.

    >>> p = PolarScalar([1.0, 2.0])
    >>> p.n, p.field
    (2, <Field.REAL: 'real'>)
    >>> PolarScalar([1 + 2j, 0]).field
    <Field.COMPLEX: 'complex'>

    A real field cannot hold complex coefficients:

    >>> PolarScalar([1j, 0], field='real')
    Traceback (most recent call last):
      ...
    polarpcp.errors.FieldError: K_n coefficients must be real.
    """
    __slots__ = ('coeffs', 'field')

    def __init__(self, coeffs, field=None):
        coeffs = np.asarray(coeffs)
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise DimensionMismatch(
                'A polar number needs a 1-D tube of at least one '
                'coefficient, got shape {}.'.format(coeffs.shape))

        if field is None:
            field = Field.COMPLEX if np.iscomplexobj(coeffs) else Field.REAL
        field = Field(field)

        if field is Field.REAL and np.iscomplexobj(coeffs):
            if np.any(coeffs.imag != 0):
                raise FieldError('K_n coefficients must be real.')
            coeffs = coeffs.real

        self.coeffs = np.array(coeffs, dtype=field.dtype)
        self.field = field

    @classmethod
    def unit(cls, n, k, field=Field.REAL):
        """
        The imaginary unit e_k of K_n (or CK_n); e_0 is 1.
        """
        if not 0 <= k < n:
            raise DimensionMismatch(
                'Unit e_{} does not exist in K_{}.'.format(k, n))
        coeffs = np.zeros(n, dtype=Field(field).dtype)
        coeffs[k] = 1
        return cls(coeffs, field)

    @classmethod
    def one(cls, n, field=Field.REAL):
        return cls.unit(n, 0, field)

    @classmethod
    def zero(cls, n, field=Field.REAL):
        return cls(np.zeros(n, dtype=Field(field).dtype), field)

    @property
    def n(self):
        return self.coeffs.size

    def isclose(self, other, atol=1e-12):
        return self.n == other.n and bool(
            np.allclose(self.coeffs, other.coeffs, rtol=0, atol=atol))

    def __add__(self, other):
        _check_same_n(self, other)
        field = Field.promote(self.field, other.field)
        return PolarScalar(self.coeffs + other.coeffs, field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolarScalar(-self.coeffs, self.field)

    def __mul__(self, other):
        if isinstance(other, PolarScalar):
            return mul(self, other)
        values = self.coeffs * other
        return PolarScalar(values, Field.promote(
            self.field,
            Field.COMPLEX if np.iscomplexobj(values) else Field.REAL))

    __rmul__ = __mul__

    def __repr__(self):
        return 'PolarScalar({}, field={!r})'.format(
            self.coeffs.tolist(), self.field.value)


@dataclasses.dataclass(frozen=True)
class AngleSet:
    """
    The n-1 angles that, with the modulus, describe a number of K_n.

    ``polar_plus`` is None only for n=1, and ``polar_minus`` exists for even
    n > 2 (for n=2 the reference A_1 already is A_{n/2}).
    """
    azimuthal: tuple
    planar: tuple
    polar_plus: object = None
    polar_minus: object = None

    @property
    def count(self):
        return (
            len(self.azimuthal) + len(self.planar)
            + (self.polar_plus is not None) + (self.polar_minus is not None))


def _check_same_n(p, q):
    if p.n != q.n:
        raise DimensionMismatch(
            'Cannot combine numbers of K_{} and K_{}.'.format(p.n, q.n))


def spectrum(p):
    """
    Unnormalized DFT of the coefficient tube, sum_i a_i w^(ik).
    """
    return scipy.fft.fft(p.coeffs)


def unitary_spectrum(p):
    """
    The spectrum A = F_n a under the unitary DFT matrix F_n.
    """
    return scipy.fft.fft(p.coeffs, norm='ortho')


def mul(p, q):
    """
    Multiply two polar numbers.

    The result is the circular convolution of both tubes. Zero divisors
    exist, for instance in K_2:

    >>> p = PolarScalar([1.0, 1.0])
    >>> q = PolarScalar([1.0, -1.0])
    >>> mul(p, q).isclose(PolarScalar.zero(2))
    True
    """
    _check_same_n(p, q)
    field = Field.promote(p.field, q.field)
    product = scipy.fft.ifft(spectrum(p) * spectrum(q))
    return PolarScalar(field.coerce(product), field)


def conj(p):
    """
    Conjugate p so that its circulant is the conjugate transpose of p's.

    Coefficient i of the result is the conjugate of a_{(n-i) mod n}:

    >>> conj(PolarScalar([1.0, 2.0, 3.0]))
    PolarScalar([1.0, 3.0, 2.0], field='real')
    """
    return PolarScalar(np.conj(np.roll(p.coeffs[::-1], 1)), p.field)


def modulus(p):
    """
    Euclidean norm of the coefficient tube:

    >>> g = PolarScalar([1 + 2j, 3 + 4j, 5 + 6j])
    >>> round(modulus(g) ** 2, 9)
    91.0
    """
    return float(np.linalg.norm(p.coeffs))


def inner(p, q):
    """
    Scalar product Re(p conj(q)), which equals sum_i Re(a_i conj(b_i)).

    >>> inner(PolarScalar.unit(3, 1), PolarScalar.unit(3, 2))
    0.0
    """
    _check_same_n(p, q)
    return float(np.real(np.vdot(q.coeffs, p.coeffs)))


def to_circulant(p):
    """
    The circulant matrix representing p, with entry (i, k) = a_{(i-k) mod n}.

    >>> to_circulant(PolarScalar([1.0, 2.0])).tolist()
    [[1.0, 2.0], [2.0, 1.0]]
    """
    return scipy.linalg.circulant(p.coeffs)


def shift_matrix(n):
    """
    The cyclic shift E_n; its powers are the images of the units e_k.
    """
    return np.roll(np.eye(n), 1, axis=0)


def circulant_sum(p):
    """
    Build the circulant of p as a_0 E^0 + a_1 E^1 + ... + a_{n-1} E^{n-1}.
    """
    shift = shift_matrix(p.n)
    power = np.eye(p.n)
    total = np.zeros((p.n, p.n), dtype=p.field.dtype)
    for a in p.coeffs:
        total = total + a * power
        power = shift @ power
    return total


def inv(p):
    """
    The number p^-1 such that p p^-1 = 1.

    >>> inv(PolarScalar.unit(4, 1)).isclose(PolarScalar.unit(4, 3))
    True

    Zero divisors have no inverse:

    >>> inv(PolarScalar([1.0, 1.0]))
    Traceback (most recent call last):
      ...
    polarpcp.errors.SingularScalar: PolarScalar([1.0, 1.0], field='real') is a zero divisor.
    """
    values = spectrum(p)
    magnitudes = np.abs(values)
    if np.any(magnitudes <= SINGULAR_TOLERANCE * magnitudes.max()):
        raise SingularScalar('{!r} is a zero divisor.'.format(p))
    return PolarScalar(p.field.coerce(scipy.fft.ifft(1 / values)), p.field)


def angles(p):
    """
    Azimuthal, planar and polar angles of a number of K_n.

    They come from the unitary spectrum A of the coefficients, with A_1 as
    the reference. For 1 in K_4 every A_k is 1/2:

    >>> a = angles(PolarScalar.one(4))
    >>> a.azimuthal
    (0.0,)
    >>> bool(np.isclose(a.polar_plus, np.arctan(np.sqrt(2))))
    True
    >>> a.count
    3

    Angles are only defined on K_n:

    >>> angles(PolarScalar([1j, 1]))
    Traceback (most recent call last):
      ...
    polarpcp.errors.FieldError: Angles are defined on K_n only.
    """
    if p.field is not Field.REAL:
        raise FieldError('Angles are defined on K_n only.')

    n = p.n
    values = unitary_spectrum(p)
    magnitudes = np.abs(values)
    half = -(-n // 2)

    azimuthal = tuple(
        _azimuth(values[k]) if magnitudes[k] != 0 else 0.0
        for k in range(1, half))
    planar = tuple(
        float(np.arctan2(magnitudes[1], magnitudes[k]))
        for k in range(2, half))

    polar_plus = polar_minus = None
    if n > 1:
        polar_plus = float(
            np.arctan2(np.sqrt(2) * magnitudes[1], values[0].real))
    if n > 2 and n % 2 == 0:
        polar_minus = float(
            np.arctan2(np.sqrt(2) * magnitudes[1], values[n // 2].real))

    return AngleSet(azimuthal, planar, polar_plus, polar_minus)


def _azimuth(value):
    # A_k = |A_k| exp(-j phi_k), phi_k in [0, 2 pi)
    phi = float(np.mod(-np.angle(value), 2 * np.pi))
    return 0.0 if phi >= 2 * np.pi else phi
