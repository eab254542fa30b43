"""
Proximity operators of the hypercomplex l1 norm and trace norm.

Both reduce to group soft-thresholding: a group z is scaled by
(1 - lambda / |z|)_+, which sends small groups to zero and shrinks the
others towards it without changing their direction.

>>> soft_threshold_real(2.0, 1.0)
1.0
>>> soft_threshold_real(-3.0, 1.0)
-2.0
>>> soft_threshold_real(0.5, 1.0)
0.0
"""
import dataclasses

import numpy as np

from .errors import DimensionMismatch, ParameterError
from .hyperalgebra import Field
from .hypermatrix import HyperMatrix, SpectralMatrix, cft, icft
from .tsvd import singular_moduli, slice_svds


@dataclasses.dataclass(frozen=True)
class GroupedVector:
    """
    A real vector split into contiguous groups; group g spans
    values[offsets[g]:offsets[g + 1]].

    >>> z = GroupedVector.from_sizes([3.0, 4.0, 1.0], [2, 1])
    >>> z.group_count
    2
    >>> z.group(0).tolist()
    [3.0, 4.0]
    """
    values: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        offsets = np.asarray(self.offsets, dtype=np.intp)
        if values.ndim != 1:
            raise DimensionMismatch('Grouped values must be a flat vector.')
        if (offsets.ndim != 1 or offsets.size < 1 or offsets[0] != 0
                or offsets[-1] != values.size
                or np.any(np.diff(offsets) < 1)):
            raise DimensionMismatch(
                'Group offsets must partition all {} values.'.format(
                    values.size))
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'offsets', offsets)

    @classmethod
    def from_sizes(cls, values, sizes):
        return cls(values, np.concatenate([[0], np.cumsum(sizes)]))

    @property
    def group_count(self):
        return self.offsets.size - 1

    @property
    def sizes(self):
        return np.diff(self.offsets)

    def group(self, g):
        return self.values[self.offsets[g]:self.offsets[g + 1]]


def _check_lambda(lam):
    if lam < 0:
        raise ParameterError(
            'Threshold must be nonnegative, got {}.'.format(lam))


def _shrink_rows(rows, lam):
    # rows: (..., group size); every row is one group
    norms = np.sqrt(np.sum(rows ** 2, axis=-1))
    factor = np.zeros_like(norms)
    keep = norms > lam
    factor[keep] = 1 - lam / norms[keep]
    return rows * factor[..., None]


def group_soft_threshold(z, lam):
    """
    Proximity operator of lambda times the sum of the group norms.

    >>> z = GroupedVector.from_sizes([3.0, 4.0, 0.5], [2, 1])
    >>> group_soft_threshold(z, 2.5).values.tolist()
    [1.5, 2.0, 0.0]
    """
    _check_lambda(lam)
    sizes = z.sizes
    if np.all(sizes == sizes[0]):
        shrunk = _shrink_rows(z.values.reshape(-1, sizes[0]), lam)
        return GroupedVector(shrunk.reshape(-1), z.offsets)

    values = np.empty_like(z.values)
    for g in range(z.group_count):
        start, stop = z.offsets[g], z.offsets[g + 1]
        values[start:stop] = _shrink_rows(
            z.values[None, start:stop], lam)[0]
    return GroupedVector(values, z.offsets)


def _real_rows(data):
    # (l, m, n) coefficients as (l, m, n) or (l, m, 2n) real rows
    if np.iscomplexobj(data):
        return np.ascontiguousarray(data).view(np.float64)
    return data


def to_grouped(A):
    """
    Flatten A into one group per entry, in the unfold order of its field.

    Complex tubes contribute re a_0, im a_0, re a_1, ... to their group:

    >>> to_grouped(HyperMatrix([[[1 + 2j, 3 + 4j]]])).values.tolist()
    [1.0, 2.0, 3.0, 4.0]
    """
    rows = _real_rows(A.data)
    size = rows.shape[-1]
    return GroupedVector(
        rows.reshape(-1), np.arange(0, rows.size + 1, size))


def from_grouped(z, like):
    """
    Inverse of to_grouped(), shaped and typed like the matrix ``like``.
    """
    values = np.ascontiguousarray(z.values)
    if like.field is Field.COMPLEX:
        values = values.view(np.complex128)
    return HyperMatrix(values.reshape(like.shape), like.field)


def prox_l1(Z, lam):
    """
    Entrywise shrinkage of the hypercomplex lasso: every entry z becomes
    (1 - lambda / |z|)_+ z.

    >>> Z = HyperMatrix([[[3.0, 4.0]], [[0.3, 0.4]]])
    >>> prox_l1(Z, 2.5).data.tolist()
    [[[1.5, 2.0]], [[0.0, 0.0]]]
    """
    _check_lambda(lam)
    return from_grouped(group_soft_threshold(to_grouped(Z), lam), Z)


def shrink_tubes(spectrum, threshold):
    """
    prox_l1 applied to spectral tubes (l, m, n).

    The norm of an unnormalized spectral tube is sqrt(n) times the modulus of
    its entry, so callers pass the threshold already scaled the same way.
    """
    _check_lambda(threshold)
    data = np.ascontiguousarray(spectrum, dtype=np.complex128)
    shrunk = _shrink_rows(data.view(np.float64), threshold)
    return np.ascontiguousarray(shrunk).view(np.complex128)


def shrink_singular_values(spectrum, threshold, grouped=True, mirror=None,
                           counter=None):
    """
    Threshold the singular values of every frontal slice of a spectrum.

    ``spectrum`` is tube-last (l, m, n). When ``grouped`` the i-th singular
    values of all slices form one group and are shrunk together, which is
    the trace norm prox in the transform domain. Otherwise each singular
    value is soft-thresholded on its own, slice by slice.
    """
    _check_lambda(threshold)
    blocks = np.moveaxis(np.asarray(spectrum, dtype=np.complex128), -1, 0)
    U, singular, Vh = slice_svds(
        blocks, mirror, full_matrices=False, counter=counter)

    if grouped:
        shrunk = _shrink_rows(singular.T, threshold).T
    else:
        shrunk = _shrink_rows(singular[..., None], threshold)[..., 0]

    low_rank = np.matmul(U * shrunk[:, None, :], Vh)
    return np.moveaxis(low_rank, 0, -1)


def prox_trace(Z, lam, transform=None, counter=None):
    """
    Proximity operator of lambda times the trace norm sum_i |sigma_i(Z)|.

    Each singular tube is scaled by (1 - lambda / |sigma_i|)_+; this is done
    on the slice SVDs directly, where a tube's spectrum is the i-th singular
    value of every slice.
    """
    _check_lambda(lam)
    spectral = cft(Z, transform)
    mirror = spectral.transform.mirror if Z.field is Field.REAL else None
    low_rank = shrink_singular_values(
        spectral.data, lam * spectral.scale, mirror=mirror, counter=counter)
    if counter is not None:
        counter.count_transforms(2 * Z.l * Z.m)
    return icft(
        SpectralMatrix(low_rank, spectral.transform, spectral.normalization),
        Z.field)


def soft_threshold_real(x, lam):
    """
    The scalar soft threshold sign(x) max(|x| - lambda, 0).
    """
    _check_lambda(lam)
    result = np.sign(x) * np.maximum(np.abs(x) - lam, 0)
    if np.ndim(result) == 0:
        return float(result)
    return result


def l1_norm(A):
    """
    Sum of the entry moduli.
    """
    return float(np.sum(np.linalg.norm(A.data, axis=-1)))


def trace_norm(A, transform=None):
    """
    Sum of the singular tube moduli, the hypercomplex trace norm.
    """
    return float(np.sum(singular_moduli(A, transform)))


def slice_nuclear_norm(A, transform=None):
    """
    Sum of the singular values of every cft block; the low-rank penalty of
    tensor RPCA.
    """
    blocks = cft(A, transform).blocks
    return float(np.sum(np.linalg.svd(blocks, compute_uv=False)))
