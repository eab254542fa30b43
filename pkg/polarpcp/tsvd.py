"""
Tensor SVD of hypercomplex matrices under a chosen tube transform.

Every tube is transformed, every frontal slice gets an ordinary SVD and the
three factors are transformed back. The i-th singular values of all slices
form the singular tube sigma_i, and U S V* gives the input back:

>>> A = HyperMatrix.identity(3, 4)
>>> F = tsvd(A)
>>> reconstruct(F).allclose(A)
True
>>> [round(float(s), 12) for s in singular_moduli(A)]
[1.0, 1.0, 1.0]

The same function works for the skew-circulant and Walsh-Hadamard algebras:

>>> F = tsvd(A, TubeTransform.walsh_hadamard(4))
>>> reconstruct(F).allclose(A)
True
"""
import dataclasses

import numpy as np

from .errors import DimensionMismatch, ParameterError
from .hyperalgebra import Field
from .hypermatrix import (
    HyperMatrix, SpectralMatrix, cft, conj_transpose, icft, matmul)
from .transforms import TubeTransform

__all__ = [
    'OperationCounter', 'TSVDFactors', 'TubeTransform', 'reconstruct',
    'singular_moduli', 'slice_svds', 'truncate', 'tsvd']


@dataclasses.dataclass
class OperationCounter:
    """
    Work done by a decomposition: SVDs of frontal slices and tubes moved
    between the coefficient and the transform domain.
    """
    slice_svds: int = 0
    tube_transforms: int = 0

    def count_svds(self, count):
        self.slice_svds += count

    def count_transforms(self, count):
        self.tube_transforms += count

    def as_dict(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class TSVDFactors:
    U: HyperMatrix
    S: HyperMatrix
    V: HyperMatrix
    transform: TubeTransform

    @property
    def rank(self):
        return min(self.S.l, self.S.m)

    def singular_tubes(self):
        """
        The diagonal tubes of S as a (rank, n) array.
        """
        i = np.arange(self.rank)
        return self.S.data[i, i]


def _transform_for(A, transform):
    if transform is None:
        return TubeTransform.dft(A.n)
    transform.check_length(A.n)
    return transform


def slice_svds(blocks, mirror=None, full_matrices=True, compute_uv=True,
               counter=None):
    """
    SVD every block of an (n, l, m) stack.

    With ``mirror`` the blocks are assumed to come from real tubes: only one
    block of every conjugate pair is decomposed and its partner gets the
    conjugate factors.
    """
    n = blocks.shape[0]
    count = min(blocks.shape[1:])
    singular = np.empty((n, count))
    if compute_uv:
        U = np.empty((n, blocks.shape[1], blocks.shape[1]
                      if full_matrices else count), dtype=np.complex128)
        Vh = np.empty((n, blocks.shape[2] if full_matrices else count,
                       blocks.shape[2]), dtype=np.complex128)

    done = 0
    for k in range(n):
        partner = k if mirror is None else mirror[k]
        if partner < k:
            continue
        block = blocks[k].real if partner == k and mirror is not None \
            else blocks[k]
        if compute_uv:
            U[k], singular[k], Vh[k] = np.linalg.svd(
                block, full_matrices=full_matrices)
        else:
            singular[k] = np.linalg.svd(block, compute_uv=False)
        done += 1
        if partner != k:
            singular[partner] = singular[k]
            if compute_uv:
                U[partner] = np.conj(U[k])
                Vh[partner] = np.conj(Vh[k])

    if counter is not None:
        counter.count_svds(done)
    if compute_uv:
        return U, singular, Vh
    return singular


def tsvd(A, transform=None, counter=None):
    """
    Factor A = U S V* with U, V unitary in the algebra and S f-diagonal.

    Singular values of every slice are sorted in descending order and
    paired by index across slices. Real input gives real factors.
    """
    transform = _transform_for(A, transform)
    spectral = cft(A, transform)
    real = A.field is Field.REAL
    if counter is not None:
        counter.count_transforms(A.l * A.m)

    U, singular, Vh = slice_svds(
        spectral.blocks, transform.mirror if real else None, counter=counter)

    n, l, m = spectral.blocks.shape
    sigma = np.zeros((n, l, m), dtype=np.complex128)
    i = np.arange(min(l, m))
    sigma[:, i, i] = singular
    V = np.conj(np.swapaxes(Vh, 1, 2))

    def back(blocks):
        return icft(
            SpectralMatrix(np.moveaxis(blocks, 0, -1), transform), A.field)

    return TSVDFactors(back(U), back(sigma), back(V), transform)


def singular_moduli(A, transform=None, counter=None):
    """
    Moduli |sigma_i| of the singular tubes, in descending order.

    Parseval makes them square-sum to the squared Frobenius norm:

    >>> A = HyperMatrix([[[3.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 4.0]]])
    >>> [round(float(s), 12) for s in singular_moduli(A)]
    [4.0, 3.0]
    """
    transform = _transform_for(A, transform)
    spectral = cft(A, transform)
    singular = slice_svds(
        spectral.blocks,
        transform.mirror if A.field is Field.REAL else None,
        compute_uv=False, counter=counter)
    return np.sqrt(np.sum(singular ** 2, axis=0)) / spectral.scale


def reconstruct(F):
    """
    Multiply the factors back together, U S V*.
    """
    if F.U.m != F.S.l or F.S.m != F.V.l:
        raise DimensionMismatch('Inconsistent t-SVD factor shapes.')
    product = matmul(F.U, F.S, F.transform)
    return matmul(product, conj_transpose(F.V, F.transform), F.transform)


def truncate(F, k):
    """
    Keep the k leading singular tubes and drop the others.
    """
    if k < 0:
        raise ParameterError('Cannot keep {} singular tubes.'.format(k))
    data = F.S.data.copy()
    i = np.arange(min(k, F.rank), F.rank)
    data[i, i] = 0
    return dataclasses.replace(F, S=HyperMatrix(data, F.S.field))

