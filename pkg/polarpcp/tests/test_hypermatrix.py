import numpy as np

from polarpcp.errors import DimensionMismatch, FieldError, SingularScalar
from polarpcp.hyperalgebra import Field, PolarScalar, to_circulant
from polarpcp.hypermatrix import (
    HyperMatrix, SpectralMatrix, adjoint, cft, conj_transpose, frobenius,
    icft, inner, inverse, matmul, max_modulus, spectral_norm, stride_perm,
    stride_perm_matrix, unfold, vec)
from polarpcp.transforms import Normalization, TubeTransform

from .base import AlgebraTestCase, convolution_product, dense_cft_blocks

FIELDS = (Field.REAL, Field.COMPLEX)


class TableMatrixMixin:
    """
    The 2 x 2 matrix over K_2 with entries a, c in the first row and b, d in
    the second.
    """
    a, b, c, d = (1.0, 2.0), (3.0, 4.0), (5.0, 6.0), (7.0, 8.0)

    def table_matrix(self):
        return HyperMatrix([[self.a, self.c], [self.b, self.d]])


class AdjointTest(TableMatrixMixin, AlgebraTestCase):

    def test_table_matrix(self):
        (a0, a1), (b0, b1), (c0, c1), (d0, d1) = self.a, self.b, self.c, \
            self.d

        self.assertEqual(adjoint(self.table_matrix()).tolist(), [
            [a0, a1, c0, c1],
            [a1, a0, c1, c0],
            [b0, b1, d0, d1],
            [b1, b0, d1, d0]])

    def test_blocks_are_circulants(self):
        A = self.random_matrix(2, 3, 4, Field.COMPLEX)
        chi = adjoint(A)

        for i in range(2):
            for k in range(3):
                self.assertArrayClose(
                    chi[4 * i:4 * i + 4, 4 * k:4 * k + 4],
                    to_circulant(A.entry(i, k)))

    def test_identity(self):
        self.assertArrayClose(
            adjoint(HyperMatrix.identity(3, 4)), np.eye(12))

    def test_product(self):
        for field in FIELDS:
            A = self.random_matrix(3, 2, 3, field)
            B = self.random_matrix(2, 4, 3, field)

            self.assertArrayClose(
                adjoint(matmul(A, B)), adjoint(A) @ adjoint(B))

    def test_sum(self):
        A = self.random_matrix(3, 2, 5, Field.COMPLEX)
        B = self.random_matrix(3, 2, 5, Field.COMPLEX)

        self.assertArrayClose(adjoint(A + B), adjoint(A) + adjoint(B))

    def test_conjugate_transpose(self):
        for field in FIELDS:
            A = self.random_matrix(3, 2, 4, field)

            self.assertArrayClose(
                adjoint(conj_transpose(A)), adjoint(A).conj().T)

    def test_inverse(self):
        for field in FIELDS:
            A = self.random_matrix(3, 3, 3, field) \
                + 5 * HyperMatrix.identity(3, 3)

            self.assertArrayClose(
                adjoint(inverse(A)), np.linalg.inv(adjoint(A)), rtol=1e-9)


class StridePermutationTest(AlgebraTestCase):

    def test_order_four_stride_two(self):
        x = np.array([10, 11, 12, 13])

        self.assertEqual(x[stride_perm(4, 2)].tolist(), [10, 12, 11, 13])

    def test_stride_one(self):
        self.assertEqual(stride_perm(5, 1).tolist(), list(range(5)))

    def test_mutual_inverses(self):
        for m, n in ((3, 2), (2, 3), (4, 5)):
            product = stride_perm_matrix(m * n, m) @ stride_perm_matrix(
                m * n, n)

            self.assertArrayClose(product, np.eye(m * n))

    def test_permutation(self):
        for m, s in ((6, 2), (6, 3), (12, 4)):
            self.assertEqual(sorted(stride_perm(m, s).tolist()),
                             list(range(m)))

    def test_invalid(self):
        with self.assertRaises(DimensionMismatch):
            stride_perm(4, 3)
        with self.assertRaises(DimensionMismatch):
            stride_perm(0, 1)


class CftTest(TableMatrixMixin, AlgebraTestCase):

    def test_table_matrix(self):
        (a0, a1), (b0, b1), (c0, c1), (d0, d1) = self.a, self.b, self.c, \
            self.d

        blocks = cft(self.table_matrix()).blocks

        self.assertArrayClose(blocks[0], [[a0 + a1, c0 + c1],
                                          [b0 + b1, d0 + d1]])
        self.assertArrayClose(blocks[1], [[a0 - a1, c0 - c1],
                                          [b0 - b1, d0 - d1]])

    def test_unitary_normalization(self):
        A = self.table_matrix()

        self.assertArrayClose(
            cft(A, normalization=Normalization.UNITARY).blocks * np.sqrt(2),
            cft(A).blocks)

    def test_constant_tubes_give_equal_blocks(self):
        data = np.zeros((3, 2, 5))
        data[:, :, 0] = self.random_values((3, 2))
        blocks = cft(HyperMatrix(data)).blocks

        for b in range(1, 5):
            self.assertArrayClose(blocks[b], blocks[0])

    def test_dense_permutation_oracle(self):
        for field in FIELDS:
            A = self.random_matrix(2, 3, 4, field)

            self.assertArrayClose(
                cft(A).blocks, dense_cft_blocks(A), atol=1e-12)

    def test_round_trip(self):
        for field in FIELDS:
            A = self.random_matrix(4, 3, 5, field)

            B = icft(cft(A))

            self.assertMatrixClose(B, A, 1e-12)
            self.assertIs(B.field, field)

    def test_flat_spectrum_inverse(self):
        data = np.zeros((2, 2, 3), dtype=np.complex128)
        data[:, :, :] = np.array([[1, 2], [3, 4]])[:, :, None]
        A = icft(SpectralMatrix(data, TubeTransform.dft(3)))

        self.assertArrayClose(A.data[:, :, 0], [[1, 2], [3, 4]])
        self.assertArrayClose(A.data[:, :, 1:], np.zeros((2, 2, 2)))

    def test_parseval(self):
        A = self.random_matrix(3, 4, 6, Field.COMPLEX)

        total = sum(np.linalg.norm(b) ** 2 for b in cft(A).blocks)

        self.assertRelativeClose(total, 6 * frobenius(A) ** 2, 1e-12)

    def test_real_matrices_have_conjugate_symmetric_blocks(self):
        n = 5
        blocks = cft(self.random_matrix(3, 2, n)).blocks

        for b in range(1, n):
            self.assertArrayClose(blocks[b], np.conj(blocks[n - b]))
        self.assertTrue(
            cft(self.random_matrix(3, 2, n)).is_conjugate_symmetric())
        self.assertFalse(
            cft(self.random_matrix(3, 2, n, Field.COMPLEX))
            .is_conjugate_symmetric())


class MatmulTest(AlgebraTestCase):

    def test_identity(self):
        A = self.random_matrix(3, 4, 3, Field.COMPLEX)

        self.assertMatrixClose(A @ HyperMatrix.identity(4, 3), A)
        self.assertMatrixClose(HyperMatrix.identity(3, 3) @ A, A)

    def test_convolution_oracle(self):
        for field in FIELDS:
            A = self.random_matrix(3, 4, 3, field)
            B = self.random_matrix(4, 2, 3, field)

            self.assertMatrixClose(matmul(A, B), convolution_product(A, B))

    def test_entries_are_sums_of_products(self):
        A = self.random_matrix(2, 3, 4)
        B = self.random_matrix(3, 2, 4)
        C = matmul(A, B)

        expected = A.entry(1, 0) * B.entry(0, 1)
        for r in range(1, 3):
            expected = expected + A.entry(1, r) * B.entry(r, 1)

        self.assertTrue(C.entry(1, 1).isclose(expected, atol=1e-10))

    def test_other_algebras(self):
        A = self.random_matrix(3, 2, 4)
        B = self.random_matrix(2, 3, 4)

        for transform in (TubeTransform.skew_dft(4),
                          TubeTransform.walsh_hadamard(4)):
            C = matmul(A, B, transform)
            rep = transform.representation
            for i in range(3):
                for k in range(3):
                    expected = sum(
                        rep(A.data[i, r]) @ rep(B.data[r, k])
                        for r in range(2))
                    self.assertArrayClose(rep(C.data[i, k]), expected)

    def test_shape_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            matmul(self.random_matrix(2, 3, 2), self.random_matrix(2, 3, 2))
        with self.assertRaises(DimensionMismatch):
            matmul(self.random_matrix(2, 3, 2), self.random_matrix(3, 3, 4))


class ConjugateTransposeTest(AlgebraTestCase):

    def test_involution(self):
        A = self.random_matrix(3, 2, 4, Field.COMPLEX)

        self.assertMatrixClose(conj_transpose(conj_transpose(A)), A, 0)

    def test_hermitian(self):
        A = self.random_matrix(3, 3, 4, Field.COMPLEX)
        H = A + A.H

        self.assertMatrixClose(H.H, H)

    def test_entries(self):
        A = self.random_matrix(2, 3, 5)
        B = conj_transpose(A)

        for i in range(2):
            for k in range(3):
                self.assertEqual(
                    B.entry(k, i).coeffs.tolist(),
                    A.entry(i, k).coeffs[(-np.arange(5)) % 5].tolist())

    def test_spectral_path_for_other_algebras(self):
        A = self.random_matrix(2, 3, 4, Field.COMPLEX)
        transform = TubeTransform.skew_dft(4)
        B = conj_transpose(A, transform)

        for i in range(2):
            for k in range(3):
                self.assertArrayClose(
                    transform.representation(B.data[k, i]),
                    transform.representation(A.data[i, k]).conj().T)


class NormTest(AlgebraTestCase):

    def test_bicomplex_modulus_example(self):
        A = HyperMatrix([[[1 + 2j, 3 + 4j, 5 + 6j]]])

        self.assertAlmostEqual(frobenius(A), np.sqrt(91), places=12)

    def test_identity(self):
        self.assertAlmostEqual(
            frobenius(HyperMatrix.identity(7, 3)), np.sqrt(7))

    def test_inner_is_euclidean(self):
        for field in FIELDS:
            A = self.random_matrix(3, 4, 3, field)
            B = self.random_matrix(3, 4, 3, field)

            # Re tr(A B*) is the real part of the e_0 coefficient summed
            # over the diagonal
            trace = np.trace((A @ B.H).data[:, :, 0]).real

            self.assertAlmostEqual(inner(A, B), trace, places=10)
            self.assertAlmostEqual(inner(A, B), vec(A) @ vec(B), places=10)

    def test_frobenius_from_inner(self):
        A = self.random_matrix(2, 5, 4, Field.COMPLEX)

        self.assertRelativeClose(frobenius(A) ** 2, inner(A, A), 1e-12)

    def test_spectral_norm_dense_oracle(self):
        A = self.random_matrix(3, 3, 2)

        self.assertRelativeClose(
            spectral_norm(A), np.linalg.norm(adjoint(A), 2), 1e-12)

    def test_spectral_norm_identity(self):
        self.assertEqual(spectral_norm(HyperMatrix.identity(4, 5)), 1.0)

    def test_max_modulus(self):
        A = HyperMatrix([[(1.0, 2.0), (5.0, 6.0)], [(3.0, 4.0), (7.0, 8.0)]])

        self.assertAlmostEqual(max_modulus(A), np.sqrt(113))


class UnfoldTest(AlgebraTestCase):

    def test_table_layout(self):
        A = HyperMatrix([[(1.0, 2.0), (5.0, 6.0)], [(3.0, 4.0), (7.0, 8.0)]])

        self.assertEqual(unfold(A).tolist(), [
            [1.0, 5.0, 2.0, 6.0],
            [3.0, 7.0, 4.0, 8.0]])

    def test_slab_count(self):
        self.assertEqual(unfold(self.random_matrix(2, 3, 4)).shape, (2, 12))
        self.assertEqual(
            unfold(self.random_matrix(2, 3, 4, Field.COMPLEX)).shape,
            (2, 24))

    def test_complex_slabs_interleave(self):
        A = HyperMatrix([[[1 + 2j, 3 + 4j]]])

        self.assertEqual(unfold(A).tolist(), [[1.0, 2.0, 3.0, 4.0]])

    def test_vec_norm(self):
        A = self.random_matrix(3, 2, 5, Field.COMPLEX)

        self.assertRelativeClose(vec(A) @ vec(A), frobenius(A) ** 2, 1e-12)

    def test_vec_is_column_major(self):
        A = HyperMatrix([[(1.0, 2.0), (5.0, 6.0)], [(3.0, 4.0), (7.0, 8.0)]])

        self.assertEqual(
            vec(A).tolist(), [1.0, 3.0, 5.0, 7.0, 2.0, 4.0, 6.0, 8.0])


class HyperMatrixTest(AlgebraTestCase):

    def test_from_scalars(self):
        A = HyperMatrix.from_scalars([
            [PolarScalar([1.0, 2.0]), PolarScalar([3.0, 4.0])]])

        self.assertEqual(A.shape, (1, 2, 2))
        self.assertEqual(A.entry(0, 1).coeffs.tolist(), [3.0, 4.0])

    def test_from_slabs(self):
        A = HyperMatrix.from_slabs([np.eye(2), 2 * np.eye(2)])

        self.assertEqual(A.entry(1, 1).coeffs.tolist(), [1.0, 2.0])
        self.assertArrayClose(A.slab(1), 2 * np.eye(2))

    def test_field_check(self):
        with self.assertRaises(FieldError):
            HyperMatrix(np.ones((1, 1, 2)) * 1j, Field.REAL)

    def test_as_field(self):
        A = self.random_matrix(2, 2, 2)

        self.assertIs(A.as_field(Field.COMPLEX).field, Field.COMPLEX)
        self.assertIs(A.as_field(Field.COMPLEX).as_field(Field.REAL).field,
                      Field.REAL)

    def test_bad_shape(self):
        with self.assertRaises(DimensionMismatch):
            HyperMatrix(np.ones((2, 2)))

    def test_singular_inverse(self):
        with self.assertRaises(SingularScalar):
            inverse(HyperMatrix([[[1.0, 1.0]]]))
