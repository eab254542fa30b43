import numpy as np
import scipy.linalg

from polarpcp.errors import DimensionMismatch, ParameterError
from polarpcp.hyperalgebra import Field, PolarScalar, to_circulant
from polarpcp.transforms import Normalization, TransformKind, TubeTransform

from .base import AlgebraTestCase


def all_transforms(n):
    transforms = [TubeTransform.dft(n), TubeTransform.skew_dft(n)]
    if n & (n - 1) == 0:
        transforms.append(TubeTransform.walsh_hadamard(n))
    return transforms


class RoundTripTest(AlgebraTestCase):

    def test_inverse_undoes_forward(self):
        for n in (1, 2, 4, 8):
            for transform in all_transforms(n):
                for normalization in Normalization:
                    values = self.random_values((3, n), Field.COMPLEX)

                    spectrum = transform.forward(
                        values, normalization=normalization)

                    self.assertArrayClose(
                        transform.inverse(
                            spectrum, normalization=normalization),
                        values)

    def test_axis(self):
        transform = TubeTransform.skew_dft(5)
        values = self.random_values((5, 3))

        self.assertArrayClose(
            transform.forward(values, axis=0),
            transform.forward(values.T).T)

    def test_length_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            TubeTransform.dft(4).forward(np.ones(3))


class MatrixTest(AlgebraTestCase):

    def test_dft_matrix(self):
        for n in (1, 3, 6):
            self.assertArrayClose(
                TubeTransform.dft(n).matrix(), scipy.linalg.dft(n))

    def test_unitary(self):
        for n in (2, 4, 8):
            for transform in all_transforms(n):
                F = transform.matrix(Normalization.UNITARY)

                self.assertArrayClose(F.conj().T @ F, np.eye(n), atol=1e-12)

    def test_unnormalized_differs_by_square_root_of_n(self):
        for transform in all_transforms(8):
            self.assertArrayClose(
                transform.matrix(),
                np.sqrt(8) * transform.matrix(Normalization.UNITARY))

    def test_walsh_hadamard_entries(self):
        F = TubeTransform.walsh_hadamard(8).matrix(Normalization.UNITARY)

        self.assertArrayClose(np.abs(F), np.full((8, 8), 1 / np.sqrt(8)))
        self.assertArrayClose(F.imag, np.zeros((8, 8)))
        self.assertArrayClose(F.real, scipy.linalg.hadamard(8) / np.sqrt(8))

    def test_skew_dft_entries(self):
        n = 5
        i, k = np.meshgrid(np.arange(n), np.arange(n))

        self.assertArrayClose(
            TubeTransform.skew_dft(n).matrix(),
            np.exp(-1j * np.pi * i * (2 * k + 1) / n))


class RepresentationTest(AlgebraTestCase):

    def test_dft_is_circulant(self):
        p = self.random_scalar(6)

        self.assertArrayClose(
            TubeTransform.dft(6).representation(p.coeffs),
            to_circulant(PolarScalar(p.coeffs)))

    def test_skew_circulant(self):
        # e_1 squared is -e_0 in the skew-circulant algebra of order 2
        rep = TubeTransform.skew_dft(2).representation([0.0, 1.0])

        self.assertArrayClose(rep @ rep, -np.eye(2), atol=1e-12)

    def test_walsh_hadamard_units_square_to_one(self):
        transform = TubeTransform.walsh_hadamard(4)

        for i in range(4):
            rep = transform.representation(np.eye(4)[i])
            self.assertArrayClose(rep @ rep, np.eye(4), atol=1e-12)

    def test_multiplicative(self):
        for transform in all_transforms(4):
            a = self.random_values(4, Field.COMPLEX)
            b = self.random_values(4, Field.COMPLEX)
            product = transform.inverse(
                transform.forward(a) * transform.forward(b))

            self.assertArrayClose(
                transform.representation(product),
                transform.representation(a) @ transform.representation(b))


class MirrorTest(AlgebraTestCase):

    def test_real_tubes_have_conjugate_partners(self):
        for n in (1, 2, 5, 8):
            for transform in all_transforms(n):
                spectrum = transform.forward(self.random_values(n))

                self.assertArrayClose(
                    spectrum[transform.mirror], np.conj(spectrum))

    def test_mirror_is_an_involution(self):
        transform = TubeTransform.group_dft((2, 3))

        self.assertEqual(
            transform.mirror[transform.mirror].tolist(), list(range(6)))

    def test_walsh_hadamard_is_self_mirrored(self):
        self.assertEqual(
            TubeTransform.walsh_hadamard(8).mirror.tolist(), list(range(8)))


class ConstructionTest(AlgebraTestCase):

    def test_from_name(self):
        self.assertIs(TubeTransform.from_name('dft', 3).kind,
                      TransformKind.DFT)
        self.assertIs(TubeTransform.from_name('skew-dft', 3).kind,
                      TransformKind.SKEW_DFT)
        self.assertIs(TubeTransform.from_name('wht', 4).kind,
                      TransformKind.GROUP_DFT)

    def test_unknown_name(self):
        with self.assertRaises(ParameterError):
            TubeTransform.from_name('dct', 4)

    def test_walsh_hadamard_needs_power_of_two(self):
        with self.assertRaises(ParameterError):
            TubeTransform.walsh_hadamard(6)

    def test_group_factors(self):
        with self.assertRaises(ParameterError):
            TubeTransform(TransformKind.GROUP_DFT, 6, (2, 2))
        with self.assertRaises(ParameterError):
            TubeTransform(TransformKind.GROUP_DFT, 6)
        with self.assertRaises(ParameterError):
            TubeTransform(TransformKind.DFT, 4, (2, 2))

    def test_positive_length(self):
        with self.assertRaises(ParameterError):
            TubeTransform.dft(0)

    def test_hashable(self):
        self.assertEqual(
            len({TubeTransform.dft(4), TubeTransform.dft(4)}), 1)
