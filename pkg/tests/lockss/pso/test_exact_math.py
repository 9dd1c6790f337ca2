#!/usr/bin/env python3

# Copyright (c) 2000-2026, Board of Trustees of Leland Stanford Jr. University
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice,
# this list of conditions and the following disclaimer.
#
# 2. Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and/or other materials provided with the distribution.
#
# 3. Neither the name of the copyright holder nor the names of its contributors
# may be used to endorse or promote products derived from this software without
# specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE)
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
# POSSIBILITY OF SUCH DAMAGE.

from fractions import Fraction
import itertools
import unittest

from hypothesis import given, settings
import hypothesis.strategies as st

from lockss.pso.exact_math import ExactMatrix, POSITIVE_SEMIDEFINITE, QSqrt2, RationalEchelon, SQRT2, exact_determinant, exact_kernel, exact_rank, inverse, psd_certificate, q2_inv, q2_mul, rational, rref, solve


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)

q2_elements = st.builds(QSqrt2, small_rationals, small_rationals)


def small_matrices(nrows, ncols):
    return st.lists(st.lists(st.integers(min_value=-4, max_value=4), min_size=ncols, max_size=ncols),
                    min_size=nrows,
                    max_size=nrows).map(ExactMatrix.from_rows)


class TestRational(unittest.TestCase):

    def test_coercions(self):
        self.assertEqual(Fraction(3, 4), rational('3/4'))
        self.assertEqual(Fraction(-2), rational(-2))
        self.assertEqual(Fraction(1, 3), rational(QSqrt2(Fraction(1, 3))))

    def test_refuses_floats(self):
        self.assertRaises(TypeError, rational, 0.5)
        self.assertRaises(TypeError, rational, True)
        self.assertRaises(TypeError, rational, SQRT2)

    def test_refuses_garbage(self):
        self.assertRaisesRegex(ValueError, 'not a rational number', rational, 'one half')


class TestQSqrt2(unittest.TestCase):

    def test_sqrt2_squared(self):
        self.assertEqual(QSqrt2(2), SQRT2 * SQRT2)
        self.assertTrue((SQRT2 * SQRT2).is_rational())

    def test_mixed_product(self):
        self.assertEqual(QSqrt2(-1, 5), q2_mul(QSqrt2(1, 2), QSqrt2(3, -1)))

    def test_inverse(self):
        self.assertEqual(QSqrt2(1, Fraction(-1, 2)), q2_inv(QSqrt2(2, 1)))
        self.assertEqual(QSqrt2(1), q2_inv(SQRT2) * SQRT2)

    def test_inverse_of_zero(self):
        self.assertRaises(ZeroDivisionError, q2_inv, QSqrt2())

    def test_norm_and_conjugate(self):
        x = QSqrt2(3, 2)
        self.assertEqual(Fraction(1), x.norm())
        self.assertEqual(QSqrt2(x.norm()), x * x.conjugate())

    def test_hash_matches_fraction(self):
        self.assertEqual(hash(Fraction(5, 3)), hash(QSqrt2(Fraction(5, 3))))
        self.assertEqual(QSqrt2(4), 4)

    @given(q2_elements, q2_elements, q2_elements)
    @settings(max_examples=100, deadline=None)
    def test_field_laws(self, x, y, z):
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x - y, -(y - x))
        if not x.is_zero():
            self.assertEqual(QSqrt2(1), x * q2_inv(x))


class TestExactMatrix(unittest.TestCase):

    def test_rank_and_determinant(self):
        m = ExactMatrix.from_rows([[2, 1, 0], [4, 2, 0], [0, 0, 3]])
        self.assertEqual(2, exact_rank(m))
        self.assertEqual(Fraction(0), exact_determinant(m))
        self.assertEqual(Fraction(-3), exact_determinant(ExactMatrix.from_rows([[1, 2], [3, 3]])))

    def test_determinant_with_fractions(self):
        m = ExactMatrix.from_rows([['1/2', '1/3'], ['1/4', '1']])
        self.assertEqual(Fraction(1, 2) - Fraction(1, 12), exact_determinant(m))

    def test_rref_pivots(self):
        reduced, pivots = rref(ExactMatrix.from_rows([[1, 1, 1], [1, 1, 1], [0, 1, 2]]))
        self.assertEqual([0, 1], pivots)
        self.assertEqual([[1, 0, -1], [0, 1, 2], [0, 0, 0]], reduced.to_rows())

    def test_kernel_is_primitive(self):
        kernel = exact_kernel(ExactMatrix.from_rows([[1, 1, 1], [1, 1, 1], [0, 1, 2]]))
        self.assertEqual([[1, -2, 1]], kernel)

    def test_inverse_and_solve(self):
        m = ExactMatrix.from_rows([[2, 1], [1, 1]])
        self.assertEqual(ExactMatrix.identity(2), m @ inverse(m))
        self.assertEqual([Fraction(1), Fraction(2)], solve(m, [4, 3]))

    def test_singular_inverse(self):
        self.assertRaisesRegex(ValueError, 'singular', inverse, ExactMatrix.from_rows([[1, 2], [2, 4]]))

    def test_block_diagonal_and_transpose(self):
        m = ExactMatrix.block_diagonal([ExactMatrix.from_rows([[1]]), ExactMatrix.from_rows([[2, 3], [4, 5]])])
        self.assertEqual([[1, 0, 0], [0, 2, 3], [0, 4, 5]], m.to_rows())
        self.assertEqual([[1, 0, 0], [0, 2, 4], [0, 3, 5]], m.transpose().to_rows())

    def test_shape_mismatch(self):
        self.assertRaises(ValueError, lambda: ExactMatrix.zeros(2, 3) @ ExactMatrix.zeros(2, 3))

    @given(small_matrices(3, 4))
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, m):
        kernel = exact_kernel(m)
        self.assertEqual(4, exact_rank(m) + len(kernel))
        for v in kernel:
            self.assertTrue(all(x == 0 for x in m.apply(v)))

    @given(small_matrices(3, 3), small_matrices(3, 3))
    @settings(max_examples=60, deadline=None)
    def test_determinant_is_multiplicative(self, a, b):
        self.assertEqual(exact_determinant(a) * exact_determinant(b), exact_determinant(a @ b))


class TestPsdCertificate(unittest.TestCase):

    def test_positive_semidefinite(self):
        self.assertIs(POSITIVE_SEMIDEFINITE, psd_certificate(ExactMatrix.from_rows([[1, 1], [1, 1]])))
        self.assertTrue(psd_certificate(ExactMatrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])))

    def test_negative_diagonal(self):
        certificate = psd_certificate(ExactMatrix.from_rows([[1, 0], [0, -2]]))
        self.assertFalse(certificate)
        self.assertEqual((0, 1), certificate.get_witness())
        self.assertEqual(Fraction(-2), certificate.get_value())

    def test_indefinite_after_elimination(self):
        m = ExactMatrix.from_rows([[1, 2], [2, 1]])
        certificate = psd_certificate(m)
        self.assertFalse(certificate)
        self.assertLess(m.quadratic_form(certificate.get_witness()), 0)

    def test_zero_diagonal_coupling(self):
        m = ExactMatrix.from_rows([[0, 1], [1, 0]])
        certificate = psd_certificate(m)
        self.assertFalse(certificate)
        self.assertEqual(Fraction(-2), certificate.get_value())

    def test_requires_symmetric(self):
        self.assertRaises(ValueError, psd_certificate, ExactMatrix.from_rows([[1, 2], [0, 1]]))

    @given(small_matrices(3, 3))
    @settings(max_examples=60, deadline=None)
    def test_gram_matrices_are_psd(self, a):
        self.assertTrue(psd_certificate(a.transpose() @ a))

    @given(small_matrices(3, 3))
    @settings(max_examples=60, deadline=None)
    def test_witness_is_negative(self, a):
        m = a + a.transpose()
        certificate = psd_certificate(m)
        if not certificate:
            self.assertLess(m.quadratic_form(certificate.get_witness()), 0)

    @given(st.integers(min_value=1, max_value=6).flatmap(lambda size: small_matrices(size, size)),
           st.integers(min_value=0, max_value=5),
           st.sampled_from([-1, 0, 1]))
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_principal_minors(self, a, index, shift):
        rows = (a.transpose() @ a).to_rows()
        size = len(rows)
        rows[index % size][index % size] += shift
        m = ExactMatrix.from_rows(rows)
        minors = [exact_determinant(m.submatrix(list(indices)))
                  for k in range(1, size + 1) for indices in itertools.combinations(range(size), k)]
        self.assertEqual(all(minor >= 0 for minor in minors), bool(psd_certificate(m)))


class TestRationalEchelon(unittest.TestCase):

    def test_add_and_decompose(self):
        echelon = RationalEchelon()
        self.assertTrue(echelon.add({'x': 1, 'y': 1}, 'a'))
        self.assertTrue(echelon.add({'y': 2}, 'b'))
        self.assertFalse(echelon.add({'x': 2, 'y': 4}, 'c'))
        self.assertEqual(2, len(echelon))
        self.assertEqual({'a': Fraction(2), 'b': Fraction(1)}, echelon.decompose({'x': 2, 'y': 4}))

    def test_outside_span(self):
        echelon = RationalEchelon()
        echelon.add({'x': 1})
        self.assertFalse(echelon.contains({'y': 1}))
        self.assertRaises(ValueError, echelon.decompose, {'y': 1})
