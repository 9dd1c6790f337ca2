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
import unittest

from hypothesis import given, settings
import hypothesis.strategies as st

from lockss.pso.exact_math import ExactMatrix, QSqrt2, SQRT2
from lockss.pso.graded_algebra import BLOCK_I, BLOCK_J, EVEN, Grade, MINUS, MIXED, PARABOSON, PARABOSON_FAMILY, PARAFERMION, PARAFERMION_FAMILY, PLUS, RELATIVE_PARABOSON, RELATIVE_PARAFERMION, AlgebraElement, WeightVector, adjoint_weight, axiom_check, block_constraints_check, block_space_dim, bracket_closure_dim, canonical_basis, cartan_h, generator, generator_expansion, generators, gl_E, gl_relation_check, graded_bracket, matrix_unit, parse_sign, position_grade, relation_check, structure_constants, triple_relation_rhs, vacuum_weight


RANK_2_BASIS = canonical_basis(2)


class TestGrades(unittest.TestCase):

    def test_addition_and_dot(self):
        self.assertEqual(MIXED, PARAFERMION + PARABOSON)
        self.assertEqual(EVEN, PARAFERMION + PARAFERMION)
        self.assertEqual(0, PARAFERMION.dot(PARAFERMION))
        self.assertEqual(1, PARABOSON.dot(PARAFERMION))
        self.assertEqual(-1, MIXED.sign(MIXED))
        self.assertEqual(Grade(1, 0), Grade(3, 2))

    def test_position_grade(self):
        self.assertEqual(PARAFERMION, position_grade(-2, 0))
        self.assertEqual(PARABOSON, position_grade(0, 2))
        self.assertEqual(MIXED, position_grade(-1, 1))
        self.assertEqual(EVEN, position_grade(-1, -2))
        self.assertRaises(ValueError, position_grade, 0, 0)

    def test_block_forms(self):
        i, j = ExactMatrix.from_rows(BLOCK_I), ExactMatrix.from_rows(BLOCK_J)
        self.assertEqual(ExactMatrix.identity(2), i @ i)
        self.assertEqual(-ExactMatrix.identity(2), j @ j)

    def test_parse_sign(self):
        self.assertEqual(PLUS, parse_sign('+'))
        self.assertEqual(MINUS, parse_sign('minus'))
        self.assertRaisesRegex(ValueError, 'invalid sign', parse_sign, 0)


class TestAlgebraElement(unittest.TestCase):

    def test_rejects_origin_entry(self):
        self.assertRaisesRegex(ValueError, r'\(0,0\) entry', AlgebraElement, {(0, 0): 1})

    def test_minimal_rank(self):
        self.assertEqual(2, matrix_unit(3, -1).get_rank())
        self.assertEqual(1, AlgebraElement().get_rank())
        self.assertRaises(ValueError, matrix_unit, 3, -1, 1)

    def test_grade_inference(self):
        self.assertEqual(PARAFERMION, matrix_unit(-2, 0).get_grade())
        self.assertFalse((generator(1, PLUS) + generator(-1, PLUS)).is_homogeneous())
        self.assertRaises(ValueError, AlgebraElement, {(1, 0): 1}, None, PARAFERMION)

    def test_embedding_keeps_entries(self):
        x = generator(1, PLUS)
        self.assertEqual(x, x.embed(3))
        self.assertEqual(3, x.embed(3).get_rank())
        self.assertRaises(ValueError, x.embed(2).embed, 1)


class TestGenerators(unittest.TestCase):

    def test_parafermion(self):
        self.assertEqual({(-2, 0): SQRT2, (0, -1): -SQRT2}, generator(-1, PLUS).entries())
        self.assertEqual(PARAFERMION, generator(-1, PLUS).get_grade())

    def test_paraboson(self):
        self.assertEqual({(0, 1): SQRT2, (2, 0): -SQRT2}, generator(1, MINUS).entries())
        self.assertEqual({(0, 4): SQRT2, (3, 0): SQRT2}, generator(2, PLUS).entries())
        self.assertEqual(PARABOSON, generator(2, PLUS).get_grade())
        self.assertEqual(2, generator(2, PLUS).get_rank())

    def test_zero_mode(self):
        self.assertRaisesRegex(ValueError, 'invalid mode index', generator, 0, PLUS)

    def test_generators_satisfy_block_constraints(self):
        for x in generators(2):
            self.assertTrue(block_constraints_check(x, 2), x)


class TestBracket(unittest.TestCase):

    def test_paraboson_anticommutator(self):
        expected = AlgebraElement({(1, 1): 2, (2, 2): -2})
        self.assertEqual(expected, graded_bracket(generator(1, MINUS), generator(1, PLUS)))

    def test_cartan(self):
        self.assertEqual(AlgebraElement({(1, 1): 1, (2, 2): -1}), cartan_h(1))
        self.assertEqual(AlgebraElement({(-2, -2): 1, (-1, -1): -1}), cartan_h(-1))
        for i in (-2, -1, 1, 2):
            self.assertEqual(QSqrt2(), cartan_h(i).trace())

    def test_root_vector(self):
        self.assertEqual(generator(1, PLUS), graded_bracket(cartan_h(1), generator(1, PLUS)))

    def test_even_self_bracket(self):
        self.assertTrue(graded_bracket(cartan_h(1), cartan_h(1)).is_zero())

    def test_requires_homogeneous(self):
        mixed = generator(1, PLUS) + generator(-1, PLUS)
        self.assertRaises(TypeError, graded_bracket, mixed, generator(1, PLUS))

    def test_generator_brackets_are_rational(self):
        gens = generators(2)
        for x in gens:
            for y in gens:
                self.assertTrue(graded_bracket(x, y).is_rational())

    def test_embedding_commutes_with_bracket(self):
        x, y = generator(1, PLUS), generator(-1, MINUS)
        self.assertEqual(graded_bracket(x, y), graded_bracket(x.embed(3), y))
        self.assertEqual(3, graded_bracket(x.embed(3), y).get_rank())

    @given(st.sampled_from(RANK_2_BASIS), st.sampled_from(RANK_2_BASIS))
    @settings(max_examples=100, deadline=None)
    def test_bracket_stays_in_algebra(self, x, y):
        self.assertTrue(block_constraints_check(graded_bracket(x[1], y[1]), 2))


class TestBlockConstraints(unittest.TestCase):

    def test_zero(self):
        self.assertTrue(block_constraints_check(AlgebraElement()))

    def test_j_type_failure(self):
        verdict = block_constraints_check(matrix_unit(1, 1))
        self.assertFalse(verdict)
        self.assertEqual('J', verdict.get_details()['family'])
        self.assertEqual([1, 1], verdict.get_details()['blocks'])

    def test_i_type_failure(self):
        verdict = block_constraints_check(matrix_unit(-2, -2))
        self.assertFalse(verdict)
        self.assertEqual('I', verdict.get_details()['family'])

    def test_block_space_dim(self):
        self.assertEqual(12, block_space_dim(1))
        self.assertEqual(40, block_space_dim(2))


class TestClosure(unittest.TestCase):

    def test_generators_alone(self):
        for n in (1, 2):
            self.assertEqual(4 * n, bracket_closure_dim(n, generators_only=True))

    def test_closure_dimension(self):
        self.assertEqual(12, bracket_closure_dim(1))
        self.assertEqual(40, bracket_closure_dim(2))
        self.assertEqual(84, bracket_closure_dim(3))

    def test_canonical_basis(self):
        self.assertEqual(12, len(canonical_basis(1)))
        self.assertEqual(40, len(RANK_2_BASIS))
        names = [name for name, x in canonical_basis(1)]
        self.assertIn('f(-1,+)', names)
        self.assertIn('P(1,1,-)', names)
        self.assertNotIn('P(-1,-1,+)', names)

    def test_structure_constants(self):
        table = structure_constants(1)
        self.assertEqual(144, len(table))
        entry = next(e for e in table if e['x'] == 'b(1,-)' and e['y'] == 'b(1,+)')
        self.assertEqual([{'basis': 'h(1)', 'coeff': {'a': '2', 'b': '0'}}], entry['bracket'])


class TestAxioms(unittest.TestCase):

    def test_exhaustive_rank_1(self):
        verdict = axiom_check(1)
        self.assertTrue(verdict, verdict.get_message())
        self.assertEqual(12 ** 3, verdict.get_details()['checked'])
        self.assertEqual('exhaustive', verdict.get_details()['mode'])

    def test_random_triples(self):
        for n in (2, 3):
            verdict = axiom_check(n, samples=200, seed=7)
            self.assertTrue(verdict, verdict.get_message())
            self.assertEqual('random', verdict.get_details()['mode'])

    def test_gl_relations(self):
        verdict = gl_relation_check(2)
        self.assertTrue(verdict, verdict.get_message())
        self.assertEqual(4 ** 4, verdict.get_details()['checked'])

    def test_gl_grades(self):
        self.assertEqual(MIXED, gl_E(1, -1).get_grade())
        self.assertEqual(EVEN, gl_E(1, 2).get_grade())
        self.assertEqual(cartan_h(2), gl_E(2, 2))


class TestRelations(unittest.TestCase):

    def test_families_hold_at_rank_2(self):
        for family in (PARAFERMION_FAMILY, PARABOSON_FAMILY, RELATIVE_PARABOSON):
            report = relation_check(family, 2)
            self.assertTrue(report.is_ok(), report.get_counterexample())
            self.assertGreater(report.get_passed(), 0)

    def test_relative_parafermion_fails(self):
        report = relation_check(RELATIVE_PARAFERMION, 1)
        self.assertFalse(report)
        self.assertGreater(report.get_failed(), 0)
        self.assertEqual([-1, 1, -1], report.get_counterexample()['modes'])

    def test_paraboson_closed_form(self):
        self.assertEqual(((1, PLUS, Fraction(-4)),), triple_relation_rhs(1, '+', 1, '+', 1, '-', PARABOSON_FAMILY))
        x = graded_bracket(graded_bracket(generator(1, PLUS), generator(1, PLUS)), generator(1, MINUS))
        self.assertEqual(((1, PLUS, Fraction(-4)),), generator_expansion(x))

    def test_unknown_family(self):
        self.assertRaisesRegex(ValueError, 'unknown relation family', relation_check, 'anyon', 1)

    def test_expansion_refuses_non_generators(self):
        self.assertRaises(ValueError, generator_expansion, cartan_h(1))


class TestWeights(unittest.TestCase):

    def test_generator_weights(self):
        self.assertEqual(WeightVector({1: 1}), adjoint_weight(generator(1, PLUS)))
        self.assertEqual(WeightVector({-1: -1}), adjoint_weight(generator(-1, MINUS)))
        self.assertEqual(WeightVector(), adjoint_weight(cartan_h(1)))
        self.assertEqual(WeightVector({-2: 1, 1: -1}), adjoint_weight(gl_E(-2, 1)))

    def test_non_eigenvector(self):
        self.assertRaisesRegex(ValueError, r'h\(1\)', adjoint_weight, generator(1, PLUS) + generator(1, MINUS))
        self.assertRaises(ValueError, adjoint_weight, AlgebraElement())

    def test_vacuum_weight(self):
        self.assertEqual(WeightVector({-1: -1, 1: 1}), vacuum_weight(1, 2))
        self.assertEqual('-1:-1/2,1:1/2', str(vacuum_weight(1, 1)))

    def test_parse(self):
        self.assertEqual(vacuum_weight(2, 3), WeightVector.parse(str(vacuum_weight(2, 3))))
        self.assertEqual(WeightVector(), WeightVector.parse(''))
        self.assertRaises(ValueError, WeightVector.parse, '0:1')
        self.assertRaises(ValueError, WeightVector.parse, '1')
