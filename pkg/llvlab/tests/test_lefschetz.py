# LLVLab: Exact computations with Looijenga-Lunts-Verbitsky Lie algebras
#
# Copyright (C) 2026 LLVLab developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>

"""This module contains unit tests for :mod:`~llvlab.lefschetz`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import unittest

from llvlab import *
from llvlab.tests.test_datafiles import *

setVerbosity('none')

K3TYPE = parseDatafile('k3_type')


class TestLefschetzProperty(unittest.TestCase):

    def testIsotropicBasisVector(self):
        """Test that an isotropic class is not Lefschetz."""

        self.assertFalse(checkLefschetz(buildCupOperator(K3TYPE, [1, 0, 0])))
        self.assertTrue(checkLefschetz(buildCupOperator(K3TYPE, [0, 0, 1])))
        self.assertTrue(checkLefschetz(buildCupOperator(K3TYPE, [1, 1, 0])))

    def testWrongDegree(self):
        """Test that operators of degree other than 2 are rejected."""

        self.assertRaises(WrongDegree, checkLefschetz,
                          buildHOperator(K3TYPE))

    def testLocus(self):
        """Test the Lefschetz locus of the hyperbolic plane."""

        lefschetz, others = calcLefschetzLocus(getBuiltin('hyperbolic'))
        self.assertEqual(len(lefschetz), 4)
        self.assertEqual(len(others), 4)
        for x, y in lefschetz:
            self.assertNotEqual(x * y, 0)


class TestJacobsonMorozovDual(unittest.TestCase):

    def testK3TypeDual(self):
        """Test the dual of a class of square -2."""

        e = buildCupOperator(K3TYPE, [0, 0, 1])
        f = calcJacobsonMorozovDual(e)
        self.assertEqual(f.getDegree(), -2)
        top = RationalMatrix([0, 0, 0, 0, 1])
        self.assertEqual(f.apply(top), RationalMatrix([0, 0, 0, -1, 0]))
        self.assertEqual(f.apply(RationalMatrix([0, 0, 0, 1, 0])),
                         RationalMatrix([2, 0, 0, 0, 0]))
        self.assertTrue(f.apply(RationalMatrix([0, 1, 0, 0, 0])).isZero())

    def testNotLefschetz(self):
        """Test that isotropic classes have no dual."""

        e = buildCupOperator(K3TYPE, [1, 0, 0])
        self.assertRaises(NotLefschetz, calcJacobsonMorozovDual, e)

    def testSampledTriples(self):
        """Test sl2 relations for sampled Lefschetz classes of several
        algebras."""

        algebras = [(K3TYPE, 20), (getBuiltin('k3type:4'), 20),
                    (getBuiltin('quaternion'), 10)]
        total = 0
        for algebra, count in algebras:
            classes = sampleClasses(algebra, count, seed=20130)
            self.assertEqual(len(classes), count)
            for element in classes:
                triple = buildSl2Triple(algebra, element)
                self.assertTrue(triple.checkRelations())
                total += 1
        self.assertEqual(total, 50)

    def testSampledIsotropic(self):
        """Test that sampled isotropic classes raise NotLefschetz."""

        q = QuadraticSpace(DATA_FILES['k3_type']['gram'])
        classes = sampleClasses(K3TYPE, 10, seed=1, isotropic=True)
        self.assertEqual(len(classes), 10)
        for element in classes:
            self.assertEqual(q(element), 0)
            self.assertRaises(NotLefschetz, buildSl2Triple, K3TYPE, element)

    def testBadTriple(self):
        """Test that triples with wrong degrees are rejected."""

        e = buildCupOperator(K3TYPE, [0, 0, 1])
        h = buildHOperator(K3TYPE)
        self.assertRaises(WrongDegree, Sl2Triple, h, h, e)


class TestLLVGenerators(unittest.TestCase):

    def testLefschetzBasis(self):
        """Test the Lefschetz basis of the K3-type algebra."""

        basis = findLefschetzBasis(K3TYPE)
        self.assertEqual(basis, [RationalMatrix([0, 0, 1]),
                                 RationalMatrix([1, 1, 0]),
                                 RationalMatrix([1, -1, 0])])

    def testNoDegreeTwo(self):
        """Test that algebras without degree 2 are rejected."""

        space = GradedVectorSpace([(0, 1)], 0)
        algebra = GradedFrobeniusAlgebra(space, {(0, 0): [[[1]]]}, [1], [1])
        self.assertRaises(WrongDegree, findLefschetzBasis, algebra)

    def testLLVAlgebra(self):
        """Test dimension and grading of the K3-type LLV algebra."""

        llv = calcLLVAlgebra(K3TYPE)
        self.assertEqual(llv.getDim(), 10)
        self.assertEqual(llv.getDegreeDims(), {-2: 3, 0: 4, 2: 3})
        self.assertTrue(llv.checkClosed())
        self.assertTrue(llv.getTitle().startswith('LLV algebra of'))


if __name__ == '__main__':
    unittest.main()
