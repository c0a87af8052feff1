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

"""This module contains unit tests for :mod:`~llvlab.rep`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import os
import unittest
from unittest import mock

from numpy.testing import assert_equal

from llvlab import *
from llvlab.tests.test_datafiles import *

setVerbosity('none')

K3TYPE = parseDatafile('k3_type')
LLV = calcLLVAlgebra(K3TYPE)
MODEL = buildQuaternionModel()


class TestPrimitiveSubspace(unittest.TestCase):

    def testK3Type(self):
        """Test that the primitive subspace is spanned by the unit."""

        prim = calcPrimitiveSubspace(LLV)
        self.assertEqual(prim, Subspace(5, K3TYPE.getUnitVector()))
        self.assertTrue(checkStability(prim, LLV.getDegreeOperators(0)))
        self.assertFalse(checkStability(prim, LLV.getDegreeOperators(2)))

    def testNoLowering(self):
        """Test that without degree -2 operators everything is primitive."""

        h = LieOperatorAlgebra(K3TYPE.getSpace(), [buildHOperator(K3TYPE)])
        self.assertTrue(calcPrimitiveSubspace(h).isWhole())


class TestGeneratedSubmodule(unittest.TestCase):

    def testUnitGenerates(self):
        """Test that the unit generates the K3-type algebra."""

        module = calcGeneratedSubmodule(LLV, K3TYPE.getUnitVector())
        self.assertTrue(module.isWhole())

    def testInvariantLine(self):
        """Test that a line stable under all operators is returned as is."""

        h = buildHOperator(K3TYPE)
        unit = K3TYPE.getUnitVector()
        module = calcGeneratedSubmodule([h], unit)
        self.assertEqual(module.getDim(), 1)
        self.assertTrue(calcGeneratedSubmodule([], unit).contains(unit))

    def testVerbitskySubring(self):
        """Test subrings generated in degree 2."""

        self.assertTrue(calcVerbitskySubring(K3TYPE).isWhole())
        subring = calcVerbitskySubring(MODEL.getAlgebra())
        self.assertEqual(subring.getDim(), 8)
        space = MODEL.getSpace()
        pivots = subring.getPivots()
        for degree, dim in ((0, 1), (1, 0), (2, 6), (3, 0), (4, 1)):
            piece = space.getSlice(degree)
            self.assertEqual(sum(1 for p in pivots
                                 if piece.start <= p < piece.stop), dim)


class TestWeilParity(unittest.TestCase):

    def testWeilCommutators(self):
        """Test that Weil commutators pass and h fails."""

        for first, second in (('I', 'J'), ('J', 'K'), ('I', 'K')):
            self.assertTrue(checkWeilParity(
                calcWeilCommutator(MODEL, first, second)))
        h = buildHOperator(MODEL.getSpace())
        self.assertFalse(checkWeilParity(h))
        report = dict((degree, (poly, passed)) for degree, poly, passed
                      in calcWeilParity(h))
        self.assertEqual(report[0], ('x + 2', False))
        self.assertEqual(report[2], ('x', True))

    def testWrongDegree(self):
        """Test that operators of nonzero degree are rejected."""

        self.assertRaises(WrongDegree, calcWeilParity,
                          MODEL.getTriple('I').getE())


class TestWeilOperator(unittest.TestCase):

    def testRotation(self):
        """Test that [e_a, f_b] rotates an orthogonal positive plane."""

        algebra = getBuiltin('k3type:4')
        weil = calcWeilOperator(algebra, [0, 0, 1, 0], [0, 0, 0, 1])
        self.assertEqual(weil.getDegree(), 0)
        block = weil.getBlock(2)
        assert_equal(block.dot(RationalMatrix([0, 0, 1, 0])).getArray(),
                     [0, 0, 0, -2])
        assert_equal(block.dot(RationalMatrix([0, 0, 0, 1])).getArray(),
                     [0, 0, 2, 0])
        assert_equal(block.dot(RationalMatrix([1, 0, 0, 0])).getArray(),
                     [0, 0, 0, 0])
        self.assertTrue(checkWeilParity(weil))
        self.assertTrue(calcLLVAlgebra(algebra).contains(weil))

    def testNotLefschetz(self):
        """Test that isotropic classes are rejected."""

        algebra = getBuiltin('k3type:4')
        self.assertRaises(NotLefschetz, calcWeilOperator, algebra,
                          [1, 0, 0, 0], [0, 0, 1, 0])


class TestIrreducibilityWitness(unittest.TestCase):

    def testPassed(self):
        """Test the witness on the K3-type algebra."""

        record = checkIrreducibilityWitness(LLV, samples=5, seed=3)
        self.assertTrue(record.isPassed())
        self.assertEqual(record.getLabel(), 'witness passed')
        self.assertEqual(record.toDict(),
                         {'label': 'witness passed', 'seed': 3,
                          'basis_vectors': 5, 'samples': 5, 'failures': []})

    def testFailed(self):
        """Test the witness on the reducible exterior algebra."""

        closure = calcLLVAlgebra(MODEL.getAlgebra(),
                                 [MODEL.getTriple(name)
                                  for name in QUATERNIONS])
        record = checkIrreducibilityWitness(closure, samples=2, seed=3)
        self.assertFalse(record.isPassed())
        self.assertIn('basis 0', record.getFailures())
        self.assertEqual(record.getLabel(), 'witness failed')

    def testDeterminism(self):
        """Test that equal seeds give equal records."""

        first = checkIrreducibilityWitness(LLV, samples=3, seed=11)
        second = checkIrreducibilityWitness(LLV, samples=3, seed=11)
        self.assertEqual(first.toDict(), second.toDict())

    def testEnvironmentSeed(self):
        """Test that the seed is read from the environment."""

        with mock.patch.dict(os.environ, {'LLV_LAB_SEED': '7'}):
            record = checkIrreducibilityWitness(LLV, samples=1)
        self.assertEqual(record.getSeed(), 7)
        with mock.patch.dict(os.environ, {'LLV_LAB_SEED': 'seven'}):
            self.assertRaises(ValueError, checkIrreducibilityWitness, LLV, 1)


if __name__ == '__main__':
    unittest.main()
