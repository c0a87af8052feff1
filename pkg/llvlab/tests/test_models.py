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

"""This module contains unit tests for :mod:`~llvlab.models`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import unittest
from math import comb

import numpy as np

from llvlab import *
from llvlab.tests.test_datafiles import *

setVerbosity('none')

MODEL = buildQuaternionModel()


class TestQuaternionicExteriorModel(unittest.TestCase):

    def testSpace(self):
        """Test dimensions of the exterior algebra."""

        space = MODEL.getSpace()
        self.assertEqual(len(space), 16)
        self.assertEqual(space.getShift(), 2)
        for k in range(5):
            self.assertEqual(space.getDim(k), comb(4, k))
        self.assertEqual(validateAlgebra(MODEL.getAlgebra()), [])

    def testQuaternionRelations(self):
        """Test I^2 = J^2 = K^2 = IJK = -1."""

        minus = RationalMatrix.identity(4) * -1
        i, j, k = [MODEL.getQuaternion(name) for name in QUATERNIONS]
        self.assertEqual(i @ i, minus)
        self.assertEqual(j @ j, minus)
        self.assertEqual(k @ k, minus)
        self.assertEqual(i @ j @ k, minus)

    def testOmegas(self):
        """Test coordinates of the Kahler forms."""

        self.assertEqual(MODEL.getOmega('I'),
                         RationalMatrix([1, 0, 0, 0, 0, 1]))
        self.assertEqual(MODEL.getOmega('j'),
                         RationalMatrix([0, 1, 0, 0, -1, 0]))
        self.assertEqual(MODEL.getOmega('K'),
                         RationalMatrix([0, 0, 1, 1, 0, 0]))
        self.assertRaises(ValueError, MODEL.getOmega, 'L')

    def testRankTwo(self):
        """Test dimensions for rank 2."""

        model = QuaternionicExteriorModel(2)
        self.assertEqual(len(model.getAlgebra()), 256)
        self.assertEqual(model.getSpace().getShift(), 4)
        self.assertEqual(model.getSpace().getDim(4), 70)


class TestHodgeStar(unittest.TestCase):

    def testVolume(self):
        """Test that the star of 1 is the volume form."""

        unit = MODEL.getAlgebra().getUnitVector()
        volume = np.zeros(16, dtype=int)
        volume[15] = 1
        self.assertEqual(calcHodgeStar(MODEL, unit), RationalMatrix(volume))

    def testSquare(self):
        """Test that star squares to (-1)^k on degree k."""

        star = MODEL.getStar()
        square = (star @ star).getNumerators()
        degrees = MODEL.getSpace().getDegreeArray()
        expected = np.diag([(-1) ** (k * (4 - k)) for k in degrees])
        np.testing.assert_equal(square, expected)

    def testNotHomogeneous(self):
        """Test that mixed elements are rejected."""

        element = np.zeros(16, dtype=int)
        element[0] = element[15] = 1
        self.assertRaises(NotHomogeneous, calcHodgeStar, MODEL, element)


class TestMetricTriples(unittest.TestCase):

    def testRelations(self):
        """Test sl2 relations of the metric triples."""

        for name in QUATERNIONS:
            triple = MODEL.getTriple(name)
            self.assertTrue(triple.checkRelations())
            self.assertTrue(checkLefschetz(triple.getE()))

    def testJacobsonMorozov(self):
        """Test that the metric dual is the Jacobson-Morozov dual."""

        for name in QUATERNIONS:
            triple = MODEL.getTriple(name)
            self.assertEqual(calcJacobsonMorozovDual(triple.getE()),
                             triple.getF())

    def testQuaternionRelations(self):
        """Test all bracket relations of the hyperkahler triples."""

        results = checkQuaternionRelations(MODEL)
        self.assertEqual(len(results), 45)
        failed = [relation for relation, passed in results if not passed]
        self.assertEqual(failed, [])

    def testWeilCommutator(self):
        """Test degree and antisymmetry of Weil commutators."""

        first = calcWeilCommutator(MODEL, 'I', 'J')
        self.assertEqual(first.getDegree(), 0)
        self.assertEqual(calcWeilCommutator(MODEL, 'J', 'I'), -first)
        self.assertRaises(EqualIndices, calcWeilCommutator, MODEL, 'K', 'k')


class TestLattices(unittest.TestCase):

    def testE8(self):
        """Test that E8(-1) is negative definite and unimodular."""

        e8 = buildE8Lattice()
        self.assertEqual(e8.getSignature(), (0, 8, 0))
        self.assertEqual(calcDeterminant(e8.getGram()), 1)

    def testK3Lattice(self):
        """Test signature and determinant of the K3 lattice."""

        k3 = buildK3Lattice()
        self.assertEqual(len(k3), 22)
        self.assertEqual(k3.getSignature(), (3, 19, 0))
        self.assertEqual(calcDeterminant(k3.getGram()), -1)
        self.assertEqual(k3.getTitle(), 'K3 lattice')

    def testStandardForm(self):
        """Test standard forms of small rank."""

        self.assertEqual(buildStandardForm(5).getSignature(), (4, 1, 0))
        self.assertEqual(buildStandardForm(1).getGram(),
                         RationalMatrix([[1]]))
        self.assertRaises(ValueError, buildStandardForm, 0)


class TestK3TypeAlgebra(unittest.TestCase):

    def testDataFile(self):
        """Test that the data file is the K3-type algebra of U + <-2>."""

        q = QuadraticSpace(DATA_FILES['k3_type']['gram'])
        algebra = buildK3TypeAlgebra(q)
        self.assertEqual(algebra, parseDatafile('k3_type'))
        self.assertEqual(validateAlgebra(algebra), [])

    def testDegenerate(self):
        """Test that degenerate forms are rejected."""

        self.assertRaises(Degenerate, buildK3TypeAlgebra, [[1, 1], [1, 1]])


class TestBuiltins(unittest.TestCase):

    def testNames(self):
        """Test built-in model names."""

        self.assertEqual(len(getBuiltin('quaternion')), 16)
        self.assertEqual(len(getBuiltin('hyperbolic')), 4)
        self.assertEqual(len(getBuiltin('K3type:5')), 7)
        self.assertEqual(len(getBuiltin('k3')), 24)
        verbitsky = getBuiltin('verbitsky:4:2')
        self.assertEqual(dict(verbitsky.getSpace().getComponents()),
                         {0: 1, 2: 4, 4: 10, 6: 4, 8: 1})

    def testUnknown(self):
        """Test that unknown names raise an exception."""

        self.assertRaises(ValueError, getBuiltin, 'torus')
        self.assertRaises(ValueError, getBuiltin, 'k3type:0')
        self.assertRaises(ValueError, getBuiltin, 'verbitsky:3')
        self.assertRaises(TypeError, getBuiltin, 3)


if __name__ == '__main__':
    unittest.main()
