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

"""This module contains unit tests for :mod:`~llvlab.exactla`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import unittest
from fractions import Fraction

import numpy as np
from numpy.testing import assert_equal

from llvlab import *
from llvlab.exactla.rational import INT64_BOUND

setVerbosity('none')


class TestRationalMatrix(unittest.TestCase):

    def testParseStrings(self):
        """Test parsing of integers and "p/q" strings."""

        matrix = RationalMatrix([[1, '1/2'], [0, '-2/4']])
        self.assertEqual(matrix.getDenominator(), 2)
        assert_equal(matrix.getNumerators(), [[2, 1], [0, -1]])
        self.assertEqual(matrix[1, 1], Fraction(-1, 2))

    def testRejectFloats(self):
        """Test that floating point input is rejected."""

        self.assertRaises(TypeError, RationalMatrix, [0.5, 1])
        self.assertRaises(TypeError, RationalMatrix, np.ones(2))
        self.assertRaises(ValueError, toFraction, '1/0')

    def testArithmetic(self):
        """Test sums, differences and scalar products."""

        a = RationalMatrix([['1/2', 1], [0, 2]])
        b = RationalMatrix([['1/2', 0], [1, 0]])
        self.assertEqual(a + b, RationalMatrix([[1, 1], [1, 2]]))
        self.assertEqual(a - a, RationalMatrix.zeros((2, 2)))
        self.assertEqual(a * 2, RationalMatrix([[1, 2], [0, 4]]))
        self.assertEqual(a / 2, RationalMatrix([['1/4', '1/2'], [0, 1]]))
        self.assertTrue((a - a).isZero())

    def testDot(self):
        """Test matrix products and scalar results."""

        a = RationalMatrix([[1, 2], [3, 4]])
        self.assertEqual(a @ RationalMatrix.identity(2), a)
        self.assertEqual(RationalMatrix([1, 2]) @ RationalMatrix([3, 4]),
                         Fraction(11))
        self.assertEqual(a.T, RationalMatrix([[1, 3], [2, 4]]))
        self.assertEqual(a.trace(), Fraction(5))

    def testLargeEntries(self):
        """Test promotion to Python integers beyond int64."""

        big = RationalMatrix([[INT64_BOUND, 1], [1, 0]])
        square = big @ big
        self.assertEqual(square[0, 0], Fraction(INT64_BOUND ** 2 + 1))
        self.assertEqual(big.rank(), 2)

    def testInverse(self):
        """Test exact inverse and singular matrices."""

        a = RationalMatrix([[2, 1], [1, 1]])
        self.assertEqual(a.inverse(), RationalMatrix([[1, -1], [-1, 2]]))
        self.assertEqual(a @ a.inverse(), RationalMatrix.identity(2))
        self.assertRaises(ValueError, RationalMatrix([[1, 2], [2, 4]])
                          .inverse)

    def testDeterminant(self):
        """Test determinant by fraction-free elimination."""

        self.assertEqual(calcDeterminant([[0, 1], [1, 0]]), Fraction(-1))
        self.assertEqual(calcDeterminant([['1/2', 0], [0, 4]]), Fraction(2))
        self.assertEqual(calcDeterminant([[1, 2], [2, 4]]), Fraction(0))

    def testTensors(self):
        """Test transpose, reshape and Kronecker products."""

        a = RationalMatrix(np.arange(8).reshape((2, 2, 2)))
        self.assertEqual(a.transpose(1, 0, 2)[0, 1, 1], Fraction(5))
        self.assertEqual(a.reshape(4, 2).shape, (4, 2))
        kron = RationalMatrix.identity(2).kron(RationalMatrix([[0, 1],
                                                               [1, 0]]))
        self.assertEqual(kron.shape, (4, 4))
        self.assertEqual(kron[0, 1], Fraction(1))
        self.assertEqual(kron[0, 3], Fraction(0))


class TestEchelon(unittest.TestCase):

    def testOrderIndependence(self):
        """Test that the basis does not depend on insertion order."""

        rows = [[1, 2, 3, 4], [0, 1, 1, 0], [2, 5, 7, 8], [1, 0, 0, 1]]
        first = Echelon(4)
        first.add(rows)
        second = Echelon(4)
        second.add(rows[::-1])
        self.assertEqual(first.getBasis(), second.getBasis())
        self.assertEqual(first.getPivots(), second.getPivots())
        self.assertEqual(len(first), 3)

    def testAddReturnsResidues(self):
        """Test that only rows enlarging the span are returned."""

        echelon = Echelon(3)
        added = echelon.add([[1, 0, 0], [2, 0, 0], [0, 1, 0]])
        self.assertEqual(added.shape, (2, 3))
        self.assertTrue(echelon.contains([3, 4, 0]))
        self.assertFalse(echelon.contains([0, 0, 1]))

    def testCoordinates(self):
        """Test coordinates in the canonical basis."""

        echelon = Echelon(3)
        echelon.add([[1, 1, 0], [0, 1, 1]])
        coords = echelon.getCoordinates([1, 2, 1])
        self.assertEqual(coords, RationalMatrix([1, 2]))
        self.assertRaises(ValueError, echelon.getCoordinates, [0, 0, 1])


class TestLinearAlgebra(unittest.TestCase):

    def testRREF(self):
        """Test reduced row echelon form and pivots."""

        rref, pivots = calcRREF([[2, 4], [1, 2]])
        self.assertEqual(rref, RationalMatrix([[1, 2], [0, 0]]))
        self.assertEqual(pivots, [0])

    def testRREFFractions(self):
        """Test reduced row echelon form of a rational matrix."""

        rref, pivots = calcRREF([['1/2', 1, 0], [0, '1/3', 1]])
        self.assertEqual(rref, RationalMatrix([[1, 0, -6], [0, 1, 3]]))
        self.assertEqual(pivots, [0, 1])

    def testKernel(self):
        """Test kernel dimension and membership."""

        kernel = calcKernel([[1, 1, 1]])
        self.assertEqual(kernel.getDim(), 2)
        self.assertTrue(kernel.contains([[1, -1, 0], [0, 1, -1]]))
        self.assertTrue(calcKernel(RationalMatrix.identity(3)).isZero())

    def testSolve(self):
        """Test solutions and nullity."""

        x, nullity = solveLinear([[1, 1]], [2])
        self.assertEqual(nullity, 1)
        self.assertEqual(x, RationalMatrix([2, 0]))
        x, nullity = solveLinear([[2, 1], [1, 1]], ['1/2', 0])
        self.assertEqual(nullity, 0)
        self.assertEqual(x, RationalMatrix(['1/2', '-1/2']))

    def testInconsistent(self):
        """Test that inconsistent systems raise an exception."""

        self.assertRaises(Inconsistent, solveLinear, [[1, 1], [1, 1]],
                          [1, 2])


class TestSubspace(unittest.TestCase):

    def testSumAndIntersection(self):
        """Test sums and intersections of coordinate planes."""

        first = Subspace(3, [[1, 0, 0], [0, 1, 0]])
        second = Subspace(3, [[0, 1, 0], [0, 0, 1]])
        self.assertTrue((first + second).isWhole())
        self.assertEqual(first.intersect(second), Subspace(3, [0, 1, 0]))
        self.assertTrue(first.intersect(Subspace(3)).isZero())

    def testContainment(self):
        """Test subspace containment."""

        plane = Subspace(3, [[1, 1, 0], [0, 0, 1]])
        self.assertTrue(plane.containsSubspace(Subspace(3, [2, 2, 5])))
        self.assertFalse(plane.containsSubspace(Subspace(3, [1, 0, 0])))
        self.assertEqual(plane.getCoordinates([2, 2, 3]),
                         RationalMatrix([2, 3]))


class TestSignature(unittest.TestCase):

    def testHyperbolic(self):
        """Test signature of the hyperbolic plane."""

        self.assertEqual(calcSignature([[0, 1], [1, 0]]), (1, 1, 0))

    def testDegenerate(self):
        """Test signature with a kernel."""

        self.assertEqual(calcSignature(np.diag([1, -1, 0])), (1, 1, 1))
        self.assertEqual(calcSignature([['1/2', '1/2'], ['1/2', '1/2']]),
                         (1, 0, 1))

    def testNotSymmetric(self):
        """Test that asymmetric matrices raise an exception."""

        self.assertRaises(NotSymmetric, calcSignature, [[0, 1], [0, 0]])


class TestPolynomials(unittest.TestCase):

    def testMinimalPolynomial(self):
        """Test minimal polynomials of a rotation and of a scalar."""

        self.assertEqual(calcMinimalPolynomial([[0, -1], [1, 0]]),
                         [1, 0, 1])
        self.assertEqual(calcMinimalPolynomial(np.eye(3, dtype=int) * 2),
                         [-2, 1])
        self.assertEqual(calcMinimalPolynomial([[0, 1], [0, 0]]),
                         [0, 0, 1])

    def testArithmetic(self):
        """Test products and division with remainder."""

        product = multiplyPolynomials([1, 1], [-1, 1])
        self.assertEqual(product, [-1, 0, 1])
        quotient, remainder = dividePolynomials(product, [1, 1])
        self.assertEqual(quotient, [-1, 1])
        self.assertEqual(remainder, [])
        quotient, remainder = dividePolynomials([1, 0, 1], [0, 1])
        self.assertEqual(remainder, [1])

    def testFormat(self):
        """Test readable polynomial strings."""

        self.assertEqual(formatPolynomial([1, 0, 1]), 'x^2 + 1')
        self.assertEqual(formatPolynomial([0, -2]), '-2*x')
        self.assertEqual(formatPolynomial([]), '0')


if __name__ == '__main__':
    unittest.main()
