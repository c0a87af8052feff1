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

"""This module contains unit tests for :mod:`~llvlab.liealg`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import json
import unittest
from fractions import Fraction

import numpy as np

from llvlab import *
from llvlab.tests.test_datafiles import *

setVerbosity('none')

K3TYPE = parseDatafile('k3_type')
TRIPLE = buildSl2Triple(K3TYPE, [0, 0, 1])
LLV = calcLLVAlgebra(K3TYPE)


class TestQuadraticSpace(unittest.TestCase):

    def testValues(self):
        """Test values and signature of the hyperbolic plane."""

        q = QuadraticSpace([[0, 1], [1, 0]])
        self.assertEqual(q([1, 1]), Fraction(2))
        self.assertEqual(q([1, 0], [0, 3]), Fraction(3))
        self.assertEqual(q.getSignature(), (1, 1, 0))
        self.assertEqual(q.getInverse(), RationalMatrix([[0, 1], [1, 0]]))

    def testDegenerate(self):
        """Test that degenerate and asymmetric forms are detected."""

        q = QuadraticSpace([[1, 1], [1, 1]])
        self.assertFalse(q.isNondegenerate())
        self.assertRaises(Degenerate, q.checkNondegenerate)
        self.assertRaises(NotSymmetric, QuadraticSpace, [[0, 1], [2, 0]])

    def testGramFile(self):
        """Test the Gram matrix data file."""

        with open(DATA_FILES['gram_u_e']['path']) as inp:
            document = json.load(inp)
        q = QuadraticSpace(document['gram'], document.get('name'))
        self.assertEqual(len(q), DATA_FILES['gram_u_e']['rank'])
        self.assertEqual(q.getSignature(),
                         DATA_FILES['gram_u_e']['signature'])

    def testMukaiExtension(self):
        """Test the Mukai extension of the hyperbolic plane."""

        mukai = calcMukaiExtension(buildHyperbolicPlane())
        self.assertEqual(len(mukai), 4)
        self.assertEqual(mukai.getSignature(), (2, 2, 0))
        self.assertIn('Mukai', mukai.getTitle())

    def testWedgeOperator(self):
        """Test that wedge operators are skew."""

        q = buildStandardForm(4)
        wedge = calcWedgeOperator(q, [1, 0, 0, 1], [0, 1, 2, 0])
        self.assertFalse(wedge.isZero())
        self.assertTrue(checkInfinitesimalInvariance(wedge, q))
        self.assertTrue(calcWedgeOperator(q, [1, 0, 0, 0],
                                          [2, 0, 0, 0]).isZero())

    def testIsotropicVectors(self):
        """Test isotropic vectors of the hyperbolic plane."""

        found = findIsotropicVectors(buildHyperbolicPlane(), 1, None)
        self.assertEqual(found, [RationalMatrix([0, 1]),
                                 RationalMatrix([1, 0])])
        self.assertEqual(findIsotropicVectors(QuadraticSpace([[1]])), [])

    def testPositivePlane(self):
        """Test orthogonal pairs of equal positive squares."""

        a, b = findPositivePlane(buildStandardForm(4))
        self.assertEqual(a, RationalMatrix([0, 0, 1, 0]))
        self.assertEqual(b, RationalMatrix([0, 0, 0, 1]))
        a, b = findPositivePlane(QuadraticSpace([[0, 1], [1, 0]]).directSum(
            QuadraticSpace([[2]])))
        self.assertEqual(a, RationalMatrix([0, 0, 1]))
        self.assertEqual(b, RationalMatrix([1, 1, 0]))
        self.assertIsNone(findPositivePlane(buildHyperbolicPlane()))

    def testHyperbolicPlane(self):
        """Test isotropic pairs found from basis vectors."""

        q = buildStandardForm(5)
        u, v = findHyperbolicPlane(q)
        self.assertEqual(list(u.getArray()), [1, 0, 0, 0, 0])
        self.assertEqual(list(v.getArray()), [0, 1, 0, 0, 0])
        q = QuadraticSpace([[1, 0], [0, -1]])
        u, v = findHyperbolicPlane(q)
        self.assertEqual((q(u), q(v)), (0, 0))
        self.assertNotEqual(q(u, v), 0)
        self.assertIsNone(findHyperbolicPlane(QuadraticSpace([[1]])))

    def testIsotropicBasis(self):
        """Test isotropic vectors that span the space."""

        q = buildStandardForm(5)
        basis = findIsotropicBasis(q)
        self.assertEqual(len(basis), 5)
        for vector in basis:
            self.assertEqual(q(vector), 0)
        span = Subspace(5, np.array([v.getArray() for v in basis]))
        self.assertTrue(span.isWhole())
        self.assertEqual(list(basis[2].getArray()),
                         [Fraction(-1, 2), 1, 1, 0, 0])

    def testDefiniteForms(self):
        """Test that definite forms of rank 22 have no isotropic search."""

        q = QuadraticSpace(np.eye(22, dtype=int))
        self.assertEqual(findIsotropicVectors(q, 1, None), [])
        self.assertIsNone(findHyperbolicPlane(q))
        self.assertEqual(findIsotropicBasis(q), [])


class TestLieClosure(unittest.TestCase):

    def testSl2(self):
        """Test that one triple generates sl2."""

        sl2 = calcLieClosure([TRIPLE.getE(), TRIPLE.getF()])
        self.assertEqual(sl2.getDim(), 3)
        self.assertEqual(sl2.getDegreeDims(), {-2: 1, 0: 1, 2: 1})
        self.assertTrue(sl2.contains(TRIPLE.getH()))
        self.assertTrue(sl2.checkClosed())

    def testOrderIndependence(self):
        """Test that the basis does not depend on generator order."""

        generators = []
        for triple in buildLLVTriples(K3TYPE):
            generators.extend([triple.getE(), triple.getF()])
        reverse = calcLieClosure(generators[::-1])
        self.assertEqual(reverse, LLV)
        self.assertEqual([op.getMatrix() for op in reverse.getBasis()],
                         [op.getMatrix() for op in LLV.getBasis()])

    def testPlainSpan(self):
        """Test that a span of e and f is not closed."""

        span = LieOperatorAlgebra(K3TYPE.getSpace(),
                                  [TRIPLE.getE(), TRIPLE.getF()])
        self.assertEqual(span.getDim(), 2)
        self.assertFalse(span.checkClosed())

    def testCoordinates(self):
        """Test coordinates of h in the closure."""

        h = buildHOperator(K3TYPE)
        coords = LLV.getCoordinates(h)
        total = None
        for value, op in zip(coords, LLV.getBasis()):
            term = op * value
            total = term if total is None else total + term
        self.assertEqual(total.getMatrix(), h.getMatrix())

    def testNoGenerators(self):
        """Test that an empty generator list is rejected."""

        self.assertRaises(ValueError, calcLieClosure, [])


class TestDegreeZero(unittest.TestCase):

    def testDecomposition(self):
        """Test g0 = g0' + Qh for the K3-type algebra."""

        derived, hline = decomposeDegreeZero(LLV)
        self.assertEqual(derived.getDim(), 3)
        self.assertEqual(hline.getDim(), 1)
        self.assertTrue(derived.checkClosed())

    def testDerivations(self):
        """Test that g0' acts by derivations and h does not."""

        derived, _ = decomposeDegreeZero(LLV)
        for op in derived.getBasis():
            self.assertTrue(checkDerivation(op, K3TYPE))
        self.assertFalse(checkDerivation(buildHOperator(K3TYPE), K3TYPE))

    def testRestrictions(self):
        """Test injectivity of restrictions."""

        derived, _ = decomposeDegreeZero(LLV)
        self.assertTrue(checkRestrictionInjectivity(derived, 2))
        whole = Subspace(len(K3TYPE), RationalMatrix.identity(len(K3TYPE)))
        self.assertTrue(checkRestrictionInjectivity(LLV, whole))
        self.assertFalse(checkRestrictionInjectivity(LLV, 4))
        self.assertEqual(calcRestrictions(derived, 2)[0].shape, (5, 3))

    def testDerivationIdentity(self):
        """Test [u, e_a] = e_u(a) for u in g0' and a in V_2."""

        for algebra in (K3TYPE, getBuiltin('quaternion'),
                        getBuiltin('verbitsky:4:2')):
            derived, _ = decomposeDegreeZero(calcLLVAlgebra(algebra))
            dim = algebra.getSpace().getDim(2)
            for u in derived.getBasis():
                block = u.getBlock(2)
                for a in np.eye(dim, dtype=int):
                    bracket = calcBracket(u, buildCupOperator(algebra, a))
                    image = buildCupOperator(algebra,
                                             block.dot(RationalMatrix(a)))
                    self.assertTrue((bracket.getMatrix() -
                                     image.getMatrix()).isZero())

    def testRankTwo(self):
        """Test g0 of the hyperbolic plane, where [g0, g0] vanishes."""

        hyperbolic = getBuiltin('hyperbolic')
        closure = calcLLVAlgebra(hyperbolic)
        g0 = closure.getDegreeAlgebra(0)
        self.assertEqual(g0.getDim(), 2)
        self.assertEqual(calcDerivedSubalgebra(g0).getDim(), 0)
        derived, hline = decomposeDegreeZero(closure)
        self.assertEqual(derived.getDim(), 1)
        self.assertEqual(derived, calcTracelessSubalgebra(g0))
        self.assertFalse(derived.contains(buildHOperator(hyperbolic)))
        u, = derived.getBasis()
        self.assertTrue(checkDerivation(u, hyperbolic))
        self.assertTrue(checkInfinitesimalInvariance(
            [u.getBlock(2)], hyperbolic.getPairingMatrix(2)))

    def testTraceless(self):
        """Test that the traceless part of g0 is g0' for K3 type."""

        derived, _ = decomposeDegreeZero(LLV)
        g0 = LLV.getDegreeAlgebra(0)
        self.assertEqual(calcTracelessSubalgebra(g0), derived)


class TestKillingForm(unittest.TestCase):

    def testCompact(self):
        """Test Killing signature of so(3)."""

        so3 = buildOrthogonalAlgebra([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        self.assertEqual(so3.getDim(), 3)
        self.assertEqual(calcKillingSignature(so3), (0, 3, 0))
        self.assertTrue(so3.checkClosed())

    def testSo41(self):
        """Test dimension and Killing signature of so(4,1)."""

        gram = [[int(i == j) * (1 if i < 4 else -1) for j in range(5)]
                for i in range(5)]
        so41 = buildOrthogonalAlgebra(gram)
        self.assertEqual(so41.getDim(), 10)
        self.assertEqual(so41.getTitle(), 'so(4,1)')
        self.assertEqual(calcKillingSignature(so41), (4, 6, 0))

    def testStructureConstants(self):
        """Test antisymmetry of structure constants."""

        constants = calcStructureConstants(LLV)
        self.assertEqual(constants, -constants.transpose(1, 0, 2))
        self.assertTrue(calcKillingForm(LLV).isSymmetric())

    def testLLVSignature(self):
        """Test that the K3-type LLV algebra is so(q + U)."""

        oracle = buildOrthogonalAlgebra(calcMukaiExtension(
            QuadraticSpace(DATA_FILES['k3_type']['gram'])))
        self.assertEqual(calcKillingSignature(LLV),
                         calcKillingSignature(oracle))
        self.assertEqual(LLV.getDim(), oracle.getDim())


class TestInvariance(unittest.TestCase):

    def testPhiForm(self):
        """Test that the LLV algebra preserves the phi form."""

        self.assertTrue(checkInfinitesimalInvariance(LLV, calcPhiForm(K3TYPE)))
        self.assertFalse(checkInfinitesimalInvariance(
            buildHOperator(K3TYPE).getMatrix() + RationalMatrix.identity(5),
            calcPhiForm(K3TYPE)))


class TestPrediction(unittest.TestCase):

    def testDims(self):
        """Test predicted dimensions of so(q + U)."""

        self.assertEqual(predictLLVDims(3), (10, {-2: 3, 0: 4, 2: 3}))
        self.assertEqual(predictLLVDims(buildK3Lattice()),
                         (276, {-2: 22, 0: 232, 2: 22}))
        self.assertRaises(ValueError, predictLLVDims, 0)

    @unittest.skipUnless(SLOW, SLOW_MSG)
    def testK3Lattice(self):
        """Test the LLV algebra of the K3 lattice."""

        llv = calcLLVAlgebra(getBuiltin('k3'))
        dim, dims = predictLLVDims(22)
        self.assertEqual(llv.getDim(), dim)
        self.assertEqual(llv.getDegreeDims(), dims)


if __name__ == '__main__':
    unittest.main()
