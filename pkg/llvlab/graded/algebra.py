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

"""This module defines :class:`GradedFrobeniusAlgebra`, its validation,
and the operators and forms it induces."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

from math import gcd
from fractions import Fraction

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix

from .space import GradedVectorSpace
from .operator import GradedOperator, WrongDegree

__all__ = ['GradedFrobeniusAlgebra', 'PhiForm', 'ValidationError',
           'validateAlgebra', 'buildCupOperator', 'buildHOperator',
           'calcPhiForm']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER


class ValidationError(LLVException):

    """Raised when an algebra violates the axioms of a graded Frobenius
    algebra.  Violations are listed in :attr:`violations`."""

    def __init__(self, violations):

        self.violations = list(violations)
        LLVException.__init__(self, '{0} violation(s), first: {1}'.format(
            len(self.violations),
            self.violations[0] if self.violations else 'none'))


def _asRational(data):

    return data if isinstance(data, RationalMatrix) else RationalMatrix(data)


class GradedFrobeniusAlgebra(object):

    """Finite dimensional graded commutative algebra with a distinguished
    basis, given by structure constants, a unit in degree 0, and an
    integration functional on the top degree 2N.

    *products* maps a pair of degrees ``(k, l)`` to an array of shape
    ``(dim V_k, dim V_l, dim V_(k+l))`` whose entry ``[i, j, m]`` is the
    coefficient of basis vector *m* of V_(k+l) in the product of basis
    vector *i* of V_k and basis vector *j* of V_l.  Missing pairs multiply
    to zero.  *unit* gives coordinates of 1 in V_0 and *integral* gives
    the values of the integral on the basis of V_2N."""

    def __init__(self, space, products, unit, integral, title='Unknown'):

        if not isinstance(space, GradedVectorSpace):
            raise TypeError('space must be a GradedVectorSpace')
        self._space = space
        self._title = str(title)
        self._products = {}
        for key, block in products.items():
            try:
                k, l = key
            except (TypeError, ValueError):
                raise TypeError('product keys must be pairs of degrees')
            block = _asRational(block)
            shape = (space.getDim(k), space.getDim(l), space.getDim(k + l))
            if block.shape != shape:
                raise ValueError('product block ({0}, {1}) must have shape '
                                 '{2}'.format(k, l, shape))
            if not block.isZero():
                self._products[(int(k), int(l))] = block
        unit = _asRational(unit)
        if unit.shape != (space.getDim(0),):
            raise ValueError('unit must have {0} entries'
                             .format(space.getDim(0)))
        integral = _asRational(integral)
        top = space.getTopDegree()
        if integral.shape != (space.getDim(top),):
            raise ValueError('integral must have {0} entries'
                             .format(space.getDim(top)))
        self._unit = unit
        self._integral = integral
        self._tensor = None
        self._gram = None

    def __repr__(self):

        return ('<GradedFrobeniusAlgebra: {0} ({1}-dimensional, shift {2})>'
                .format(self._title, len(self._space),
                        self._space.getShift()))

    def __str__(self):

        return 'GradedFrobeniusAlgebra {0}'.format(self._title)

    def __len__(self):

        return len(self._space)

    def __eq__(self, other):

        if not isinstance(other, GradedFrobeniusAlgebra):
            return NotImplemented
        return (self._space == other._space and
                self._products == other._products and
                self._unit == other._unit and
                self._integral == other._integral)

    def __ne__(self, other):

        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def getTitle(self):
        """Return title of the algebra."""

        return self._title

    def setTitle(self, title):
        """Set title of the algebra."""

        self._title = str(title)

    def getSpace(self):
        """Return the underlying :class:`.GradedVectorSpace`."""

        return self._space

    def getShift(self):
        """Return the shift N."""

        return self._space.getShift()

    def getProductKeys(self):
        """Return sorted degree pairs with nonzero products."""

        return sorted(self._products)

    def getProduct(self, k, l):
        """Return structure constants of V_k times V_l."""

        block = self._products.get((k, l))
        if block is None:
            space = self._space
            return RationalMatrix.zeros((space.getDim(k), space.getDim(l),
                                         space.getDim(k + l)))
        return block

    def getUnit(self):
        """Return coordinates of the unit in V_0."""

        return self._unit

    def getIntegral(self):
        """Return values of the integral on the basis of V_2N."""

        return self._integral

    def getUnitVector(self):
        """Return the unit as a vector of the whole space."""

        return self._embed(0, self._unit)

    def getIntegralVector(self):
        """Return the integral as a functional on the whole space."""

        return self._embed(self._space.getTopDegree(), self._integral)

    def _embed(self, degree, vector):

        array = np.zeros(len(self._space), dtype=object)
        array[self._space.getSlice(degree)] = vector.getArray()
        return RationalMatrix(array)

    def getComponent(self, vector, degree):
        """Return coordinates of the degree *degree* part of *vector*."""

        vector = _asRational(vector)
        return vector[self._space.getSlice(degree)]

    def multiply(self, first, second):
        """Return product of two elements given as vectors of the whole
        space."""

        first, second = _asRational(first), _asRational(second)
        space = self._space
        n = len(space)
        if first.shape != (n,) or second.shape != (n,):
            raise ValueError('elements must have {0} entries'.format(n))
        result = np.zeros(n, dtype=object)
        for (k, l), block in self._products.items():
            left = first[space.getSlice(k)]
            right = second[space.getSlice(l)]
            if left.isZero() or right.isZero():
                continue
            value = right.dot(left.tensordot(block, ([0], [0])))
            result[space.getSlice(k + l)] += value.getArray()
        return RationalMatrix(result)

    def integrate(self, vector):
        """Return the integral of an element of the whole space."""

        vector = _asRational(vector)
        top = vector[self._space.getSlice(self._space.getTopDegree())]
        if not len(top):
            return Fraction(0)
        return top.dot(self._integral)

    def buildMultiplicationOperator(self, element, degree=None):
        """Return left multiplication by *element*, a vector of the whole
        space, as a :class:`.GradedOperator`."""

        element = _asRational(element)
        space = self._space
        n = len(space)
        if element.shape != (n,):
            raise ValueError('element must have {0} entries'.format(n))
        array = np.zeros((n, n), dtype=object)
        for (k, l), block in self._products.items():
            left = element[space.getSlice(k)]
            if left.isZero():
                continue
            image = left.tensordot(block, ([0], [0])).T
            array[space.getSlice(k + l), space.getSlice(l)] += \
                image.getArray()
        return GradedOperator(space, RationalMatrix(array), degree)

    def getMultiplicationTensor(self):
        """Return array ``P`` of shape ``(n, n, n)`` whose entry
        ``[i, j, m]`` is the coefficient of basis vector *m* in the
        product of basis vectors *i* and *j*."""

        if self._tensor is None:
            space = self._space
            n = len(space)
            den = 1
            for block in self._products.values():
                den = den * block.getDenominator() // \
                    gcd(den, block.getDenominator())
            num = np.zeros((n, n, n), dtype=object)
            for (k, l), block in self._products.items():
                scale = den // block.getDenominator()
                num[space.getSlice(k), space.getSlice(l),
                    space.getSlice(k + l)] = \
                    block._getNumerators().astype(object) * scale
            self._tensor = RationalMatrix.fromNumerators(num, den)
        return self._tensor

    def getPairingMatrix(self, degree):
        """Return matrix of the pairing of V_degree with V_(2N-degree)
        given by integrating products."""

        other = self._space.getTopDegree() - degree
        block = self.getProduct(degree, other)
        return block.tensordot(self._integral, ([2], [0]))

    def getPoincareMatrix(self):
        """Return matrix of ``(x, y) -> integral of x.y`` on the whole
        space."""

        if self._gram is None:
            space = self._space
            n = len(space)
            array = np.zeros((n, n), dtype=object)
            for k in space.getDegrees():
                other = space.getTopDegree() - k
                if not space.hasDegree(other):
                    continue
                array[space.getSlice(k), space.getSlice(other)] = \
                    self.getPairingMatrix(k).getArray()
            self._gram = RationalMatrix(array)
        return self._gram


def validateAlgebra(algebra):
    """Return list of violations of the graded Frobenius algebra axioms
    by *algebra*, checked exhaustively over basis tuples.  An empty list
    means the algebra is valid.  Violations are prefixed by the axiom
    they violate: ``koszul``, ``associativity``, ``unit`` or ``pairing``."""

    if not isinstance(algebra, GradedFrobeniusAlgebra):
        raise TypeError('algebra must be a GradedFrobeniusAlgebra')
    space = algebra.getSpace()
    degrees = space.getDegrees()
    violations = []

    for i, k in enumerate(degrees):
        for l in degrees[i:]:
            first = algebra.getProduct(k, l)
            second = algebra.getProduct(l, k).transpose(1, 0, 2)
            if (k * l) % 2:
                second = -second
            if first != second:
                bad = np.argwhere((first - second)._getNumerators() != 0)
                seen = set()
                for a, b, _ in bad:
                    if (a, b) in seen:
                        continue
                    seen.add((a, b))
                    violations.append(
                        'koszul: x[{0}][{1}] * x[{2}][{3}] differs from '
                        '(-1)^({0}*{2}) x[{2}][{3}] * x[{0}][{1}]'
                        .format(k, a, l, b))

    for k in degrees:
        for l in degrees:
            if not space.hasDegree(k + l):
                continue
            for m in degrees:
                if not space.hasDegree(k + l + m):
                    continue
                left = algebra.getProduct(k, l).tensordot(
                    algebra.getProduct(k + l, m), ([2], [0]))
                right = algebra.getProduct(k, l + m).tensordot(
                    algebra.getProduct(l, m), ([1], [2])).transpose(
                        0, 2, 3, 1) if space.hasDegree(l + m) else \
                    RationalMatrix.zeros(left.shape)
                if left != right:
                    bad = np.argwhere((left - right)._getNumerators() != 0)
                    seen = set()
                    for a, b, c, _ in bad:
                        if (a, b, c) in seen:
                            continue
                        seen.add((a, b, c))
                        violations.append(
                            'associativity: (x[{0}][{1}] * x[{2}][{3}]) * '
                            'x[{4}][{5}] differs from x[{0}][{1}] * '
                            '(x[{2}][{3}] * x[{4}][{5}])'
                            .format(k, a, l, b, m, c))

    if not space.hasDegree(0):
        violations.append('unit: there is no degree 0 component')
    else:
        for l in degrees:
            action = algebra.getUnit().tensordot(algebra.getProduct(0, l),
                                                 ([0], [0]))
            identity = RationalMatrix.identity(space.getDim(l))
            if action != identity:
                for j in np.flatnonzero(np.any(
                        (action - identity)._getNumerators() != 0, axis=1)):
                    violations.append('unit: 1 * x[{0}][{1}] differs from '
                                      'x[{0}][{1}]'.format(l, j))

    top = space.getTopDegree()
    if not space.hasDegree(top):
        violations.append('pairing: top degree {0} component is zero'
                          .format(top))
    else:
        for k in degrees:
            other = top - k
            if space.getDim(k) != space.getDim(other):
                violations.append('pairing: degrees {0} and {1} have '
                                  'different dimensions'.format(k, other))
                continue
            if algebra.getPairingMatrix(k).rank() != space.getDim(k):
                violations.append('pairing: pairing of degrees {0} and {1} '
                                  'is degenerate'.format(k, other))
    if violations:
        LOGGER.debug('{0} violates {1} axiom(s).'.format(algebra,
                                                         len(violations)))
    return violations


def _asDegreeTwoClass(algebra, element):
    """Return *element* of degree 2 as a vector of the whole space."""

    space = algebra.getSpace()
    element = _asRational(element)
    if not space.hasDegree(2):
        raise WrongDegree('algebra has no degree 2 component')
    n, dim = len(space), space.getDim(2)
    if element.shape == (dim,):
        array = np.zeros(n, dtype=object)
        array[space.getSlice(2)] = element.getArray()
        return RationalMatrix(array)
    if element.shape == (n,):
        degrees = space.getDegreeArray()
        if np.any(element._getNumerators()[degrees != 2]):
            raise WrongDegree('element is not homogeneous of degree 2')
        return element
    raise ValueError('element must have {0} or {1} entries'.format(dim, n))


def buildCupOperator(algebra, element):
    """Return multiplication by a degree 2 *element* as an operator of
    degree 2.  *element* is given by its coordinates in V_2, or as a
    vector of the whole space that vanishes outside V_2."""

    element = _asDegreeTwoClass(algebra, element)
    return algebra.buildMultiplicationOperator(element, degree=2)


def buildHOperator(space):
    """Return the grading operator that acts on V_k as ``(k - N) id``.
    *space* may be a :class:`.GradedVectorSpace` or an algebra."""

    if isinstance(space, GradedFrobeniusAlgebra):
        space = space.getSpace()
    if not isinstance(space, GradedVectorSpace):
        raise TypeError('space must be a GradedVectorSpace')
    weights = space.getDegreeArray() - space.getShift()
    return GradedOperator(space, RationalMatrix(np.diag(weights)), 0)


class PhiForm(object):

    """The bilinear form ``phi(x, y) = (-1)^q integral of x.y`` for x of
    degree N + 2q or N + 2q + 1."""

    def __init__(self, space, matrix):

        self._space = space
        self._matrix = matrix

    def __repr__(self):

        return '<PhiForm: {0}-dimensional space>'.format(len(self._space))

    def __call__(self, first, second):

        first, second = _asRational(first), _asRational(second)
        return first.dot(self._matrix.dot(second))

    def getSpace(self):
        """Return the graded vector space."""

        return self._space

    def getMatrix(self):
        """Return the matrix of the form."""

        return self._matrix


def calcPhiForm(algebra):
    """Return the :class:`PhiForm` of *algebra*."""

    space = algebra.getSpace()
    signs = np.array([-1 if ((k - space.getShift()) // 2) % 2 else 1
                      for k in space.getDegreeArray()], dtype=np.int64)
    gram = algebra.getPoincareMatrix()
    num = gram._getNumerators() * signs[:, None]
    return PhiForm(space, RationalMatrix.fromNumerators(
        num, gram.getDenominator()))
