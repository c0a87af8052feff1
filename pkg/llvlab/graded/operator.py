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

"""This module defines :class:`GradedOperator` and the commutator
bracket."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix

from .space import GradedVectorSpace

__all__ = ['GradedOperator', 'WrongDegree', 'calcBracket']


class WrongDegree(LLVException):

    """Raised when an element or operator has an unexpected degree."""

    pass


class GradedOperator(object):

    """Endomorphism of a :class:`.GradedVectorSpace`, stored as a square
    :class:`.RationalMatrix` whose column *j* is the image of basis vector
    *j*.  An operator is homogeneous of degree *d* when it maps each V_k
    into V_(k+d); the degree is inferred from the nonzero entries, and is
    **None** for inhomogeneous operators.  The zero operator takes the
    degree it is given."""

    def __init__(self, space, matrix, degree=None):

        if not isinstance(space, GradedVectorSpace):
            raise TypeError('space must be a GradedVectorSpace')
        if not isinstance(matrix, RationalMatrix):
            matrix = RationalMatrix(matrix)
        n = len(space)
        if matrix.shape != (n, n):
            raise ValueError('matrix must have shape ({0}, {0})'.format(n))
        diff = space._getDifferences()
        present = np.unique(diff[matrix._getNumerators() != 0])
        if degree is not None:
            degree = int(degree)
            if len(present) and (len(present) > 1 or present[0] != degree):
                raise WrongDegree('matrix has entries outside degree {0}'
                                  .format(degree))
        elif len(present) == 1:
            degree = int(present[0])
        self._space = space
        self._matrix = matrix
        self._degree = degree

    @classmethod
    def fromBlocks(cls, space, degree, blocks):
        """Return a homogeneous operator of *degree* given a dictionary
        that maps source degree *k* to a block mapping V_k to
        V_(k+degree)."""

        n = len(space)
        array = np.zeros((n, n), dtype=object)
        for k, block in blocks.items():
            rows = space.getSlice(k + degree)
            cols = space.getSlice(k)
            block = block if isinstance(block, RationalMatrix) else \
                RationalMatrix(block)
            shape = (rows.stop - rows.start, cols.stop - cols.start)
            if block.shape != shape:
                raise ValueError('block from degree {0} must have shape {1}'
                                 .format(k, shape))
            array[rows, cols] = block.getArray()
        return cls(space, RationalMatrix(array), degree)

    def __repr__(self):

        return '<GradedOperator: degree {0} on {1}-dimensional space>'.format(
            self._degree, len(self._space))

    def __eq__(self, other):

        if not isinstance(other, GradedOperator):
            return NotImplemented
        return self._space == other._space and self._matrix == other._matrix

    def __ne__(self, other):

        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def getSpace(self):
        """Return the graded vector space."""

        return self._space

    def getMatrix(self):
        """Return the matrix of the operator."""

        return self._matrix

    def getDegree(self):
        """Return degree, **None** for inhomogeneous operators."""

        return self._degree

    def isHomogeneous(self):
        """Return **True** for homogeneous operators."""

        return self._degree is not None

    def isZero(self):
        """Return **True** for the zero operator."""

        return self._matrix.isZero()

    def getBlock(self, degree):
        """Return block mapping component *degree* to component
        *degree* + d of a homogeneous operator of degree d."""

        if self._degree is None:
            raise WrongDegree('blocks are defined for homogeneous operators')
        rows = self._space.getSlice(degree + self._degree)
        cols = self._space.getSlice(degree)
        num = self._matrix._getNumerators()[rows, cols]
        return RationalMatrix.fromNumerators(num.copy(),
                                             self._matrix.getDenominator())

    def getParts(self):
        """Return a dictionary that maps degree to the homogeneous parts
        of the operator."""

        diff = self._space._getDifferences()
        num = self._matrix._getNumerators()
        parts = {}
        for degree in np.unique(diff[num != 0]):
            part = num.copy()
            part[diff != degree] = 0
            parts[int(degree)] = GradedOperator(
                self._space, RationalMatrix.fromNumerators(
                    part, self._matrix.getDenominator()), int(degree))
        return parts

    def _check(self, other):

        if not isinstance(other, GradedOperator):
            raise TypeError('other must be a GradedOperator')
        if other._space != self._space:
            raise ValueError('operators act on different spaces')

    def compose(self, other):
        """Return the composite ``self o other``."""

        self._check(other)
        degree = None
        if self._degree is not None and other._degree is not None:
            degree = self._degree + other._degree
        product = self._matrix @ other._matrix
        return GradedOperator(self._space, product, degree)

    __matmul__ = compose

    def __add__(self, other):

        self._check(other)
        degree = self._degree if self._degree == other._degree else None
        total = self._matrix + other._matrix
        return GradedOperator(self._space, total, degree)

    def __sub__(self, other):

        return self + (-other)

    def __neg__(self):

        return GradedOperator(self._space, -self._matrix, self._degree)

    def __mul__(self, scalar):

        return GradedOperator(self._space, self._matrix * scalar,
                              self._degree)

    __rmul__ = __mul__

    def apply(self, vector):
        """Return image of *vector*, given by coordinates in the basis."""

        if not isinstance(vector, RationalMatrix):
            vector = RationalMatrix(vector)
        if vector.shape != (len(self._space),):
            raise ValueError('vector must have {0} entries'
                             .format(len(self._space)))
        return self._matrix @ vector


def calcBracket(first, second):
    """Return the commutator ``[first, second]`` of two operators."""

    return first.compose(second) - second.compose(first)
