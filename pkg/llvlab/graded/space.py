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

"""This module defines :class:`GradedVectorSpace`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

__all__ = ['GradedVectorSpace']


def _checkInteger(value, name):

    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError('{0} must be an integer'.format(name))
    return int(value)


class GradedVectorSpace(object):

    """Finite dimensional graded vector space V = sum of V_k over
    cohomological degrees *k*.  The *shift* N places the internal degree
    of V_k at k - N, so that V_N is in the middle.  Basis vectors are
    numbered component by component in increasing degree.

    >>> space = GradedVectorSpace([(0, 1), (2, 3), (4, 1)], shift=2)
    >>> space
    <GradedVectorSpace: dims {0: 1, 2: 3, 4: 1}, shift 2>
    >>> len(space)
    5"""

    def __init__(self, components, shift):

        degrees = []
        dims = []
        for item in components:
            try:
                degree, dim = item
            except (TypeError, ValueError):
                raise TypeError('components must be (degree, dim) pairs')
            degree = _checkInteger(degree, 'degree')
            dim = _checkInteger(dim, 'dim')
            if dim < 0:
                raise ValueError('dimensions must be non-negative')
            if degrees and degree <= degrees[-1]:
                raise ValueError('degrees must be strictly increasing')
            degrees.append(degree)
            dims.append(dim)
        self._shift = _checkInteger(shift, 'shift')
        self._degrees = tuple(degrees)
        self._dims = tuple(dims)
        self._offsets = {}
        offset = 0
        for degree, dim in zip(degrees, dims):
            self._offsets[degree] = offset
            offset += dim
        self._total = offset
        self._array = None
        self._diff = None
        self._flat = {}

    def __repr__(self):

        return '<GradedVectorSpace: dims {{{0}}}, shift {1}>'.format(
            ', '.join('{0}: {1}'.format(k, d) for k, d in
                      zip(self._degrees, self._dims)), self._shift)

    def __len__(self):

        return self._total

    def __eq__(self, other):

        if not isinstance(other, GradedVectorSpace):
            return NotImplemented
        return (self._shift == other._shift and
                self.getComponents() == other.getComponents())

    def __ne__(self, other):

        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def getShift(self):
        """Return the shift N."""

        return self._shift

    def getComponents(self):
        """Return list of ``(degree, dim)`` pairs of nonzero components."""

        return [(k, d) for k, d in zip(self._degrees, self._dims) if d]

    def getDegrees(self):
        """Return degrees of nonzero components."""

        return [k for k, d in zip(self._degrees, self._dims) if d]

    def getDim(self, degree):
        """Return dimension of component *degree*, 0 when absent."""

        if degree in self._offsets:
            return self._dims[self._degrees.index(degree)]
        return 0

    def hasDegree(self, degree):
        """Return **True** when component *degree* is nonzero."""

        return self.getDim(degree) > 0

    def getSlice(self, degree):
        """Return slice of basis indices of component *degree*."""

        if degree not in self._offsets:
            return slice(0, 0)
        start = self._offsets[degree]
        return slice(start, start + self.getDim(degree))

    def getTopDegree(self):
        """Return the top degree 2N of the integration functional."""

        return 2 * self._shift

    def getDegreeArray(self):
        """Return cohomological degree of each basis vector."""

        if self._array is None:
            self._array = np.repeat(np.array(self._degrees, dtype=int),
                                    self._dims)
        return self._array.copy()

    def getInternalDegree(self, degree):
        """Return internal degree ``degree - N``."""

        return degree - self._shift

    def _getDifferences(self):

        if self._diff is None:
            degrees = self.getDegreeArray()
            self._diff = degrees[:, None] - degrees[None, :]
        return self._diff

    def getOperatorDegrees(self):
        """Return sorted degrees that a nonzero operator block can have."""

        return sorted(set(int(d) for d in np.unique(self._getDifferences())))

    def getFlatIndices(self, degree):
        """Return flat indices into a square matrix on this space of the
        entries that map degree k to degree k + *degree*."""

        if degree not in self._flat:
            self._flat[degree] = np.flatnonzero(
                self._getDifferences().ravel() == degree)
        return self._flat[degree]
