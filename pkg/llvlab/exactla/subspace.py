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

"""This module defines :class:`Subspace`, a subspace of Q^n given by its
canonical reduced row echelon basis."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from .rational import RationalMatrix
from .echelon import Echelon, calcKernel

__all__ = ['Subspace']


class Subspace(object):

    """Subspace of Q^n.  The basis is in reduced row echelon form with
    leading entries 1, so two subspaces are equal as sets exactly when
    their bases are identical.

    >>> s = Subspace(2, [[1, 1], [2, 2]])
    >>> s
    <Subspace: 1-dimensional in Q^2>
    >>> s.contains([3, 3])
    True"""

    def __init__(self, ambient_dim, vectors=None):

        self._echelon = Echelon(ambient_dim)
        if vectors is not None:
            self._echelon.add(vectors)

    @classmethod
    def fromEchelon(cls, echelon):
        """Return the subspace spanned by an :class:`.Echelon` builder."""

        new = cls(echelon.numColumns())
        new._echelon = echelon.copy()
        return new

    def __repr__(self):

        return '<Subspace: {0}-dimensional in Q^{1}>'.format(
            self.getDim(), self.getAmbientDim())

    def __len__(self):

        return self.getDim()

    def __eq__(self, other):

        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.getAmbientDim() == other.getAmbientDim() and
                self.getBasis() == other.getBasis())

    def __ne__(self, other):

        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def getAmbientDim(self):
        """Return dimension of the ambient space."""

        return self._echelon.numColumns()

    def getDim(self):
        """Return dimension of the subspace."""

        return len(self._echelon)

    def getBasis(self):
        """Return canonical basis rows as a :class:`.RationalMatrix`."""

        return self._echelon.getBasis()

    def getPivots(self):
        """Return pivot columns of the canonical basis."""

        return self._echelon.getPivots()

    def getEchelon(self):
        """Return a copy of the underlying :class:`.Echelon` builder."""

        return self._echelon.copy()

    def isZero(self):
        """Return **True** for the zero subspace."""

        return not len(self._echelon)

    def isWhole(self):
        """Return **True** when the subspace is the ambient space."""

        return self._echelon.isFull()

    def contains(self, vectors):
        """Return **True** when *vectors*, a vector or rows of vectors, lie
        in the subspace."""

        return self._echelon.contains(vectors)

    def containsSubspace(self, other):
        """Return **True** when *other* is contained in this subspace."""

        if other.getAmbientDim() != self.getAmbientDim():
            raise ValueError('ambient dimensions do not match')
        return other.isZero() or self.contains(other.getBasis())

    def getCoordinates(self, vectors):
        """Return coordinates of *vectors* in the canonical basis."""

        return self._echelon.getCoordinates(vectors)

    def __add__(self, other):

        if not isinstance(other, Subspace):
            return NotImplemented
        if other.getAmbientDim() != self.getAmbientDim():
            raise ValueError('ambient dimensions do not match')
        echelon = self._echelon.copy()
        if not other.isZero():
            echelon.add(other.getBasis())
        return Subspace.fromEchelon(echelon)

    def intersect(self, other):
        """Return intersection with *other* subspace."""

        if other.getAmbientDim() != self.getAmbientDim():
            raise ValueError('ambient dimensions do not match')
        n = self.getAmbientDim()
        if self.isZero() or other.isZero():
            return Subspace(n)
        mine = self.getBasis()
        stacked = RationalMatrix(np.concatenate(
            [mine.getArray(), -other.getBasis().getArray()]))
        relations = calcKernel(stacked.T)
        if relations.isZero():
            return Subspace(n)
        coefficients = relations.getBasis().getArray()[:, :self.getDim()]
        return Subspace(n, RationalMatrix(coefficients) @ mine)
