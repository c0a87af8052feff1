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

"""This module defines rational quadratic spaces, the Mukai extension by a
hyperbolic plane and the map from pairs of vectors to q-skew operators."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import itertools
from fractions import Fraction

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix, NotSymmetric, calcSignature

__all__ = ['QuadraticSpace', 'Degenerate', 'calcMukaiExtension',
           'calcWedgeOperator', 'findIsotropicVectors', 'findPositivePlane',
           'findHyperbolicPlane', 'findIsotropicBasis']


class Degenerate(LLVException):

    """Raised when a nondegenerate quadratic form is expected."""

    pass


class QuadraticSpace(object):

    """A rational vector space Q^r with a symmetric bilinear form *q*,
    given by its Gram matrix.

    >>> q = QuadraticSpace([[0, 1], [1, 0]])
    >>> q.getSignature()
    (1, 1, 0)
    >>> q([1, 1])
    Fraction(2, 1)"""

    def __init__(self, gram, title=None):

        if not isinstance(gram, RationalMatrix):
            gram = RationalMatrix(gram)
        if gram.ndim != 2 or not gram.isSquare():
            raise ValueError('gram must be a square matrix')
        if not gram.isSymmetric():
            raise NotSymmetric('gram must be a symmetric matrix')
        self._gram = gram
        self._title = title
        self._rank = None

    def __repr__(self):

        if self._title:
            return '<QuadraticSpace: {0} of rank {1}>'.format(self._title,
                                                              len(self))
        return '<QuadraticSpace: rank {0}>'.format(len(self))

    def __len__(self):

        return self._gram.shape[0]

    def __eq__(self, other):

        if not isinstance(other, QuadraticSpace):
            return NotImplemented
        return self._gram == other._gram

    def __ne__(self, other):

        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __call__(self, first, second=None):
        """Return ``q(first, second)``, or ``q(first, first)``."""

        first = _asVector(first, len(self))
        second = first if second is None else _asVector(second, len(self))
        return first.dot(self._gram.dot(second))

    def getTitle(self):
        """Return title of the quadratic space."""

        return self._title

    def getGram(self):
        """Return the Gram matrix."""

        return self._gram

    def getDim(self):
        """Return dimension of the space."""

        return len(self)

    def isNondegenerate(self):
        """Return **True** when the Gram matrix is invertible."""

        if self._rank is None:
            self._rank = self._gram.rank()
        return self._rank == len(self)

    def checkNondegenerate(self):
        """Raise :exc:`Degenerate` when the form is degenerate."""

        if not self.isNondegenerate():
            raise Degenerate('quadratic form of rank {0} is degenerate'
                             .format(len(self)))

    def getSignature(self):
        """Return ``(positives, negatives, zeros)`` of the form."""

        return calcSignature(self._gram)

    def getInverse(self):
        """Return inverse of the Gram matrix."""

        self.checkNondegenerate()
        return self._gram.inverse()

    def directSum(self, other, title=None):
        """Return the orthogonal direct sum with *other*."""

        if not isinstance(other, QuadraticSpace):
            raise TypeError('other must be a QuadraticSpace')
        m, n = len(self), len(other)
        gram = np.zeros((m + n, m + n), dtype=object)
        gram[:m, :m] = self._gram.getArray()
        gram[m:, m:] = other._gram.getArray()
        return QuadraticSpace(RationalMatrix(gram), title)

    def scale(self, factor, title=None):
        """Return the space with form multiplied by *factor*."""

        return QuadraticSpace(self._gram * factor, title)


def _asVector(vector, dim):

    if not isinstance(vector, RationalMatrix):
        vector = RationalMatrix(vector)
    if vector.shape != (dim,):
        raise ValueError('vector must have {0} entries'.format(dim))
    return vector


def calcMukaiExtension(q):
    """Return the Mukai extension ``q + U`` of *q*, where U is the
    hyperbolic plane with Gram matrix ``[[0, 1], [1, 0]]``."""

    if not isinstance(q, QuadraticSpace):
        raise TypeError('q must be a QuadraticSpace')
    title = None
    if q.getTitle():
        title = 'Mukai extension of ' + q.getTitle()
    return q.directSum(QuadraticSpace([[0, 1], [1, 0]]), title)


def _outer(first, second):

    return RationalMatrix(np.outer(first.getArray(), second.getArray()))


def calcWedgeOperator(q, first, second):
    """Return matrix of ``z -> (q(first, z) second - q(second, z) first)/2``,
    the operator of ``first ^ second`` under the isomorphism of the second
    exterior power with so(q).  The result is skew with respect to *q*."""

    if not isinstance(q, QuadraticSpace):
        raise TypeError('q must be a QuadraticSpace')
    q.checkNondegenerate()
    dim = len(q)
    first, second = _asVector(first, dim), _asVector(second, dim)
    gram = q.getGram()
    return (_outer(second, gram.dot(first)) -
            _outer(first, gram.dot(second))) * Fraction(1, 2)


def findIsotropicVectors(q, bound=1, limit=10):
    """Return up to *limit* nonzero integer vectors *v* with entries in
    ``[-bound, bound]`` and ``q(v, v) = 0``.  Of *v* and *-v*, only the
    vector whose first nonzero entry is positive is returned.  Vectors
    supported on the last coordinates are found first.  The enumeration
    grows as ``(2 bound + 1)^r``; definite forms return an empty list
    without enumerating."""

    if not isinstance(q, QuadraticSpace):
        raise TypeError('q must be a QuadraticSpace')
    positives, negatives, _ = q.getSignature()
    if not positives or not negatives:
        return []
    gram = q.getGram()
    num = gram._getNumerators().astype(object)
    found = []
    values = [0]
    for i in range(1, bound + 1):
        values.extend((i, -i))
    for vector in itertools.product(values, repeat=len(q)):
        if limit is not None and len(found) >= limit:
            break
        nonzero = [x for x in vector if x]
        if not nonzero or nonzero[0] < 0:
            continue
        array = np.array(vector, dtype=object)
        if np.dot(array, np.dot(num, array)) == 0:
            found.append(RationalMatrix(array))
    return found


def _getCandidates(dim):
    """Return standard basis vectors of Q^dim followed by their pairwise
    sums and differences, as rows of an object array."""

    candidates = list(np.eye(dim, dtype=np.int64))
    for i, j in itertools.combinations(range(dim), 2):
        for sign in (1, -1):
            vector = np.zeros(dim, dtype=np.int64)
            vector[i], vector[j] = 1, sign
            candidates.append(vector)
    return np.array(candidates).astype(object)


def findPositivePlane(q):
    """Return a pair of q-orthogonal integer vectors with equal positive
    squares, or **None**.  Candidates are standard basis vectors and their
    pairwise sums and differences, searched in that order.  For
    ``U + <1>^3`` the pair is the third and fourth basis vectors."""

    if not isinstance(q, QuadraticSpace):
        raise TypeError('q must be a QuadraticSpace')
    candidates = _getCandidates(len(q))
    num = q.getGram()._getNumerators().astype(object)
    values = np.dot(np.dot(candidates, num), candidates.T)
    for i in range(len(candidates)):
        square = values[i, i]
        if square <= 0:
            continue
        for j in range(i + 1, len(candidates)):
            if values[i, j] == 0 and values[j, j] == square:
                return (RationalMatrix(candidates[i]),
                        RationalMatrix(candidates[j]))
    return None


def _pairIsotropic(q, u, w):
    """Return ``w - q(w, w) / (2 q(u, w)) u``, isotropic when *u* is
    isotropic and ``q(u, w)`` is nonzero."""

    return w - u * (q(w) / (2 * q(u, w)))


def findHyperbolicPlane(q):
    """Return ``(u, v)`` with ``q(u, u) = q(v, v) = 0`` and ``q(u, v)``
    nonzero, or **None**.  *u* is the first isotropic vector among standard
    basis vectors and their pairwise sums and differences, *v* is built
    from the first basis vector not orthogonal to *u*.  Definite forms
    return **None** at once.  For ``U + <1>^3`` the plane is spanned by
    the first two basis vectors.

    >>> findHyperbolicPlane(QuadraticSpace([[1, 0], [0, 1]])) is None
    True"""

    if not isinstance(q, QuadraticSpace):
        raise TypeError('q must be a QuadraticSpace')
    q.checkNondegenerate()
    positives, negatives, _ = q.getSignature()
    if not positives or not negatives:
        return None
    candidates = _getCandidates(len(q))
    num = q.getGram()._getNumerators().astype(object)
    squares = (np.dot(candidates, num) * candidates).sum(1)
    zeros = [i for i, square in enumerate(squares) if square == 0]
    if not zeros:
        return None
    u = RationalMatrix(candidates[zeros[0]])
    for row in np.eye(len(q), dtype=np.int64):
        w = RationalMatrix(row)
        if q(u, w) != 0:
            return u, _pairIsotropic(q, u, w)


def findIsotropicBasis(q):
    """Return isotropic vectors spanning Q^r, built from the plane of
    :func:`findHyperbolicPlane`, or an empty list when no plane is found.
    Each basis vector *w* contributes ``w' - q(w', w') / (2 q(u, w')) u``
    where *w'* is *w*, or *w + v* when *w* is orthogonal to *u*."""

    plane = findHyperbolicPlane(q)
    if plane is None:
        return []
    u, v = plane
    found = [u, v]
    for row in np.eye(len(q), dtype=np.int64):
        w = RationalMatrix(row)
        if q(u, w) == 0:
            w = w + v
        vector = _pairIsotropic(q, u, w)
        if not vector.isZero() and vector not in found:
            found.append(vector)
    return found
