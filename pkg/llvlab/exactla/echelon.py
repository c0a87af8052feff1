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

"""This module defines the incremental row echelon builder and the row
reduction, kernel and linear solve functions based on it."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab import LLVException

from .rational import RationalMatrix, _compact, _lincomb, _scale, \
    _product, _primitiveRows, _content, _toObject
from math import gcd

__all__ = ['Echelon', 'Inconsistent', 'calcRREF', 'calcKernel',
           'solveLinear']


class Inconsistent(LLVException):

    """Raised when a linear system has no solution."""

    pass


def _asIntegerRows(vectors, ncols):
    """Return integer rows spanning the same lines as *vectors*."""

    if isinstance(vectors, RationalMatrix):
        rows = vectors._getNumerators()
    elif isinstance(vectors, np.ndarray) and vectors.dtype != object and \
            vectors.dtype.kind in 'iu':
        rows = _compact(vectors.astype(object)) \
            if vectors.dtype.kind == 'u' else vectors.astype(np.int64)
    elif isinstance(vectors, np.ndarray) and vectors.dtype == object and \
            all(isinstance(item, int) for item in vectors.flat):
        rows = _compact(vectors)
    else:
        rows = RationalMatrix(vectors)._getNumerators()
    if rows.ndim == 1:
        rows = rows.reshape((1, -1)) if rows.size else \
            rows.reshape((0, ncols))
    if rows.ndim != 2 or rows.shape[1] != ncols:
        raise ValueError('vectors must have {0} entries'.format(ncols))
    return rows


class Echelon(object):

    """Reduced row echelon basis of a subspace of Q^n that grows as
    vectors are added.  Rows are kept as integer numerators over one
    common denominator, row *i* of the basis being ``num[i] / den``, with
    entry 1 at its own pivot column and 0 at the pivots of other rows.
    Since the reduced row echelon form is unique, the basis does not
    depend on the order in which vectors are added.

    >>> echelon = Echelon(3)
    >>> echelon.add([[2, 4, 0], [1, 2, 0]]).shape
    (1, 3)
    >>> echelon.getPivots()
    [0]"""

    def __init__(self, ncols):

        if not isinstance(ncols, (int, np.integer)) or ncols < 0:
            raise ValueError('ncols must be a non-negative integer')
        self._ncols = int(ncols)
        self._num = np.zeros((0, self._ncols), np.int64)
        self._den = 1
        self._pivots = np.zeros(0, int)

    def __repr__(self):

        return '<Echelon: rank {0} in {1} columns>'.format(len(self),
                                                           self._ncols)

    def __len__(self):

        return len(self._pivots)

    def copy(self):
        """Return a copy of the builder."""

        new = Echelon(self._ncols)
        new._num = self._num.copy()
        new._den = self._den
        new._pivots = self._pivots.copy()
        return new

    def numColumns(self):
        """Return the number of columns."""

        return self._ncols

    def getRank(self):
        """Return the dimension of the spanned subspace."""

        return len(self._pivots)

    def getPivots(self):
        """Return pivot columns in increasing order."""

        return [int(i) for i in self._pivots]

    def getDenominator(self):
        """Return the common denominator of the basis rows."""

        return self._den

    def getNumerators(self):
        """Return a copy of the basis row numerators."""

        return self._num.copy()

    def _getNumerators(self):

        return self._num

    def getBasis(self):
        """Return basis rows as a :class:`.RationalMatrix`."""

        return RationalMatrix.fromNumerators(self._num.copy(), self._den)

    def isFull(self):
        """Return **True** when the basis spans the whole space."""

        return len(self._pivots) == self._ncols

    def reduce(self, vectors):
        """Return residues of *vectors* modulo the spanned subspace as
        primitive integer rows.  Rows are zero for vectors in the span.
        Vectors are only determined up to scaling, so integer rows of any
        scale may be passed."""

        rows = _asIntegerRows(vectors, self._ncols)
        if not len(self._pivots) or not len(rows):
            return _primitiveRows(rows)
        pivots = rows[:, self._pivots]
        product = _product(np.dot, pivots, self._num, len(self._pivots))
        return _primitiveRows(_lincomb(self._den, rows, -1, product))

    def contains(self, vectors):
        """Return **True** when all *vectors* lie in the spanned subspace."""

        return not np.any(self.reduce(vectors))

    def getCoordinates(self, vectors):
        """Return coordinates of *vectors* in the basis as a
        :class:`.RationalMatrix`, one row per vector.  Vectors must lie
        in the spanned subspace."""

        vectors = _asRational(vectors)
        single = vectors.ndim == 1
        if single:
            vectors = vectors.reshape(1, -1)
        if not self.contains(vectors._getNumerators()):
            raise ValueError('vectors are not in the spanned subspace')
        coords = RationalMatrix.fromNumerators(
            vectors._getNumerators()[:, self._pivots].copy(),
            vectors.getDenominator())
        return coords[0] if single else coords

    def _insert(self, residue):
        """Insert nonzero *residue* that vanishes at current pivots and
        return the new basis row numerators and its pivot."""

        pivot = int(np.flatnonzero(residue)[0])
        if residue[pivot] < 0:
            residue = -residue
        lead = int(residue[pivot])
        num = self._num
        if len(num):
            column = num[:, pivot]
            num = _lincomb(lead, num, -1,
                           _product(np.outer, column, residue, 1))
        row = _scale(self._den, residue.reshape((1, -1)))
        den = self._den * lead
        index = int(np.searchsorted(self._pivots, pivot))
        if num.dtype != row.dtype:
            num, row = _toObject(num), _toObject(row)
        num = np.concatenate([num[:index], row, num[index:]])
        common = gcd(_content(num), den)
        if common > 1:
            num = num // common
            den //= common
        self._num = _compact(num)
        self._den = den
        self._pivots = np.insert(self._pivots, index, pivot)
        return self._num[index], pivot

    def add(self, vectors, chunk=64):
        """Adjoin *vectors* and return residues of those that enlarged the
        span, as primitive integer rows.  Vectors are processed in chunks
        of *chunk* rows and processing stops once the span is full."""

        rows = _asIntegerRows(vectors, self._ncols)
        added = []
        for start in range(0, len(rows), chunk):
            if self.isFull():
                break
            block = self.reduce(rows[start:start + chunk])
            block = block[np.any(block != 0, axis=1)]
            while len(block):
                residue, block = block[0], block[1:]
                if not residue.any():
                    continue
                added.append(residue)
                new, pivot = self._insert(residue)
                if len(block):
                    column = block[:, pivot]
                    if np.any(column):
                        block = _primitiveRows(_lincomb(
                            self._den, block, -1,
                            _product(np.outer, column, new, 1)))
        if not added:
            return np.zeros((0, self._ncols), np.int64)
        if any(item.dtype == object for item in added):
            added = [_toObject(item) for item in added]
        return _compact(np.array(added))


def _asRational(data):

    return data if isinstance(data, RationalMatrix) else RationalMatrix(data)


def calcRREF(matrix):
    """Return reduced row echelon form of *matrix* and its pivot columns.
    The result has the shape of *matrix*, with zero rows at the bottom,
    and the rank is the number of pivots.

    >>> rref, pivots = calcRREF([[2, 4], [1, 2]])
    >>> rref[0, 1]
    Fraction(2, 1)
    >>> pivots
    [0]"""

    matrix = _asRational(matrix)
    if matrix.ndim != 2:
        raise ValueError('matrix must be a 2-dimensional array')
    nrows, ncols = matrix.shape
    echelon = Echelon(ncols)
    echelon.add(matrix._getNumerators())
    basis = echelon._getNumerators()
    num = np.zeros((nrows, ncols), dtype=basis.dtype)
    num[:len(basis)] = basis
    return (RationalMatrix.fromNumerators(num, echelon.getDenominator()),
            echelon.getPivots())


def calcKernel(matrix):
    """Return the null space of *matrix* as a :class:`.Subspace`, whose
    dimension is the number of columns minus the rank."""

    from .subspace import Subspace

    matrix = _asRational(matrix)
    if matrix.ndim != 2:
        raise ValueError('matrix must be a 2-dimensional array')
    ncols = matrix.shape[1]
    echelon = Echelon(ncols)
    echelon.add(matrix._getNumerators())
    pivots = echelon.getPivots()
    used = set(pivots)
    free = [i for i in range(ncols) if i not in used]
    num = echelon._getNumerators()
    kernel = np.zeros((len(free), ncols), dtype=num.dtype)
    for i, column in enumerate(free):
        kernel[i, column] = echelon.getDenominator()
        kernel[i, pivots] = -num[:, column]
    return Subspace(ncols, _compact(kernel))


def solveLinear(matrix, vector):
    """Return a solution *x* of ``matrix @ x = vector`` and the dimension
    of the kernel of *matrix*, so that callers can test uniqueness.  Free
    variables are set to zero.  :exc:`Inconsistent` is raised when
    *vector* is not in the column span of *matrix*.

    >>> x, nullity = solveLinear([[1, 1]], [2])
    >>> nullity
    1"""

    matrix = _asRational(matrix)
    vector = _asRational(vector)
    if matrix.ndim != 2:
        raise ValueError('matrix must be a 2-dimensional array')
    if vector.shape != (matrix.shape[0],):
        raise ValueError('vector must have {0} entries'
                         .format(matrix.shape[0]))
    nrows, ncols = matrix.shape
    den = matrix.getDenominator() * vector.getDenominator() // \
        gcd(matrix.getDenominator(), vector.getDenominator())
    left = _scale(den // matrix.getDenominator(), matrix._getNumerators())
    right = _scale(den // vector.getDenominator(),
                   vector._getNumerators()).reshape((nrows, 1))
    if left.dtype != right.dtype:
        left, right = _toObject(left), _toObject(right)
    echelon = Echelon(ncols + 1)
    echelon.add(np.hstack([left, right]))
    pivots = echelon.getPivots()
    if pivots and pivots[-1] == ncols:
        raise Inconsistent('vector is not in the column span of matrix')
    num = echelon._getNumerators()
    solution = np.zeros(ncols, dtype=num.dtype)
    solution[pivots] = num[:, ncols]
    return (RationalMatrix.fromNumerators(solution, echelon.getDenominator()),
            ncols - len(pivots))
