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

"""This module defines symmetric powers of a rational vector space in the
monomial basis and the contraction Laplacian of a quadratic form."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

from itertools import combinations_with_replacement
from math import comb, factorial

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix, Subspace, calcKernel
from llvlab.liealg import QuadraticSpace

__all__ = ['SymmetricPower', 'SizeLimitExceeded', 'calcContractionLaplacian',
           'calcHarmonicSubspace', 'multiplyMonomials']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER


class SizeLimitExceeded(LLVException):

    """Raised when a symmetric power exceeds the *max_sym_dim* option."""

    pass


def checkSize(dim, degree):
    """Raise :exc:`SizeLimitExceeded` when ``Sym^degree`` of a space of
    dimension *dim* is larger than the *max_sym_dim* option."""

    size = comb(dim + degree - 1, degree) if degree >= 0 else 0
    limit = pkg.SETTINGS.get('max_sym_dim',
                             pkg.CONFIGURATION['max_sym_dim'])
    if size > limit:
        raise SizeLimitExceeded('Sym^{0} of a {1}-dimensional space has '
                                'dimension {2}, above max_sym_dim={3}'
                                .format(degree, dim, size, limit))
    return size


def multiplyMonomials(first, second):
    """Return product of two monomials given as sorted index tuples."""

    return tuple(sorted(first + second))


class SymmetricPower(object):

    """Degree *degree* part of the symmetric algebra of Q^dim, with basis
    of monomials ``x_i1 x_i2 ... x_im`` for ``i1 <= ... <= im``, listed in
    lexicographic order and represented by index tuples.  *base* may be a
    dimension or a :class:`.QuadraticSpace`.

    >>> len(SymmetricPower(5, 2))
    15"""

    def __init__(self, base, degree):

        if isinstance(base, QuadraticSpace):
            self._base = base
            dim = len(base)
        else:
            self._base = None
            dim = int(base)
        if dim < 0 or degree < 0:
            raise ValueError('dim and degree must be non-negative')
        checkSize(dim, degree)
        self._dim = dim
        self._degree = degree
        self._monomials = list(combinations_with_replacement(range(dim),
                                                             degree))
        self._index = dict((monomial, i) for i, monomial
                           in enumerate(self._monomials))

    def __repr__(self):

        return '<SymmetricPower: Sym^{0} of Q^{1}, dimension {2}>'.format(
            self._degree, self._dim, len(self))

    def __len__(self):

        return len(self._monomials)

    def getDim(self):
        """Return dimension ``C(dim + degree - 1, degree)``."""

        return len(self._monomials)

    def getDegree(self):
        """Return the degree of the symmetric power."""

        return self._degree

    def getBaseDim(self):
        """Return dimension of the underlying vector space."""

        return self._dim

    def getBase(self):
        """Return the quadratic space, if one was given."""

        return self._base

    def getMonomials(self):
        """Return list of basis monomials as sorted index tuples."""

        return list(self._monomials)

    def getIndex(self, monomial):
        """Return position of *monomial*, an index tuple in any order."""

        return self._index[tuple(sorted(monomial))]

    def getExponents(self):
        """Return exponent vectors of basis monomials as rows."""

        exponents = np.zeros((len(self), self._dim), np.int64)
        for row, monomial in enumerate(self._monomials):
            for i in monomial:
                exponents[row, i] += 1
        return exponents

    def calcShiftIndices(self, variable, target=None):
        """Return index array mapping each basis monomial to the position
        of its product with x_variable in :class:`SymmetricPower` *target*
        of one degree higher."""

        if target is None:
            target = SymmetricPower(self._dim, self._degree + 1)
        return np.array([target.getIndex(monomial + (variable,))
                         for monomial in self._monomials], dtype=int)

    def calcPower(self, vector):
        """Return coordinates of ``v^degree`` for *v* in Q^dim, using
        multinomial coefficients."""

        vector = vector if isinstance(vector, RationalMatrix) else \
            RationalMatrix(vector)
        if vector.shape != (self._dim,):
            raise ValueError('vector must have {0} entries'
                             .format(self._dim))
        num = vector._getNumerators()
        values = np.zeros(len(self), dtype=object)
        for row, exponents in enumerate(self.getExponents()):
            coefficient = factorial(self._degree)
            value = 1
            for i, power in enumerate(exponents):
                if power:
                    coefficient //= factorial(int(power))
                    value *= int(num[i]) ** int(power)
            values[row] = coefficient * value
        return RationalMatrix.fromNumerators(
            values, vector.getDenominator() ** self._degree)


def calcContractionLaplacian(q, degree):
    """Return matrix of ``sum_ij G_ij d_i d_j`` from ``Sym^degree`` to
    ``Sym^(degree - 2)``, where G is the Gram matrix of *q*.  It kills
    ``a^degree`` exactly when ``q(a, a) = 0``.  For degree below 2 the zero
    map to the zero space is returned.  :exc:`.Degenerate` is raised for
    degenerate *q*."""

    if not isinstance(q, QuadraticSpace):
        q = QuadraticSpace(q)
    q.checkNondegenerate()
    source = SymmetricPower(q, degree)
    if degree < 2:
        return RationalMatrix.zeros((0, len(source)))
    target = SymmetricPower(q, degree - 2)
    gram = q.getGram()
    entries = _nonzeroEntries(gram._getNumerators())
    num = np.zeros((len(target), len(source)), dtype=object)
    for col, monomial in enumerate(source.getMonomials()):
        counts = {}
        for i in monomial:
            counts[i] = counts.get(i, 0) + 1
        for i, j, value in entries:
            if i == j:
                if counts.get(i, 0) < 2:
                    continue
                weight = counts[i] * (counts[i] - 1)
            else:
                if not counts.get(i) or not counts.get(j):
                    continue
                # both orders of the pair
                weight = 2 * counts[i] * counts[j]
            rest = list(monomial)
            rest.remove(i)
            rest.remove(j)
            num[target.getIndex(rest), col] += weight * value
    return RationalMatrix.fromNumerators(num, gram.getDenominator())


def _nonzeroEntries(num):
    """Return ``(i, j, value)`` of nonzero entries with ``i <= j``."""

    return [(int(i), int(j), int(num[i, j]))
            for i, j in zip(*np.nonzero(num)) if i <= j]


def calcHarmonicSubspace(q, degree):
    """Return the kernel of the contraction Laplacian in ``Sym^degree``,
    whose dimension is ``dim Sym^degree - dim Sym^(degree - 2)``.  Over the
    complex numbers it is spanned by powers ``a^degree`` of isotropic
    vectors *a*."""

    laplacian = calcContractionLaplacian(q, degree)
    if degree < 2:
        size = laplacian.shape[1]
        return Subspace(size, np.eye(size, dtype=np.int64))
    return calcKernel(laplacian)
