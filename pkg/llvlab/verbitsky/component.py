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

"""This module defines the Verbitsky component, the quotient of the
symmetric algebra of a quadratic space by the ideal generated by powers
``a^(n+1)`` of isotropic vectors, as an explicit graded Frobenius algebra.

Two constructions are provided.  With ``method='ideal'``, the ideal is
built degree by degree from the harmonic subspace of ``Sym^(n+1)``, and its
vanishing above degree 2n is checked.  With ``method='pairing'``, each
component is the quotient of ``Sym^k`` by the kernel of the pairing with
``Sym^(2n-k)`` given by the functional with ``integral of a^2n = q(a)^n``.
The latter only involves matrices with one side of size ``dim Sym^k`` for
k at most n, and is used for large ranks.  In both cases, quotients are
presented by monomials whose classes form a basis, the non-pivots of the
ideal or the pivots of the pairing, both read off canonical echelon forms."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

from math import factorial

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix, Echelon, Subspace, calcRREF, \
    calcKernel
from llvlab.exactla.rational import _toObject
from llvlab.graded import GradedVectorSpace, GradedFrobeniusAlgebra
from llvlab.liealg import QuadraticSpace

from .sympower import SymmetricPower, calcHarmonicSubspace, checkSize

__all__ = ['VerbitskyComponent', 'TruncationFailure', 'NotIsotropic',
           'buildVerbitskyComponent', 'checkPerfectPairing',
           'checkIsotropicPower', 'calcFujikiIntegrals']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER

METHODS = ('ideal', 'pairing')


class TruncationFailure(LLVException):

    """Raised when the quotient does not vanish above degree 2n or does not
    have a one dimensional top component."""

    pass


class NotIsotropic(LLVException):

    """Raised when an isotropic vector is expected."""

    pass


class VerbitskyComponent(object):

    """Quotient ``A = Sym(V) / I`` with components A_k for ``k = 0..2n`` in
    cohomological degree 2k, presented by complements of monomials."""

    def __init__(self, q, n, method, powers, free, forms, ideals, algebra):

        self._q = q
        self._n = n
        self._method = method
        self._powers = powers
        self._free = free
        self._forms = forms
        self._ideals = ideals
        self._algebra = algebra

    def __repr__(self):

        return '<VerbitskyComponent: rank {0}, n={1}, dims {2}>'.format(
            len(self._q), self._n, self.getDims())

    def __len__(self):

        return len(self._algebra)

    def getQuadraticSpace(self):
        """Return the quadratic space."""

        return self._q

    def getN(self):
        """Return *n*, half the complex dimension of the top degree."""

        return self._n

    def getMethod(self):
        """Return the construction method."""

        return self._method

    def getAlgebra(self):
        """Return the graded Frobenius algebra with shift 2n."""

        return self._algebra

    def getDims(self):
        """Return list of dimensions of A_0, ..., A_2n."""

        return [len(self._free[k]) for k in range(2 * self._n + 1)]

    def getSymmetricPower(self, degree):
        """Return the :class:`.SymmetricPower` of given *degree*."""

        if degree < 0 or degree >= len(self._powers):
            raise ValueError('degree must be between 0 and {0}'
                             .format(len(self._powers) - 1))
        return self._powers[degree]

    def getBasisMonomials(self, degree):
        """Return monomials whose classes form the basis of A_degree."""

        monomials = self._powers[degree].getMonomials()
        return [monomials[i] for i in self._free[degree]]

    def getNormalFormMatrix(self, degree):
        """Return matrix mapping ``Sym^degree`` onto coordinates in
        A_degree."""

        return self._forms[degree]

    def calcNormalForm(self, degree, vector):
        """Return coordinates in A_degree of the class of *vector*, given in
        the monomial basis of ``Sym^degree``."""

        if degree > 2 * self._n:
            return RationalMatrix.zeros((0,))
        return self._forms[degree] @ vector

    def getIdeal(self, degree):
        """Return the degree *degree* piece of the ideal as a
        :class:`.Subspace` of ``Sym^degree``."""

        size = len(SymmetricPower(self._q, degree))
        if degree <= self._n:
            return Subspace(size)
        if degree in self._ideals:
            return Subspace.fromEchelon(self._ideals[degree])
        if degree > 2 * self._n:
            return Subspace(size, np.eye(size, dtype=np.int64))
        return calcKernel(self._forms[degree])


def _normalForms(echelon):
    """Return non-pivot columns and the matrix sending a vector to its
    coordinates on them modulo the span of *echelon*."""

    size = echelon.numColumns()
    pivots = echelon.getPivots()
    used = set(pivots)
    free = [i for i in range(size) if i not in used]
    num = echelon._getNumerators()
    den = echelon.getDenominator()
    forms = np.zeros((len(free), size), dtype=object)
    for row, col in enumerate(free):
        forms[row, col] = den
    if pivots:
        forms[:, pivots] = -_toObject(num[:, free]).T
    return free, RationalMatrix.fromNumerators(forms, den)


def _buildIdeal(q, n, powers):
    """Return ideal pieces in degrees n+1 to 2n+1 as echelon builders."""

    harmonic = calcHarmonicSubspace(q, n + 1)
    LOGGER.debug('Harmonic subspace of Sym^{0} has dimension {1}.'
                 .format(n + 1, len(harmonic)))
    ideals = {n + 1: harmonic.getEchelon()}
    LOGGER.progress('Building ideal pieces...', n)
    for degree in range(n + 2, 2 * n + 2):
        rows = ideals[degree - 1]._getNumerators()
        echelon = Echelon(len(powers[degree]))
        for variable in range(len(q)):
            if echelon.isFull() or not len(rows):
                break
            index = powers[degree - 1].calcShiftIndices(variable,
                                                        powers[degree])
            shifted = np.zeros((len(rows), len(powers[degree])),
                               dtype=rows.dtype)
            shifted[:, index] = rows
            echelon.add(shifted)
        ideals[degree] = echelon
        LOGGER.update(degree - n - 1)
    LOGGER.clear()
    return ideals


def calcFujikiIntegrals(q, n):
    """Return a dictionary mapping exponent tuples of degree 2n monomials
    to integers proportional to their integrals under the functional with
    ``integral of a^2n = q(a)^n``.  Only nonzero values are listed."""

    if not isinstance(q, QuadraticSpace):
        q = QuadraticSpace(q)
    num = q.getGram()._getNumerators()
    dim = len(q)
    quadric = {}
    for i, j in zip(*np.nonzero(num)):
        exponent = [0] * dim
        exponent[i] += 1
        exponent[j] += 1
        key = tuple(exponent)
        quadric[key] = quadric.get(key, 0) + int(num[i, j])
    power = {(0,) * dim: 1}
    for _ in range(n):
        product = {}
        for first, a in power.items():
            for second, b in quadric.items():
                key = tuple(x + y for x, y in zip(first, second))
                product[key] = product.get(key, 0) + a * b
        power = dict((key, value) for key, value in product.items()
                     if value)
    # integral of x^e is the coefficient of a^e divided by (2n)!/e!
    integrals = {}
    for key, value in power.items():
        weight = 1
        for exponent in key:
            weight *= factorial(exponent)
        integrals[key] = value * weight
    return integrals


def _exponents(monomial, dim):

    exponent = [0] * dim
    for i in monomial:
        exponent[i] += 1
    return tuple(exponent)


def _buildPairing(q, n, powers):
    """Return basis monomial indices and normal form matrices of the
    quotients by kernels of the Fujiki pairing."""

    integrals = calcFujikiIntegrals(q, n)
    dim = len(q)
    free = {}
    forms = {}
    LOGGER.progress('Building pairing quotients...', 2 * n + 1)
    for degree in range(2 * n + 1):
        rows = powers[2 * n - degree].getMonomials()
        cols = powers[degree].getMonomials()
        pairing = np.zeros((len(rows), len(cols)), dtype=object)
        for i, first in enumerate(rows):
            for j, second in enumerate(cols):
                pairing[i, j] = integrals.get(
                    _exponents(first + second, dim), 0)
        rref, pivots = calcRREF(RationalMatrix.fromNumerators(pairing))
        free[degree] = pivots
        forms[degree] = rref[:len(pivots)] if pivots else \
            RationalMatrix.zeros((0, len(cols)))
        LOGGER.update(degree + 1)
    LOGGER.clear()
    return free, forms


def _checkPairingIdeal(q, n, powers, forms):
    """Raise :exc:`TruncationFailure` unless the harmonic subspace of
    ``Sym^(n+1)`` is the kernel of the pairing in that degree and the
    pairing is perfect up to degree n."""

    for degree in range(n + 1):
        if forms[degree].shape[0] != len(powers[degree]):
            raise TruncationFailure('pairing is degenerate on Sym^{0}'
                                    .format(degree))
    harmonic = calcHarmonicSubspace(q, n + 1)
    if harmonic.isZero():
        raise TruncationFailure('ideal has no generators in degree {0}, '
                                'quotient does not vanish in degree {1}'
                                .format(n + 1, 2 * n + 1))
    kernel_dim = len(powers[n + 1]) - forms[n + 1].shape[0]
    if len(harmonic) != kernel_dim or (len(harmonic) and not
            (forms[n + 1] @ harmonic.getBasis().T).isZero()):
        raise TruncationFailure('harmonic subspace of Sym^{0} is not the '
                                'kernel of the pairing'.format(n + 1))


def _buildAlgebra(q, n, powers, free, forms, title):

    top = 2 * n
    space = GradedVectorSpace([(2 * k, len(free[k]))
                               for k in range(top + 1)], top)
    bases = dict((k, [powers[k].getMonomials()[i] for i in free[k]])
                 for k in range(top + 1))
    products = {}
    for k in range(top + 1):
        for l in range(top + 1 - k):
            if not bases[k] or not bases[l] or not bases[k + l]:
                continue
            target = powers[k + l]
            index = np.array([[target.getIndex(a + b) for b in bases[l]]
                              for a in bases[k]], dtype=int)
            form = forms[k + l]
            block = form._getNumerators()[:, index].transpose(1, 2, 0)
            products[(2 * k, 2 * l)] = RationalMatrix.fromNumerators(
                block.copy(), form.getDenominator())
    if len(bases[top]) != 1:
        raise TruncationFailure('top component has dimension {0}, not 1'
                                .format(len(bases[top])))
    if title is None:
        title = 'Verbitsky component of {0}, n={1}'.format(
            q.getTitle() or 'rank {0}'.format(len(q)), n)
    return GradedFrobeniusAlgebra(space, products, [1], [1], title)


def buildVerbitskyComponent(q, n, method='ideal', title=None):
    """Return the :class:`VerbitskyComponent` of nondegenerate *q* with top
    degree 4*n*.  Its component A_k in degree 2k has the dimension of
    ``Sym^min(k, 2n-k)``.  :exc:`.Degenerate` is raised for degenerate *q*,
    :exc:`.SizeLimitExceeded` for symmetric powers above the *max_sym_dim*
    option, and :exc:`TruncationFailure` when the quotient fails to vanish
    above degree 2n.

    >>> component = buildVerbitskyComponent(buildStandardForm(5), 2)
    >>> component.getDims()
    [1, 5, 15, 5, 1]"""

    if not isinstance(q, QuadraticSpace):
        q = QuadraticSpace(q)
    if not isinstance(n, int) or n < 1:
        raise ValueError('n must be a positive integer')
    if method not in METHODS:
        raise ValueError('method must be one of ' + ', '.join(METHODS))
    q.checkNondegenerate()
    highest = 2 * n + 1 if method == 'ideal' else 2 * n
    checkSize(len(q), highest)
    LOGGER.timeit()
    powers = [SymmetricPower(q, degree) for degree in range(highest + 1)]
    if method == 'ideal':
        ideals = _buildIdeal(q, n, powers)
        if not ideals[2 * n + 1].isFull():
            raise TruncationFailure('quotient does not vanish in degree {0}'
                                    .format(2 * n + 1))
        free = {}
        forms = {}
        for degree in range(2 * n + 1):
            if degree <= n:
                free[degree] = list(range(len(powers[degree])))
                forms[degree] = RationalMatrix.identity(len(powers[degree]))
            else:
                free[degree], forms[degree] = _normalForms(ideals[degree])
    else:
        ideals = {}
        free, forms = _buildPairing(q, n, powers)
        _checkPairingIdeal(q, n, powers, forms)
    algebra = _buildAlgebra(q, n, powers, free, forms, title)
    LOGGER.timing('Verbitsky component with dimensions {0} was built in '
                  '%.2fs.'.format([len(free[k]) for k in range(2 * n + 1)]))
    return VerbitskyComponent(q, n, method, powers, free, forms, ideals,
                              algebra)


def checkPerfectPairing(component):
    """Return **True** when the top component is one dimensional and the
    products ``A_k x A_(2n-k) -> A_2n`` followed by the integral are perfect
    pairings.  *component* may be a :class:`VerbitskyComponent` or any
    :class:`.GradedFrobeniusAlgebra`."""

    algebra = component.getAlgebra() if \
        isinstance(component, VerbitskyComponent) else component
    if not isinstance(algebra, GradedFrobeniusAlgebra):
        raise TypeError('component must be a VerbitskyComponent or a '
                        'GradedFrobeniusAlgebra')
    space = algebra.getSpace()
    top = space.getTopDegree()
    if space.getDim(top) != 1 or algebra.getIntegral().isZero():
        return False
    for degree in space.getDegrees():
        dim = space.getDim(degree)
        if space.getDim(top - degree) != dim:
            return False
        if algebra.getPairingMatrix(degree).rank() != dim:
            return False
    return True


def checkIsotropicPower(component, vector):
    """Return **True** when ``a^(n+1)`` vanishes in A_(n+1) for vector *a*
    with ``q(a, a) = 0``.  :exc:`NotIsotropic` is raised otherwise."""

    if not isinstance(component, VerbitskyComponent):
        raise TypeError('component must be a VerbitskyComponent')
    q = component.getQuadraticSpace()
    if q(vector) != 0:
        raise NotIsotropic('q(a, a) = {0} is not zero'.format(q(vector)))
    degree = component.getN() + 1
    power = component.getSymmetricPower(degree).calcPower(vector)
    return component.calcNormalForm(degree, power).isZero()
