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

"""This module defines Lie algebras of operators on a graded vector space,
their closure under brackets, degree decomposition, derived subalgebras,
structure constants and Killing forms.

An operator algebra is stored as the canonical echelon basis of a subspace
of the flattened ``D x D`` matrices, where D is the dimension of the graded
space.  Since a reduced row echelon basis is unique, two algebras are equal
exactly when their bases are identical, whatever the order in which
generators were given."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

from math import comb

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix, Echelon, Subspace, calcSignature, \
    calcKernel
from llvlab.exactla.rational import _product, _lincomb, _toObject
from llvlab.graded import GradedVectorSpace, GradedOperator, WrongDegree, \
    buildHOperator

from .quadratic import QuadraticSpace

__all__ = ['LieOperatorAlgebra', 'NotDirectSum', 'calcLieClosure',
           'calcDegreePieces', 'calcDerivedSubalgebra',
           'calcTracelessSubalgebra', 'decomposeDegreeZero',
           'calcStructureConstants', 'calcKillingForm',
           'calcKillingSignature', 'buildOrthogonalAlgebra',
           'predictLLVDims']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER


class NotDirectSum(LLVException):

    """Raised when the degree 0 piece does not split as g0' + Qh."""

    pass


def _flatten(space, operators):
    """Return integer rows of flattened operator matrices.  Each row is
    only defined up to a positive factor."""

    n = len(space)
    rows = []
    for op in operators:
        if isinstance(op, GradedOperator):
            if op.getSpace() != space:
                raise ValueError('operators act on different spaces')
            op = op.getMatrix()
        elif not isinstance(op, RationalMatrix):
            op = RationalMatrix(op)
        if op.shape != (n, n):
            raise ValueError('operators must have shape ({0}, {0})'
                             .format(n))
        rows.append(_toObject(op._getNumerators()).reshape(-1))
    if not rows:
        return np.zeros((0, n * n), np.int64)
    return np.array(rows, dtype=object)


def _brackets(single, batch):
    """Return integer commutators ``[single, x]`` for each matrix *x* in
    3-D array *batch*."""

    inner = single.shape[0]
    return _lincomb(1, _product(np.matmul, single, batch, inner),
                    -1, _product(np.matmul, batch, single, inner))


class LieOperatorAlgebra(object):

    """Linear span of operators on a :class:`.GradedVectorSpace`.
    Instances built by :func:`calcLieClosure` are closed under brackets;
    instances built directly from *operators* are the plain span, which
    :meth:`checkClosed` can test."""

    def __init__(self, space, operators=None, title=None):

        if not isinstance(space, GradedVectorSpace):
            raise TypeError('space must be a GradedVectorSpace')
        self._space = space
        self._echelon = Echelon(len(space) ** 2)
        self._title = title
        self._pieces = None
        if operators is not None:
            self._echelon.add(_flatten(space, operators))

    @classmethod
    def fromEchelon(cls, space, echelon, title=None):
        """Return algebra spanned by rows of flattened operators held in
        an :class:`.Echelon` builder."""

        if echelon.numColumns() != len(space) ** 2:
            raise ValueError('echelon columns do not match the space')
        new = cls(space, title=title)
        new._echelon = echelon.copy()
        return new

    def __repr__(self):

        return '<LieOperatorAlgebra: {0}dimension {1} on {2}-dimensional ' \
               'space>'.format(self._title + ', ' if self._title else '',
                               len(self), len(self._space))

    def __len__(self):

        return len(self._echelon)

    def __eq__(self, other):

        if not isinstance(other, LieOperatorAlgebra):
            return NotImplemented
        return (self._space == other._space and
                self.getSubspace() == other.getSubspace())

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
        """Return the graded vector space the operators act on."""

        return self._space

    def getDim(self):
        """Return dimension of the algebra."""

        return len(self._echelon)

    def getSubspace(self):
        """Return the algebra as a :class:`.Subspace` of flattened
        matrices."""

        return Subspace.fromEchelon(self._echelon)

    def _getEchelon(self):

        return self._echelon

    def _getMatrices(self):
        """Return basis numerators as an array of shape ``(dim, D, D)``."""

        n = len(self._space)
        return self._echelon._getNumerators().reshape((-1, n, n))

    def getBasis(self):
        """Return canonical basis as a list of :class:`.GradedOperator`
        instances."""

        return _toOperators(self._space, self._echelon)

    def contains(self, operator):
        """Return **True** when *operator* lies in the algebra."""

        return self._echelon.contains(_flatten(self._space, [operator]))

    def getCoordinates(self, operator):
        """Return coordinates of *operator* in the canonical basis."""

        if isinstance(operator, GradedOperator):
            operator = operator.getMatrix()
        return self._echelon.getCoordinates(operator.reshape(-1))

    def checkClosed(self):
        """Return **True** when brackets of all pairs of basis operators
        lie in the algebra."""

        matrices = self._getMatrices()
        for i in range(len(matrices) - 1):
            products = _brackets(matrices[i], matrices[i + 1:])
            if not self._echelon.contains(products.reshape(
                    (len(products), -1))):
                return False
        return True

    def getDegreePieces(self):
        """Return a dictionary mapping degree to the :class:`.Subspace` of
        homogeneous operators of that degree, see
        :func:`calcDegreePieces`."""

        if self._pieces is None:
            self._pieces = calcDegreePieces(self)
        return self._pieces

    def getDegreeDims(self):
        """Return a dictionary mapping degree to piece dimension."""

        return dict((degree, len(piece)) for degree, piece
                    in self.getDegreePieces().items())

    def getDegreeOperators(self, degree):
        """Return basis of the piece of given *degree* as a list of
        :class:`.GradedOperator` instances."""

        piece = self.getDegreePieces().get(degree)
        if piece is None:
            return []
        return _toOperators(self._space, piece.getEchelon(), degree)

    def getDegreeAlgebra(self, degree):
        """Return the piece of given *degree* as a
        :class:`LieOperatorAlgebra`, a subalgebra when *degree* is 0."""

        return LieOperatorAlgebra(self._space,
                                  self.getDegreeOperators(degree))


def _toOperators(space, echelon, degree=None):

    n = len(space)
    den = echelon.getDenominator()
    return [GradedOperator(space, RationalMatrix.fromNumerators(
        row.reshape((n, n)).copy(), den), degree)
        for row in echelon._getNumerators()]


def calcLieClosure(generators, title=None):
    """Return the Lie algebra generated by *generators*, a list of
    :class:`.GradedOperator` instances acting on the same space.

    The generated algebra is the smallest subspace that contains the
    generators and is stable under ``ad s`` for every generator *s*, since
    it is spanned by iterated brackets ``[s1, [s2, [..., sk]]]``.  Starting
    from the span of the generators, brackets of generators with the
    vectors added in the last round are adjoined until nothing new appears.
    The result is returned with its canonical basis, so it does not depend
    on the order of *generators*."""

    generators = list(generators)
    if not generators:
        raise ValueError('at least one generator is required')
    space = generators[0].getSpace() if isinstance(
        generators[0], GradedOperator) else None
    if space is None:
        raise TypeError('generators must be GradedOperator instances')
    n = len(space)
    echelon = Echelon(n * n)
    seeds = echelon.add(_flatten(space, generators))
    seeds = seeds.reshape((-1, n, n))
    frontier = seeds
    rounds = 0
    LOGGER.timeit()
    while len(frontier) and not echelon.isFull():
        rounds += 1
        added = []
        for seed in seeds:
            products = _brackets(seed, frontier)
            new = echelon.add(products.reshape((len(products), -1)))
            if len(new):
                added.append(new.reshape((-1, n, n)))
        if added:
            if any(item.dtype == object for item in added):
                added = [_toObject(item) for item in added]
            frontier = np.concatenate(added)
        else:
            frontier = frontier[:0]
        LOGGER.debug('Lie closure round {0}: dimension {1}.'
                     .format(rounds, len(echelon)))
    LOGGER.timing('Lie closure of dimension {0} was computed in %.2fs.'
                  .format(len(echelon)))
    return LieOperatorAlgebra.fromEchelon(space, echelon, title)


def calcDegreePieces(algebra):
    """Return a dictionary that maps degree *d* to the :class:`.Subspace`
    of flattened operators spanned by the degree *d* parts of basis
    operators of *algebra*.  :exc:`.WrongDegree` is raised when the pieces
    do not add up to the algebra, i.e. the algebra is not graded."""

    if not isinstance(algebra, LieOperatorAlgebra):
        raise TypeError('algebra must be a LieOperatorAlgebra')
    space = algebra.getSpace()
    diff = space._getDifferences().reshape(-1)
    rows = algebra._getEchelon()._getNumerators()
    pieces = {}
    degrees = np.unique(diff[np.any(rows != 0, axis=0)]) if len(rows) else []
    for degree in degrees:
        parts = rows.copy()
        parts[:, diff != degree] = 0
        parts = parts[np.any(parts != 0, axis=1)]
        pieces[int(degree)] = Subspace(len(diff), parts)
    total = sum(len(piece) for piece in pieces.values())
    if total != len(algebra):
        raise WrongDegree('degree parts span a space of dimension {0}, '
                          'algebra is not graded'.format(total))
    return pieces


def calcDerivedSubalgebra(algebra, title=None):
    """Return the derived subalgebra ``[g, g]``, the span of brackets of
    all pairs of basis operators.  It is an ideal of *g*, hence closed."""

    if not isinstance(algebra, LieOperatorAlgebra):
        raise TypeError('algebra must be a LieOperatorAlgebra')
    space = algebra.getSpace()
    n = len(space)
    echelon = Echelon(n * n)
    matrices = algebra._getMatrices()
    for i in range(len(matrices) - 1):
        products = _brackets(matrices[i], matrices[i + 1:])
        echelon.add(products.reshape((len(products), -1)))
    return LieOperatorAlgebra.fromEchelon(space, echelon, title)


def calcTracelessSubalgebra(algebra, title=None):
    """Return the subalgebra of operators in *algebra* with trace zero on
    every component of the graded space.  For an algebra of degree 0
    operators it is an ideal containing ``[g, g]``."""

    if not isinstance(algebra, LieOperatorAlgebra):
        raise TypeError('algebra must be a LieOperatorAlgebra')
    space = algebra.getSpace()
    n = len(space)
    rows = _toObject(algebra._getEchelon()._getNumerators())
    echelon = Echelon(n * n)
    if len(rows):
        diagonals = rows[:, ::n + 1]
        traces = np.array([diagonals[:, space.getSlice(k)].sum(1)
                           for k in space.getDegrees()], dtype=object)
        kernel = calcKernel(RationalMatrix(traces))
        if kernel.getDim():
            coefficients = _toObject(kernel.getBasis()._getNumerators())
            echelon.add(np.dot(coefficients, rows))
    return LieOperatorAlgebra.fromEchelon(space, echelon, title)


def decomposeDegreeZero(algebra, h=None):
    """Return ``(g0', hline)`` where g0' is the derived subalgebra of the
    degree 0 piece g0 of *algebra* and *hline* the :class:`.Subspace`
    spanned by *h*, the grading operator by default.  When ``[g0, g0]`` is
    too small to complement *h*, as for the abelian so(1, 1) of a rank 2
    form, g0' is the part of g0 with trace zero on every component.
    :exc:`NotDirectSum` is raised unless ``g0 = g0' + Qh`` is a direct
    sum."""

    space = algebra.getSpace()
    if h is None:
        h = buildHOperator(space)
    g0 = algebra.getDegreeAlgebra(0)
    derived = calcDerivedSubalgebra(g0)
    hline = Subspace(len(space) ** 2, _flatten(space, [h]))
    if not g0.contains(h):
        raise NotDirectSum('h is not in the degree 0 piece')
    if len(derived) + 1 < len(g0):
        LOGGER.debug("[g0, g0] has dimension {0}, using the traceless part "
                     "of g0 as g0'.".format(len(derived)))
        derived = calcTracelessSubalgebra(g0)
    if derived.contains(h):
        raise NotDirectSum("h lies in g0', the sum is not direct")
    if len(derived) + 1 != len(g0):
        raise NotDirectSum("g0' + Qh has dimension {0}, g0 has dimension "
                           "{1}".format(len(derived) + 1, len(g0)))
    return derived, hline


def calcStructureConstants(algebra):
    """Return structure constants as a :class:`.RationalMatrix` ``C`` of
    shape ``(n, n, n)`` with ``[b_i, b_j] = sum_k C[i, j, k] b_k`` for the
    canonical basis ``b`` of *algebra*, which must be closed."""

    if not isinstance(algebra, LieOperatorAlgebra):
        raise TypeError('algebra must be a LieOperatorAlgebra')
    echelon = algebra._getEchelon()
    dim = len(echelon)
    size = len(algebra.getSpace())
    matrices = _toObject(algebra._getMatrices())
    num = np.zeros((dim, dim, dim), dtype=object)
    for k, pivot in enumerate(echelon.getPivots()):
        row, col = divmod(pivot, size)
        # entry [i, j] is entry (row, col) of b_i b_j
        product = np.dot(matrices[:, row, :], matrices[:, :, col].T)
        num[:, :, k] = product - product.T
    den = echelon.getDenominator()
    return RationalMatrix.fromNumerators(num, den * den)


def calcKillingForm(algebra):
    """Return the Killing form ``K(x, y) = trace(ad x ad y)`` of *algebra*
    in its canonical basis."""

    constants = calcStructureConstants(algebra)
    dim = len(algebra)
    num = _toObject(constants._getNumerators())
    first = num.reshape((dim, dim * dim))
    second = num.transpose(0, 2, 1).reshape((dim, dim * dim))
    den = constants.getDenominator()
    return RationalMatrix.fromNumerators(np.dot(first, second.T), den * den)


def calcKillingSignature(algebra):
    """Return ``(positives, negatives, zeros)`` of the Killing form."""

    return calcSignature(calcKillingForm(algebra))


def buildOrthogonalAlgebra(gram, title=None):
    """Return so(q) for a nondegenerate form with Gram matrix *gram*, as the
    span of ``G^-1 (E_ij - E_ji)`` acting on a space concentrated in
    degree 0.

    >>> calcKillingSignature(buildOrthogonalAlgebra(
    ...     [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    (0, 3, 0)"""

    q = gram if isinstance(gram, QuadraticSpace) else QuadraticSpace(gram)
    inverse = q.getInverse()
    dim = len(q)
    space = GradedVectorSpace([(0, dim)], 0)
    operators = []
    for i in range(dim):
        for j in range(i + 1, dim):
            skew = np.zeros((dim, dim), np.int64)
            skew[i, j], skew[j, i] = 1, -1
            operators.append(inverse @ RationalMatrix(skew))
    if title is None:
        positive, negative, _ = q.getSignature()
        title = 'so({0},{1})'.format(positive, negative)
    return LieOperatorAlgebra(space, operators, title)


def predictLLVDims(rank):
    """Return ``(dim, degree_dims)`` of so(q + U) for a form *q* of *rank*,
    the dimension of the Lie algebra generated by sl2-triples on a model
    whose degree 2 component carries *q*."""

    if isinstance(rank, QuadraticSpace):
        rank = len(rank)
    rank = int(rank)
    if rank < 1:
        raise ValueError('rank must be a positive integer')
    return comb(rank + 2, 2), {-2: rank, 0: comb(rank, 2) + 1, 2: rank}
