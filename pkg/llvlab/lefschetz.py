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

"""This module defines the Lefschetz property of degree 2 operators and
the Jacobson-Morozov construction of sl2-triples.

A degree 2 operator *e* on a graded space with shift N is Lefschetz when
``e^k: V_(N-k) -> V_(N+k)`` is an isomorphism for every k > 0.  For such
*e* there is a unique degree -2 operator *f* with ``[e, f] = h``, where *h*
acts on V_k as ``(k - N) id``.  Here *f* is found by solving ``[e, f] = h``
as one linear system in the entries of the blocks of *f*, which also
verifies its uniqueness.

=============================  ================================================
Function                       Description
=============================  ================================================
:func:`checkLefschetz`         test the Lefschetz property of an operator
:func:`calcJacobsonMorozovDual`  solve for the dual operator *f*
:func:`buildSl2Triple`         the triple of a degree 2 class of an algebra
:func:`sampleClasses`          seeded Lefschetz or isotropic degree 2 classes
:func:`calcLefschetzLocus`     split a grid of classes by the property
:func:`findLefschetzBasis`     basis of V_2 made of Lefschetz classes
:func:`buildLLVTriples`        sl2-triples of a list of classes
:func:`calcLLVAlgebra`         Lie algebra generated by the triples
=============================  ================================================
"""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import itertools

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix, Echelon
from llvlab.exactla.rational import _compact, _toObject
from llvlab.graded import GradedOperator, GradedFrobeniusAlgebra, \
    WrongDegree, buildCupOperator, buildHOperator, calcBracket
from llvlab.liealg import calcLieClosure

__all__ = ['Sl2Triple', 'NotLefschetz', 'NonUniqueDual', 'checkLefschetz',
           'calcJacobsonMorozovDual', 'buildSl2Triple', 'sampleClasses',
           'calcLefschetzLocus', 'findLefschetzBasis', 'buildLLVTriples',
           'calcLLVAlgebra']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER


class NotLefschetz(LLVException):

    """Raised when ``[e, f] = h`` has no solution."""

    pass


class NonUniqueDual(LLVException):

    """Raised when ``[e, f] = h`` has more than one solution."""

    pass


class Sl2Triple(object):

    """Operators *e*, *h* and *f* of degrees 2, 0 and -2."""

    def __init__(self, e, h, f, element=None):

        for name, op, degree in (('e', e, 2), ('h', h, 0), ('f', f, -2)):
            if not isinstance(op, GradedOperator):
                raise TypeError('{0} must be a GradedOperator'.format(name))
            if not op.isZero() and op.getDegree() != degree:
                raise WrongDegree('{0} must have degree {1}'
                                  .format(name, degree))
        self._e = e
        self._h = h
        self._f = f
        self._element = element

    def __repr__(self):

        return '<Sl2Triple: on {0}-dimensional space>'.format(
            len(self._e.getSpace()))

    def __iter__(self):

        yield self._e
        yield self._h
        yield self._f

    def getE(self):
        """Return the degree 2 operator."""

        return self._e

    def getH(self):
        """Return the grading operator."""

        return self._h

    def getF(self):
        """Return the degree -2 operator."""

        return self._f

    def getElement(self):
        """Return the degree 2 class that defines *e*, if known."""

        return self._element

    def checkRelations(self):
        """Return **True** when ``[e, f] = h``, ``[h, e] = 2e`` and
        ``[h, f] = -2f`` hold exactly."""

        e, h, f = self._e, self._h, self._f
        return (calcBracket(e, f) == h and calcBracket(h, e) == e * 2 and
                calcBracket(h, f) == f * -2)


def _checkDegreeTwo(e):

    if not isinstance(e, GradedOperator):
        raise TypeError('e must be a GradedOperator')
    if not e.isZero() and e.getDegree() != 2:
        raise WrongDegree('e must have degree 2')


def checkLefschetz(e):
    """Return **True** when degree 2 operator *e* has the Lefschetz
    property, i.e. ``e^k: V_(N-k) -> V_(N+k)`` is bijective for each k > 0
    with V_(N-k) nonzero."""

    _checkDegreeTwo(e)
    space = e.getSpace()
    shift = space.getShift()
    for degree in space.getDegrees():
        if degree >= shift:
            continue
        k = shift - degree
        dim = space.getDim(degree)
        if space.getDim(shift + k) != dim or e.isZero():
            return False
        if e.getDegree() is None:
            return False
        power = RationalMatrix.identity(dim)
        for step in range(k):
            power = e.getBlock(degree + 2 * step) @ power
        if power.rank() != dim:
            return False
    return True


def _unknownLayout(space):
    """Return offsets of the unknown blocks f_k: V_k -> V_(k-2)."""

    layout = {}
    offset = 0
    for degree in space.getDegrees():
        if space.hasDegree(degree - 2):
            layout[degree] = offset
            offset += space.getDim(degree - 2) * space.getDim(degree)
    return layout, offset


def _blockNumerators(num, space, target, source):

    return num[space.getSlice(target), space.getSlice(source)]


def _equationRows(e, degree, layout, nunknowns):
    """Return integer rows of ``e f - f e = h`` on V_degree, scaled by the
    denominator of *e*, with the right hand side as last column."""

    space = e.getSpace()
    num = e.getMatrix()._getNumerators()
    den = e.getMatrix().getDenominator()
    dim = space.getDim(degree)
    rows = np.zeros((dim * dim, nunknowns + 1), dtype=object)
    eye = _toObject(np.eye(dim, dtype=np.int64))
    if degree in layout:
        below = _blockNumerators(num, space, degree, degree - 2)
        start = layout[degree]
        width = space.getDim(degree - 2) * dim
        rows[:, start:start + width] = np.kron(_toObject(below), eye)
    if degree + 2 in layout:
        above = _blockNumerators(num, space, degree + 2, degree)
        start = layout[degree + 2]
        width = dim * space.getDim(degree + 2)
        rows[:, start:start + width] -= np.kron(eye, _toObject(above).T)
    weight = degree - space.getShift()
    rows[:, nunknowns] = (den * weight * eye).ravel()
    return _compact(rows)


def calcJacobsonMorozovDual(e):
    """Return the unique degree -2 operator *f* with ``[e, f] = h`` for a
    Lefschetz operator *e* of degree 2.  The blocks of *f* are flattened
    into one vector of unknowns and the equations are added degree by
    degree to an echelon basis of the augmented system.  :exc:`NotLefschetz`
    is raised when the system is inconsistent and :exc:`NonUniqueDual` when
    its solution space is positive dimensional.

    Once the unknowns are determined, remaining equations are not reduced
    and the solution is instead verified by computing ``[e, f]``."""

    _checkDegreeTwo(e)
    space = e.getSpace()
    h = buildHOperator(space)
    layout, nunknowns = _unknownLayout(space)
    echelon = Echelon(nunknowns + 1)
    for degree in space.getDegrees():
        if len(echelon) == nunknowns:
            break
        echelon.add(_equationRows(e, degree, layout, nunknowns))
        pivots = echelon.getPivots()
        if pivots and pivots[-1] == nunknowns:
            raise NotLefschetz('[e, f] = h has no solution, e is not '
                               'Lefschetz')
    pivots = echelon.getPivots()
    if pivots and pivots[-1] == nunknowns:
        raise NotLefschetz('[e, f] = h has no solution, e is not Lefschetz')
    if len(pivots) < nunknowns:
        raise NonUniqueDual('[e, f] = h has a {0}-dimensional space of '
                            'solutions'.format(nunknowns - len(pivots)))
    solution = echelon._getNumerators()[:, nunknowns]
    n = len(space)
    matrix = np.zeros((n, n), dtype=object)
    for degree, start in layout.items():
        rows = space.getSlice(degree - 2)
        cols = space.getSlice(degree)
        shape = (space.getDim(degree - 2), space.getDim(degree))
        width = shape[0] * shape[1]
        matrix[rows, cols] = _toObject(
            solution[start:start + width]).reshape(shape)
    f = GradedOperator(space, RationalMatrix.fromNumerators(
        _compact(matrix), echelon.getDenominator()), -2)
    if calcBracket(e, f) != h:
        raise NotLefschetz('[e, f] = h has no solution, e is not Lefschetz')
    return f


def buildSl2Triple(algebra, element):
    """Return the :class:`Sl2Triple` ``(e_a, h, f_a)`` of degree 2 class
    *element* of *algebra*.  :exc:`NotLefschetz` is raised when ``e_a``
    is not Lefschetz."""

    if not isinstance(algebra, GradedFrobeniusAlgebra):
        raise TypeError('algebra must be a GradedFrobeniusAlgebra')
    e = buildCupOperator(algebra, element)
    f = calcJacobsonMorozovDual(e)
    return Sl2Triple(e, buildHOperator(algebra), f, element)


def _quadratic(gram, first, second=None):

    second = first if second is None else second
    return int(np.dot(first, np.dot(gram, second)))


def _findIsotropic(gram):
    """Return an integer isotropic vector of the form e_i or e_i +- e_j."""

    n = len(gram)
    for i in range(n):
        if gram[i, i] == 0 and np.any(gram[i]):
            vector = np.zeros(n, dtype=object)
            vector[i] = 1
            return vector
    for i, j in itertools.combinations(range(n), 2):
        for sign in (1, -1):
            vector = np.zeros(n, dtype=object)
            vector[i], vector[j] = 1, sign
            if _quadratic(gram, vector) == 0:
                return vector
    return None


def sampleClasses(algebra, count, seed=0, isotropic=False, bound=2,
                  gram=None):
    """Return *count* seeded integer degree 2 classes of *algebra*, as
    coordinate vectors in V_2.  By default, classes with the Lefschetz
    property are drawn from ``[-bound, bound]``.  When *isotropic* is true,
    nonzero classes with ``q(a, a) = 0`` are returned instead, where *q*
    is given by *gram* or, for algebras of top degree 4, by the pairing of
    V_2 with itself.  Isotropic classes are obtained from random vectors
    *v* and one isotropic vector *u* as ``q(v, v) u - 2 q(u, v) v``."""

    space = algebra.getSpace()
    dim = space.getDim(2)
    if not dim:
        raise WrongDegree('algebra has no degree 2 component')
    random = np.random.RandomState(seed)
    classes = []
    if not isotropic:
        attempts = 0
        while len(classes) < count and attempts < 50 * count:
            attempts += 1
            vector = random.randint(-bound, bound + 1, dim)
            if not vector.any():
                continue
            if checkLefschetz(buildCupOperator(algebra, vector)):
                classes.append(RationalMatrix(vector))
        if len(classes) < count:
            LOGGER.warning('Only {0} Lefschetz classes were found in {1} '
                           'attempts.'.format(len(classes), attempts))
        return classes

    if gram is None:
        if space.getTopDegree() != 4:
            raise ValueError('gram must be given for algebras whose top '
                             'degree is not 4')
        gram = algebra.getPairingMatrix(2)
    gram = gram if isinstance(gram, RationalMatrix) else RationalMatrix(gram)
    if gram.shape != (dim, dim):
        raise ValueError('gram must have shape ({0}, {0})'.format(dim))
    num = _toObject(gram._getNumerators())
    isotropic = _findIsotropic(num)
    if isotropic is None:
        raise ValueError('no isotropic vector of the form e_i or e_i +- e_j '
                         'was found')
    attempts = 0
    while len(classes) < count and attempts < 50 * count:
        attempts += 1
        vector = random.randint(-bound, bound + 1, dim).astype(object)
        alpha = (_quadratic(num, vector) * isotropic -
                 2 * _quadratic(num, isotropic, vector) * vector)
        if not np.any(alpha):
            continue
        classes.append(RationalMatrix(alpha))
    return classes


def calcLefschetzLocus(algebra, bound=1):
    """Return Lefschetz and non-Lefschetz nonzero integer classes with
    coordinates in ``[-bound, bound]``, as two lists of tuples."""

    dim = algebra.getSpace().getDim(2)
    lefschetz = []
    others = []
    for vector in itertools.product(range(-bound, bound + 1), repeat=dim):
        if not any(vector):
            continue
        e = buildCupOperator(algebra, list(vector))
        if checkLefschetz(e):
            lefschetz.append(vector)
        else:
            others.append(vector)
    return lefschetz, others


def _basisCandidates(dim):
    """Yield e_i, then e_i + e_j and e_i - e_j for i < j."""

    for i in range(dim):
        vector = np.zeros(dim, dtype=np.int64)
        vector[i] = 1
        yield vector
    for i, j in itertools.combinations(range(dim), 2):
        for sign in (1, -1):
            vector = np.zeros(dim, dtype=np.int64)
            vector[i], vector[j] = 1, sign
            yield vector


def findLefschetzBasis(algebra):
    """Return a basis of V_2 that consists of Lefschetz classes, chosen
    among the standard basis vectors and their pairwise sums and
    differences, as a list of :class:`.RationalMatrix` vectors.
    :exc:`NotLefschetz` is raised when these do not span V_2."""

    dim = algebra.getSpace().getDim(2)
    if not dim:
        raise WrongDegree('algebra has no degree 2 component')
    echelon = Echelon(dim)
    basis = []
    for vector in _basisCandidates(dim):
        if echelon.contains(vector):
            continue
        if checkLefschetz(buildCupOperator(algebra, vector)):
            echelon.add(vector)
            basis.append(RationalMatrix(vector))
            if echelon.isFull():
                break
    if not echelon.isFull():
        raise NotLefschetz('Lefschetz classes of the form e_i or e_i +- e_j '
                           'span {0} of {1} dimensions'
                           .format(len(echelon), dim))
    return basis


def buildLLVTriples(algebra, classes=None):
    """Return :class:`Sl2Triple` instances of *classes*, by default of the
    basis found by :func:`findLefschetzBasis`."""

    if classes is None:
        classes = findLefschetzBasis(algebra)
    return [buildSl2Triple(algebra, element) for element in classes]


def calcLLVAlgebra(algebra, triples=None, title=None):
    """Return the Lie algebra generated by *e* and *f* of sl2-triples, by
    default those of :func:`buildLLVTriples`.  Since ``e_a`` is linear in
    *a* and ``f_a`` is proportional to the dual of *a*, triples of a basis
    of Lefschetz classes generate the same algebra as all triples."""

    if triples is None:
        triples = buildLLVTriples(algebra)
    if title is None:
        title = 'LLV algebra of ' + algebra.getTitle()
    generators = []
    for triple in triples:
        generators.extend([triple.getE(), triple.getF()])
    return calcLieClosure(generators, title)
