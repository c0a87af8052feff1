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

"""This module defines the exterior algebra of a quaternionic vector space
with its Hodge star, Kahler forms and metric sl2-triples.

The quaternions act on H = Q^4 with basis (1, i, j, k) by left
multiplication, and on H^m blockwise.  For each complex structure L among
I, J and K, the Kahler form is ``omega_L(x, y) = <L x, y>`` with the
standard inner product.  The exterior algebra has basis ``e^S`` for
subsets S of the coordinates, ordered by degree and then lexicographically,
and the orientation ``e^0 ^ e^1 ^ ... ^ e^(4m-1)`` integrates to 1."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import itertools
from math import comb

import numpy as np

from llvlab import LLVException
from llvlab.exactla import RationalMatrix
from llvlab.graded import GradedVectorSpace, GradedOperator, \
    GradedFrobeniusAlgebra, buildCupOperator, buildHOperator, calcBracket
from llvlab.lefschetz import Sl2Triple

__all__ = ['QuaternionicExteriorModel', 'NotHomogeneous', 'EqualIndices',
           'buildQuaternionModel', 'calcHodgeStar', 'buildMetricTriple',
           'calcWeilCommutator', 'checkQuaternionRelations',
           'QUATERNIONS']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER

QUATERNIONS = ('I', 'J', 'K')

# columns are images of 1, i, j, k under left multiplication
LEFT_MULTIPLICATION = {
    'I': [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    'J': [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    'K': [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
}


class NotHomogeneous(LLVException):

    """Raised when a homogeneous element is expected."""

    pass


class EqualIndices(LLVException):

    """Raised when two distinct complex structures are expected."""

    pass


def _sign(first, second):
    """Return sign of the permutation that sorts ``first + second``."""

    inversions = sum(1 for a in first for b in second if a > b)
    return -1 if inversions % 2 else 1


class QuaternionicExteriorModel(object):

    """Exterior algebra of the dual of H^m with the quaternion action, the
    Hodge star of the standard inner product, and the Kahler forms."""

    def __init__(self, rank=1):

        if not isinstance(rank, int) or rank < 1:
            raise ValueError('rank must be a positive integer')
        self._rank = rank
        dim = 4 * rank
        self._subsets = dict((k, list(itertools.combinations(range(dim), k)))
                             for k in range(dim + 1))
        self._index = dict((k, dict((subset, i) for i, subset
                                    in enumerate(subsets)))
                           for k, subsets in self._subsets.items())
        self._space = GradedVectorSpace([(k, comb(dim, k))
                                         for k in range(dim + 1)], 2 * rank)
        self._algebra = GradedFrobeniusAlgebra(
            self._space, self._buildProducts(), [1], [1],
            'exterior algebra of H^{0}'.format(rank) if rank > 1 else
            'exterior algebra of H')
        self._quaternions = {}
        for name, matrix in LEFT_MULTIPLICATION.items():
            array = np.zeros((dim, dim), np.int64)
            for block in range(rank):
                sel = slice(4 * block, 4 * block + 4)
                array[sel, sel] = matrix
            self._quaternions[name] = RationalMatrix(array)
        self._star = self._buildStar()
        self._triples = {}

    def __repr__(self):

        return '<QuaternionicExteriorModel: rank {0}, {1}-dimensional>'\
            .format(self._rank, len(self._space))

    def _buildProducts(self):

        dim = 4 * self._rank
        products = {}
        for k in range(dim + 1):
            for l in range(dim + 1 - k):
                block = np.zeros((comb(dim, k), comb(dim, l),
                                  comb(dim, k + l)), np.int64)
                target = self._index[k + l]
                for i, first in enumerate(self._subsets[k]):
                    for j, second in enumerate(self._subsets[l]):
                        if set(first).intersection(second):
                            continue
                        union = tuple(sorted(first + second))
                        block[i, j, target[union]] = _sign(first, second)
                products[(k, l)] = RationalMatrix.fromNumerators(block)
        return products

    def _buildStar(self):

        dim = 4 * self._rank
        space = self._space
        size = len(space)
        array = np.zeros((size, size), np.int64)
        for k, subsets in self._subsets.items():
            for i, subset in enumerate(subsets):
                rest = tuple(x for x in range(dim) if x not in subset)
                row = space.getSlice(dim - k).start + \
                    self._index[dim - k][rest]
                col = space.getSlice(k).start + i
                array[row, col] = _sign(subset, rest)
        return RationalMatrix.fromNumerators(array)

    def getRank(self):
        """Return quaternionic rank m of H^m."""

        return self._rank

    def getAlgebra(self):
        """Return the exterior algebra."""

        return self._algebra

    def getSpace(self):
        """Return the graded vector space of the exterior algebra."""

        return self._space

    def getSubsets(self, degree):
        """Return index subsets labelling basis vectors of *degree*."""

        return list(self._subsets[degree])

    def getQuaternion(self, name):
        """Return matrix of complex structure *name* on H^m."""

        return self._quaternions[_checkName(name)]

    def getOmega(self, name):
        """Return Kahler form ``<L(-), ->`` of complex structure *name* as
        coordinates in the degree 2 component."""

        matrix = self._quaternions[_checkName(name)]
        pairs = self._subsets[2]
        return RationalMatrix([matrix[b, a] for a, b in pairs])

    def getStar(self):
        """Return matrix of the Hodge star on the whole exterior algebra."""

        return self._star

    def getTriple(self, name):
        """Return the metric :class:`.Sl2Triple` of complex structure
        *name*, see :func:`buildMetricTriple`."""

        name = _checkName(name)
        if name not in self._triples:
            self._triples[name] = buildMetricTriple(self, name)
        return self._triples[name]


def _checkName(name):

    if not isinstance(name, str) or name.upper() not in QUATERNIONS:
        raise ValueError('name must be one of I, J, K')
    return name.upper()


def buildQuaternionModel(rank=1):
    """Return the :class:`QuaternionicExteriorModel` of H^*rank*.  Rank 1
    gives a 16-dimensional algebra with shift 2.

    >>> model = buildQuaternionModel()
    >>> len(model.getAlgebra())
    16"""

    return QuaternionicExteriorModel(rank)


def calcHodgeStar(model, element):
    """Return Hodge star of homogeneous *element*, given by coordinates in
    the whole exterior algebra.  :exc:`NotHomogeneous` is raised for
    elements with components in more than one degree."""

    if not isinstance(model, QuaternionicExteriorModel):
        raise TypeError('model must be a QuaternionicExteriorModel')
    element = element if isinstance(element, RationalMatrix) else \
        RationalMatrix(element)
    space = model.getSpace()
    if element.shape != (len(space),):
        raise ValueError('element must have {0} entries'.format(len(space)))
    degrees = np.unique(space.getDegreeArray()[
        element._getNumerators() != 0])
    if len(degrees) > 1:
        raise NotHomogeneous('element has components in degrees {0}'
                             .format(', '.join(str(d) for d in degrees)))
    return model.getStar() @ element


def buildMetricTriple(model, name):
    """Return the :class:`.Sl2Triple` of Kahler form *name* in which *f*
    is the adjoint ``star^-1 e star`` of multiplication *e* by the form."""

    if not isinstance(model, QuaternionicExteriorModel):
        raise TypeError('model must be a QuaternionicExteriorModel')
    omega = model.getOmega(name)
    algebra = model.getAlgebra()
    e = buildCupOperator(algebra, omega)
    star = model.getStar()
    # star is a signed permutation, so its inverse is its transpose
    f = GradedOperator(model.getSpace(),
                       star.T @ e.getMatrix() @ star, -2)
    return Sl2Triple(e, buildHOperator(algebra), f, omega)


def calcWeilCommutator(model, first, second):
    """Return ``K = [e_first, f_second]`` for distinct complex structures
    *first* and *second*."""

    first, second = _checkName(first), _checkName(second)
    if first == second:
        raise EqualIndices('complex structures must be distinct')
    return calcBracket(model.getTriple(first).getE(),
                       model.getTriple(second).getF())


def checkQuaternionRelations(model):
    """Return a list of ``(relation, passed)`` pairs for the bracket
    relations among h, e_L, f_L and the Weil commutators ``K_LM``, for all
    complex structures L, M and N that are pairwise distinct."""

    h = buildHOperator(model.getSpace())
    e = dict((name, model.getTriple(name).getE()) for name in QUATERNIONS)
    f = dict((name, model.getTriple(name).getF()) for name in QUATERNIONS)
    weil = dict(((a, b), calcWeilCommutator(model, a, b))
                for a, b in itertools.permutations(QUATERNIONS, 2))
    results = []

    def add(relation, passed):
        results.append((relation, bool(passed)))

    for a in QUATERNIONS:
        add('[e_{0}, f_{0}] = h'.format(a), calcBracket(e[a], f[a]) == h)
    for a in QUATERNIONS:
        add('[h, e_{0}] = 2e_{0}'.format(a), calcBracket(h, e[a]) == e[a] * 2)
    for a in QUATERNIONS:
        add('[h, f_{0}] = -2f_{0}'.format(a),
            calcBracket(h, f[a]) == f[a] * -2)
    for a, b, c in itertools.permutations(QUATERNIONS):
        add('[K_{0}{1}, K_{1}{2}] = 2K_{0}{2}'.format(a, b, c),
            calcBracket(weil[a, b], weil[b, c]) == weil[a, c] * 2)
    for a, b in itertools.permutations(QUATERNIONS, 2):
        add('[K_{0}{1}, h] = 0'.format(a, b),
            calcBracket(weil[a, b], h).isZero())
    for a, b in itertools.permutations(QUATERNIONS, 2):
        add('[K_{0}{1}, e_{1}] = 2e_{0}'.format(a, b),
            calcBracket(weil[a, b], e[b]) == e[a] * 2)
    for a, b in itertools.permutations(QUATERNIONS, 2):
        add('[K_{0}{1}, f_{1}] = 2f_{0}'.format(a, b),
            calcBracket(weil[a, b], f[b]) == f[a] * 2)
    for a, b, c in itertools.permutations(QUATERNIONS):
        add('[K_{0}{1}, e_{2}] = 0'.format(a, b, c),
            calcBracket(weil[a, b], e[c]).isZero())
    for a, b, c in itertools.permutations(QUATERNIONS):
        add('[K_{0}{1}, f_{2}] = 0'.format(a, b, c),
            calcBracket(weil[a, b], f[c]).isZero())
    return results
