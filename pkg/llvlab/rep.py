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

"""This module defines representation theoretic computations for Lie
algebras of operators acting on graded spaces: primitive subspaces,
generated submodules, the subring generated in degree 2 and parity of
Weil type operators.

=================================  ============================================
Function                           Description
=================================  ============================================
:func:`calcPrimitiveSubspace`      kernel of the degree -2 piece
:func:`calcGeneratedSubmodule`     smallest invariant subspace of vectors
:func:`calcVerbitskySubring`       subring generated by degree 2
:func:`checkStability`             invariance of a subspace
:func:`calcWeilOperator`           ``[e_a, f_b]`` of a positive plane
:func:`calcWeilParity`             minimal polynomial report per degree
:func:`checkWeilParity`            ``exp(pi W) = (-1)^k`` on degree k
:func:`checkIrreducibilityWitness` seeded generation test
=================================  ============================================

Irreducibility is only witnessed: every basis vector and a number of
pseudorandom vectors are required to generate the whole space."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab import getWitnessSeed
from llvlab.exactla import RationalMatrix, Echelon, Subspace, calcKernel, \
    calcMinimalPolynomial, multiplyPolynomials, dividePolynomials, \
    formatPolynomial
from llvlab.exactla.rational import _product, _toObject
from llvlab.graded import GradedOperator, GradedFrobeniusAlgebra, \
    WrongDegree, buildCupOperator, calcBracket
from llvlab.lefschetz import buildSl2Triple
from llvlab.liealg import LieOperatorAlgebra
from llvlab.liealg.checks import _asMatrices

__all__ = ['WitnessRecord', 'calcPrimitiveSubspace', 'calcGeneratedSubmodule',
           'calcVerbitskySubring', 'checkStability', 'calcWeilOperator',
           'calcWeilParity', 'checkWeilParity', 'checkIrreducibilityWitness']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER


def _stack(arrays, ncols):

    arrays = [array for array in arrays if len(array)]
    if not arrays:
        return np.zeros((0, ncols), np.int64)
    if any(array.dtype == object for array in arrays):
        arrays = [_toObject(array) for array in arrays]
    return np.concatenate(arrays)


def _asRows(vectors, ncols):
    """Return integer rows spanning the lines of *vectors*, which may be a
    :class:`.Subspace`, a vector or a list of vectors."""

    if isinstance(vectors, Subspace):
        return vectors.getEchelon()._getNumerators()
    if not isinstance(vectors, RationalMatrix):
        vectors = RationalMatrix(vectors) if len(vectors) else \
            RationalMatrix.zeros((0, ncols))
    if vectors.ndim == 1:
        vectors = vectors.reshape(1, -1)
    if vectors.shape[1] != ncols:
        raise ValueError('vectors must have {0} entries'.format(ncols))
    return vectors._getNumerators()


def calcPrimitiveSubspace(algebra):
    """Return the subspace of vectors annihilated by the degree -2 piece of
    *algebra*, a :class:`.LieOperatorAlgebra`.  Without a degree -2 piece,
    the whole space is returned."""

    if not isinstance(algebra, LieOperatorAlgebra):
        raise TypeError('algebra must be a LieOperatorAlgebra')
    dim = len(algebra.getSpace())
    lowering = algebra.getDegreeOperators(-2)
    if not lowering:
        return Subspace(dim, np.eye(dim, dtype=np.int64))
    rows = _stack([op.getMatrix()._getNumerators() for op in lowering], dim)
    return calcKernel(RationalMatrix.fromNumerators(rows))


def _operatorNumerators(operators):

    return [u._getNumerators() for u in _asMatrices(operators)]


def calcGeneratedSubmodule(operators, vectors):
    """Return the smallest subspace that contains *vectors* and is stable
    under *operators*, a :class:`.LieOperatorAlgebra` or a list of
    operators.  Images of the vectors added in the last round are adjoined
    until the span stops growing."""

    if not isinstance(operators, (LieOperatorAlgebra, GradedOperator)):
        operators = list(operators)
    matrices = _operatorNumerators(operators)
    if isinstance(operators, LieOperatorAlgebra):
        dim = len(operators.getSpace())
    elif matrices:
        dim = matrices[0].shape[0]
    elif isinstance(vectors, Subspace):
        dim = vectors.getAmbientDim()
    else:
        dim = RationalMatrix(vectors).shape[-1]
    echelon = Echelon(dim)
    frontier = echelon.add(_asRows(vectors, dim))
    rounds = 0
    while len(frontier) and not echelon.isFull():
        rounds += 1
        images = [_product(np.dot, frontier, u.T, dim) for u in matrices]
        frontier = echelon.add(_stack(images, dim))
    LOGGER.debug('Submodule of dimension {0} was generated in {1} rounds.'
                 .format(len(echelon), rounds))
    return Subspace.fromEchelon(echelon)


def calcVerbitskySubring(algebra):
    """Return the span of all products of degree 2 elements of *algebra*,
    including the unit, as a :class:`.Subspace`."""

    if not isinstance(algebra, GradedFrobeniusAlgebra):
        raise TypeError('algebra must be a GradedFrobeniusAlgebra')
    space = algebra.getSpace()
    unit = algebra.getUnitVector()
    dim = space.getDim(2)
    if not dim:
        return Subspace(len(space), unit)
    cups = [buildCupOperator(algebra, row) for row in
            np.eye(dim, dtype=np.int64)]
    return calcGeneratedSubmodule(cups, unit)


def checkStability(subspace, operators):
    """Return **True** when every operator maps *subspace* into itself."""

    if not isinstance(subspace, Subspace):
        raise TypeError('subspace must be a Subspace')
    if subspace.isZero():
        return True
    basis = subspace.getEchelon()._getNumerators()
    dim = basis.shape[1]
    for u in _operatorNumerators(operators):
        if not subspace.contains(_product(np.dot, basis, u.T, dim)):
            return False
    return True


def calcWeilOperator(algebra, first, second):
    """Return ``[e_first, f_second]`` for degree 2 classes of *algebra*.
    When *first* and *second* are orthogonal with equal positive squares
    under the form on degree 2, the result is a Weil type operator.  It
    maps *first* to ``-2 second`` and *second* to ``2 first``, and kills
    degree 2 classes orthogonal to both.  :exc:`.NotLefschetz` is raised
    when a class is not Lefschetz."""

    e = buildSl2Triple(algebra, first).getE()
    f = buildSl2Triple(algebra, second).getF()
    return calcBracket(e, f)


def _parityPolynomial(degree):
    """Return the product of x and ``x^2 + m^2`` over m of the parity of
    *degree* between 0 and *degree*."""

    poly = [1]
    for m in range(degree % 2, degree + 1, 2):
        factor = [0, 1] if m == 0 else [m * m, 0, 1]
        poly = multiplyPolynomials(poly, factor)
    return poly


def calcWeilParity(operator):
    """Return a list of ``(degree, minimal polynomial, passed)`` tuples, one
    per nonzero component.  A component of degree *k* passes when the
    minimal polynomial of the degree 0 *operator* on it divides the product
    of ``x^2 + m^2`` over ``m = k, k - 2, ...`` with x for ``m = 0``, i.e.
    when eigenvalues are ``i m`` with m of the parity of k."""

    if not isinstance(operator, GradedOperator):
        raise TypeError('operator must be a GradedOperator')
    space = operator.getSpace()
    if not operator.isZero() and operator.getDegree() != 0:
        raise WrongDegree('operator must have degree 0')
    report = []
    for degree in space.getDegrees():
        if operator.isZero():
            dim = space.getDim(degree)
            block = RationalMatrix.zeros((dim, dim))
        else:
            block = operator.getBlock(degree)
        minimal = calcMinimalPolynomial(block)
        _, remainder = dividePolynomials(_parityPolynomial(abs(degree)),
                                         minimal)
        report.append((degree, formatPolynomial(minimal), not remainder))
    return report


def checkWeilParity(operator):
    """Return **True** when *operator* passes :func:`calcWeilParity` in
    every degree."""

    return all(passed for _, _, passed in calcWeilParity(operator))


class WitnessRecord(object):

    """Outcome of :func:`checkIrreducibilityWitness`."""

    def __init__(self, seed, samples, basis_vectors, failures):

        self._seed = seed
        self._samples = samples
        self._basis = basis_vectors
        self._failures = list(failures)

    def __repr__(self):

        return '<WitnessRecord: {0}, seed {1}, {2} basis and {3} random ' \
               'vectors>'.format(self.getLabel(), self._seed, self._basis,
                                 self._samples)

    def isPassed(self):
        """Return **True** when all vectors generated the whole space."""

        return not self._failures

    def getLabel(self):
        """Return ``'witness passed'`` or ``'witness failed'``."""

        return 'witness passed' if self.isPassed() else 'witness failed'

    def getSeed(self):
        """Return seed of the pseudorandom vectors."""

        return self._seed

    def getSamples(self):
        """Return number of pseudorandom vectors."""

        return self._samples

    def getFailures(self):
        """Return labels of vectors that generated a proper subspace."""

        return list(self._failures)

    def toDict(self):
        """Return record as a dictionary for reports."""

        return {'label': self.getLabel(), 'seed': self._seed,
                'basis_vectors': self._basis, 'samples': self._samples,
                'failures': self.getFailures()}


def checkIrreducibilityWitness(algebra, samples=None, seed=None, bound=9):
    """Return a :class:`WitnessRecord` for the action of *algebra*, a
    :class:`.LieOperatorAlgebra`.  Each standard basis vector and *samples*
    pseudorandom integer vectors with entries in ``[-bound, bound]`` are
    tested to generate the whole space.  By default, *samples* is the
    *witness_samples* option and *seed* is given by
    :func:`.getWitnessSeed`.  Passing is evidence for irreducibility, not
    a proof."""

    if not isinstance(algebra, LieOperatorAlgebra):
        raise TypeError('algebra must be a LieOperatorAlgebra')
    if samples is None:
        samples = pkg.SETTINGS.get('witness_samples',
                                   pkg.CONFIGURATION['witness_samples'])
    if seed is None:
        seed = getWitnessSeed()
    dim = len(algebra.getSpace())
    random = np.random.RandomState(seed)
    vectors = random.randint(-bound, bound + 1, (samples, dim))
    for vector in vectors:
        if not vector.any():
            vector[0] = 1
    failures = []
    LOGGER.progress('Testing generation...', dim + samples)
    for i in range(dim + samples):
        if i < dim:
            label = 'basis {0}'.format(i)
            vector = np.zeros(dim, dtype=np.int64)
            vector[i] = 1
        else:
            label = 'random {0}'.format(i - dim)
            vector = vectors[i - dim].astype(np.int64)
        if not calcGeneratedSubmodule(algebra, vector).isWhole():
            failures.append(label)
        LOGGER.update(i + 1)
    LOGGER.clear()
    record = WitnessRecord(seed, samples, dim, failures)
    LOGGER.debug('Irreducibility {0}.'.format(record.getLabel()))
    return record
