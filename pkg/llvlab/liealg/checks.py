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

"""This module defines exact checks of how operators interact with
bilinear forms, with products of an algebra and with subspaces."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab.exactla import RationalMatrix, Echelon, Subspace
from llvlab.exactla.rational import _toObject
from llvlab.graded import GradedOperator, GradedFrobeniusAlgebra, PhiForm

from .quadratic import QuadraticSpace
from .lie import LieOperatorAlgebra

__all__ = ['checkInfinitesimalInvariance', 'checkDerivation',
           'checkRestrictionInjectivity', 'calcRestrictions']


def _asMatrices(operators):
    """Return a list of :class:`.RationalMatrix` for an operator, a list of
    operators or matrices, or the basis of a :class:`.LieOperatorAlgebra`."""

    if isinstance(operators, LieOperatorAlgebra):
        operators = operators.getBasis()
    elif isinstance(operators, (GradedOperator, RationalMatrix)):
        operators = [operators]
    matrices = []
    for op in operators:
        if isinstance(op, GradedOperator):
            op = op.getMatrix()
        elif not isinstance(op, RationalMatrix):
            op = RationalMatrix(op)
        if not op.isSquare():
            raise ValueError('operators must be square matrices')
        matrices.append(op)
    return matrices


def _asForm(form):

    if isinstance(form, PhiForm):
        return form.getMatrix()
    if isinstance(form, QuadraticSpace):
        return form.getGram()
    if isinstance(form, RationalMatrix):
        return form
    return RationalMatrix(form)


def checkInfinitesimalInvariance(operators, form):
    """Return **True** when ``form(u x, y) + form(x, u y) = 0`` for every
    operator *u* and all *x*, *y*, i.e. ``u^T F + F u = 0`` for the matrix
    *F* of *form*.  *form* may be a :class:`.PhiForm`, a
    :class:`.QuadraticSpace` or a square matrix."""

    gram = _asForm(form)
    for u in _asMatrices(operators):
        if u.shape != gram.shape:
            raise ValueError('operator and form shapes do not match')
        if not (u.T @ gram + gram @ u).isZero():
            return False
    return True


def checkDerivation(operator, algebra):
    """Return **True** when ``u(x.y) = u(x).y + x.u(y)`` for all basis
    vectors *x* and *y* of *algebra*."""

    if not isinstance(algebra, GradedFrobeniusAlgebra):
        raise TypeError('algebra must be a GradedFrobeniusAlgebra')
    u, = _asMatrices(operator)
    tensor = algebra.getMultiplicationTensor()
    if u.shape != tensor.shape[:2]:
        raise ValueError('operator and algebra dimensions do not match')
    left = tensor.tensordot(u.T, ([2], [0]))
    right = u.tensordot(tensor, ([0], [0])) + \
        tensor.tensordot(u, ([1], [0])).transpose(0, 2, 1)
    return left == right


def calcRestrictions(operators, target):
    """Return the matrices of *operators* restricted to *target*, which is
    a cohomological degree or a :class:`.Subspace` of the space.  For a
    degree the columns of that component are kept.  For a subspace with
    basis rows ``W`` the restriction is ``U W^T``."""

    if isinstance(operators, (LieOperatorAlgebra, GradedOperator)):
        space = operators.getSpace()
    else:
        operators = list(operators)
        space = next((op.getSpace() for op in operators
                      if isinstance(op, GradedOperator)), None)
    matrices = _asMatrices(operators)
    if isinstance(target, Subspace):
        basis = target.getBasis()
        return [u @ basis.T for u in matrices] if len(basis) else \
            [RationalMatrix.zeros((u.shape[0], 0)) for u in matrices]
    if space is None:
        raise TypeError('restriction to a degree requires GradedOperator '
                        'instances or a LieOperatorAlgebra')
    columns = space.getSlice(target)
    return [RationalMatrix.fromNumerators(
        u._getNumerators()[:, columns].copy(), u.getDenominator())
        for u in matrices]


def checkRestrictionInjectivity(operators, target):
    """Return **True** when restriction to *target* is injective on the
    span of *operators*, i.e. restricted matrices of linearly independent
    operators remain independent.  *target* is a cohomological degree or a
    :class:`.Subspace`.  The zero algebra gives **True**."""

    if not isinstance(operators, (LieOperatorAlgebra, GradedOperator,
                                  RationalMatrix)):
        operators = list(operators)
    matrices = _asMatrices(operators)
    if not matrices:
        return True
    full = Echelon(matrices[0].shape[0] ** 2)
    full.add(np.array([_toObject(u._getNumerators()).reshape(-1)
                       for u in matrices], dtype=object))
    restricted = calcRestrictions(operators, target)
    width = int(np.prod(restricted[0].shape))
    if not width:
        return not len(full)
    image = Echelon(width)
    image.add(np.array([_toObject(u._getNumerators()).reshape(-1)
                        for u in restricted], dtype=object))
    return len(image) == len(full)
