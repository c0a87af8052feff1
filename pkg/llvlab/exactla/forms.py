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

"""This module defines exact signature computation of symmetric matrices
by congruence diagonalization over the integers."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab import LLVException

from .rational import RationalMatrix, _content, _toObject

__all__ = ['NotSymmetric', 'calcSignature']


class NotSymmetric(LLVException):

    """Raised when a symmetric matrix is expected."""

    pass


def calcSignature(matrix):
    """Return the inertia ``(positives, negatives, zeros)`` of symmetric
    *matrix*.  The matrix is diagonalized by congruence: a nonzero
    diagonal pivot *p* contributes its sign and the remaining block is
    replaced by the integer matrix ``p * A - a a^T``, which is *p* times
    the Schur complement.  When the diagonal vanishes, a row and column
    are added to another to create a nonzero pivot.

    >>> calcSignature([[0, 1], [1, 0]])
    (1, 1, 0)"""

    if not isinstance(matrix, RationalMatrix):
        matrix = RationalMatrix(matrix)
    if not matrix.isSquare():
        raise ValueError('matrix must be square')
    if not matrix.isSymmetric():
        raise NotSymmetric('matrix is not symmetric')
    a = _toObject(matrix._getNumerators()).copy()
    positive = negative = zero = 0
    while len(a):
        nonzero = np.any(a != 0, axis=1)
        zero += int(np.count_nonzero(~nonzero))
        a = a[nonzero][:, nonzero]
        if not len(a):
            break
        diagonal = np.flatnonzero(np.diagonal(a) != 0)
        if not len(diagonal):
            j = int(np.flatnonzero(a[0] != 0)[0])
            a[0, :] += a[j, :]
            a[:, 0] += a[:, j]
            continue
        k = min(diagonal, key=lambda i: abs(a[i, i]))
        pivot = a[k, k]
        rest = [i for i in range(len(a)) if i != k]
        column = a[rest, k]
        a = pivot * a[np.ix_(rest, rest)] - np.outer(column, column)
        if pivot > 0:
            positive += 1
        else:
            negative += 1
            a = -a
        common = _content(a)
        if common > 1:
            a = a // common
    return positive, negative, zero
