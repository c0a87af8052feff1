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

"""This module defines minimal polynomials of rational matrices and the
few operations on polynomials with rational coefficients that are needed
to compare them.  Polynomials are lists of
:class:`~fractions.Fraction` coefficients in ascending degree order."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

from fractions import Fraction

import numpy as np

from .rational import RationalMatrix, toFraction
from .echelon import Echelon, solveLinear

__all__ = ['calcMinimalPolynomial', 'multiplyPolynomials',
           'dividePolynomials', 'formatPolynomial']


def _trim(poly):

    poly = [toFraction(c) for c in poly]
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def calcMinimalPolynomial(matrix):
    """Return the minimal polynomial of square *matrix* as ascending
    coefficients with leading coefficient 1.  Powers of the matrix are
    added to an echelon basis until the first linear dependency, which
    is then solved for exactly.

    >>> calcMinimalPolynomial([[0, -1], [1, 0]])
    [Fraction(1, 1), Fraction(0, 1), Fraction(1, 1)]"""

    if not isinstance(matrix, RationalMatrix):
        matrix = RationalMatrix(matrix)
    if not matrix.isSquare():
        raise ValueError('matrix must be square')
    n = matrix.shape[0]
    if not n:
        return [Fraction(1)]
    echelon = Echelon(n * n)
    powers = [RationalMatrix.identity(n)]
    while True:
        flat = powers[-1].reshape(n * n)
        if echelon.contains(flat._getNumerators()):
            break
        echelon.add(flat._getNumerators())
        powers.append(powers[-1] @ matrix)
    columns = RationalMatrix(np.array(
        [power.reshape(n * n).getArray() for power in powers[:-1]]).T)
    coefficients, _ = solveLinear(columns, powers[-1].reshape(n * n))
    return [-c for c in coefficients.getArray()] + [Fraction(1)]


def multiplyPolynomials(first, second):
    """Return product of two polynomials."""

    first, second = _trim(first), _trim(second)
    if not first or not second:
        return []
    product = [Fraction(0)] * (len(first) + len(second) - 1)
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            product[i + j] += a * b
    return product


def dividePolynomials(dividend, divisor):
    """Return quotient and remainder of polynomial division."""

    dividend, divisor = _trim(dividend), _trim(divisor)
    if not divisor:
        raise ZeroDivisionError('division by the zero polynomial')
    remainder = list(dividend)
    quotient = [Fraction(0)] * max(len(dividend) - len(divisor) + 1, 0)
    lead = divisor[-1]
    while len(remainder) >= len(divisor):
        shift = len(remainder) - len(divisor)
        factor = remainder[-1] / lead
        quotient[shift] = factor
        for i, c in enumerate(divisor):
            remainder[shift + i] -= factor * c
        remainder = _trim(remainder)
    return _trim(quotient), remainder


def formatPolynomial(poly, variable='x'):
    """Return a readable string such as ``'x^2 + 1'`` for *poly*."""

    terms = []
    for power, c in reversed(list(enumerate(_trim(poly)))):
        if c == 0:
            continue
        if power == 0:
            body = str(abs(c))
        else:
            body = variable if power == 1 else \
                '{0}^{1}'.format(variable, power)
            if abs(c) != 1:
                body = '{0}*{1}'.format(abs(c), body)
        sign = '-' if c < 0 else '+'
        terms.append((sign, body))
    if not terms:
        return '0'
    text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
    for sign, body in terms[1:]:
        text += ' {0} {1}'.format(sign, body)
    return text
