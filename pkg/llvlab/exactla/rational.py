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

"""This module defines :class:`RationalMatrix`, a dense array of exact
rational numbers kept as integer numerators over a single positive common
denominator.

Numerators are stored in :class:`numpy.int64` arrays while the entries are
small enough for products to be computed without overflow, and in object
arrays of Python integers otherwise, so arithmetic is always exact."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import re
from math import gcd
from fractions import Fraction

import numpy as np

__all__ = ['RationalMatrix', 'toFraction', 'formatFraction',
           'calcDeterminant']

INT64_BOUND = 2 ** 62

RATIONAL = re.compile(r'^[+-]?\d+(/\d+)?$')


def toFraction(value):
    """Return *value* as a :class:`~fractions.Fraction`.  Integers,
    fractions, and strings such as ``'-3/4'`` or ``'5'`` are accepted.
    Floating point numbers are rejected."""

    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError('booleans are not rational numbers')
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.replace(' ', '')
        if not RATIONAL.match(text):
            raise ValueError('{0!r} is not a rational number of the form '
                             'p/q'.format(value))
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError('{0!r} has a zero denominator'.format(value))
    if isinstance(value, (float, np.floating)):
        raise TypeError('floating point numbers are not accepted, use '
                        'integers, fractions or "p/q" strings')
    raise TypeError('{0} cannot be converted to a rational number'
                    .format(type(value).__name__))


def formatFraction(value):
    """Return *value* as a ``'p/q'`` string, or ``'p'`` for integers."""

    return str(toFraction(value))


def _maxabs(num):

    if num.size == 0:
        return 0
    return int(abs(num).max())


def _toObject(num):

    return num if num.dtype == object else num.astype(object)


def _compact(num):
    """Return *num* with int64 dtype when its entries fit."""

    if num.dtype == object and _maxabs(num) < INT64_BOUND:
        return num.astype(np.int64)
    return num


def _product(func, a, b, inner):
    """Apply bilinear *func* to integer arrays, in int64 when no sum of
    *inner* products can overflow."""

    if a.dtype != object and b.dtype != object and \
            _maxabs(a) * _maxabs(b) * max(inner, 1) < INT64_BOUND:
        return func(a, b)
    return _compact(func(_toObject(a), _toObject(b)))


def _lincomb(alpha, a, beta, b):
    """Return ``alpha * a + beta * b`` for integers *alpha* and *beta*."""

    if a.dtype != object and b.dtype != object and \
            abs(alpha) < INT64_BOUND and abs(beta) < INT64_BOUND and \
            abs(alpha) * _maxabs(a) + abs(beta) * _maxabs(b) < INT64_BOUND:
        return alpha * a + beta * b
    return _compact(alpha * _toObject(a) + beta * _toObject(b))


def _scale(alpha, a):

    if a.dtype != object and abs(alpha) * _maxabs(a) < INT64_BOUND:
        return alpha * a
    return _compact(alpha * _toObject(a))


def _content(num):
    """Return the greatest common divisor of all entries of *num*."""

    if num.size == 0:
        return 0
    return int(np.gcd.reduce(num.ravel()))


def _primitiveRows(num):
    """Divide each row of 2-D integer array *num* by its content."""

    if not num.size:
        return num
    content = np.gcd.reduce(num, axis=1)
    content[content == 0] = 1
    return _compact(num // content[:, None])


def _lcm(a, b):

    return a * b // gcd(a, b)


def _parse(data):
    """Return numerator array and common denominator of *data*."""

    if isinstance(data, np.ndarray) and data.dtype != object:
        if data.dtype.kind == 'i':
            return data.astype(np.int64), 1
        elif data.dtype.kind == 'u':
            return _compact(data.astype(object)), 1
        elif data.dtype.kind == 'b':
            raise TypeError('boolean arrays are not rational')
        raise TypeError('arrays with dtype {0} are not accepted, use '
                        'integers, fractions or "p/q" strings'
                        .format(data.dtype))
    try:
        array = np.array(data, dtype=object)
    except ValueError:
        raise ValueError('data must be a rectangular array')
    if array.ndim == 0:
        raise TypeError('data must be an array, not a scalar')
    values = [toFraction(item) for item in array.flat]
    den = 1
    for value in values:
        den = _lcm(den, value.denominator)
    num = np.empty(len(values), dtype=object)
    for i, value in enumerate(values):
        num[i] = value.numerator * (den // value.denominator)
    return _compact(num.reshape(array.shape)), den


class RationalMatrix(object):

    """Dense array of exact rationals.  Vectors, matrices and higher rank
    tensors of structure constants are all held by this class.  Instances
    are treated as immutable.

    >>> m = RationalMatrix([[1, '1/2'], [0, 2]])
    >>> m
    <RationalMatrix: 2x2, denominator 2>
    >>> m[0, 1]
    Fraction(1, 2)"""

    def __init__(self, data):

        if isinstance(data, RationalMatrix):
            self._num, self._den = data._num, data._den
        else:
            num, den = _parse(data)
            self._setNumerators(num, den)

    @classmethod
    def fromNumerators(cls, num, den=1):
        """Return a matrix with integer numerator array *num* over *den*."""

        if not isinstance(num, np.ndarray):
            num = np.array(num, dtype=object)
        if num.dtype != object and num.dtype.kind not in 'iu':
            raise TypeError('numerators must be integers')
        if isinstance(den, np.integer):
            den = int(den)
        if not isinstance(den, int) or isinstance(den, bool) or den == 0:
            raise ValueError('den must be a nonzero integer')
        new = cls.__new__(cls)
        new._setNumerators(num, den)
        return new

    @classmethod
    def zeros(cls, shape):
        """Return a zero array of given *shape*."""

        return cls.fromNumerators(np.zeros(shape, np.int64))

    @classmethod
    def identity(cls, n):
        """Return the *n* by *n* identity matrix."""

        return cls.fromNumerators(np.eye(n, dtype=np.int64))

    def _setNumerators(self, num, den):

        if num.dtype != object:
            num = num.astype(np.int64)
        if den < 0:
            num, den = -num, -den
        common = gcd(_content(num), den)
        if common > 1:
            num = num // common
            den //= common
        self._num = _compact(num)
        self._den = den

    def __repr__(self):

        return '<RationalMatrix: {0}, denominator {1}>'.format(
            'x'.join(str(i) for i in self._num.shape), self._den)

    def __str__(self):

        return str(self.getArray())

    def __len__(self):

        return len(self._num)

    @property
    def shape(self):
        """Shape of the array."""

        return self._num.shape

    @property
    def ndim(self):
        """Number of array dimensions."""

        return self._num.ndim

    @property
    def T(self):
        """Transpose of the array."""

        return self.transpose()

    def getNumerators(self):
        """Return a copy of the integer numerator array."""

        return self._num.copy()

    def _getNumerators(self):

        return self._num

    def getDenominator(self):
        """Return the common positive denominator."""

        return self._den

    def getArray(self):
        """Return an object array of :class:`~fractions.Fraction` entries."""

        den = self._den
        array = np.empty(self._num.shape, dtype=object)
        for index, value in np.ndenumerate(self._num):
            array[index] = Fraction(int(value), den)
        return array

    def toList(self):
        """Return entries as nested lists of ``'p/q'`` strings."""

        return _stringify(self.getArray().tolist())

    def __getitem__(self, index):

        item = self._num[index]
        if np.ndim(item) == 0:
            return Fraction(int(item), self._den)
        return RationalMatrix.fromNumerators(np.array(item), self._den)

    def __iter__(self):

        for i in range(len(self)):
            yield self[i]

    def __eq__(self, other):

        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.shape == other.shape and self._den == other._den and
                bool(np.all(self._num == other._num)))

    def __ne__(self, other):

        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def isZero(self):
        """Return **True** when all entries are zero."""

        return not np.any(self._num)

    def isSquare(self):
        """Return **True** for square matrices."""

        return self.ndim == 2 and self.shape[0] == self.shape[1]

    def isSymmetric(self):
        """Return **True** for symmetric square matrices."""

        return self.isSquare() and bool(np.all(self._num == self._num.T))

    def __neg__(self):

        return RationalMatrix.fromNumerators(-self._num, self._den)

    def __pos__(self):

        return self

    def __add__(self, other):

        other = _asRational(other)
        if other.shape != self.shape:
            raise ValueError('shapes {0} and {1} do not match'
                             .format(self.shape, other.shape))
        den = _lcm(self._den, other._den)
        num = _lincomb(den // self._den, self._num,
                       den // other._den, other._num)
        return RationalMatrix.fromNumerators(num, den)

    def __sub__(self, other):

        return self + (-_asRational(other))

    def __rsub__(self, other):

        return _asRational(other) - self

    __radd__ = __add__

    def __mul__(self, scalar):

        if isinstance(scalar, RationalMatrix):
            raise TypeError('use dot or @ for matrix products')
        scalar = toFraction(scalar)
        num = _scale(scalar.numerator, self._num)
        return RationalMatrix.fromNumerators(num,
                                             self._den * scalar.denominator)

    __rmul__ = __mul__

    def __truediv__(self, scalar):

        scalar = toFraction(scalar)
        if scalar == 0:
            raise ZeroDivisionError('division by zero')
        return self * (1 / scalar)

    def dot(self, other):
        """Return matrix product of this array with *other*, contracting
        the last axis of this array with the first axis of *other*."""

        other = _asRational(other)
        if not self.ndim or not other.ndim:
            raise ValueError('dot requires arrays, not scalars')
        if self.shape[-1] != other.shape[0]:
            raise ValueError('shapes {0} and {1} are not aligned'
                             .format(self.shape, other.shape))
        num = _product(lambda a, b: np.tensordot(a, b, axes=1),
                       self._num, other._num, self.shape[-1])
        return _result(num, self._den * other._den)

    def __matmul__(self, other):

        return self.dot(other)

    def tensordot(self, other, axes):
        """Return :func:`numpy.tensordot` of this array and *other*."""

        other = _asRational(other)
        if isinstance(axes, int):
            contracted = self.shape[self.ndim - axes:]
        else:
            contracted = [self.shape[i] for i in axes[0]]
        inner = int(np.prod(contracted)) if len(contracted) else 1
        num = _product(lambda a, b: np.tensordot(a, b, axes=axes),
                       self._num, other._num, inner)
        return _result(num, self._den * other._den)

    def kron(self, other):
        """Return Kronecker product of two matrices."""

        other = _asRational(other)
        num = _product(np.kron, self._num, other._num, 1)
        return RationalMatrix.fromNumerators(num, self._den * other._den)

    def transpose(self, *axes):
        """Return the array with axes permuted, reversed by default."""

        return RationalMatrix.fromNumerators(
            self._num.transpose(*axes).copy(), self._den)

    def reshape(self, *shape):
        """Return the array with a new *shape*."""

        return RationalMatrix.fromNumerators(self._num.reshape(*shape),
                                             self._den)

    def trace(self):
        """Return the trace of a square matrix."""

        if not self.isSquare():
            raise ValueError('trace requires a square matrix')
        return Fraction(int(np.trace(_toObject(self._num))), self._den)

    def rank(self):
        """Return the rank of the matrix."""

        from .echelon import Echelon
        if self.ndim != 2:
            raise ValueError('rank requires a matrix')
        echelon = Echelon(self.shape[1])
        echelon.add(self._num)
        return len(echelon)

    def inverse(self):
        """Return the inverse of an invertible square matrix."""

        from .echelon import Echelon
        if not self.isSquare():
            raise ValueError('inverse requires a square matrix')
        n = self.shape[0]
        augmented = np.hstack([_toObject(self._num),
                               np.eye(n, dtype=np.int64).astype(object) *
                               self._den])
        echelon = Echelon(2 * n)
        echelon.add(_compact(augmented))
        if list(echelon.getPivots()) != list(range(n)):
            raise ValueError('matrix is singular')
        num = echelon._getNumerators()[:, n:]
        return RationalMatrix.fromNumerators(num.copy(),
                                             echelon.getDenominator())


def _result(num, den):
    """Return a 0-d product as a fraction and others as a matrix."""

    num = np.asarray(num)
    if num.ndim == 0:
        return Fraction(int(num), den)
    return RationalMatrix.fromNumerators(num, den)


def _stringify(item):

    if isinstance(item, list):
        return [_stringify(value) for value in item]
    return str(item)


def _asRational(data):

    if isinstance(data, RationalMatrix):
        return data
    return RationalMatrix(data)


def calcDeterminant(matrix):
    """Return determinant of a square *matrix* as a
    :class:`~fractions.Fraction`, by fraction-free Bareiss elimination."""

    matrix = _asRational(matrix)
    if not matrix.isSquare():
        raise ValueError('matrix must be square')
    n = matrix.shape[0]
    a = _toObject(matrix._getNumerators()).copy()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k, k] == 0:
            rows = np.flatnonzero(a[k + 1:, k] != 0)
            if not len(rows):
                return Fraction(0)
            i = k + 1 + int(rows[0])
            a[[k, i]] = a[[i, k]]
            sign = -sign
        a[k + 1:, k + 1:] = ((a[k + 1:, k + 1:] * a[k, k] -
                              np.outer(a[k + 1:, k], a[k, k + 1:])) // prev)
        prev = a[k, k]
    det = a[n - 1, n - 1] if n else 1
    return Fraction(sign * int(det), matrix.getDenominator() ** n)
