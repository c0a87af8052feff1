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

"""This module defines input and output functions for algebras.

Algebras are exchanged as JSON documents of the following form, where
rational numbers are ``"p/q"`` strings and omitted products are zero::

  {"name": "K3-type",
   "shift": 2,
   "components": [{"degree": 0, "dim": 1}, {"degree": 2, "dim": 3}, ...],
   "unit": ["1"],
   "integral": ["1"],
   "products": [{"deg_a": 0, "idx_a": 0, "deg_b": 2, "idx_b": 1,
                 "value": ["0", "1", "0"]}, ...]}

Products with the unit must be listed like any other product.

=========================  ====================================================
Function                   Description
=========================  ====================================================
:func:`parseAlgebra`       build an algebra from a parsed JSON document
:func:`loadAlgebra`        load an algebra from a JSON file
:func:`saveAlgebra`        save an algebra to a JSON file
:func:`getAlgebraDocument` return the JSON document of an algebra
=========================  ====================================================
"""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import json

import numpy as np

from llvlab import LLVException
from llvlab.tools import openFile
from llvlab.exactla import RationalMatrix, toFraction, formatFraction

from .space import GradedVectorSpace
from .algebra import GradedFrobeniusAlgebra, ValidationError, \
    validateAlgebra

__all__ = ['SchemaError', 'parseAlgebra', 'loadAlgebra', 'saveAlgebra',
           'getAlgebraDocument']

pkg = __import__(__package__)
LOGGER = pkg.LOGGER

KEYS = ('name', 'shift', 'components', 'unit', 'integral', 'products')
PRODUCT_KEYS = ('deg_a', 'idx_a', 'deg_b', 'idx_b', 'value')


class SchemaError(LLVException):

    """Raised when an algebra document does not follow the schema."""

    pass


def _getInteger(mapping, key, where):

    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError('{0}: {1} must be an integer'.format(where, key))
    return value


def _getRationals(values, length, where):

    if not isinstance(values, list):
        raise SchemaError('{0} must be a list of rationals'.format(where))
    if len(values) != length:
        raise SchemaError('{0} must have {1} entries, not {2}'
                          .format(where, length, len(values)))
    try:
        return [toFraction(value) for value in values]
    except (TypeError, ValueError) as err:
        raise SchemaError('{0}: {1}'.format(where, err))


def parseAlgebra(document, validate=True):
    """Return a :class:`.GradedFrobeniusAlgebra` built from a parsed JSON
    *document*.  :exc:`SchemaError` is raised for malformed documents and,
    when *validate* is true, :exc:`.ValidationError` for documents that
    describe an algebra violating the axioms."""

    if not isinstance(document, dict):
        raise SchemaError('document must be a JSON object')
    missing = [key for key in KEYS if key not in document]
    if missing:
        raise SchemaError('document is missing key(s): {0}'
                          .format(', '.join(missing)))
    name = document['name']
    if not isinstance(name, str):
        raise SchemaError('name must be a string')
    shift = _getInteger(document, 'shift', 'document')

    components = document['components']
    if not isinstance(components, list):
        raise SchemaError('components must be a list')
    pairs = []
    for i, item in enumerate(components):
        where = 'components[{0}]'.format(i)
        if not isinstance(item, dict) or 'degree' not in item or \
                'dim' not in item:
            raise SchemaError(where + ' must have degree and dim')
        pairs.append((_getInteger(item, 'degree', where),
                      _getInteger(item, 'dim', where)))
    try:
        space = GradedVectorSpace(pairs, shift)
    except (TypeError, ValueError) as err:
        raise SchemaError('components: {0}'.format(err))

    unit = _getRationals(document['unit'], space.getDim(0), 'unit')
    top = space.getTopDegree()
    integral = _getRationals(document['integral'], space.getDim(top),
                             'integral')

    entries = document['products']
    if not isinstance(entries, list):
        raise SchemaError('products must be a list')
    blocks = {}
    seen = set()
    for i, item in enumerate(entries):
        where = 'products[{0}]'.format(i)
        if not isinstance(item, dict) or \
                any(key not in item for key in PRODUCT_KEYS):
            raise SchemaError(where + ' must have keys ' +
                              ', '.join(PRODUCT_KEYS))
        k, a, l, b = [_getInteger(item, key, where)
                      for key in PRODUCT_KEYS[:4]]
        if (k, a, l, b) in seen:
            raise SchemaError(where + ' duplicates an earlier product')
        seen.add((k, a, l, b))
        for degree, index in ((k, a), (l, b)):
            if not 0 <= index < space.getDim(degree):
                raise SchemaError('{0}: index {1} is out of range for '
                                  'degree {2}'.format(where, index, degree))
        if not space.hasDegree(k + l):
            raise SchemaError('{0}: product lands in degree {1}, which has '
                              'no component'.format(where, k + l))
        value = _getRationals(item['value'], space.getDim(k + l),
                              where + '.value')
        if (k, l) not in blocks:
            blocks[(k, l)] = np.zeros((space.getDim(k), space.getDim(l),
                                       space.getDim(k + l)), dtype=object)
        blocks[(k, l)][a, b, :] = value

    algebra = GradedFrobeniusAlgebra(
        space, {key: RationalMatrix(block) for key, block in blocks.items()},
        RationalMatrix(np.array(unit, dtype=object).reshape(len(unit))),
        RationalMatrix(np.array(integral, dtype=object).reshape(
            len(integral))), title=name)
    if validate:
        violations = validateAlgebra(algebra)
        if violations:
            raise ValidationError(violations)
    return algebra


def loadAlgebra(filename, validate=True):
    """Return an algebra loaded from JSON file *filename*, see
    :func:`parseAlgebra`."""

    with openFile(filename, 'r') as inp:
        try:
            document = json.load(inp)
        except ValueError as err:
            raise SchemaError('{0} is not a valid JSON file ({1})'
                              .format(filename, err))
    LOGGER.debug('Algebra document is loaded from {0}.'.format(filename))
    return parseAlgebra(document, validate)


def getAlgebraDocument(algebra):
    """Return the JSON document of *algebra* as a dictionary."""

    if not isinstance(algebra, GradedFrobeniusAlgebra):
        raise TypeError('algebra must be a GradedFrobeniusAlgebra')
    space = algebra.getSpace()
    products = []
    for k, l in algebra.getProductKeys():
        block = algebra.getProduct(k, l)
        values = block.getArray()
        nonzero = np.any(block._getNumerators() != 0, axis=2)
        for a, b in zip(*np.nonzero(nonzero)):
            products.append({'deg_a': k, 'idx_a': int(a),
                             'deg_b': l, 'idx_b': int(b),
                             'value': [formatFraction(x)
                                       for x in values[a, b]]})
    return {'name': algebra.getTitle(),
            'shift': space.getShift(),
            'components': [{'degree': k, 'dim': d}
                           for k, d in space.getComponents()],
            'unit': [formatFraction(x) for x in algebra.getUnit().getArray()],
            'integral': [formatFraction(x)
                         for x in algebra.getIntegral().getArray()],
            'products': products}


def saveAlgebra(algebra, filename, **kwargs):
    """Save *algebra* as a JSON document in *filename* and return the
    filename.  Keyword arguments are passed to :func:`.openFile`, so that
    *backup* may be used to keep an existing file."""

    document = getAlgebraDocument(algebra)
    with openFile(filename, 'w', **kwargs) as out:
        json.dump(document, out, indent=1)
        out.write('\n')
    LOGGER.debug('Algebra {0} is saved in {1}.'.format(algebra.getTitle(),
                                                       filename))
    return filename
