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

"""This module defines K3-type algebras ``Q.1 + V + Q.t`` with products
``a.b = q(a, b) t`` and resolves names of built-in models."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab.exactla import RationalMatrix
from llvlab.graded import GradedVectorSpace, GradedFrobeniusAlgebra
from llvlab.liealg import QuadraticSpace

from .lattices import buildHyperbolicPlane, buildK3Lattice, \
    buildStandardForm
from .quaternion import buildQuaternionModel

__all__ = ['buildK3TypeAlgebra', 'getBuiltin', 'BUILTINS']

BUILTINS = ('quaternion', 'k3', 'hyperbolic', 'k3type:R', 'verbitsky:R:N')


def buildK3TypeAlgebra(q, title=None):
    """Return the algebra with components of dimensions 1, r and 1 in
    degrees 0, 2 and 4 whose degree 2 classes multiply as
    ``a.b = q(a, b) t`` with ``integral of t = 1``.  It models the
    cohomology of a K3 surface when *q* is the K3 lattice.  :exc:`.Degenerate`
    is raised for degenerate *q*.

    >>> algebra = buildK3TypeAlgebra(buildHyperbolicPlane())
    >>> len(algebra)
    4"""

    if not isinstance(q, QuadraticSpace):
        q = QuadraticSpace(q)
    q.checkNondegenerate()
    rank = len(q)
    space = GradedVectorSpace([(0, 1), (2, rank), (4, 1)], 2)
    gram = q.getGram()
    eye = np.eye(rank, dtype=np.int64)
    products = {
        (0, 0): [[[1]]],
        (0, 2): RationalMatrix(eye.reshape((1, rank, rank))),
        (2, 0): RationalMatrix(eye.reshape((rank, 1, rank))),
        (0, 4): [[[1]]],
        (4, 0): [[[1]]],
        (2, 2): gram.reshape(rank, rank, 1),
    }
    if title is None:
        title = 'K3-type algebra of ' + (q.getTitle() or
                                         'rank {0}'.format(rank))
    return GradedFrobeniusAlgebra(space, products, [1], [1], title)


def _parseRank(text, name):

    if not text.isdigit() or int(text) < 1:
        raise ValueError('{0} must be a positive integer in {1!r}'
                         .format(text, name))
    return int(text)


def getBuiltin(name):
    """Return the built-in algebra called *name*:

      * ``'quaternion'``, the exterior algebra of H
      * ``'k3'``, the K3-type algebra of the K3 lattice
      * ``'hyperbolic'``, the K3-type algebra of U
      * ``'k3type:R'``, the K3-type algebra of ``U + <1>^(R - 2)``
      * ``'verbitsky:R:N'``, the Verbitsky component of the same form of
        rank R with top degree 4N"""

    if not isinstance(name, str):
        raise TypeError('name must be a string')
    parts = name.strip().lower().split(':')
    if parts == ['quaternion']:
        return buildQuaternionModel().getAlgebra()
    elif parts == ['k3']:
        return buildK3TypeAlgebra(buildK3Lattice())
    elif parts == ['hyperbolic']:
        return buildK3TypeAlgebra(buildHyperbolicPlane())
    elif parts[0] == 'k3type' and len(parts) == 2:
        return buildK3TypeAlgebra(buildStandardForm(_parseRank(parts[1],
                                                               name)))
    elif parts[0] == 'verbitsky' and len(parts) == 3:
        from llvlab.verbitsky import buildVerbitskyComponent
        q = buildStandardForm(_parseRank(parts[1], name))
        return buildVerbitskyComponent(q, _parseRank(parts[2],
                                                     name)).getAlgebra()
    raise ValueError('{0!r} is not a built-in model, use one of {1}'
                     .format(name, ', '.join(BUILTINS)))
