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

"""This module defines standard integral lattices as quadratic spaces."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import numpy as np

from llvlab.liealg import QuadraticSpace

__all__ = ['buildHyperbolicPlane', 'buildE8Lattice', 'buildK3Lattice',
           'buildStandardForm']

# edges of the E8 Dynkin diagram, nodes numbered as in Bourbaki from 0
E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))


def buildHyperbolicPlane():
    """Return the hyperbolic plane U with Gram matrix ``[[0, 1], [1, 0]]``.

    >>> buildHyperbolicPlane().getSignature()
    (1, 1, 0)"""

    return QuadraticSpace([[0, 1], [1, 0]], 'U')


def buildE8Lattice():
    """Return E8(-1), the negative of the E8 Cartan matrix."""

    gram = np.zeros((8, 8), np.int64)
    np.fill_diagonal(gram, -2)
    for i, j in E8_EDGES:
        gram[i, j] = gram[j, i] = 1
    return QuadraticSpace(gram, 'E8(-1)')


def buildK3Lattice():
    """Return the K3 lattice ``U^3 + E8(-1)^2`` of rank 22 and signature
    (3, 19)."""

    plane = buildHyperbolicPlane()
    e8 = buildE8Lattice()
    lattice = plane.directSum(plane).directSum(plane)
    return lattice.directSum(e8).directSum(e8, 'K3 lattice')


def buildStandardForm(rank):
    """Return ``U + <1>^(rank - 2)``, or ``<1>`` when *rank* is 1.  These
    forms contain isotropic vectors for every rank above 1."""

    if not isinstance(rank, int) or rank < 1:
        raise ValueError('rank must be a positive integer')
    if rank == 1:
        return QuadraticSpace([[1]], 'standard form of rank 1')
    gram = np.eye(rank, dtype=np.int64)
    gram[:2, :2] = [[0, 1], [1, 0]]
    return QuadraticSpace(gram, 'standard form of rank {0}'.format(rank))
