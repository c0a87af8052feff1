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

"""LLVLab test suite.  Usage::

  from llvlab import *
  llvlab.test()

or::

  import llvlab.tests
  llvlab.tests.test()

Testing will use :mod:`pytest` if it is available, otherwise it will use
:mod:`unittest`.  Long running suites, the K3 lattice closure and the
rank 23 Verbitsky component, run only when :envvar:`LLV_LAB_SLOW` is set.
"""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import os
import sys
import llvlab
LOGGER = llvlab.LOGGER

MODULES = ['test_datafiles', 'test_exactla', 'test_graded', 'test_lefschetz',
           'test_liealg', 'test_models', 'test_verbitsky', 'test_rep',
           'test_routines']

try:
    import pytest

except ImportError:
    LOGGER.warning('Failed to import pytest, using unittest for testing.')
    import unittest

    def test(verbosity=2, descriptions=True, stream=sys.stderr):
        testrunner = unittest.TextTestRunner(stream, descriptions,
                                             verbosity)
        for module in MODULES:
            testrunner.run(unittest.defaultTestLoader.
                           loadTestsFromName('llvlab.tests.' + module))
else:
    def test(verbosity=2, **kwargs):
        args = [os.path.dirname(os.path.abspath(__file__))]
        if verbosity > 1:
            args.append('-v')
        return pytest.main(args)

if __name__ == '__main__':
    test()
