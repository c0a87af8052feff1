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

"""LLVLab computes, in exact rational arithmetic, the Looijenga-Lunts-
Verbitsky Lie algebras of graded Frobenius algebras that model the
cohomology of hyperkahler manifolds, together with their sl2-triples,
primitive decompositions and Verbitsky components."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'
__version__ = '1.0'

release = [int(x) for x in __version__.split('.')]

import os
import sys

if sys.version_info[:2] < (3, 8):
    raise Exception('llvlab requires Python 3.8 or later, you are using '
                    'Python {0}.{1}'.format(*sys.version_info[:2]))

try:
    import numpy as np
except ImportError:
    raise ImportError('numpy not found, it is a required package')

from .tools import *

CONFIGURATION = {
    'backup': False,
    'backup_ext': '.BAK',
    'witness_seed': 20130,
    'witness_samples': 20,
    'max_sym_dim': 100000,
}

LOGGER = PackageLogger('.llvlab')

SETTINGS = PackageSettings('llvlab', logger=LOGGER)
SETTINGS.load()


docstring = """

    ================  ====================================================
    Option            Default setting (type)
    ================  ===================================================="""

_ = {}
for key, value in CONFIGURATION.items():
    docstring += """
    {0:16s}  {1:52s}""".format(key, str(value) +
                               ' (' + type(value).__name__ + ')')
    if SETTINGS.get(key) is None:
        _[key] = value
docstring += """
    ================  ===================================================="""

if _:
    SETTINGS.update(_)


def confLLV(*args, **kwargs):
    """Configure LLVLab.  With option names as arguments, return their
    values; with keyword arguments, set and save them."""

    if args:
        if len(args) == 1:
            return SETTINGS.get(args[0])
        else:
            return [SETTINGS.get(option) for option in args]

    for option, value in kwargs.items():
        if option in CONFIGURATION:
            type_ = type(CONFIGURATION[option])
            if type(value) == type_:
                SETTINGS[option] = value
                SETTINGS.save()
                LOGGER.debug('LLVLab configuration is set: {0}={1}'
                             .format(option, value))
            else:
                raise TypeError('value must be a ' + type_.__name__)
        else:
            raise KeyError("'{0}' is not a valid option".format(option))

confLLV.__doc__ += docstring

confLLV.__doc__ += """

    Usage example::

      confLLV('witness_seed')
      confLLV('backup', 'backup_ext')
      confLLV(witness_samples=40)"""


def getWitnessSeed():
    """Return the seed of the irreducibility witness sampler, which is the
    value of environment variable :envvar:`LLV_LAB_SEED` when it is set
    and the *witness_seed* option otherwise."""

    value = os.environ.get('LLV_LAB_SEED')
    if value is None or not value.strip():
        return SETTINGS.get('witness_seed', CONFIGURATION['witness_seed'])
    try:
        return int(value.strip(), 10)
    except ValueError:
        raise ValueError('LLV_LAB_SEED must be a decimal integer, not {0!r}'
                         .format(value))


class LLVException(Exception):

    """Base class of errors raised by LLVLab."""

    pass


def startLogfile(filename, **kwargs):

    LOGGER.startLogfile(filename, **kwargs)

startLogfile.__doc__ = LOGGER.startLogfile.__doc__


def closeLogfile(filename):
    """Close logfile with *filename*."""

    LOGGER.closeLogfile(filename)


def setVerbosity(level):
    """

    >>> from llvlab import *
    >>> setVerbosity('none')"""

    LOGGER.setVerbosity(level)

setVerbosity.__doc__ = LOGGER.setVerbosity.__doc__.replace('\n    ', '\n') + \
    setVerbosity.__doc__


def getVerbosity():
    """Return LLVLab console verbosity level."""

    return LOGGER.getVerbosity()


def test(**kwargs):
    """Run LLVLab tests, see :mod:`llvlab.tests` for details."""

    try:
        import llvlab.tests
    except ImportError:
        LOGGER.warning('Could not import LLVLab unit tests, '
                       'please check your installation.')
    else:
        return llvlab.tests.test(**kwargs)


__all__ = ['confLLV', 'getWitnessSeed', 'getVerbosity', 'setVerbosity',
           'startLogfile', 'closeLogfile', 'LLVException']

from . import exactla
from .exactla import *
__all__.extend(exactla.__all__)
__all__.append('exactla')

from . import graded
from .graded import *
__all__.extend(graded.__all__)
__all__.append('graded')

from . import lefschetz
from .lefschetz import *
__all__.extend(lefschetz.__all__)
__all__.append('lefschetz')

from . import liealg
from .liealg import *
__all__.extend(liealg.__all__)
__all__.append('liealg')

from . import models
from .models import *
__all__.extend(models.__all__)
__all__.append('models')

from . import verbitsky
from .verbitsky import *
__all__.extend(verbitsky.__all__)
__all__.append('verbitsky')

from . import rep
from .rep import *
__all__.extend(rep.__all__)
__all__.append('rep')

import llvlab
__all__.append('llvlab')
