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

"""This module contains tools for logging, package settings, and file
handling."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import os
import sys
import gzip
import time
import pickle as _pickle
import logging
import os.path
import datetime
import logging.handlers

now = datetime.datetime.now

__all__ = ['PackageLogger', 'PackageSettings',
           'openFile', 'isWritable', 'pickle', 'unpickle',
           'USERHOME']

USERHOME = os.getenv('USERPROFILE') or os.getenv('HOME') or os.getcwd()

LOGGING_LEVELS = {'debug': logging.DEBUG,
                  'info': logging.INFO,
                  'warning': logging.WARNING,
                  'error': logging.ERROR,
                  'critical': logging.CRITICAL,
                  'none': logging.CRITICAL + 10}
for key, value in list(LOGGING_LEVELS.items()):
    LOGGING_LEVELS[value] = key


class PackageLogger(object):

    """A thin wrapper around a :class:`logging.Logger` that writes prefixed
    console messages to ``sys.stderr``, draws one-line progress reports,
    and times long computations."""

    def __init__(self, name, **kwargs):
        """*name* is the name of the wrapped logger.  Keyword arguments
        *prefix* (default ``'@> '``) and *console* (default ``'debug'``)
        set the console message prefix and the initial verbosity."""

        logger = logging.getLogger(name)
        logger.setLevel(logging.DEBUG)
        logger.propagate = False

        prefix = kwargs.get('prefix', '@> ')
        if not isinstance(prefix, str):
            raise TypeError('prefix must be a string')
        self._prefix = prefix

        for handler in logger.handlers:
            handler.close()
        logger.handlers = []

        console = logging.StreamHandler(sys.stderr)
        self._level = LOGGING_LEVELS[kwargs.get('console', 'debug')]
        console.setLevel(self._level)
        console.setFormatter(logging.Formatter(self._prefix + '%(message)s'))
        logger.addHandler(console)
        self._console = console
        self._logger = logger

        self._warning = kwargs.get('warning', 'WARNING ')
        self._error = kwargs.get('error', 'ERROR ')

        self._steps = None
        self._last = None
        self._start = None
        self._prev = None
        self._msg = ''
        self._line = ''

    def getVerbosity(self):
        """Return console verbosity level of the logger."""

        return LOGGING_LEVELS.get(self._console.level)

    def setVerbosity(self, level):
        """Change console verbosity *level* for the current session.  Log
        messages are written to ``sys.stderr``.  Accepted levels are:

        ========  ============================================
        Level     Description
        ========  ============================================
        debug     everything, including timings, is printed
        info      brief progress information is printed
        warning   only warnings and errors are printed
        error     only errors are printed
        none      nothing is printed
        ========  ============================================"""

        lvl = LOGGING_LEVELS.get(str(level).lower(), None)
        if lvl is None or not isinstance(lvl, int):
            self.warning('{0} is not a valid log level.'.format(level))
        else:
            self._console.setLevel(lvl)
            self._level = lvl

    def getPrefix(self):
        """Return string prefixed to console messages."""

        return self._prefix

    def info(self, msg):
        """Log *msg* with severity 'INFO'."""

        self.clear()
        self._logger.info(msg)

    def debug(self, msg):
        """Log *msg* with severity 'DEBUG'."""

        self.clear()
        self._logger.debug(msg)

    def warning(self, msg):
        """Log *msg* with severity 'WARNING'."""

        self.clear()
        self._logger.warning(self._warning + msg)

    warn = warning

    def error(self, msg):
        """Log *msg* with severity 'ERROR'."""

        self.clear()
        self._logger.error(self._error + msg)

    def critical(self, msg):
        """Log *msg* with severity 'CRITICAL'."""

        self.clear()
        self._logger.critical(msg)

    def getHandlers(self):
        """Return handlers of the wrapped logger."""

        return self._logger.handlers

    def progress(self, msg, steps):
        """Start a progress report for a computation of *steps* steps."""

        if not isinstance(steps, int) or steps < 0:
            raise ValueError('steps must be a non-negative integer')
        self._steps = steps
        self._last = 0
        self._start = time.time()
        self._prev = None
        self._msg = msg
        self._line = ''

    def update(self, step):
        """Redraw the progress line for completed *step*."""

        n = self._steps
        if not n or self._level >= logging.WARNING:
            return
        if step <= self._last or step > n:
            return
        self._last = step
        percent = 100 * step // n
        if self._prev == percent:
            return
        self._prev = percent
        sys.stderr.write('\r' + ' ' * len(self._line) + '\r')
        line = '{0}{1} [{2:3d}%]'.format(self._prefix, self._msg, percent)
        sys.stderr.write(line)
        sys.stderr.flush()
        self._line = line

    def clear(self):
        """Erase the current progress line."""

        if self._line and self._level < logging.WARNING:
            sys.stderr.write('\r' + ' ' * len(self._line) + '\r')
            sys.stderr.flush()
        self._line = ''

    def startLogfile(self, filename, **kwargs):
        """Start saving log messages in *filename*.

        :arg filename: name of the logfile, ``'.log'`` is appended when
            missing
        :arg mode: mode in which the file is opened, default is ``'a'``
        :arg backupcount: number of rotated logfiles kept, default is 1
        :arg loglevel: level of messages written, default is ``'debug'``"""

        if not isinstance(filename, str):
            raise TypeError('filename must be a string')
        logfilename = filename
        if not logfilename.endswith('.log'):
            logfilename += '.log'
        rollover = (os.path.isfile(logfilename) and
                    kwargs.get('mode', 'a') != 'a')
        logfile = logging.handlers.RotatingFileHandler(logfilename,
                    mode=kwargs.get('mode', 'a'), maxBytes=0,
                    backupCount=kwargs.get('backupcount', 1))
        logfile.setLevel(LOGGING_LEVELS[kwargs.get('loglevel', 'debug')])
        logfile.setFormatter(logging.Formatter('%(message)s'))
        self._logger.addHandler(logfile)
        if rollover:
            logfile.doRollover()
        self.info('Logging into file: {0}'.format(logfilename))
        self.info('Logging started at {0}'.format(now()))

    def closeLogfile(self, filename):
        """Stop saving log messages in *filename*."""

        filename = str(filename)
        if not filename.endswith('.log'):
            filename += '.log'
        for index, handler in enumerate(self.getHandlers()):
            if isinstance(handler, logging.handlers.RotatingFileHandler):
                if handler.baseFilename in (filename,
                                            os.path.abspath(filename)):
                    self.info('Logging stopped at {0}'.format(now()))
                    handler.close()
                    self._logger.handlers.pop(index)
                    return
        self.warning("Logfile '{0}' was not found.".format(filename))

    def timeit(self):
        """Start timing a computation, see :meth:`timing`."""

        self._start = time.time()

    def timing(self, msg=None):
        """Return seconds passed since :meth:`timeit` when *msg* is
        ``None``, otherwise log *msg* formatted with the elapsed time, e.g.
        ``'Closure computed in %.2fs.'``, at debug level."""

        elapsed = time.time() - (self._start or time.time())
        if msg is None:
            return elapsed
        self.debug(msg % elapsed)


class PackageSettings(object):

    """Package settings kept in a dictionary that is pickled in the user's
    home directory, so that options set with :func:`~llvlab.confLLV`
    persist between sessions."""

    def __init__(self, pkg='llvlab', rcfile=None, logger=None):
        """*rcfile* defaults to :file:`~/.pkgrc`."""

        self._package = pkg
        if rcfile is None:
            self._rcfile = os.path.join(USERHOME, '.' + pkg + 'rc')
        else:
            self._rcfile = rcfile
        self._logger = logger if isinstance(logger, PackageLogger) else None
        self._settings = {}

    def __getitem__(self, key):

        return self._settings[key]

    def __setitem__(self, key, value):

        self._settings[key] = value

    def __contains__(self, key):

        return key in self._settings

    def get(self, key, default=None):

        return self._settings.get(key, default)

    def update(self, *args, **kwargs):
        """Update settings dictionary."""

        for arg in args:
            self._settings.update(arg)
        self._settings.update(kwargs)

    def load(self):
        """Load pickled settings, if the settings file exists."""

        if not os.path.isfile(self._rcfile):
            return
        try:
            settings = unpickle(self._rcfile)
        except Exception as err:
            if self._logger:
                self._logger.warning("{0} configuration file '{1}' could "
                                     "not be loaded ({2})."
                                     .format(self._package, self._rcfile,
                                             err))
        else:
            if isinstance(settings, dict):
                self._settings.update(settings)

    def save(self):
        """Pickle the settings dictionary."""

        folder = os.path.dirname(self._rcfile) or os.getcwd()
        if not isWritable(folder):
            if self._logger:
                self._logger.warning("{0} cannot write configuration file "
                                     "to '{1}', user does not have write "
                                     "access.".format(self._package, folder))
            return
        try:
            pickle(self._settings, self._rcfile, backup=False)
        except Exception as err:
            if self._logger:
                self._logger.warning("{0} cannot write configuration file "
                                     "'{1}' ({2})."
                                     .format(self._package, self._rcfile,
                                             err))


OPEN = {
    '.gz': gzip.open,
    '.GZ': gzip.open,
}


def openFile(filename, *args, **kwargs):
    """Open *filename* for reading, writing, or appending.  First argument
    in *args* is treated as the mode.  Gzipped files are opened
    transparently in text mode when the mode has no ``'b'``.

    :arg backup: backup existing file when opening for writing, default is
        obtained from package settings
    :type backup: bool

    :arg backup_ext: extension for backup file, default is :file:`.BAK`
    :type backup_ext: str

    :arg folder: folder that *filename* is relative to
    :type folder: str"""

    if not isinstance(filename, str):
        raise TypeError('filename must be a string')
    pkg = sys.modules[__package__]
    folder = kwargs.pop('folder', None)
    if folder:
        filename = os.path.join(folder, filename)
    ext = os.path.splitext(filename)[1]
    backup = kwargs.pop('backup', pkg.SETTINGS.get('backup', False))
    backup_ext = kwargs.pop('backup_ext',
                            pkg.SETTINGS.get('backup_ext', '.BAK'))
    if args and args[0][0] in ('a', 'w'):
        if os.path.isfile(filename) and backup:
            bak = filename + backup_ext
            if os.path.isfile(bak):
                os.remove(bak)
            os.rename(filename, bak)
    opener = OPEN.get(ext)
    if opener is None:
        return open(filename, *args, **kwargs)
    if args and 'b' not in args[0]:
        args = (args[0] + 't',) + args[1:]
    elif not args:
        args = ('rt',)
    return opener(filename, *args, **kwargs)


def isWritable(path):
    """Return true if *path* is writable by the user."""

    return isinstance(path, str) and os.path.exists(path) and \
        os.access(path, os.W_OK)


def pickle(obj, filename, **kwargs):
    """Pickle *obj* and dump it in *filename*."""

    with openFile(filename, 'wb', **kwargs) as out:
        _pickle.dump(obj, out)
    return filename


def unpickle(filename, **kwargs):
    """Unpickle object in *filename*."""

    with openFile(filename, 'rb', **kwargs) as inp:
        return _pickle.load(inp)
