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

"""This module contains unit tests for the :program:`llv-lab` program."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import io
import os
import json
import unittest
from contextlib import redirect_stdout, redirect_stderr
from fractions import Fraction
from unittest import mock

from llvlab import setVerbosity
from llvlab.routines import main, Report
from llvlab.tests.test_datafiles import *

setVerbosity('none')

K3TYPE = getDatafilePath('k3_type.json')
CLASSES = getDatafilePath('k3_type_classes.json')
NOT_COMMUTATIVE = getDatafilePath('not_commutative.json')


def run(*argv):
    """Return exit code and standard output of ``llv-lab argv``."""

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


class TestReport(unittest.TestCase):

    def testDocument(self):

        report = Report('test')
        report.setValue('ratio', Fraction(1, 2))
        report.setValue('dims', {-2: 3, 0: (1, 2)})
        self.assertTrue(report.addCheck('first', True, 1, 1, 'reference'))
        document = report.getDocument()
        self.assertEqual(document['ratio'], '1/2')
        self.assertEqual(document['dims'], {'-2': 3, '0': [1, 2]})
        self.assertTrue(document['passed'])
        self.assertEqual(document['checks'][0]['paper_ref'], 'reference')

    def testFailure(self):

        report = Report('test')
        report.addCheck('first', True)
        self.assertFalse(report.addCheck('second', False, 1, 2))
        self.assertFalse(report.isPassed())
        text = report.toText()
        self.assertIn('[FAIL] second (expected 1, actual 2)', text)
        self.assertIn('1 of 2 checks passed', text)


class TestValidate(unittest.TestCase):

    def testPassing(self):

        code, out = run('validate', K3TYPE, '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['command'], 'validate')
        self.assertEqual(document['dims'], {'0': 1, '2': 3, '4': 1})

    def testFailing(self):

        code, out = run('validate', NOT_COMMUTATIVE)
        self.assertEqual(code, 1)
        self.assertIn('[FAIL] koszul', out)

    def testMissingFile(self):

        with self.assertRaises(SystemExit) as context:
            run('validate', os.path.join(TEMPDIR, 'missing.json'))
        self.assertEqual(context.exception.code, 2)


class TestQuaternion(unittest.TestCase):

    def testJSON(self):

        code, out = run('quaternion', '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['command'], 'quaternion')
        self.assertEqual(document['closure_dim'], 10)
        self.assertEqual(document['degree_dims'],
                         {'-2': 3, '0': 4, '2': 3})
        self.assertTrue(document['passed'])
        for check in document['checks']:
            self.assertIn('paper_ref', check)


class TestVerbitsky(unittest.TestCase):

    def testRankFour(self):

        code, out = run('verbitsky', '--rank', '4', '--n', '2',
                        '--samples', '5', '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['dims'], [1, 4, 10, 4, 1])
        self.assertEqual(document['method'], 'ideal')
        self.assertEqual(document['isotropic_vectors'], 4)
        names = [check['name'] for check in document['checks']]
        self.assertIn('isotropic powers vanish', names)

    def testDefiniteGram(self):
        """Definite forms skip the isotropic power check."""

        gram = os.path.join(TEMPDIR, 'llvlab_identity12.json')
        with open(gram, 'w') as out:
            json.dump([[int(i == j) for j in range(12)] for i in range(12)],
                      out)
        try:
            code, out = run('verbitsky', '--gram', gram, '--n', '1',
                            '--json')
        finally:
            os.remove(gram)
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['dims'], [1, 12, 1])
        self.assertEqual(document['isotropic_vectors'], 0)
        self.assertEqual(document['isotropic_check'], 'skipped')
        names = [check['name'] for check in document['checks']]
        self.assertNotIn('isotropic powers vanish', names)


class TestLLV(unittest.TestCase):

    def testGeneratorsFile(self):

        code, out = run('llv', K3TYPE, '--generators', CLASSES,
                        '--samples', '3', '--seed', '1', '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['generators'], 3)
        self.assertEqual(document['closure_dim'], 10)

    def testUnknownModel(self):

        with self.assertRaises(SystemExit) as context:
            run('llv', 'torus')
        self.assertEqual(context.exception.code, 2)

    def testInvalidSeed(self):

        with mock.patch.dict(os.environ, {'LLV_LAB_SEED': 'abc'}):
            with self.assertRaises(SystemExit) as context:
                run('llv', 'hyperbolic')
        self.assertEqual(context.exception.code, 2)


class TestPrim(unittest.TestCase):

    def testDeterministic(self):

        first = run('prim', K3TYPE, '--seed', '5', '--samples', '3',
                    '--json')
        second = run('prim', K3TYPE, '--seed', '5', '--samples', '3',
                     '--json')
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first[1])['prim_dim'], 1)
        self.assertIsNone(json.loads(first[1])['weil_plane'])

    def testWeilParity(self):

        code, out = run('prim', 'k3type:4', '--seed', '3', '--samples', '2',
                        '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['weil_plane'], [[0, 0, 1, 0], [0, 0, 0, 1]])
        self.assertEqual(document['weil_parity']['0'], 'x')
        names = [check['name'] for check in document['checks']]
        self.assertIn('Weil parity in degree 2', names)
        self.assertIn('h fails Weil parity', names)


class TestBuiltins(unittest.TestCase):

    """Built-in models pass the llv and prim reports."""

    NAMES = ['quaternion', 'hyperbolic', 'k3type:4', 'verbitsky:4:2']

    def assertPasses(self, command, name):

        code, out = run(command, name, '--seed', '2', '--samples', '2',
                        '--json')
        document = json.loads(out)
        failed = [check['name'] for check in document['checks']
                  if not check['passed']]
        self.assertEqual(failed, [], '{0} {1}'.format(command, name))
        self.assertEqual(code, 0)
        return document

    def testLLV(self):

        for name in self.NAMES:
            self.assertPasses('llv', name)

    def testPrim(self):

        for name in self.NAMES:
            self.assertPasses('prim', name)

    def testHyperbolic(self):

        document = self.assertPasses('llv', 'hyperbolic')
        self.assertEqual(document['closure_dim'], 6)
        self.assertEqual(document['derived_g0_dim'], 1)

    @unittest.skipUnless(SLOW, SLOW_MSG)
    def testK3(self):

        self.assertPasses('llv', 'k3')
        self.assertPasses('prim', 'k3')

    def testReferences(self):
        """Each check names the statement it verifies."""

        document = self.assertPasses('llv', 'k3type:4')
        references = [check['paper_ref'] for check in document['checks']]
        self.assertTrue(all(references))
        self.assertEqual(len(set(references)), len(references))
        names = [check['name'] for check in document['checks']]
        self.assertTrue(all(r != n for r, n in zip(references, names)))


class TestUsage(unittest.TestCase):

    def testNoArguments(self):

        self.assertEqual(run()[0], 2)
