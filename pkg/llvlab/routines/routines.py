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

"""This module contains functions which are used as command line programs.
Each function takes parsed arguments and returns a :class:`Report`."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import os.path
import json
import itertools
from fractions import Fraction
from math import comb

import numpy as np

__all__ = ['Report', 'llvlab_validate', 'llvlab_llv', 'llvlab_quaternion',
           'llvlab_verbitsky', 'llvlab_prim']

SCHEMA = 1

AXIOMS = {
    'koszul': 'x y = (-1)^(|x| |y|) y x for homogeneous x and y',
    'associativity': '(x y) z = x (y z)',
    'unit': '1 x = x for the unit 1 of degree 0',
    'pairing': 'the Poincare pairing H^k x H^(top - k) -> Q is '
               'perfect',
}

WEIL_PARITY = ('a Weil operator acts on H^k with eigenvalues i m, m of '
               'the parity of k')


def _jsonable(value):
    """Return *value* with fractions as ``'p/q'`` strings, tuples as lists
    and dictionary keys as strings."""

    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, dict):
        return dict((str(key), _jsonable(item)) for key, item in
                    value.items())
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


class Report(object):

    """Verification report with named values and an ordered list of
    checks, each of which records *name*, *passed*, *expected*, *actual*
    and a *paper_ref* naming the statement being checked."""

    def __init__(self, command):

        self._command = command
        self._values = {}
        self._checks = []

    def __repr__(self):

        return '<Report: {0}, {1} of {2} checks passed>'.format(
            self._command, sum(c['passed'] for c in self._checks),
            len(self._checks))

    def getCommand(self):
        """Return subcommand name."""

        return self._command

    def setValue(self, key, value):
        """Set reported *value* of *key*."""

        self._values[key] = _jsonable(value)

    def getValue(self, key):
        """Return reported value of *key*."""

        return self._values[key]

    def addCheck(self, name, passed, expected=None, actual=None,
                 reference=None):
        """Append a check and return *passed*."""

        passed = bool(passed)
        self._checks.append({'name': name, 'passed': passed,
                             'expected': _jsonable(expected),
                             'actual': _jsonable(actual),
                             'paper_ref': reference})
        return passed

    def getChecks(self):
        """Return list of check dictionaries."""

        return list(self._checks)

    def isPassed(self):
        """Return **True** when all checks passed."""

        return all(check['passed'] for check in self._checks)

    def getDocument(self):
        """Return report as a dictionary, with keys in a fixed order."""

        document = {'schema': SCHEMA, 'command': self._command}
        document.update(self._values)
        document['passed'] = self.isPassed()
        document['checks'] = self.getChecks()
        return document

    def toJSON(self):
        """Return report as a JSON string."""

        return json.dumps(self.getDocument(), indent=2)

    def toText(self):
        """Return report as human readable text."""

        lines = ['llv-lab {0} report'.format(self._command)]
        for key, value in self._values.items():
            lines.append('  {0}: {1}'.format(key, json.dumps(value)))
        lines.append('checks:')
        for check in self._checks:
            line = '  [{0}] {1}'.format('PASS' if check['passed'] else 'FAIL',
                                        check['name'])
            if not check['passed']:
                line += ' (expected {0}, actual {1})'.format(
                    json.dumps(check['expected']),
                    json.dumps(check['actual']))
            lines.append(line)
        lines.append('{0} of {1} checks passed'.format(
            sum(c['passed'] for c in self._checks), len(self._checks)))
        return '\n'.join(lines)


def _loadTarget(target):
    """Return algebra from a JSON file or a built-in model name."""

    import llvlab

    if os.path.isfile(target):
        return llvlab.loadAlgebra(target)
    if target.lower().endswith('.json'):
        raise IOError('{0} is not a valid file'.format(target))
    return llvlab.getBuiltin(target)


def _loadJSON(filename):

    if not os.path.isfile(filename):
        raise IOError('{0} is not a valid file'.format(filename))
    with open(filename) as inp:
        try:
            return json.load(inp)
        except ValueError as err:
            import llvlab
            raise llvlab.SchemaError('{0} is not a valid JSON file ({1})'
                                     .format(filename, err))


def _loadGram(filename):
    """Return a :class:`.QuadraticSpace` from a JSON file holding a Gram
    matrix, or an object whose *gram* key holds one."""

    import llvlab

    document = _loadJSON(filename)
    title = None
    if isinstance(document, dict):
        if 'gram' not in document:
            raise llvlab.SchemaError('{0} has no gram key'.format(filename))
        title = document.get('name')
        document = document['gram']
    return llvlab.QuadraticSpace(document, title)


def _loadGenerators(filename):

    import llvlab

    document = _loadJSON(filename)
    if not isinstance(document, list) or not document:
        raise llvlab.SchemaError('{0} must hold a nonempty list of vectors'
                                 .format(filename))
    return [llvlab.RationalMatrix(vector) for vector in document]


def _degreeDims(algebra):

    return dict((d, n) for d, n in sorted(algebra.getDegreeDims().items()))


def _checkClosure(report, closure, algebra, triples, opt):
    """Add checks shared by the *llv* and *verbitsky* commands."""

    import llvlab

    space = algebra.getSpace()
    signature = llvlab.calcKillingSignature(closure)
    report.setValue('killing_signature', signature)
    report.addCheck('sl2 relations', all(triple.checkRelations()
                                         for triple in triples),
                    True, True, '[h, e_a] = 2 e_a, [h, f_a] = -2 f_a and '
                    '[e_a, f_a] = h for every generating class a')
    report.addCheck('closed under brackets', closure.checkClosed(), True,
                    True, 'brackets of basis operators of the algebra '
                    'generated by all e_a and f_a stay in it')
    report.addCheck('killing form nondegenerate', signature[2] == 0, 0,
                    signature[2], 'the Killing form of the LLV algebra is '
                    'nondegenerate, so the algebra is semisimple')
    degrees = sorted(closure.getDegreeDims())
    report.addCheck('degrees in {-2, 0, 2}', set(degrees) <= set([-2, 0, 2]),
                    [-2, 0, 2], degrees,
                    'ad h has eigenvalues -2, 0 and 2 on the LLV algebra')

    dim2 = space.getDim(2)
    cups = [llvlab.buildCupOperator(algebra, row)
            for row in np.eye(dim2, dtype=np.int64)]
    injective = llvlab.LieOperatorAlgebra(space, cups).getDim() == dim2
    report.addCheck('a -> e_a bijective onto g_2', injective and
                    closure.getDegreeDims().get(2, 0) == dim2, dim2,
                    closure.getDegreeDims().get(2, 0),
                    'a -> e_a is an isomorphism of H^2 onto g_2')

    try:
        derived, _ = llvlab.decomposeDegreeZero(closure)
    except llvlab.NotDirectSum as err:
        report.addCheck("g0 = g0' + Qh", False, True, str(err),
                        "g_0 = g_0' + Qh is a direct sum")
        derived = llvlab.LieOperatorAlgebra(space)
    else:
        report.addCheck("g0 = g0' + Qh", True, len(derived) + 1,
                        closure.getDegreeDims().get(0, 0),
                        "g_0 = g_0' + Qh is a direct sum")
    report.setValue('derived_g0_dim', derived.getDim())
    report.addCheck("g0' acts by derivations",
                    all(llvlab.checkDerivation(u, algebra)
                        for u in derived.getBasis()), True, True,
                    "every u in g_0' satisfies u(x y) = u(x) y + x u(y)")
    report.addCheck('phi invariance', llvlab.checkInfinitesimalInvariance(
        closure, llvlab.calcPhiForm(algebra)), True, True,
        'the LLV algebra is skew for the signed Poincare '
        'pairing phi')
    if space.getTopDegree() == 4 and dim2:
        gram = algebra.getPairingMatrix(2)
        restricted = [u.getBlock(2) for u in derived.getBasis()]
        report.addCheck("q invariance of g0'",
                        llvlab.checkInfinitesimalInvariance(restricted,
                                                            gram),
                        True, True,
                        "g_0' restricted to H^2 is skew for q")

    seed = opt.seed if opt.seed is not None else llvlab.getWitnessSeed()
    samples = llvlab.sampleClasses(algebra, opt.samples, seed=seed)
    sampled = [llvlab.buildSl2Triple(algebra, a) for a in samples]
    lowering = [triple.getF() for triple in list(triples) + sampled]
    commuting = all(llvlab.calcBracket(first, second).isZero()
                    for first, second in itertools.combinations(lowering, 2))
    report.addCheck('[f_a, f_b] = 0', commuting, True, commuting,
                    '[f_a, f_b] = 0 for all Lefschetz classes a and b')
    report.addCheck('sampled triples in closure',
                    all(closure.contains(t.getE()) and
                        closure.contains(t.getF()) for t in sampled),
                    len(sampled), len(sampled),
                    'e_a and f_a lie in the LLV algebra for every '
                    'Lefschetz class a')
    report.setValue('sampled_classes', len(sampled))


def llvlab_validate(opt):
    """Check graded Frobenius algebra axioms of an algebra file."""

    import llvlab

    algebra = llvlab.loadAlgebra(opt.file, validate=False)
    report = Report('validate')
    report.setValue('name', algebra.getTitle())
    report.setValue('dims', dict(algebra.getSpace().getComponents()))
    report.setValue('shift', algebra.getShift())
    violations = llvlab.validateAlgebra(algebra)
    for axiom in ('koszul', 'associativity', 'unit', 'pairing'):
        found = [v for v in violations if v.startswith(axiom + ':')]
        report.addCheck(axiom, not found, [], found, AXIOMS[axiom])
    return report


def llvlab_llv(opt):
    """Compute the LLV algebra of an algebra file or built-in model."""

    import llvlab

    algebra = _loadTarget(opt.target)
    if opt.generators == 'auto':
        triples = llvlab.buildLLVTriples(algebra)
    else:
        triples = llvlab.buildLLVTriples(algebra,
                                         _loadGenerators(opt.generators))
    closure = llvlab.calcLLVAlgebra(algebra, triples)
    report = Report('llv')
    report.setValue('name', algebra.getTitle())
    report.setValue('generators', len(triples))
    report.setValue('closure_dim', closure.getDim())
    report.setValue('degree_dims', _degreeDims(closure))
    _checkClosure(report, closure, algebra, triples, opt)
    if llvlab.calcVerbitskySubring(algebra).isWhole():
        dim, dims = llvlab.predictLLVDims(algebra.getSpace().getDim(2))
        report.addCheck('dimension of so(q + U)', closure.getDim() == dim,
                        dim, closure.getDim(),
                        'the LLV algebra is so(q + U) of dimension '
                        '(b2 + 2)(b2 + 1) / 2')
        report.addCheck('degree dimensions of so(q + U)',
                        _degreeDims(closure) == dims, dims,
                        _degreeDims(closure),
                        'g_2 and g_-2 have dimension b2, g_0 = so(q) + Qh')
    return report


def llvlab_quaternion(opt):
    """Run the suite of the quaternionic exterior algebra."""

    import llvlab

    model = llvlab.buildQuaternionModel(opt.rank)
    space = model.getSpace()
    triples = [model.getTriple(name) for name in llvlab.QUATERNIONS]
    generators = []
    for triple in triples:
        generators.extend([triple.getE(), triple.getF()])
    closure = llvlab.calcLieClosure(generators, 'quaternionic LLV algebra')
    report = Report('quaternion')
    report.setValue('rank', opt.rank)
    report.setValue('closure_dim', closure.getDim())
    report.setValue('degree_dims', _degreeDims(closure))
    report.addCheck('closure dimension', closure.getDim() == 10, 10,
                    closure.getDim(),
                    'e_L and f_L for L = I, J, K generate a Lie algebra of '
                    'dimension 10')
    dims = {-2: 3, 0: 4, 2: 3}
    report.addCheck('degree dimensions', _degreeDims(closure) == dims, dims,
                    _degreeDims(closure),
                    'g_2 is spanned by e_I, e_J, e_K and g_0 by h and the '
                    'Weil commutators K_LM')

    h = llvlab.buildHOperator(space)
    weil = [llvlab.calcWeilCommutator(model, a, b) for a, b in
            itertools.combinations(llvlab.QUATERNIONS, 2)]
    named = [t.getE() for t in triples] + [t.getF() for t in triples] + \
        [h] + weil
    span = llvlab.LieOperatorAlgebra(space, named)
    report.addCheck('ten operators independent', span.getDim() == 10, 10,
                    span.getDim(),
                    'e_L, f_L, h and K_LM are linearly independent')
    report.addCheck('ten operators span closure', span == closure, True,
                    span == closure,
                    'e_L, f_L, h and K_LM span the generated algebra')
    for relation, passed in llvlab.checkQuaternionRelations(model):
        report.addCheck(relation, passed, True, passed,
                        'bracket relations among e_L, f_L, h and K_LM')
    for name, triple in zip(llvlab.QUATERNIONS, triples):
        dual = llvlab.calcJacobsonMorozovDual(triple.getE())
        report.addCheck('f_{0} is the Hodge adjoint of e_{0}'.format(name),
                        dual == triple.getF(), True, dual == triple.getF(),
                        'f_L is the unique f with (e_L, h, f) an '
                        'sl2-triple')
    signature = llvlab.calcKillingSignature(closure)
    oracle = llvlab.calcKillingSignature(llvlab.buildOrthogonalAlgebra(
        np.diag([1, 1, 1, 1, -1])))
    report.setValue('killing_signature', signature)
    report.addCheck('killing signature of so(4,1)', signature == oracle,
                    oracle, signature,
                    'the generated algebra has the Killing signature of '
                    'so(4, 1)')
    for (a, b), operator in zip(itertools.combinations(llvlab.QUATERNIONS, 2),
                                weil):
        passed = llvlab.checkWeilParity(operator)
        report.addCheck('Weil parity of K_{0}{1}'.format(a, b), passed,
                        True, passed, WEIL_PARITY)
    passed = llvlab.checkWeilParity(h)
    report.addCheck('h fails Weil parity', not passed, False, passed,
                    'h acts on each H^k by a rational scalar, nonzero off '
                    'the middle degree')
    return report


def _largeForm():

    import llvlab

    return llvlab.buildK3Lattice().directSum(llvlab.QuadraticSpace([[-2]]),
                                             'K3 lattice + <-2>')


def llvlab_verbitsky(opt):
    """Build and check the Verbitsky component of a quadratic form."""

    import llvlab

    method = opt.method
    if opt.large:
        q, n, method = _largeForm(), 2, 'pairing'
    elif opt.gram:
        q, n = _loadGram(opt.gram), opt.n
    else:
        q, n = llvlab.buildStandardForm(opt.rank), opt.n
    rank = len(q)
    component = llvlab.buildVerbitskyComponent(q, n, method)
    algebra = component.getAlgebra()
    report = Report('verbitsky')
    report.setValue('rank', rank)
    report.setValue('n', n)
    report.setValue('method', method)
    dims = component.getDims()
    report.setValue('dims', dims)
    expected = [comb(rank - 1 + min(k, 2 * n - k), min(k, 2 * n - k))
                for k in range(2 * n + 1)]
    report.addCheck('dimensions', dims == expected, expected, dims,
                    'dim SH^2k = C(b2 - 1 + k, k) for k <= n and SH^2k '
                    'is dual to SH^(4n - 2k)')
    report.addCheck('top dimension', dims[-1] == 1, 1, dims[-1],
                    'SH^4n is one dimensional')
    passed = llvlab.checkPerfectPairing(component)
    report.addCheck('perfect pairing', passed, True, passed,
                    'the Poincare pairing on SH is perfect')
    if not opt.large:
        violations = llvlab.validateAlgebra(algebra)
        report.addCheck('algebra axioms', not violations, [], violations,
                        'graded commutative, associative and unital with '
                        'a perfect Poincare pairing')
    vectors = llvlab.findIsotropicBasis(q)[:opt.samples]
    report.setValue('isotropic_vectors', len(vectors))
    if vectors:
        vanishing = [llvlab.checkIsotropicPower(component, v)
                     for v in vectors]
        report.addCheck('isotropic powers vanish', all(vanishing),
                        len(vectors), sum(vanishing),
                        'a^(n+1) = 0 in the Verbitsky component when '
                        'q(a, a) = 0')
    else:
        llvlab.LOGGER.info('No hyperbolic plane found among basis vectors, '
                           'their sums and differences, isotropic powers '
                           'not checked.')
        report.setValue('isotropic_check', 'skipped')
    if opt.llv:
        triples = llvlab.buildLLVTriples(algebra)
        closure = llvlab.calcLLVAlgebra(algebra, triples)
        report.setValue('closure_dim', closure.getDim())
        report.setValue('degree_dims', _degreeDims(closure))
        dim, degree_dims = llvlab.predictLLVDims(q)
        report.addCheck('dimension of so(q + U)', closure.getDim() == dim,
                        dim, closure.getDim(),
                        'the LLV algebra is so(q + U) of dimension '
                        '(b2 + 2)(b2 + 1) / 2')
        report.addCheck('degree dimensions of so(q + U)',
                        _degreeDims(closure) == degree_dims, degree_dims,
                        _degreeDims(closure),
                        'g_2 and g_-2 have dimension b2, g_0 = so(q) + Qh')
        _checkClosure(report, closure, algebra, triples, opt)
    return report


def _degreeTwoForm(algebra, target):
    """Return the quadratic form of degree 2 classes when it is known, the
    Poincare pairing for top degree 4 and the standard form for built-in
    Verbitsky components."""

    import llvlab

    if algebra.getSpace().getTopDegree() == 4:
        return llvlab.QuadraticSpace(algebra.getPairingMatrix(2))
    parts = target.strip().lower().split(':')
    if not os.path.isfile(target) and parts[0] == 'verbitsky':
        return llvlab.buildStandardForm(int(parts[1]))
    return None


def llvlab_prim(opt):
    """Primitive subspace, generation and irreducibility witness."""

    import llvlab

    algebra = _loadTarget(opt.target)
    space = algebra.getSpace()
    closure = llvlab.calcLLVAlgebra(algebra)
    report = Report('prim')
    report.setValue('name', algebra.getTitle())
    report.setValue('closure_dim', closure.getDim())
    prim = llvlab.calcPrimitiveSubspace(closure)
    prim_dims = dict((k, sum(1 for p in prim.getPivots()
                             if space.getSlice(k).start <= p <
                             space.getSlice(k).stop))
                     for k in space.getDegrees())
    report.setValue('prim_dim', prim.getDim())
    report.setValue('prim_pivot_degrees', prim_dims)
    passed = llvlab.checkStability(prim, closure.getDegreeOperators(0))
    report.addCheck('prim is g0-stable', passed, True, passed,
                    'Prim, the common kernel of the f_a, is stable '
                    'under g_0')
    module = llvlab.calcGeneratedSubmodule(closure, prim)
    report.addCheck('prim generates', module.isWhole(), len(space),
                    module.getDim(), 'the LLV algebra applied to Prim spans H')
    subring = llvlab.calcVerbitskySubring(algebra)
    report.setValue('verbitsky_subring_dim', subring.getDim())
    derived, _ = llvlab.decomposeDegreeZero(closure)
    passed = llvlab.checkRestrictionInjectivity(derived, 2)
    report.addCheck("g0' restricts injectively to degree 2", passed, True,
                    passed, "g_0' acts faithfully on H^2")
    passed = llvlab.checkRestrictionInjectivity(closure, subring)
    report.addCheck('restriction to the Verbitsky subring injective',
                    passed, True, passed,
                    'the LLV algebra acts faithfully on the Verbitsky '
                    'subring SH')
    witness = llvlab.checkIrreducibilityWitness(
        closure, samples=opt.samples,
        seed=opt.seed)
    report.setValue('witness', witness.toDict())
    if subring.isWhole():
        report.addCheck('irreducibility witness', witness.isPassed(),
                        'witness passed', witness.getLabel(),
                        'the Verbitsky component is an irreducible module '
                        'of the LLV algebra')

    q = _degreeTwoForm(algebra, opt.target)
    plane = llvlab.findPositivePlane(q) if q is not None else None
    if plane is None:
        report.setValue('weil_plane', None)
        return report
    first, second = plane
    report.setValue('weil_plane', [list(first), list(second)])
    weil = llvlab.calcWeilOperator(algebra, first, second)
    report.addCheck("Weil operator in g0'", derived.contains(weil), True,
                    derived.contains(weil),
                    "[e_a, f_b] lies in g_0' for orthogonal a and b with "
                    'q(a, a) = q(b, b) > 0')
    parity = llvlab.calcWeilParity(weil)
    report.setValue('weil_parity',
                    dict((degree, minimal) for degree, minimal, _ in parity))
    for degree, minimal, passed in parity:
        report.addCheck('Weil parity in degree {0}'.format(degree), passed,
                        True, passed, WEIL_PARITY)
    passed = llvlab.checkWeilParity(llvlab.buildHOperator(algebra))
    report.addCheck('h fails Weil parity', not passed, False, passed,
                    'h acts on each H^k by a rational scalar, nonzero off '
                    'the middle degree')
    return report
