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

"""This module contains the ``llv-lab`` command line program.  Reports go
to stdout, log messages to stderr.  The exit code is 0 when all checks
pass, 1 when a check fails and 2 for usage and input errors."""

__author__ = 'LLVLab developers'
__copyright__ = 'Copyright (C) 2026 LLVLab developers'

import sys
import textwrap

import argparse

from .routines import *

__all__ = ['main', 'parser']


class Quiet(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        import llvlab
        llvlab.setVerbosity('warning')


class UsageExample(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        tw = textwrap.TextWrapper()
        for line in namespace.usage_example.splitlines():
            print("\n".join(tw.wrap(line)))
        parser.exit()


class LLVLabVersion(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        import llvlab
        print("LLVLab " + llvlab.__version__)
        parser.exit()


###############################################################################
# add common arguments to subparsers
###############################################################################

def addCommonArguments(subparser, example):
    subparser.add_argument('--quiet', help="suppress info messages to stderr",
        action=Quiet, nargs=0)
    subparser.add_argument('--examples', action=UsageExample, nargs=0,
        help='show usage examples and exit')
    subparser.add_argument('--version', action=LLVLabVersion, nargs=0,
        help='print LLVLab version and exit')
    subparser.add_argument('--json', dest='json', action='store_true',
        default=False, help='write report in JSON format')
    subparser.set_defaults(usage_example=example)
    subparser.set_defaults(subparser=subparser)


def addSamplingArguments(subparser):
    group = subparser.add_argument_group('sampling')
    group.add_argument('--seed', dest='seed', type=int, default=None,
        metavar='INT', help='seed of sampled classes and vectors (default: '
                            'LLV_LAB_SEED or the witness_seed option)')
    group.add_argument('--samples', dest='samples', type=int, default=None,
        metavar='INT', help='number of sampled classes and vectors '
                            '(default: the witness_samples option)')
    return group


###############################################################################
# llv-lab
###############################################################################

parser = argparse.ArgumentParser(prog='llv-lab',
    description="LLVLab: exact computations with Looijenga-Lunts-Verbitsky "
                "Lie algebras",
    epilog="See 'llv-lab <command> -h' for more information on a specific "
           "command."
    )

parser.add_argument('--version', help="print LLVLab version and exit",
    action=LLVLabVersion, nargs=0)

commands = parser.add_subparsers(title='subcommands')

###############################################################################
# validate
###############################################################################

subparser = commands.add_parser('validate',
    help='check graded Frobenius algebra axioms of an algebra file')

addCommonArguments(subparser,
"""This command checks graded commutativity, associativity, the unit and \
the nondegeneracy of the Poincare pairing of an algebra given in JSON format.

  $ llv-lab validate k3_type.json""")

subparser.add_argument('file', help='algebra file in JSON format')

subparser.set_defaults(func=llvlab_validate)

###############################################################################
# llv
###############################################################################

subparser = commands.add_parser('llv',
    help='compute the Lie algebra generated by sl2-triples')

addCommonArguments(subparser,
"""This command computes the Lie algebra generated by the sl2-triples of \
Lefschetz classes of an algebra, its degree decomposition and Killing form, \
and checks derivation and invariance properties.  Built-in models are \
quaternion, k3, hyperbolic, k3type:R and verbitsky:R:N.

Use an automatically chosen basis of Lefschetz classes for the K3 lattice:

  $ llv-lab llv k3

Use classes given in a file:

  $ llv-lab llv k3_type.json --generators classes.json""")

addSamplingArguments(subparser)
subparser.add_argument('--generators', dest='generators', type=str,
    default='auto', metavar='auto|FILE',
    help='Lefschetz classes, "auto" or a JSON file holding a list of degree 2 '
         'coordinate vectors (default: %(default)s)')
subparser.add_argument('target', help='algebra file or built-in model name')

subparser.set_defaults(func=llvlab_llv)

###############################################################################
# quaternion
###############################################################################

subparser = commands.add_parser('quaternion',
    help='check the LLV algebra of the quaternionic exterior algebra')

addCommonArguments(subparser,
"""This command builds the exterior algebra of the quaternions with the \
metric sl2-triples of I, J and K, and checks that they generate a Lie \
algebra of dimension 10 isomorphic to so(4,1) and satisfying the \
quaternionic relations.

  $ llv-lab quaternion --json""")

subparser.add_argument('--rank', dest='rank', type=int, default=1,
    metavar='INT', help='quaternionic rank m of H^m (default: %(default)s)')

subparser.set_defaults(func=llvlab_quaternion)

###############################################################################
# verbitsky
###############################################################################

subparser = commands.add_parser('verbitsky',
    help='build and check the Verbitsky component of a quadratic form')

addCommonArguments(subparser,
"""This command builds the quotient of the symmetric algebra of a quadratic \
space by powers of isotropic vectors, and checks its dimensions, Poincare \
duality and vanishing of isotropic powers.

Form U + <1>^3 of rank 5 with n = 2:

  $ llv-lab verbitsky --rank 5 --n 2 --json

Also compute its LLV algebra:

  $ llv-lab verbitsky --rank 5 --n 2 --llv

K3 lattice + <-2> with n = 2:

  $ llv-lab verbitsky --large""")

addSamplingArguments(subparser)
group = subparser.add_argument_group('form')
group.add_argument('--rank', dest='rank', type=int, default=5,
    metavar='INT', help='rank of the standard form U + <1>^(r-2) '
                        '(default: %(default)s)')
group.add_argument('--n', dest='n', type=int, default=2, metavar='INT',
    help='half of the complex dimension (default: %(default)s)')
group.add_argument('--gram', dest='gram', type=str, default=None,
    metavar='FILE', help='JSON file holding a Gram matrix')
group.add_argument('--large', dest='large', action='store_true',
    default=False, help='use K3 lattice + <-2> with n = 2')
group.add_argument('--method', dest='method', type=str, default='ideal',
    choices=['ideal', 'pairing'],
    help='construction of the quotient (default: %(default)s)')
subparser.add_argument('--llv', dest='llv', action='store_true',
    default=False, help='compute and check the LLV algebra of the result')

subparser.set_defaults(func=llvlab_verbitsky)

###############################################################################
# prim
###############################################################################

subparser = commands.add_parser('prim',
    help='primitive subspace, generation and irreducibility witness')

addCommonArguments(subparser,
"""This command computes the subspace annihilated by the degree -2 piece of \
the LLV algebra, checks that it generates the whole space, and tests \
irreducibility with basis and pseudorandom vectors.

  $ llv-lab prim verbitsky:5:2 --seed 7""")

addSamplingArguments(subparser)
subparser.add_argument('target', help='algebra file or built-in model name')

subparser.set_defaults(func=llvlab_prim)


def main(argv=None):
    """Run ``llv-lab`` with *argv* and return the exit code."""

    import llvlab

    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        parser.print_help()
        return 2
    args = parser.parse_args(argv)
    if not hasattr(args, 'func'):
        parser.print_help()
        return 2
    if getattr(args, 'samples', 0) is None:
        args.samples = llvlab.SETTINGS.get(
            'witness_samples', llvlab.CONFIGURATION['witness_samples'])
    try:
        if getattr(args, 'seed', None) is None and hasattr(args, 'seed'):
            args.seed = llvlab.getWitnessSeed()
        report = args.func(args)
    except (llvlab.LLVException, IOError, ValueError) as err:
        args.subparser.error(str(err))
    if args.json:
        print(report.toJSON())
    else:
        print(report.toText())
    return 0 if report.isPassed() else 1


if __name__ == '__main__':
    sys.exit(main())
