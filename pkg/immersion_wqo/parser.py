#
# MIT License
#
# (C) Copyright 2026 immersion-wqo contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR
# OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
# ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
"""
Contains the command-line arguments of immersion-wqo.
"""

import argparse

from immersion_wqo.constants import A_CLASSES, F_CLASSES
from immersion_wqo.decomp import SEPARATION_MODES, STRIP_KINDS
from immersion_wqo.generators import GENERATOR_KINDS
from immersion_wqo.interchange import FORMATS

ACTIONS = (
    'analyze',
    'embed',
    'decompose',
    'portrait',
    'separations',
    'hitting-set',
    'contract',
    'strip',
    'generate',
    'scan',
)


def create_parser():
    """Create an argument parser for this command.

    Returns:
        argparse.ArgumentParser: The parser.
    """

    parser = argparse.ArgumentParser(prog='immersion-wqo')
    parser.add_argument(
        'action',
        choices=ACTIONS,
        help='Specify the operation to execute.'
    )
    parser.add_argument(
        '-i', '--input',
        help='The input document. For embed, the guest digraph.'
    )
    parser.add_argument(
        '--host',
        help='The host digraph document for embed.'
    )
    parser.add_argument(
        '--certificate',
        help='An embedding document for embed to verify instead of searching.'
    )
    parser.add_argument(
        '-o', '--output',
        help='Write the result to this file instead of standard output.'
    )
    parser.add_argument(
        '--format',
        choices=FORMATS,
        help='The output format.',
        default='json'
    )
    parser.add_argument(
        '--k',
        type=int,
        help='The forbidden pivot count.'
    )
    parser.add_argument(
        '--t',
        type=int,
        help='The pivot count of the unsheltered threads, or the t of a class.'
    )
    parser.add_argument(
        '--a',
        type=int,
        help='The depth of an extension class.'
    )
    parser.add_argument(
        '--class',
        dest='class_id',
        choices=F_CLASSES + A_CLASSES,
        help='A class to test membership of for analyze.'
    )
    parser.add_argument(
        '--root',
        help='Override the root vertex of the input document.'
    )
    parser.add_argument(
        '--terminals',
        nargs=2,
        metavar=('S', 'T'),
        help='Override the terminals of the input document.'
    )
    parser.add_argument(
        '--mode',
        choices=SEPARATION_MODES,
        help='Which separations to list.',
        default='all'
    )
    parser.add_argument(
        '--closest',
        choices=('s', 't'),
        help='Which terminal the separator of decompose lies closest to.',
        default='s'
    )
    parser.add_argument(
        '--strip',
        dest='strip_kind',
        choices=STRIP_KINDS,
        help='What to strip for the strip action.',
        default='loops'
    )
    parser.add_argument(
        '--apex',
        nargs='+',
        help='The apex vertices for the strip action.'
    )
    parser.add_argument(
        '--kind',
        choices=GENERATOR_KINDS,
        help='The generator for generate.'
    )
    parser.add_argument(
        '--i',
        type=int,
        help='The pivot count of the generated spine.'
    )
    parser.add_argument(
        '--n',
        type=int,
        help='The number of vertices of a sampled digraph.'
    )
    parser.add_argument(
        '--seed',
        type=int,
        help='The random seed of the sampler.',
        default=0
    )
    parser.add_argument(
        '--abort-on-violation',
        action='store_true',
        help='Stop the scan at the first digraph with a k-alternating path '
             'instead of skipping it.'
    )
    parser.add_argument(
        '--guard',
        type=int,
        help='Override the largest guest vertex count an exact search accepts.'
    )
    parser.add_argument(
        '--config',
        help='A YAML file overriding the default guards and sampler settings.'
    )
    parser.add_argument(
        '--verbose',
        action='store_true',
        help='Log search statistics.'
    )

    return parser
