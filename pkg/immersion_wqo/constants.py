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
Contains constant values for immersion-wqo.
"""

import math

# Size guard for exact embedding search.
DEFAULT_GUARD_VERTICES = 12
DEFAULT_GUARD_EDGES = 64

# Edge label of portrait edges incident with the root or a cut-vertex.
OMEGA = math.inf
OMEGA_JSON = 'omega'

# Label used for unlabelled digraphs.
UNLABELLED = '*'

# Isolated vertices of a separation go to this side unless assigned.
DEFAULT_ISOLATED_SIDE = 'B'
SEPARATION_SIDES = ('A', 'B')

# Rejection sampler for generate(random-no-k-alt).
SAMPLER_INITIAL_DENSITY = 0.5
SAMPLER_MIN_DENSITY = 0.02
SAMPLER_DENSITY_DECAY = 0.8
SAMPLER_BATCH = 40
SAMPLER_MIN_ACCEPTANCE = 0.05
SAMPLER_MAX_ATTEMPTS = 20000

# Portrait payload tags.
TAG_ROOT = 0
TAG_CUT_VERTEX = 1
TAG_MIDDLE_BLOCK = 2
TAG_HEAD_TRUNCATION = 3
TAG_TAIL_TRUNCATION = 4
TAG_LEAF_BLOCK = 5

# Class identifiers accepted by classify.
F_CLASSES = ('F_t', "F'_t", 'F*_t', 'F_{t,k}')
A_CLASSES = ('A_k', 'A_{k,0}', 'A_{k,a}')

# One-way states of a series-parallel triple.
FORWARD = 's->t'
BACKWARD = 't->s'

# CLI exit statuses.
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_GUARD = 3
