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
Generators for the example families: zigzag threads, the labelled and
leafed antichains, and a seeded sampler of digraphs with no k-alternating
path.
"""

from collections import namedtuple
import logging
import random

import networkx as nx

from immersion_wqo.altpath import max_pivots
from immersion_wqo.constants import (
    SAMPLER_BATCH,
    SAMPLER_DENSITY_DECAY,
    SAMPLER_INITIAL_DENSITY,
    SAMPLER_MAX_ATTEMPTS,
    SAMPLER_MIN_ACCEPTANCE,
    SAMPLER_MIN_DENSITY
)
from immersion_wqo.digraph import LabelledDigraph, MultiDigraph
from immersion_wqo.exceptions import DomainError
from immersion_wqo.quasi_order import QuasiOrder

LOGGER = logging.getLogger(__name__)

GENERATOR_KINDS = ('zigzag', 'labelled-antichain', 'leafed', 'random-no-k-alt')
END_LABEL = 'x'
INNER_LABEL = 'y'

Generated = namedtuple('Generated', ['digraph', 'metadata'])
Generated.__doc__ = """A generated LabelledDigraph with the generator record of how it was made."""


def _require_natural(name, value, low=0):
    if not isinstance(value, int) or value < low:
        raise DomainError(f'Generator parameter {name}={value!r} must be an integer >= {low}.')
    return value


def zigzag_pairs(i):
    """Return the (tail, head) pairs of the thread v0 ... v(i+1) with i pivots.

    The first edge points away from v0 and the edges then alternate.
    """
    pairs = []
    for j in range(i + 1):
        step = (f'v{j}', f'v{j + 1}')
        pairs.append(step if j % 2 == 0 else step[::-1])
    return pairs


def zigzag(i):
    """Return the canonical thread with i pivots."""
    _require_natural('i', i)
    return MultiDigraph.from_pairs(zigzag_pairs(i))


def labelled_antichain(i):
    """Return zigzag(i) with its ends labelled x and its inner vertices y.

    The labels come from the two-element antichain {x, y}.
    """
    digraph = zigzag(i)
    ends = {'v0', f'v{i + 1}'}
    labels = {v: END_LABEL if v in ends else INNER_LABEL for v in digraph.vertices}
    return LabelledDigraph(digraph, QuasiOrder.antichain([END_LABEL, INNER_LABEL]), labels)


def leafed(i):
    """Return zigzag(i) with two leaves attached to each end.

    At an end whose spine edge leaves it both leaf edges point into the end;
    at an end whose spine edge enters it both leaf edges point out.
    """
    _require_natural('i', i)
    spine = zigzag_pairs(i)
    pairs = list(spine)
    for end, edge in (('v0', spine[0]), (f'v{i + 1}', spine[-1])):
        spine_tail = edge[0]
        for leaf in (f'{end}.a', f'{end}.b'):
            pairs.append((leaf, end) if spine_tail == end else (end, leaf))
    return MultiDigraph.from_pairs(pairs)


def sample_no_k_alt(n, k, seed, max_attempts=SAMPLER_MAX_ATTEMPTS,
                    initial_density=SAMPLER_INITIAL_DENSITY, connected=True):
    """Sample a digraph on n vertices with no k-alternating path by rejection.

    Candidates are seeded G(n, p) digraphs. After each batch the edge
    probability p decays while the acceptance rate of the batch stays
    below the minimum, down to a floor.

    Args:
        n (int): the number of vertices.
        k (int): the forbidden pivot count, at least 1.
        seed (int): the random seed.
        max_attempts (int): the candidate budget.
        initial_density (float): the starting edge probability.
        connected (bool): reject candidates with a disconnected underlying
            graph.

    Returns:
        Generated: the digraph and its generator record.

    Raises:
        DomainError: if a parameter is invalid or the budget runs out.
    """
    _require_natural('n', n, 1)
    _require_natural('k', k, 1)
    rng = random.Random(seed)
    density = initial_density
    attempts = 0
    while attempts < max_attempts:
        accepted = []
        batch = min(SAMPLER_BATCH, max_attempts - attempts)
        for _ in range(batch):
            graph = nx.gnp_random_graph(n, density, seed=rng, directed=True)
            candidate = MultiDigraph.from_pairs(
                ((f'v{u}', f'v{v}') for u, v in sorted(graph.edges())),
                vertices=[f'v{u}' for u in range(n)]
            )
            if connected and not candidate.is_connected():
                continue
            if max_pivots(candidate, stop_at=k) < k:
                accepted.append(candidate)
        attempts += batch
        rate = len(accepted) / batch
        LOGGER.debug('Sampler batch at density %.3f: %d of %d accepted', density, len(accepted), batch)
        if accepted:
            metadata = {'kind': 'random-no-k-alt', 'params': {'n': n, 'k': k},
                        'seed': seed, 'density': density, 'attempts': attempts}
            return Generated(LabelledDigraph.unlabelled(accepted[0]), metadata)
        if rate < SAMPLER_MIN_ACCEPTANCE:
            density = max(SAMPLER_MIN_DENSITY, density * SAMPLER_DENSITY_DECAY)
    raise DomainError(f'No digraph on {n} vertices without a {k}-alternating path '
                      f'after {attempts} attempts.')


def generate(kind, i=None, n=None, k=None, seed=None, **sampler_options):
    """Generate a member of one of the example families.

    Args:
        kind (str): 'zigzag', 'labelled-antichain', 'leafed' or
            'random-no-k-alt'.
        i (int): the pivot count of the spine for the first three kinds.
        n (int): the number of vertices for the sampler.
        k (int): the forbidden pivot count for the sampler.
        seed (int): the sampler seed.
        sampler_options: passed to sample_no_k_alt.

    Returns:
        Generated: the digraph and its generator record.

    Raises:
        DomainError: if kind is unknown or a parameter is infeasible.
    """
    if kind == 'random-no-k-alt':
        return sample_no_k_alt(n, k, seed, **sampler_options)
    builders = {
        'zigzag': lambda: LabelledDigraph.unlabelled(zigzag(i)),
        'labelled-antichain': lambda: labelled_antichain(i),
        'leafed': lambda: LabelledDigraph.unlabelled(leafed(i)),
    }
    if kind not in builders:
        raise DomainError(f'Unknown generator {kind!r}; use one of {GENERATOR_KINDS}.')
    _require_natural('i', i)
    return Generated(builders[kind](), {'kind': kind, 'params': {'i': i}, 'seed': None, 'density': None})
