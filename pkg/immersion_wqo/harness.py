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
Scans a finite sequence of labelled digraphs for an embeddable pair.
"""

import logging
import time

from immersion_wqo.altpath import max_pivots
from immersion_wqo.digraph import LabelledDigraph
from immersion_wqo.exceptions import InternalInvariantError, PreconditionError
from immersion_wqo.immersion import EmbeddingConstraints, check_embedding, find_embedding

LOGGER = logging.getLogger(__name__)


class ScanReport:
    """The outcome of wqo_scan.

    Attributes:
        pair (tuple or None): (j, j') with j < j', 1-based, or None.
        certificate (Embedding or None): an embedding of the j-th digraph
            into the j'-th one.
        violations (dict): map from 1-based index to the pivot count of each
            digraph that has a k-alternating path.
        pairs_checked (int): the number of pairs searched.
        seconds (float): the wall time of the scan.
    """

    def __init__(self, pair, certificate, violations, pairs_checked, seconds):
        self.pair = pair
        self.certificate = certificate
        self.violations = violations
        self.pairs_checked = pairs_checked
        self.seconds = seconds

    def __bool__(self):
        return self.pair is not None

    def to_dict(self, timing=True):
        document = {
            'pair': list(self.pair) if self.pair else None,
            'certificate': self.certificate.to_dict() if self.certificate else None,
            'violations': {str(index): pivots for index, pivots in self.violations.items()},
            'pairs_checked': self.pairs_checked,
        }
        if timing:
            document['seconds'] = self.seconds
        return document

    def __repr__(self):
        return f'ScanReport(pair={self.pair!r}, pairs_checked={self.pairs_checked})'


def wqo_scan(sequence, k, skip_violations=True, guard=None):
    """Find the first pair j < j' such that the j-th digraph embeds in the j'-th.

    Pairs are tried in lexicographic (j', j) order, so the reported pair
    has the smallest possible j'. Digraphs with a k-alternating path are
    recorded as violations and skipped, or abort the scan.

    Args:
        sequence (list): LabelledDigraph values over a common label order,
            or bare MultiDigraph values.
        k (int): the forbidden pivot count.
        skip_violations (bool): skip offending digraphs instead of raising.
        guard (SearchGuard): size limits for each embedding search.

    Returns:
        ScanReport: the report.

    Raises:
        PreconditionError: if a digraph has a k-alternating path and
            skip_violations is not set.
    """
    started = time.perf_counter()
    items = [LabelledDigraph.wrap(item) for item in sequence]
    violations = {}
    for index, item in enumerate(items, start=1):
        pivots = max_pivots(item.digraph, stop_at=k)
        if pivots >= k:
            if not skip_violations:
                raise PreconditionError(f'Digraph {index} has a {k}-alternating path.')
            LOGGER.warning('Skipping digraph %d: it has a %d-alternating path', index, k)
            violations[index] = pivots
    usable = [index for index in range(1, len(items) + 1) if index not in violations]
    checked = 0
    for later in usable:
        for earlier in usable:
            if earlier >= later:
                break
            guest, host = items[earlier - 1], items[later - 1]
            constraints = EmbeddingConstraints(qo=guest.qo)
            checked += 1
            found = find_embedding(guest, host, constraints, guard)
            if found is None:
                continue
            verdict = check_embedding(guest, host, found, constraints)
            if not verdict:
                raise InternalInvariantError(f'Certificate for pair ({earlier}, {later}) fails {verdict.violation}.')
            LOGGER.debug('Pair (%d, %d) found after %d searches', earlier, later, checked)
            return ScanReport((earlier, later), found, violations, checked, time.perf_counter() - started)
    return ScanReport(None, None, violations, checked, time.perf_counter() - started)
