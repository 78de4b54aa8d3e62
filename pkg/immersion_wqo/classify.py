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
Membership tests for the rooted digraph classes and the series-parallel
triple classes, with branch extraction and extension builds.
"""

from collections import namedtuple
import logging

from immersion_wqo.altpath import AltPathQuery, max_pivots
from immersion_wqo.blocks import block_cut_tree
from immersion_wqo.constants import A_CLASSES, F_CLASSES
from immersion_wqo.digraph import MultiDigraph, RootedDigraph
from immersion_wqo.exceptions import DomainError, PreconditionError
from immersion_wqo.sp import (
    canonical_form,
    parallel_parts,
    require_triple,
    series_parts,
    subtriple
)

LOGGER = logging.getLogger(__name__)

ExtensionBuild = namedtuple('ExtensionBuild', ['level', 'kind', 'triple', 'parts'])
ExtensionBuild.__doc__ = """A witness that a triple belongs to a level of the extension chain.

Attributes:
    level (int): the level a of the class A_{k,a}.
    kind (str): 'base' at level 0, otherwise 'parallel' or 'series'.
    triple (SpTriple): the triple.
    parts (tuple): the builds of the glued parts one level down.
"""


def _require(name, value):
    if value is None:
        raise DomainError(f'Class parameter {name} is required.')
    if value < 0:
        raise DomainError(f'Class parameter {name}={value} must be non-negative.')
    return value


def _rooted(item):
    if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], MultiDigraph):
        return RootedDigraph(*item)
    raise PreconditionError(f'Expected a rooted digraph (digraph, root), got {type(item).__name__}.')


def _digraph(item):
    if isinstance(item, MultiDigraph):
        return item
    return _rooted(item).digraph


def in_f_t(digraph, t):
    """Connected with no t-alternating path."""
    return digraph.is_connected() and max_pivots(digraph) < t


def in_f_prime_t(digraph, t):
    """No t-alternating path, and 2-connected or connected on at most two vertices."""
    if max_pivots(digraph) >= t:
        return False
    return digraph.is_biconnected() or (digraph.is_connected() and digraph.num_vertices <= 2)


def in_f_star_t(digraph, t):
    return max_pivots(digraph) < t


def in_f_t_k(digraph, root, t, k):
    """Decide membership of the rooted digraph (digraph, root) in F_{t,k}.

    The digraph is connected, root is not a cut-vertex, there is no
    (t+1)-alternating path, no block has a t-alternating path and no
    k-alternating path has root as an end.
    """
    if not digraph.is_connected() or root in digraph.cut_vertices():
        return False
    if max_pivots(digraph, AltPathQuery(ends={root}), stop_at=k) >= k:
        return False
    if max_pivots(digraph, stop_at=t + 1) > t:
        return False
    tree = block_cut_tree(digraph, root)
    for index in range(len(tree.blocks)):
        if max_pivots(tree.block_digraph(index), stop_at=t) >= t:
            return False
    return True


def in_a_k(triple, k):
    """Decide membership of a one-way triple in A_k."""
    if k == 0:
        return triple.digraph.num_edges == 1
    query = AltPathQuery(ends={triple.s, triple.t})
    return max_pivots(triple.digraph, query, stop_at=k) < k


def in_a_k0(triple, k):
    """Decide membership of a one-way triple in A_{k,0}.

    For k >= 1 either every k-alternating path with an end at s meets t and
    none has an end at t, or the same with s and t exchanged.
    """
    if k == 0:
        return in_a_k(triple, 0)
    digraph = triple.digraph

    def below(ends, forbidden=()):
        return max_pivots(digraph, AltPathQuery(ends={ends}, forbidden=forbidden), stop_at=k) < k

    s, t = triple.s, triple.t
    return (below(s, {t}) and below(t)) or (below(t, {s}) and below(s))


class _ExtensionSearch:
    """Searches for extension builds, memoized on canonical form."""

    def __init__(self, k):
        self.k = k
        self.memo = {}
        self.lookups = 0

    def build(self, triple, level):
        key = (canonical_form(triple), level)
        self.lookups += 1
        if key in self.memo:
            cached = self.memo[key]
            # positive builds name the edges of the triple they were found for
            if cached is None or cached.triple == triple:
                return cached
        found = self._build(triple, level)
        self.memo[key] = found
        return found

    def _build(self, triple, level):
        if level == 0:
            return ExtensionBuild(0, 'base', triple, ()) if in_a_k0(triple, self.k) else None
        if level % 2:
            groups = self._parallel_groups(triple, level - 1)
            kind = 'parallel'
        else:
            groups = self._series_groups(triple, level - 1)
            kind = 'series'
        if groups is None:
            return None
        return ExtensionBuild(level, kind, triple, tuple(groups))

    def _parallel_groups(self, triple, level):
        parts = parallel_parts(triple)
        if len(parts) <= 1:
            sub = self.build(triple, level)
            return None if sub is None else [sub]
        count = len(parts)
        full = (1 << count) - 1
        best = {0: []}

        def solve(mask):
            if mask in best:
                return best[mask]
            best[mask] = None
            low = mask & -mask
            rest = mask ^ low
            sub = rest
            while True:
                group = sub | low
                ids = [e.id for i in range(count) if group >> i & 1 for e in parts[i].digraph.edges]
                member = self.build(subtriple(triple, ids, triple.s, triple.t), level)
                if member is not None:
                    remainder = solve(mask ^ group)
                    if remainder is not None:
                        best[mask] = [member] + remainder
                        return best[mask]
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            return None

        return solve(full)

    def _series_groups(self, triple, level):
        parts = series_parts(triple) or [triple]
        if len(parts) == 1:
            sub = self.build(triple, level)
            return None if sub is None else [sub]
        count = len(parts)
        # best[i]: builds covering parts[i:]
        best = [None] * count + [[]]
        for start in range(count - 1, -1, -1):
            for stop in range(count, start, -1):
                if best[stop] is None:
                    continue
                ids = [e.id for part in parts[start:stop] for e in part.digraph.edges]
                member = self.build(
                    subtriple(triple, ids, parts[start].s, parts[stop - 1].t), level
                )
                if member is not None:
                    best[start] = [member] + best[stop]
                    break
        return best[0]


def find_extension_build(triple, k, a):
    """Return a witness that a one-way triple belongs to A_{k,a}, or None.

    Level a is reached from level a - 1 by a parallel extension when a is odd
    and by a series extension when a is even. Parallel groups range over the
    set partitions of the maximal parallel parts and series groups over the
    splits of the maximal series chain into consecutive runs.

    Raises:
        PreconditionError: if triple is not a one-way series-parallel triple.
    """
    require_triple(triple, one_way=True)
    _require('k', k)
    _require('a', a)
    search = _ExtensionSearch(k)
    found = search.build(triple, a)
    LOGGER.debug('Extension search for A_{%d,%d}: %d lookups, %d memo entries',
                 k, a, search.lookups, len(search.memo))
    return found


def classify(item, class_id, t=None, k=None, a=None):
    """Decide membership of item in one of the named classes.

    Args:
        item: a MultiDigraph or a (digraph, root) pair for the F classes, a
            one-way SpTriple for the A classes.
        class_id (str): one of F_t, F'_t, F*_t, F_{t,k}, A_k, A_{k,0},
            A_{k,a}.
        t (int): the parameter t of the F classes.
        k (int): the parameter k.
        a (int): the extension level of A_{k,a}.

    Returns:
        bool: the verdict.

    Raises:
        DomainError: if the class is unknown or a parameter is missing.
        PreconditionError: if item has the wrong shape for the class.
    """
    if class_id in F_CLASSES:
        t = _require('t', t)
        if class_id == 'F_t':
            return in_f_t(_digraph(item), t)
        if class_id == "F'_t":
            return in_f_prime_t(_digraph(item), t)
        if class_id == 'F*_t':
            return in_f_star_t(_digraph(item), t)
        rooted = _rooted(item)
        return in_f_t_k(rooted.digraph, rooted.root, t, _require('k', k))
    if class_id in A_CLASSES:
        triple = require_triple(item, one_way=True)
        k = _require('k', k)
        if class_id == 'A_k':
            return in_a_k(triple, k)
        if class_id == 'A_{k,0}':
            return in_a_k0(triple, k)
        return find_extension_build(triple, k, _require('a', a)) is not None
    raise DomainError(f'Unknown class {class_id!r}; use one of {F_CLASSES + A_CLASSES}.')


def root_components(digraph, root):
    """Return the rooted digraphs induced by each component of D - root plus root."""
    digraph.check_vertices([root])
    return [RootedDigraph(digraph.induced_subgraph(component | {root}), root)
            for component in digraph.components(removed=[root])]


def branches(digraph, root, vertex):
    """Return the branches of a rooted digraph at a vertex.

    For vertex != root there is one branch (A, vertex) per component C of
    D - vertex avoiding root, where A is induced by V(C) and vertex. At the
    root the branches are the root components.
    """
    digraph.check_vertices([root, vertex])
    if vertex == root:
        return root_components(digraph, root)
    return [RootedDigraph(digraph.induced_subgraph(component | {vertex}), vertex)
            for component in digraph.components(removed=[vertex]) if root not in component]
