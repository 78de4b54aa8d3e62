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
Exact alternating-path analysis.

A k-alternating path is a thread with exactly k pivots. Trimming an end edge
of a thread removes at most one pivot, so a digraph has a k-alternating path
under some end constraint exactly when the maximum pivot count over the
qualifying threads is at least k.
"""

from collections import namedtuple
import logging

from immersion_wqo.exceptions import DomainError

LOGGER = logging.getLogger(__name__)

# No thread qualifies; in particular every digraph with a vertex has a
# 0-alternating path, so "no 0-alternating path" means no qualifying thread.
NO_THREAD = -1


class AltPathQuery(namedtuple('AltPathQuery', ['k', 'ends', 'must_hit', 'forbidden'])):
    """Constraints on the threads considered by max_pivots.

    Attributes:
        k (int): the pivot target, used by has_alternating_path.
        ends (frozenset or None): the thread must have an end in this set.
        must_hit (frozenset or None): the thread must contain a vertex of
            this set.
        forbidden (frozenset): the thread must avoid these vertices.
    """

    def __new__(cls, k=0, ends=None, must_hit=None, forbidden=()):
        if k < 0:
            raise DomainError(f'Pivot target {k} must be non-negative.')
        return super().__new__(
            cls, k,
            None if ends is None else frozenset(ends),
            None if must_hit is None else frozenset(must_hit),
            frozenset(forbidden)
        )


def _check_query(host, query):
    for group in (query.ends, query.must_hit, query.forbidden):
        if group:
            host.check_vertices(group)


def max_pivots(host, query=None, stop_at=None):
    """Return the maximum number of pivots of a thread satisfying a query.

    The search extends threads from each admissible start vertex one edge at
    a time. A pivot appears at the current end exactly when the new edge
    points the other way from the previous one, so a partial thread can gain
    at most one pivot per vertex still reachable; this bound prunes branches
    that cannot beat the best count found.

    Args:
        host (MultiDigraph): the digraph.
        query (AltPathQuery): the constraints; unconstrained when None.
        stop_at (int): return as soon as this many pivots are found.

    Returns:
        int: the maximum pivot count, or -1 when no thread qualifies.
    """
    query = query or AltPathQuery()
    _check_query(host, query)
    forbidden = query.forbidden
    allowed = [v for v in host.vertices if v not in forbidden]
    allowed_count = len(allowed)
    starts = allowed if query.ends is None else [v for v in allowed if v in query.ends]
    must_hit = query.must_hit

    neighbours = {}
    for vertex in allowed:
        options = []
        seen = set()
        for edge in host.incident_edges(vertex):
            if edge.tail == edge.head:
                continue
            other = edge.head if edge.tail == vertex else edge.tail
            direction = 1 if edge.tail == vertex else -1
            if other in forbidden or (other, direction) in seen:
                continue
            seen.add((other, direction))
            options.append((other, direction))
        neighbours[vertex] = options

    best = NO_THREAD
    explored = 0

    def search(current, last_direction, pivots, visited, hit):
        nonlocal best, explored
        explored += 1
        if hit and pivots > best:
            best = pivots
        if stop_at is not None and best >= stop_at:
            return
        if pivots + allowed_count - len(visited) <= best:
            return
        for other, direction in neighbours[current]:
            if other in visited:
                continue
            gained = 1 if last_direction is not None and direction != last_direction else 0
            visited.add(other)
            search(other, direction, pivots + gained, visited,
                   hit or must_hit is None or other in must_hit)
            visited.discard(other)
            if stop_at is not None and best >= stop_at:
                return

    for start in starts:
        search(start, None, 0, {start}, must_hit is None or start in must_hit)
        if stop_at is not None and best >= stop_at:
            break
    LOGGER.debug('max_pivots explored %d states, result %d', explored, best)
    return best


def has_alternating_path(host, query):
    """Return whether some thread satisfying query has at least query.k pivots."""
    return max_pivots(host, query, stop_at=query.k) >= query.k


def no_alternating_path(host, k, **constraints):
    """Return whether no thread under the constraints has k pivots.

    For k = 0 this holds only when no thread qualifies at all.
    """
    return not has_alternating_path(host, AltPathQuery(k, **constraints))


def is_path_or_cycle_with_duplicates(host):
    """Recognize the connected digraphs with no 1-alternating path.

    Such a digraph has at most two vertices or is obtained from a directed
    path or a directed cycle by duplicating edges. Loops are ignored.

    Args:
        host (MultiDigraph): the digraph.

    Returns:
        bool: whether host has this shape. Disconnected digraphs are
            rejected.
    """
    if not host.vertices:
        return True
    if not host.is_connected():
        return False
    if host.num_vertices <= 2:
        return True
    successors = {v: set() for v in host.vertices}
    predecessors = {v: set() for v in host.vertices}
    for edge in host.edges:
        if edge.tail == edge.head:
            continue
        successors[edge.tail].add(edge.head)
        predecessors[edge.head].add(edge.tail)
    for vertex in host.vertices:
        if successors[vertex] & predecessors[vertex]:
            return False
        if len(successors[vertex]) > 1 or len(predecessors[vertex]) > 1:
            return False
    return True
