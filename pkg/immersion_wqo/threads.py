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
Contains the Thread class and exhaustive thread enumeration.

A thread is a subdigraph whose underlying graph is a simple path. Its pivots
are the vertices with in-degree two or out-degree two within the thread.
"""

from immersion_wqo.exceptions import StructuralError


class Thread:
    """A thread of a host digraph, stored as an ordered edge sequence.

    Attributes:
        host (MultiDigraph): the digraph containing the thread.
        edges (tuple): the edge ids in traversal order.
        vertices (tuple): the vertices in traversal order.
        directions (tuple): +1 for an edge traversed from tail to head, -1
            otherwise, one entry per edge.
    """

    def __init__(self, host, edge_seq, start=None):
        """Create a Thread.

        Args:
            host (MultiDigraph): the digraph.
            edge_seq (iterable): edge ids in order along the thread.
            start (str): the first vertex. Required for a one-vertex thread;
                otherwise it fixes the orientation of a one-edge thread and
                must agree with longer ones.

        Raises:
            StructuralError: if the edges do not form a simple path.
        """
        self.host = host
        self.edges = tuple(edge_seq)
        records = [host.edge(edge_id) for edge_id in self.edges]
        if not records:
            if start is None:
                raise StructuralError('A thread without edges needs a start vertex.')
            host.check_vertices([start])
            self.vertices = (start,)
            self.directions = ()
            return
        if any(record.tail == record.head for record in records):
            raise StructuralError(f'Thread {list(self.edges)} contains a loop.')
        first = records[0]
        if start is None:
            if len(records) == 1:
                start = first.tail
            else:
                shared = {records[1].tail, records[1].head}
                start = first.head if first.tail in shared else first.tail
                if first.tail in shared and first.head in shared:
                    raise StructuralError(f'Thread {list(self.edges)} repeats a vertex.')
        vertices = [start]
        directions = []
        for record in records:
            current = vertices[-1]
            if record.tail == current:
                vertices.append(record.head)
                directions.append(1)
            elif record.head == current:
                vertices.append(record.tail)
                directions.append(-1)
            else:
                raise StructuralError(
                    f'Edge {record.id!r} does not continue thread {list(self.edges)} at {current!r}.'
                )
        if len(set(vertices)) != len(vertices):
            raise StructuralError(f'Thread {list(self.edges)} repeats a vertex.')
        self.vertices = tuple(vertices)
        self.directions = tuple(directions)

    def __repr__(self):
        return f'Thread({list(self.edges)}, start={self.vertices[0]!r})'

    def __eq__(self, other):
        if not isinstance(other, Thread):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.edges)

    def key(self):
        """Return an orientation-free identity: the edge set, or the vertex."""
        if self.edges:
            return frozenset(self.edges)
        return self.vertices[0]

    @property
    def ends(self):
        return self.vertices[0], self.vertices[-1]

    def pivots(self):
        """Return the pivots in traversal order.

        An interior vertex is a pivot exactly when the two thread edges at it
        point both in or both out.
        """
        return [self.vertices[i] for i in range(1, len(self.directions))
                if self.directions[i - 1] != self.directions[i]]

    @property
    def pivot_count(self):
        return len(self.pivots())

    def is_directed(self):
        """Return whether the thread is a directed path in some direction."""
        return len(set(self.directions)) <= 1

    def is_directed_from(self, vertex):
        """Return whether the thread is a directed path starting at vertex."""
        if vertex == self.vertices[0]:
            return all(direction == 1 for direction in self.directions)
        if vertex == self.vertices[-1]:
            return all(direction == -1 for direction in self.directions)
        return False

    def reversed(self):
        return Thread(self.host, tuple(reversed(self.edges)), start=self.vertices[-1])

    def canonical(self):
        """Return the orientation starting at the end listed first in the host."""
        first, last = self.ends
        if self.host.index(last) < self.host.index(first):
            return self.reversed()
        return self

    def vertex_set(self):
        return frozenset(self.vertices)


def thread_pivot_count(thread):
    """Return the number of pivots of a thread."""
    return thread.pivot_count


def _extend(host, path_vertices, path_edges, visited, allowed):
    """Yield (vertices, edges) of every simple path extending the given one."""
    current = path_vertices[-1]
    for edge in host.incident_edges(current):
        if edge.tail == edge.head:
            continue
        other = edge.head if edge.tail == current else edge.tail
        if other in visited or (allowed is not None and other not in allowed):
            continue
        visited.add(other)
        path_vertices.append(other)
        path_edges.append(edge.id)
        yield path_vertices, path_edges
        yield from _extend(host, path_vertices, path_edges, visited, allowed)
        path_edges.pop()
        path_vertices.pop()
        visited.discard(other)


def enumerate_threads(host, endpoints=None, allowed=None):
    """Yield every thread of a digraph exactly once up to reversal.

    Threads are yielded in their canonical orientation: the end listed first
    in the host comes first. The order is deterministic for fixed vertex and
    edge orders.

    Args:
        host (MultiDigraph): the digraph.
        endpoints (iterable): when given, only threads with an end in this
            set are yielded.
        allowed (iterable): when given, only threads inside this vertex set.

    Yields:
        Thread: each thread.
    """
    ends = None if endpoints is None else set(endpoints)
    allowed = None if allowed is None else set(allowed)
    for start in host.vertices:
        if allowed is not None and start not in allowed:
            continue
        start_index = host.index(start)
        if ends is None or start in ends:
            yield Thread(host, (), start=start)
        for vertices, edges in _extend(host, [start], [], {start}, allowed):
            end = vertices[-1]
            if host.index(end) < start_index:
                continue
            if ends is not None and start not in ends and end not in ends:
                continue
            yield Thread(host, list(edges), start=start)


def threads_between(host, source, target):
    """Yield every thread from source to target, oriented from source.

    Raises:
        StructuralError: if either vertex is missing.
    """
    host.check_vertices([source, target])
    if source == target:
        yield Thread(host, (), start=source)
        return
    visited = {source}
    path_vertices = [source]
    path_edges = []

    def walk():
        current = path_vertices[-1]
        for edge in host.incident_edges(current):
            if edge.tail == edge.head:
                continue
            other = edge.head if edge.tail == current else edge.tail
            if other in visited:
                continue
            path_edges.append(edge.id)
            if other == target:
                yield Thread(host, list(path_edges), start=source)
            else:
                visited.add(other)
                path_vertices.append(other)
                yield from walk()
                path_vertices.pop()
                visited.discard(other)
            path_edges.pop()

    yield from walk()
