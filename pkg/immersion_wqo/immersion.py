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
Strong immersion embeddings: certificate checking, exact search,
simulations between series-parallel triples and composition.
"""

from collections import namedtuple
import logging

from immersion_wqo.constants import DEFAULT_GUARD_EDGES, DEFAULT_GUARD_VERTICES
from immersion_wqo.digraph import LabelledDigraph, MultiDigraph
from immersion_wqo.exceptions import (
    InternalInvariantError,
    PreconditionError,
    ResourceGuardError,
    StructuralError
)
from immersion_wqo.flows import max_flow_value
from immersion_wqo.sp import require_triple

LOGGER = logging.getLogger(__name__)

VIOLATIONS = ('injectivity', 'path', 'edge-disjointness', 'vertex-avoidance', 'pinned', 'labels')


class Embedding:
    """A strong immersion certificate.

    Attributes:
        vertex_map (dict): map from guest vertices to host vertices.
        edge_map (dict): map from guest edge ids to lists of host edge ids,
            each a directed path, or a directed cycle for a loop.
    """

    def __init__(self, vertex_map, edge_map):
        self.vertex_map = dict(vertex_map)
        self.edge_map = {edge_id: list(path) for edge_id, path in edge_map.items()}

    @classmethod
    def identity(cls, digraph):
        """Return the identity embedding of a digraph into itself."""
        return cls({v: v for v in digraph.vertices}, {e.id: [e.id] for e in digraph.edges})

    @classmethod
    def from_dict(cls, document):
        return cls(document['vmap'], document['emap'])

    def to_dict(self):
        return {'vmap': dict(self.vertex_map), 'emap': {k: list(v) for k, v in self.edge_map.items()}}

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.vertex_map == other.vertex_map and self.edge_map == other.edge_map

    def __repr__(self):
        return f'Embedding(vmap={self.vertex_map!r}, emap={self.edge_map!r})'


class EmbeddingConstraints(namedtuple('EmbeddingConstraints', ['qo', 'use_labels', 'pinned'])):
    """Side conditions of an embedding.

    Attributes:
        qo (QuasiOrder or None): the label order; the host's order when None.
        use_labels (bool): whether labels must weakly increase.
        pinned (tuple): (guest vertex, host vertex) pairs the map must respect.
    """

    def __new__(cls, qo=None, use_labels=True, pinned=()):
        return super().__new__(cls, qo, use_labels, tuple(tuple(pair) for pair in pinned))


class SearchGuard(namedtuple('SearchGuard', ['max_vertices', 'max_edges'])):
    """Size limits of the exact embedding search.

    Attributes:
        max_vertices (int): the largest guest vertex count searched.
        max_edges (int): the largest host edge count searched.
    """

    def __new__(cls, max_vertices=DEFAULT_GUARD_VERTICES, max_edges=DEFAULT_GUARD_EDGES):
        return super().__new__(cls, max_vertices, max_edges)

    def check(self, guest, host):
        """Raise ResourceGuardError if a search would exceed the limits."""
        if guest.num_vertices > self.max_vertices:
            raise ResourceGuardError(
                f'Guest has {guest.num_vertices} vertices, above the guard of {self.max_vertices}.'
            )
        if host.num_edges > self.max_edges:
            raise ResourceGuardError(
                f'Host has {host.num_edges} edges, above the guard of {self.max_edges}.'
            )


class EmbeddingCheck(namedtuple('EmbeddingCheck', ['ok', 'violation', 'detail'])):
    """The verdict of check_embedding; truthy when the certificate is valid."""

    def __bool__(self):
        return self.ok


def _split(item):
    if isinstance(item, LabelledDigraph):
        return item.digraph, item
    if isinstance(item, MultiDigraph):
        return item, None
    raise StructuralError(f'Expected a digraph, got {type(item).__name__}.')


def _walk(host, start, path):
    """Return the vertices visited by a directed edge sequence, or None."""
    vertices = [start]
    for edge_id in path:
        edge = host.edge(edge_id)
        if edge.tail != vertices[-1]:
            return None
        vertices.append(edge.head)
    return vertices


def check_embedding(guest, host, embedding, constraints=None):
    """Check a strong immersion certificate.

    The conditions are checked in the order injectivity, path,
    edge-disjointness, vertex-avoidance, pinned and labels, and the first
    violated one is reported. Labels are compared only when both digraphs
    are labelled and constraints.use_labels is set.

    Args:
        guest (MultiDigraph or LabelledDigraph): the digraph H.
        host (MultiDigraph or LabelledDigraph): the digraph G.
        embedding (Embedding): the certificate.
        constraints (EmbeddingConstraints): optional side conditions.

    Returns:
        EmbeddingCheck: the verdict with the violated condition.

    Raises:
        StructuralError: if the certificate names missing vertices or edges
            or does not cover the guest.
    """
    constraints = constraints or EmbeddingConstraints()
    guest_digraph, guest_labelled = _split(guest)
    host_digraph, host_labelled = _split(host)
    vertex_map = embedding.vertex_map
    edge_map = embedding.edge_map

    if set(vertex_map) != set(guest_digraph.vertices):
        raise StructuralError('The vertex map must be defined exactly on the guest vertices.')
    if set(edge_map) != {e.id for e in guest_digraph.edges}:
        raise StructuralError('The edge map must be defined exactly on the guest edges.')
    host_digraph.check_vertices(vertex_map.values())
    for path in edge_map.values():
        for edge_id in path:
            host_digraph.edge(edge_id)

    if len(set(vertex_map.values())) != len(vertex_map):
        return EmbeddingCheck(False, 'injectivity', 'two guest vertices share an image')

    path_vertices = {}
    for edge in guest_digraph.edges:
        path = edge_map[edge.id]
        start, end = vertex_map[edge.tail], vertex_map[edge.head]
        vertices = _walk(host_digraph, start, path)
        if not path or vertices is None or vertices[-1] != end:
            return EmbeddingCheck(False, 'path', f'edge {edge.id!r} is not mapped to a directed walk '
                                                 f'from {start!r} to {end!r}')
        body = vertices[:-1] if edge.tail == edge.head else vertices
        if len(set(body)) != len(body):
            return EmbeddingCheck(False, 'path', f'edge {edge.id!r} is mapped to a walk that repeats a vertex')
        path_vertices[edge.id] = set(vertices)

    seen = {}
    for edge_id, path in edge_map.items():
        for host_edge in path:
            if host_edge in seen:
                return EmbeddingCheck(False, 'edge-disjointness',
                                      f'edges {seen[host_edge]!r} and {edge_id!r} share {host_edge!r}')
            seen[host_edge] = edge_id

    for edge in guest_digraph.edges:
        for vertex in guest_digraph.vertices:
            if vertex in (edge.tail, edge.head):
                continue
            if vertex_map[vertex] in path_vertices[edge.id]:
                return EmbeddingCheck(False, 'vertex-avoidance',
                                      f'the path of {edge.id!r} meets the image of {vertex!r}')

    for guest_vertex, host_vertex in constraints.pinned:
        if vertex_map.get(guest_vertex) != host_vertex:
            return EmbeddingCheck(False, 'pinned', f'{guest_vertex!r} must map to {host_vertex!r}')

    if constraints.use_labels and guest_labelled is not None and host_labelled is not None:
        qo = constraints.qo or host_labelled.qo
        for vertex in guest_digraph.vertices:
            if not qo.leq(guest_labelled.label(vertex), host_labelled.label(vertex_map[vertex])):
                return EmbeddingCheck(False, 'labels', f'the label of {vertex!r} does not embed')
    return EmbeddingCheck(True, None, None)


class _EmbeddingSearch:
    """Backtracking search: vertex map first, then edge routing."""

    def __init__(self, guest, host, constraints):
        self.guest, self.guest_labelled = _split(guest)
        self.host, self.host_labelled = _split(host)
        self.pinned = dict(constraints.pinned)
        self.qo = None
        if constraints.use_labels and self.guest_labelled and self.host_labelled:
            self.qo = constraints.qo or self.host_labelled.qo
        self.host_index = {e.id: i for i, e in enumerate(self.host.edges)}
        self.multiplicity = {}
        for edge in self.guest.edges:
            key = (edge.tail, edge.head)
            self.multiplicity[key] = self.multiplicity.get(key, 0) + 1
        self.path_cache = {}
        self.explored = 0

    def _label_ok(self, vertex, image):
        if self.qo is None:
            return True
        return self.qo.leq(self.guest_labelled.label(vertex), self.host_labelled.label(image))

    def candidates(self, vertex):
        guest, host = self.guest, self.host
        if vertex in self.pinned:
            pool = [self.pinned[vertex]]
        else:
            pool = host.vertices
        return [u for u in pool
                if host.out_degree(u) >= guest.out_degree(vertex)
                and host.in_degree(u) >= guest.in_degree(vertex)
                and self._label_ok(vertex, u)]

    def vertex_order(self):
        guest = self.guest
        order = [v for v in self.pinned]
        remaining = [v for v in guest.vertices if v not in self.pinned]
        while remaining:
            placed = set(order)
            remaining.sort(key=lambda v: (-sum(1 for w in guest.neighbours(v) if w in placed),
                                          -guest.degree(v), guest.index(v)))
            order.append(remaining.pop(0))
        return order

    def _pair_ok(self, mapping, vertex):
        image = mapping[vertex]
        images = set(mapping.values())
        for other in self.guest.neighbours(vertex):
            if other not in mapping:
                continue
            for tail, head in ((vertex, other), (other, vertex)):
                needed = self.multiplicity.get((tail, head), 0)
                if not needed:
                    continue
                source, sink = mapping[tail], mapping[head]
                avoid = images - {image, mapping[other]}
                if max_flow_value(self.host, source, sink, avoid=avoid) < needed:
                    return False
        return True

    def paths(self, start, end, avoid):
        """Return the directed paths (cycles when start == end) as edge tuples."""
        key = (start, end, avoid)
        if key in self.path_cache:
            return self.path_cache[key]
        found = []
        edges = []
        visited = {start}

        def walk(vertex):
            for edge in self.host.out_edges(vertex):
                if edge.head == end:
                    found.append(tuple(edges + [edge.id]))
                elif edge.head not in visited and edge.head not in avoid:
                    visited.add(edge.head)
                    edges.append(edge.id)
                    walk(edge.head)
                    edges.pop()
                    visited.discard(edge.head)

        walk(start)
        found.sort(key=lambda path: (len(path), [self.host_index[e] for e in path]))
        self.path_cache[key] = found
        return found

    def route(self, mapping):
        images = frozenset(mapping.values())
        jobs = []
        for position, edge in enumerate(self.guest.edges):
            start, end = mapping[edge.tail], mapping[edge.head]
            options = self.paths(start, end, images - {start, end})
            if not options:
                return None
            jobs.append((len(options), self.guest.index(edge.tail), self.guest.index(edge.head),
                         position, edge, options))
        jobs.sort(key=lambda job: job[:4])
        used = set()
        chosen = {}
        # parallel guest edges take candidates in increasing order
        floor = {}

        def available(options):
            return any(not used.intersection(path) for path in options)

        def place(index):
            if index == len(jobs):
                return True
            self.explored += 1
            edge, options = jobs[index][4], jobs[index][5]
            group = (edge.tail, edge.head)
            lowest = floor.get(group, -1) + 1
            for choice in range(lowest, len(options)):
                path = options[choice]
                if used.intersection(path):
                    continue
                used.update(path)
                chosen[edge.id] = list(path)
                previous = floor.get(group, -1)
                floor[group] = choice
                if all(available(job[5]) for job in jobs[index + 1:]) and place(index + 1):
                    return True
                floor[group] = previous
                used.difference_update(path)
                del chosen[edge.id]
            return False

        if place(0):
            return chosen
        return None

    def run(self):
        order = self.vertex_order()
        pools = {v: self.candidates(v) for v in order}
        if any(not pool for pool in pools.values()):
            return None
        mapping = {}
        taken = set()

        def assign(index):
            if index == len(order):
                return self.route(mapping)
            self.explored += 1
            vertex = order[index]
            for image in pools[vertex]:
                if image in taken:
                    continue
                mapping[vertex] = image
                taken.add(image)
                if self._pair_ok(mapping, vertex):
                    routed = assign(index + 1)
                    if routed is not None:
                        return routed
                taken.discard(image)
                del mapping[vertex]
            return None

        routed = assign(0)
        if routed is None:
            return None
        return Embedding(mapping, routed)


def find_embedding(guest, host, constraints=None, guard=None):
    """Search exhaustively for a strong immersion embedding of guest into host.

    Vertices are mapped first, pruned by degrees, labels and a max-flow bound
    on every guest vertex pair whose ends are both mapped; edges are then
    routed one at a time over edge-disjoint directed paths, most constrained
    edge first.

    Args:
        guest (MultiDigraph or LabelledDigraph): the digraph H.
        host (MultiDigraph or LabelledDigraph): the digraph G.
        constraints (EmbeddingConstraints): optional side conditions.
        guard (SearchGuard): size limits; the defaults when None.

    Returns:
        Embedding or None: a certificate passing check_embedding, or None
            when no embedding exists.

    Raises:
        ResourceGuardError: if the instance exceeds the guard.
        PreconditionError: if the pinned pairs are inconsistent.
    """
    constraints = constraints or EmbeddingConstraints()
    guest_digraph, _ = _split(guest)
    host_digraph, _ = _split(host)
    (guard or SearchGuard()).check(guest_digraph, host_digraph)
    pinned = dict(constraints.pinned)
    if len(pinned) != len(constraints.pinned) or len(set(pinned.values())) != len(pinned):
        raise PreconditionError(f'Pinned pairs {list(constraints.pinned)} are not injective.')
    guest_digraph.check_vertices(pinned)
    host_digraph.check_vertices(pinned.values())
    if (guest_digraph.num_vertices > host_digraph.num_vertices
            or guest_digraph.num_edges > host_digraph.num_edges):
        return None
    search = _EmbeddingSearch(guest, host, constraints)
    found = search.run()
    LOGGER.debug('Embedding search explored %d nodes, %d path lists cached',
                 search.explored, len(search.path_cache))
    if found is not None:
        verdict = check_embedding(guest, host, found, constraints)
        if not verdict:
            raise InternalInvariantError(f'Search produced an invalid embedding: {verdict.detail}.')
    return found


def _labelled(digraph, labels, qo):
    if labels is None:
        return digraph
    if qo is None:
        raise PreconditionError('Labels need a quasi-order.')
    return LabelledDigraph(digraph, qo, labels)


def simulates(host, guest, qo=None, host_labels=None, guest_labels=None, guard=None):
    """Return an embedding showing that host simulates guest, or None.

    The embedding maps the guest triple into the host triple with s and t
    pinned to the host terminals and labels weakly increasing.

    Args:
        host (SpTriple): the simulating triple.
        guest (SpTriple): the simulated triple.
        qo (QuasiOrder): the label order; needed when labels are given.
        host_labels (dict): optional labels of the host.
        guest_labels (dict): optional labels of the guest.
        guard (SearchGuard): size limits.

    Raises:
        PreconditionError: if an argument is not a series-parallel triple.
    """
    require_triple(host)
    require_triple(guest)
    constraints = EmbeddingConstraints(qo=qo, pinned=((guest.s, host.s), (guest.t, host.t)))
    return find_embedding(_labelled(guest.digraph, guest_labels, qo),
                          _labelled(host.digraph, host_labels, qo), constraints, guard)


def shortcut(target, start, edge_ids, closed=False):
    """Turn a directed walk into a path (or cycle when closed) by cutting detours."""
    vertices = [start]
    kept = []
    for position, edge_id in enumerate(edge_ids):
        head = target.edge(edge_id).head
        last = position == len(edge_ids) - 1
        if head in vertices and not (closed and last and head == start):
            cut = vertices.index(head)
            del vertices[cut + 1:]
            del kept[cut:]
        else:
            vertices.append(head)
            kept.append(edge_id)
    return kept


def compose_embeddings(first, second, target):
    """Compose embeddings H -> G and G -> K into an embedding H -> K.

    Concatenated images of the G-paths are walks in K; repeated vertices
    are cut out, which keeps edge-disjointness and vertex avoidance.

    Args:
        first (Embedding): the embedding of H into G.
        second (Embedding): the embedding of G into K.
        target (MultiDigraph): the digraph K.

    Returns:
        Embedding: the composed embedding.
    """
    vertex_map = {v: second.vertex_map[image] for v, image in first.vertex_map.items()}
    edge_map = {}
    for edge_id, path in first.edge_map.items():
        walk = [k_edge for g_edge in path for k_edge in second.edge_map[g_edge]]
        start = target.edge(walk[0]).tail
        closed = target.edge(walk[-1]).head == start
        edge_map[edge_id] = shortcut(target, start, walk, closed=closed)
    return Embedding(vertex_map, edge_map)
