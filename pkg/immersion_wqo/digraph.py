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
Contains the MultiDigraph, LabelledDigraph and Separation classes.
"""

from collections import namedtuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from immersion_wqo.constants import DEFAULT_ISOLATED_SIDE, SEPARATION_SIDES
from immersion_wqo.exceptions import DomainError, StructuralError
from immersion_wqo.quasi_order import QuasiOrder

Edge = namedtuple('Edge', ['id', 'tail', 'head'])


def _fresh_id(base, used):
    """Return an id derived from base that is not in used."""
    if base not in used:
        return base
    index = 1
    while f'{base}~{index}' in used:
        index += 1
    return f'{base}~{index}'


class MultiDigraph:
    """A finite directed multigraph with stable vertex and edge ids.

    Instances are immutable. Vertex and edge orders are the insertion orders
    and every derived structure iterates in those orders.

    Attributes:
        vertices (tuple): the vertex ids.
        edges (tuple): the Edge records.
        loops_allowed (bool): whether an edge may have tail == head.
    """

    def __init__(self, vertices=(), edges=(), loops_allowed=False):
        """Create a MultiDigraph.

        Args:
            vertices (iterable): vertex ids. Endpoints of edges that are not
                listed are appended in order of first appearance.
            edges (iterable): Edge records or (id, tail, head) triples.
            loops_allowed (bool): whether loops are permitted.

        Raises:
            StructuralError: if an id is repeated or a loop is given when
                loops are not allowed.
        """
        self.loops_allowed = bool(loops_allowed)
        self._index = {}
        for vertex in vertices:
            if vertex in self._index:
                raise StructuralError(f'Vertex {vertex!r} is listed more than once.')
            self._index[vertex] = len(self._index)
        edge_records = []
        self._edge_by_id = {}
        for edge in edges:
            edge = Edge(*edge)
            if edge.id in self._edge_by_id:
                raise StructuralError(f'Edge id {edge.id!r} is used more than once.')
            if edge.tail == edge.head and not self.loops_allowed:
                raise StructuralError(f'Edge {edge.id!r} is a loop but loops are not allowed.')
            for end in (edge.tail, edge.head):
                if end not in self._index:
                    self._index[end] = len(self._index)
            self._edge_by_id[edge.id] = edge
            edge_records.append(edge)
        self.vertices = tuple(self._index)
        self.edges = tuple(edge_records)
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        self._incident = {v: [] for v in self.vertices}
        for edge in self.edges:
            self._out[edge.tail].append(edge)
            self._in[edge.head].append(edge)
            self._incident[edge.tail].append(edge)
            if edge.head != edge.tail:
                self._incident[edge.head].append(edge)

    @classmethod
    def from_pairs(cls, pairs, vertices=(), loops_allowed=False, prefix='e'):
        """Create a MultiDigraph from (tail, head) pairs with ids e0, e1, ...

        Args:
            pairs (iterable): (tail, head) pairs.
            vertices (iterable): vertices to list first, e.g. isolated ones.
            loops_allowed (bool): whether loops are permitted.
            prefix (str): the prefix of the generated edge ids.

        Returns:
            MultiDigraph: the digraph.
        """
        edges = [(f'{prefix}{index}', tail, head) for index, (tail, head) in enumerate(pairs)]
        return cls(vertices, edges, loops_allowed=loops_allowed)

    def __repr__(self):
        arcs = ', '.join(f'{e.id}:{e.tail}->{e.head}' for e in self.edges)
        return f'MultiDigraph(vertices={list(self.vertices)}, edges=[{arcs}])'

    def __eq__(self, other):
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return (set(self.vertices) == set(other.vertices)
                and set(self.edges) == set(other.edges))

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.edges)))

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def has_vertex(self, vertex):
        return vertex in self._index

    def has_edge(self, edge_id):
        return edge_id in self._edge_by_id

    def index(self, vertex):
        """Return the position of vertex in the vertex order."""
        try:
            return self._index[vertex]
        except KeyError:
            raise StructuralError(f'Vertex {vertex!r} is not in the digraph.')

    def edge(self, edge_id):
        """Return the Edge record with the given id.

        Raises:
            StructuralError: if there is no such edge.
        """
        try:
            return self._edge_by_id[edge_id]
        except KeyError:
            raise StructuralError(f'Edge {edge_id!r} is not in the digraph.')

    def check_vertices(self, vertices):
        """Raise StructuralError unless every vertex is in the digraph."""
        for vertex in vertices:
            if vertex not in self._index:
                raise StructuralError(f'Vertex {vertex!r} is not in the digraph.')

    def out_edges(self, vertex):
        return list(self._out[vertex])

    def in_edges(self, vertex):
        return list(self._in[vertex])

    def incident_edges(self, vertex):
        """Return the edges incident with vertex in edge order, loops once."""
        return list(self._incident[vertex])

    def out_degree(self, vertex):
        return len(self._out[vertex])

    def in_degree(self, vertex):
        return len(self._in[vertex])

    def degree(self, vertex):
        """Return the number of edge ends at vertex; a loop counts twice."""
        return len(self._out[vertex]) + len(self._in[vertex])

    def neighbours(self, vertex):
        """Return the vertices adjacent to vertex, in vertex order."""
        adjacent = {e.head for e in self._out[vertex]} | {e.tail for e in self._in[vertex]}
        adjacent.discard(vertex)
        return sorted(adjacent, key=self._index.__getitem__)

    def loops(self):
        return [edge for edge in self.edges if edge.tail == edge.head]

    def edges_between(self, tail, head):
        """Return the edges from tail to head."""
        return [edge for edge in self._out[tail] if edge.head == head]

    def edge_subgraph(self, edge_ids, extra_vertices=()):
        """Return the subdigraph formed by some edges and their endpoints.

        Args:
            edge_ids (iterable): the ids of the edges to keep.
            extra_vertices (iterable): vertices to keep even when isolated.

        Returns:
            MultiDigraph: the subdigraph, in the orders of this digraph.
        """
        keep = set(edge_ids)
        for edge_id in keep:
            self.edge(edge_id)
        edges = [edge for edge in self.edges if edge.id in keep]
        wanted = set(extra_vertices)
        self.check_vertices(wanted)
        for edge in edges:
            wanted.add(edge.tail)
            wanted.add(edge.head)
        vertices = [v for v in self.vertices if v in wanted]
        return MultiDigraph(vertices, edges, loops_allowed=self.loops_allowed)

    def induced_subgraph(self, vertices):
        """Return the subdigraph induced by a vertex set."""
        keep = set(vertices)
        self.check_vertices(keep)
        return MultiDigraph(
            [v for v in self.vertices if v in keep],
            [e for e in self.edges if e.tail in keep and e.head in keep],
            loops_allowed=self.loops_allowed
        )

    def remove_vertices(self, vertices):
        """Return the digraph with the given vertices and their edges deleted."""
        drop = set(vertices)
        return self.induced_subgraph(v for v in self.vertices if v not in drop)

    def remove_edges(self, edge_ids):
        """Return the digraph with the given edges deleted; vertices are kept."""
        drop = set(edge_ids)
        return MultiDigraph(self.vertices, [e for e in self.edges if e.id not in drop],
                            loops_allowed=self.loops_allowed)

    def without_loops(self):
        return MultiDigraph(self.vertices, [e for e in self.edges if e.tail != e.head])

    def reverse(self):
        """Return the digraph with every edge reversed; ids are kept."""
        return MultiDigraph(self.vertices, [Edge(e.id, e.head, e.tail) for e in self.edges],
                            loops_allowed=self.loops_allowed)

    def to_networkx(self):
        """Return the digraph as a networkx MultiDiGraph keyed by edge id."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id)
        return graph

    def underlying(self):
        """Return the underlying undirected multigraph keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id)
        return graph

    def underlying_simple(self):
        """Return the underlying simple graph, loops dropped."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((e.tail, e.head) for e in self.edges if e.tail != e.head)
        return graph

    def is_connected(self):
        """Return whether the underlying graph is nonempty and connected."""
        if not self.vertices:
            return False
        return nx.is_connected(self.underlying_simple())

    def is_biconnected(self):
        """Return whether the underlying graph is 2-connected.

        A 2-connected graph has at least three vertices and no cut-vertex.
        """
        if len(self.vertices) < 3:
            return False
        return nx.is_biconnected(self.underlying_simple())

    def components(self, removed=()):
        """Return the vertex sets of the components of the digraph minus removed.

        Components are ordered by their first vertex in the vertex order.
        """
        drop = set(removed)
        graph = self.underlying_simple()
        graph.remove_nodes_from(drop)
        found = [set(component) for component in nx.connected_components(graph)]
        found.sort(key=lambda component: min(self._index[v] for v in component))
        return found

    def cut_vertices(self):
        """Return the cut-vertices of the underlying graph in vertex order."""
        points = set(nx.articulation_points(self.underlying_simple()))
        return [v for v in self.vertices if v in points]

    def fresh_vertex(self, base):
        """Return a vertex id derived from base that is not in the digraph."""
        return _fresh_id(base, self._index)

    def fresh_edge_id(self, base):
        """Return an edge id derived from base that is not in the digraph."""
        return _fresh_id(base, self._edge_by_id)


class LabelledDigraph:
    """A MultiDigraph whose vertices carry labels from a QuasiOrder.

    Attributes:
        digraph (MultiDigraph): the digraph.
        qo (QuasiOrder): the label order.
        labels (dict): map from every vertex to an element of qo.
    """

    def __init__(self, digraph, qo, labels):
        """Create a LabelledDigraph.

        Raises:
            StructuralError: if a vertex has no label or a label names an
                unknown vertex.
            DomainError: if a label is not an element of qo.
        """
        missing = [v for v in digraph.vertices if v not in labels]
        if missing:
            raise StructuralError(f'Vertices {missing} have no label.')
        unknown = [v for v in labels if not digraph.has_vertex(v)]
        if unknown:
            raise StructuralError(f'Labels given for unknown vertices {unknown}.')
        for vertex, label in labels.items():
            if label not in qo:
                raise DomainError(f'Label {label!r} of vertex {vertex!r} is not in the quasi-order.')
        self.digraph = digraph
        self.qo = qo
        self.labels = {v: labels[v] for v in digraph.vertices}

    @classmethod
    def unlabelled(cls, digraph):
        """Wrap a digraph with the one-element label order."""
        qo = QuasiOrder.trivial()
        label = qo.elements[0]
        return cls(digraph, qo, {v: label for v in digraph.vertices})

    @classmethod
    def wrap(cls, item):
        """Return item as a LabelledDigraph, wrapping a bare MultiDigraph."""
        if isinstance(item, LabelledDigraph):
            return item
        return cls.unlabelled(item)

    def label(self, vertex):
        return self.labels[vertex]

    def restrict(self, digraph):
        """Return the labelling restricted to a subdigraph."""
        return LabelledDigraph(digraph, self.qo, {v: self.labels[v] for v in digraph.vertices})

    def __repr__(self):
        return f'LabelledDigraph({self.digraph!r}, labels={self.labels!r})'


class Separation:
    """An ordered pair (A, B) of edge-disjoint subgraphs covering a digraph.

    Attributes:
        host (MultiDigraph): the digraph.
        edges_a (frozenset): ids of the edges of A.
        edges_b (frozenset): ids of the edges of B.
        isolated (dict): map from each isolated vertex to 'A' or 'B'.
    """

    def __init__(self, host, edges_a, edges_b=None, isolated=None):
        """Create a Separation.

        Args:
            host (MultiDigraph): the digraph.
            edges_a (iterable): ids of the edges of A.
            edges_b (iterable): ids of the edges of B; the complement of
                edges_a when omitted.
            isolated (dict): side assignment of isolated vertices; unassigned
                isolated vertices go to side B.

        Raises:
            StructuralError: if the edge sets overlap, miss an edge or name
                an unknown edge, or an isolated assignment is invalid.
        """
        all_ids = {edge.id for edge in host.edges}
        edges_a = frozenset(edges_a)
        edges_b = frozenset(all_ids - edges_a) if edges_b is None else frozenset(edges_b)
        if not (edges_a | edges_b) <= all_ids:
            raise StructuralError(f'Unknown edges {sorted((edges_a | edges_b) - all_ids)}.')
        if edges_a & edges_b:
            raise StructuralError(f'Edges {sorted(edges_a & edges_b)} are on both sides.')
        if edges_a | edges_b != all_ids:
            raise StructuralError(f'Edges {sorted(all_ids - edges_a - edges_b)} are on neither side.')
        touched = {end for edge in host.edges for end in (edge.tail, edge.head)}
        isolated = dict(isolated or {})
        for vertex, side in isolated.items():
            if vertex in touched or not host.has_vertex(vertex):
                raise StructuralError(f'{vertex!r} is not an isolated vertex.')
            if side not in SEPARATION_SIDES:
                raise StructuralError(f'Side {side!r} must be one of {SEPARATION_SIDES}.')
        for vertex in host.vertices:
            if vertex not in touched:
                isolated.setdefault(vertex, DEFAULT_ISOLATED_SIDE)
        self.host = host
        self.edges_a = edges_a
        self.edges_b = edges_b
        self.isolated = isolated

    def _side_vertices(self, edge_ids, side):
        vertices = {v for v, assigned in self.isolated.items() if assigned == side}
        for edge_id in edge_ids:
            edge = self.host.edge(edge_id)
            vertices.add(edge.tail)
            vertices.add(edge.head)
        return frozenset(vertices)

    @property
    def vertices_a(self):
        return self._side_vertices(self.edges_a, 'A')

    @property
    def vertices_b(self):
        return self._side_vertices(self.edges_b, 'B')

    @property
    def boundary(self):
        """Return V(A) ∩ V(B) in vertex order."""
        common = self.vertices_a & self.vertices_b
        return tuple(v for v in self.host.vertices if v in common)

    @property
    def order(self):
        return len(self.boundary)

    def side_a(self):
        return self.host.edge_subgraph(self.edges_a, self.vertices_a)

    def side_b(self):
        return self.host.edge_subgraph(self.edges_b, self.vertices_b)

    def __eq__(self, other):
        if not isinstance(other, Separation):
            return NotImplemented
        return (self.host == other.host and self.edges_a == other.edges_a
                and self.isolated == other.isolated)

    def __hash__(self):
        return hash((self.edges_a, self.edges_b))

    def __repr__(self):
        return f'Separation(A={sorted(self.edges_a)}, B={sorted(self.edges_b)})'


def are_isomorphic(first, second, exact_labels=True):
    """Decide whether two digraphs are isomorphic.

    Edge multiplicities and loops are preserved by the isomorphism. When
    exact_labels is set and both inputs are labelled, the isomorphism must
    also preserve labels exactly.

    Args:
        first (MultiDigraph or LabelledDigraph): the first digraph.
        second (MultiDigraph or LabelledDigraph): the second digraph.
        exact_labels (bool): whether labels must be preserved.

    Returns:
        bool: whether an isomorphism exists.
    """
    graphs = []
    for item in (first, second):
        digraph = item.digraph if isinstance(item, LabelledDigraph) else item
        graph = nx.DiGraph()
        for vertex in digraph.vertices:
            label = None
            if exact_labels and isinstance(item, LabelledDigraph):
                label = item.labels[vertex]
            graph.add_node(vertex, label=label)
        for edge in digraph.edges:
            if graph.has_edge(edge.tail, edge.head):
                graph[edge.tail][edge.head]['count'] += 1
            else:
                graph.add_edge(edge.tail, edge.head, count=1)
        graphs.append(graph)
    if graphs[0].number_of_nodes() != graphs[1].number_of_nodes():
        return False
    matcher = DiGraphMatcher(
        graphs[0], graphs[1],
        node_match=lambda a, b: a['label'] == b['label'],
        edge_match=lambda a, b: a['count'] == b['count']
    )
    return matcher.is_isomorphic()


class RootedDigraph(namedtuple('RootedDigraph', ['digraph', 'root'])):
    """A digraph with a distinguished root vertex."""

    def __new__(cls, digraph, root):
        digraph.check_vertices([root])
        return super().__new__(cls, digraph, root)
