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
Series-parallel triples: recognition, decomposition and composition,
separators, truncations and the parallel and series extensions.
"""

import logging

import networkx as nx

from immersion_wqo.constants import BACKWARD, FORWARD
from immersion_wqo.digraph import Edge, MultiDigraph, _fresh_id
from immersion_wqo.exceptions import (
    DomainError,
    InternalInvariantError,
    PreconditionError
)
from immersion_wqo.flows import max_flow_value, minimum_cut
from immersion_wqo.threads import threads_between

LOGGER = logging.getLogger(__name__)

SERIES = 'S'
PARALLEL = 'P'
EDGE = 'E'


class SpTriple:
    """A series-parallel triple (D, s, t).

    Instances are produced by recognize, the composition functions and
    truncate, which establish the defining conditions.

    Attributes:
        digraph (MultiDigraph): the digraph D.
        s (str): the first terminal.
        t (str): the second terminal.
        direction (str or None): FORWARD when every thread between the
            terminals is directed from s to t, BACKWARD when every one is
            directed from t to s, None otherwise.
    """

    def __init__(self, digraph, s, t, direction):
        self.digraph = digraph
        self.s = s
        self.t = t
        self.direction = direction

    @property
    def is_one_way(self):
        return self.direction is not None

    @property
    def terminals(self):
        return self.s, self.t

    def __eq__(self, other):
        if not isinstance(other, SpTriple):
            return NotImplemented
        return (self.digraph, self.s, self.t) == (other.digraph, other.s, other.t)

    def __hash__(self):
        return hash((self.digraph, self.s, self.t))

    def __repr__(self):
        return f'SpTriple(s={self.s!r}, t={self.t!r}, direction={self.direction!r}, {self.digraph!r})'


def _reach_direction(digraph, s, t):
    """Return the direction of a series-parallel triple from reachability."""
    graph = digraph.to_networkx()
    forward = nx.has_path(graph, s, t)
    backward = nx.has_path(graph, t, s)
    if forward and not backward:
        return FORWARD
    if backward and not forward:
        return BACKWARD
    return None


def recognize(digraph, s, t):
    """Recognize a series-parallel triple.

    The thread condition is checked by enumerating every thread between s
    and t.

    Args:
        digraph (MultiDigraph): the digraph.
        s (str): the first terminal.
        t (str): the second terminal.

    Returns:
        SpTriple or None: the triple, or None when (digraph, s, t) is not
            series-parallel.

    Raises:
        DomainError: if s == t.
        StructuralError: if a terminal is missing.
    """
    if s == t:
        raise DomainError(f'The terminals of a series-parallel triple must differ, got {s!r} twice.')
    digraph.check_vertices([s, t])
    if digraph.loops() or not digraph.is_connected():
        return None
    forward = backward = False
    for thread in threads_between(digraph, s, t):
        if thread.is_directed_from(s):
            forward = True
        elif thread.is_directed():
            backward = True
        else:
            LOGGER.debug('Thread %s between %r and %r is not directed', thread, s, t)
            return None
    terminals = {s, t}
    for vertex in digraph.vertices:
        for component in digraph.components(removed=[vertex]):
            if not component & (terminals - {vertex}):
                return None
    if forward and not backward:
        direction = FORWARD
    elif backward and not forward:
        direction = BACKWARD
    else:
        direction = None
    return SpTriple(digraph, s, t, direction)


def require_triple(item, one_way=False):
    """Return item if it is a series-parallel triple, else raise.

    Raises:
        PreconditionError: if item is not an SpTriple, or is not one-way
            when one_way is set.
    """
    if not isinstance(item, SpTriple):
        raise PreconditionError(f'Expected a series-parallel triple, got {type(item).__name__}.')
    if one_way and not item.is_one_way:
        raise PreconditionError(f'Triple with terminals {item.s!r}, {item.t!r} is not one-way.')
    return item


class SpDecompTree:
    """A node of the series-parallel decomposition tree.

    Attributes:
        op (str): 'S' for series, 'P' for parallel, 'E' for a single edge.
        s (str): the first terminal of the subtriple.
        t (str): the second terminal of the subtriple.
        children (tuple): the child nodes; series children are in order
            from s to t.
        edge (Edge or None): the edge of an 'E' node.
    """

    def __init__(self, op, s, t, children=(), edge=None):
        self.op = op
        self.s = s
        self.t = t
        self.children = tuple(children)
        self.edge = edge
        self._canonical = None

    @property
    def is_leaf(self):
        return self.op == EDGE

    def canonical(self):
        """Return a string that identifies the subtriple up to isomorphism.

        The isomorphism must fix both terminals.
        """
        if self._canonical is None:
            if self.is_leaf:
                self._canonical = 'e+' if self.edge.tail == self.s else 'e-'
            elif self.op == SERIES:
                self._canonical = 'S(' + ','.join(c.canonical() for c in self.children) + ')'
            else:
                self._canonical = 'P(' + ','.join(sorted(c.canonical() for c in self.children)) + ')'
        return self._canonical

    def leaves(self):
        """Return the leaf nodes from left to right."""
        if self.is_leaf:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def edge_ids(self):
        return [leaf.edge.id for leaf in self.leaves()]

    def to_dict(self):
        """Return the nested JSON term of this tree."""
        if self.is_leaf:
            return {'edge': [self.edge.tail, self.edge.head], 'id': self.edge.id}
        return {'op': self.op, 'children': [child.to_dict() for child in self.children]}

    def __repr__(self):
        return f'SpDecompTree({self.canonical()}, s={self.s!r}, t={self.t!r})'


def series_cut_vertices(triple):
    """Return the vertices other than s and t separating s from t, ordered from s."""
    digraph = triple.digraph
    found = []
    for vertex in digraph.vertices:
        if vertex in triple.terminals:
            continue
        side = next(c for c in digraph.components(removed=[vertex]) if triple.s in c)
        if triple.t not in side:
            found.append(vertex)
    if not found:
        return []
    route = nx.shortest_path(digraph.underlying_simple(), triple.s, triple.t)
    position = {vertex: index for index, vertex in enumerate(route)}
    return sorted(found, key=position.__getitem__)


def subtriple(triple, edge_ids, s, t):
    """Return the triple formed by some edges of a triple and new terminals.

    The direction is inherited from a one-way triple and otherwise read off
    reachability between the new terminals.
    """
    digraph = triple.digraph.edge_subgraph(edge_ids)
    direction = triple.direction
    if direction is None:
        direction = _reach_direction(digraph, s, t)
    return SpTriple(digraph, s, t, direction)


def series_parts(triple):
    """Return the maximal series split as a list of triples, or [] if irreducible."""
    cuts = series_cut_vertices(triple)
    if not cuts:
        return []
    digraph = triple.digraph
    chain = [triple.s] + cuts + [triple.t]
    position = {vertex: index for index, vertex in enumerate(chain)}
    inner = set(cuts)
    segment_of = {}
    for component in digraph.components(removed=cuts):
        attached = {position[v] for v in component if v in position}
        for vertex in component:
            for other in digraph.neighbours(vertex):
                if other in inner:
                    attached.add(position[other])
        segment = max(attached) - 1
        for vertex in component:
            segment_of[vertex] = segment
    segments = [[] for _ in range(len(chain) - 1)]
    for edge in digraph.edges:
        if edge.tail in inner and edge.head in inner:
            segment = min(position[edge.tail], position[edge.head])
        else:
            outer = edge.tail if edge.tail not in inner else edge.head
            segment = segment_of[outer]
        segments[segment].append(edge.id)
    return [subtriple(triple, ids, chain[i], chain[i + 1]) for i, ids in enumerate(segments)]


def parallel_parts(triple):
    """Return the maximal parallel split as a list of triples.

    Each part is a component of D - {s, t} with its edges to s and t, or a
    single edge between s and t.
    """
    digraph = triple.digraph
    parts = []
    for component in digraph.components(removed=triple.terminals):
        ids = [e.id for e in digraph.edges if e.tail in component or e.head in component]
        parts.append(ids)
    for edge in digraph.edges:
        if {edge.tail, edge.head} == set(triple.terminals):
            parts.append([edge.id])
    return [subtriple(triple, ids, triple.s, triple.t) for ids in parts]


def is_series_irreducible(triple):
    """Return whether the triple is not the series composition of two triples."""
    return not series_cut_vertices(require_triple(triple))


def is_parallel_irreducible(triple):
    """Return whether the triple is not the parallel composition of two triples."""
    return len(parallel_parts(require_triple(triple))) <= 1


def _decompose(triple):
    digraph = triple.digraph
    if digraph.num_edges == 1:
        return SpDecompTree(EDGE, triple.s, triple.t, edge=digraph.edges[0])
    parts = series_parts(triple)
    if parts:
        return SpDecompTree(SERIES, triple.s, triple.t, [_decompose(p) for p in parts])
    parts = parallel_parts(triple)
    if len(parts) < 2:
        raise InternalInvariantError(
            f'Triple with terminals {triple.s!r}, {triple.t!r} has neither a series nor a parallel split.'
        )
    children = sorted((_decompose(p) for p in parts), key=lambda node: (node.canonical(), node.edge_ids()))
    return SpDecompTree(PARALLEL, triple.s, triple.t, children)


def sp_decompose(triple):
    """Decompose a series-parallel triple into a maximal-arity tree.

    Series nodes have series-irreducible children, parallel nodes have
    parallel-irreducible children and leaves are single edges. Parallel
    children are ordered by canonical form.

    Raises:
        PreconditionError: if triple is not an SpTriple.
    """
    return _decompose(require_triple(triple))


def canonical_form(triple):
    """Return the canonical form of a triple up to terminal-fixing isomorphism."""
    return sp_decompose(triple).canonical()


def _glue(parts, op):
    """Glue triples in series or in parallel, keeping ids where possible.

    Conflicting vertex and edge ids get fresh 'id~n' names.
    """
    s = parts[0].s
    end = parts[0].t
    vertices = [s]
    used_vertices = {s}
    if op == PARALLEL:
        vertices.append(end)
        used_vertices.add(end)
    edges = []
    used_edges = set()
    for index, part in enumerate(parts):
        mapping = {}
        if op == PARALLEL:
            mapping[part.s] = s
            mapping[part.t] = end
        else:
            mapping[part.s] = s if index == 0 else end
        for vertex in part.digraph.vertices:
            if vertex in mapping:
                continue
            name = _fresh_id(vertex, used_vertices)
            mapping[vertex] = name
            used_vertices.add(name)
            vertices.append(name)
        if op == SERIES:
            end = mapping[part.t]
        for edge in part.digraph.edges:
            name = _fresh_id(edge.id, used_edges)
            used_edges.add(name)
            edges.append(Edge(name, mapping[edge.tail], mapping[edge.head]))
    digraph = MultiDigraph(vertices, edges)
    glued = recognize(digraph, s, end)
    if glued is None:
        raise PreconditionError(f'Gluing {len(parts)} triples with {op!r} does not give a series-parallel triple.')
    return glued


def _compose(node):
    if node.is_leaf:
        if {node.edge.tail, node.edge.head} != {node.s, node.t} or node.s == node.t:
            raise PreconditionError(f'Leaf edge {node.edge.id!r} does not join {node.s!r} and {node.t!r}.')
        return SpTriple(MultiDigraph([node.s, node.t], [node.edge]), node.s, node.t,
                        FORWARD if node.edge.tail == node.s else BACKWARD)
    if len(node.children) < 2:
        raise PreconditionError(f'A {node.op!r} node needs at least two children.')
    return _glue([_compose(child) for child in node.children], node.op)


def sp_compose(tree):
    """Compose a decomposition tree back into a series-parallel triple.

    Composing the tree of sp_decompose(tr) returns a triple equal to tr.

    Raises:
        PreconditionError: if the tree is malformed or composes to a
            digraph that is not series-parallel.
    """
    return _compose(tree)


def extend(kind, parts):
    """Return the parallel or series extension of some one-way triples.

    Args:
        kind (str): 'parallel' or 'series'.
        parts (list): one-way SpTriples with the same direction.

    Returns:
        SpTriple: the composed triple; a single part is returned unchanged.

    Raises:
        DomainError: if parts is empty, the directions differ or kind is
            unknown.
        PreconditionError: if a part is not one-way.
    """
    ops = {'parallel': PARALLEL, 'series': SERIES}
    if kind not in ops:
        raise DomainError(f'Unknown extension {kind!r}; use parallel or series.')
    if not parts:
        raise DomainError('An extension needs at least one triple.')
    for part in parts:
        require_triple(part, one_way=True)
    if len({part.direction for part in parts}) > 1:
        raise DomainError('Extension parts must all be directed the same way.')
    if len(parts) == 1:
        return parts[0]
    return _glue(list(parts), ops[kind])


class SeparatorCut:
    """A separator [X, Y] of a series-parallel triple.

    Attributes:
        x_side (frozenset): the side containing s.
        y_side (frozenset): the side containing t.
        cut_edges (tuple): ids of the edges with one end on each side.
        size (int): the number of cut edges.
    """

    def __init__(self, x_side, y_side, cut_edges):
        self.x_side = frozenset(x_side)
        self.y_side = frozenset(y_side)
        self.cut_edges = tuple(cut_edges)
        self.size = len(self.cut_edges)

    def __repr__(self):
        return f'SeparatorCut(X={sorted(self.x_side)}, Y={sorted(self.y_side)}, size={self.size})'

    def __eq__(self, other):
        if not isinstance(other, SeparatorCut):
            return NotImplemented
        return self.x_side == other.x_side and self.y_side == other.y_side

    def __hash__(self):
        return hash((self.x_side, self.y_side))

    def to_dict(self):
        return {'X': sorted(self.x_side), 'Y': sorted(self.y_side),
                'cut_edges': list(self.cut_edges), 'size': self.size}


def thread_packing(triple):
    """Return the maximum number of edge-disjoint threads between s and t."""
    return max_flow_value(triple.digraph, triple.s, triple.t, directed=False)


def _crossing(digraph, x_side):
    return [e.id for e in digraph.edges if (e.tail in x_side) != (e.head in x_side)]


def separator_from_side(triple, x_side):
    """Build the separator with a given X side.

    Raises:
        PreconditionError: if s is not in X, t is in X, or the number of
            crossing edges is not the maximum thread packing.
    """
    require_triple(triple)
    digraph = triple.digraph
    x_side = frozenset(x_side)
    digraph.check_vertices(x_side)
    if triple.s not in x_side or triple.t in x_side:
        raise PreconditionError(f'Separator side X must contain {triple.s!r} and not {triple.t!r}.')
    crossing = _crossing(digraph, x_side)
    packing = thread_packing(triple)
    if len(crossing) != packing:
        raise PreconditionError(
            f'{len(crossing)} edges cross [X, Y] but the maximum thread packing is {packing}.'
        )
    return SeparatorCut(x_side, set(digraph.vertices) - x_side, crossing)


def separator(triple, closest='s'):
    """Compute a separator of a series-parallel triple.

    Every thread between s and t is directed, so the undirected minimum cut
    equals the directed maximum flow in the direction of those threads; the
    two are compared as a consistency check.

    Args:
        triple (SpTriple): the triple.
        closest (str): 's' for the inclusion-minimal X side, 't' for the
            inclusion-minimal Y side.

    Returns:
        SeparatorCut: the separator.

    Raises:
        InternalInvariantError: if the directed and undirected counts differ.
    """
    require_triple(triple)
    digraph = triple.digraph
    if closest == 's':
        value, x_side = minimum_cut(digraph, triple.s, triple.t, directed=False)
    elif closest == 't':
        value, y_side = minimum_cut(digraph, triple.t, triple.s, directed=False)
        x_side = set(digraph.vertices) - y_side
    else:
        raise DomainError(f'Unknown separator choice {closest!r}; use s or t.')
    if triple.direction == FORWARD:
        directed = max_flow_value(digraph, triple.s, triple.t)
    elif triple.direction == BACKWARD:
        directed = max_flow_value(digraph, triple.t, triple.s)
    else:
        directed = value
    crossing = _crossing(digraph, x_side)
    if len(crossing) != value or directed != value:
        raise InternalInvariantError(
            f'Separator mismatch: {len(crossing)} crossing edges, cut {value}, directed flow {directed}.'
        )
    return SeparatorCut(x_side, set(digraph.vertices) - set(x_side), crossing)


def truncate(triple, cut, side, labels=None):
    """Return a truncation of a triple with respect to a separator.

    Side 'X' identifies Y into a single vertex that keeps the id of t; side
    'Y' identifies X into a single vertex that keeps the id of s. Resulting
    loops are deleted and all other edges keep their ids. The identified
    vertex takes the label of the terminal it replaces.

    Args:
        triple (SpTriple): the triple.
        cut (SeparatorCut): a separator of the triple.
        side (str): 'X' or 'Y', the side that is kept.
        labels (dict): optional vertex labels of the triple.

    Returns:
        tuple: (SpTriple, dict or None) the truncation and its labels.

    Raises:
        PreconditionError: if cut is not a separator of the triple.
        DomainError: if side is unknown.
    """
    require_triple(triple)
    if side not in ('X', 'Y'):
        raise DomainError(f'Truncation side must be X or Y, got {side!r}.')
    checked = separator_from_side(triple, cut.x_side)
    if checked.y_side != cut.y_side:
        raise PreconditionError('Separator sides do not partition the vertex set.')
    digraph = triple.digraph
    kept, merged_into = (cut.x_side, triple.t) if side == 'X' else (cut.y_side, triple.s)

    def image(vertex):
        return vertex if vertex in kept else merged_into

    edges = []
    for edge in digraph.edges:
        tail, head = image(edge.tail), image(edge.head)
        if tail != head:
            edges.append(Edge(edge.id, tail, head))
    vertices = [v for v in digraph.vertices if v in kept or v == merged_into]
    truncated = recognize(MultiDigraph(vertices, edges), triple.s, triple.t)
    if truncated is None or (triple.is_one_way and truncated.direction != triple.direction):
        raise InternalInvariantError(f'Truncation to side {side} is not a series-parallel triple.')
    new_labels = None
    if labels is not None:
        new_labels = {v: labels[v] for v in vertices}
    return truncated, new_labels

