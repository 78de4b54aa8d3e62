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
Structural decomposition of 2-connected digraphs: series-parallel
2-separations and their cross-free families, the unsheltered alternating
paths with an exact minimum hitting set, gadget surgery, apex and loop
stripping, and the witness for three vertices of a 2-connected digraph.
"""

from collections import Counter, namedtuple
import itertools
import logging

from immersion_wqo.altpath import max_pivots
from immersion_wqo.constants import BACKWARD
from immersion_wqo.digraph import Edge, LabelledDigraph, MultiDigraph, Separation
from immersion_wqo.exceptions import (
    DomainError,
    HypothesisViolation,
    InternalInvariantError,
    PreconditionError,
    StructuralError
)
from immersion_wqo.flows import max_flow_value, route_units
from immersion_wqo.immersion import Embedding, EmbeddingConstraints, check_embedding
from immersion_wqo.quasi_order import NaturalOrder, PresenceOrder, ProductOrder
from immersion_wqo.sp import recognize
from immersion_wqo.threads import enumerate_threads, threads_between

LOGGER = logging.getLogger(__name__)

SEPARATION_MODES = ('all', 'maximal', 'cross-free')
STRIP_KINDS = ('apex', 'loops')
GADGET_SEGMENTS = ('0L', 'LM', 'MR', 'R1')


class Sp2Separation(Separation):
    """A separation (A, B) of order 2 whose A side is a one-way series-parallel triple.

    Attributes:
        s (str): the boundary vertex every thread of A leaves.
        t (str): the boundary vertex every thread of A enters.
        triple (SpTriple): the triple (A, s, t).
    """

    def __init__(self, host, edges_a, s, t):
        """Create an Sp2Separation.

        The terminals are swapped when the threads of A run from t to s.

        Raises:
            PreconditionError: if V(A) ∩ V(B) is not {s, t} or (A, s, t) is
                not a one-way series-parallel triple.
        """
        super().__init__(host, edges_a)
        if set(self.boundary) != {s, t} or not self.edges_b:
            raise PreconditionError(f'Separation with A={sorted(self.edges_a)} does not have '
                                    f'boundary {{{s!r}, {t!r}}} and a nonempty B.')
        triple = recognize(self.side_a(), s, t)
        if triple is None or not triple.is_one_way:
            raise PreconditionError(f'A side {sorted(self.edges_a)} is not a one-way '
                                    f'series-parallel triple on {s!r}, {t!r}.')
        if triple.direction == BACKWARD:
            triple = recognize(triple.digraph, t, s)
            s, t = t, s
        self.s = s
        self.t = t
        self.triple = triple

    def contains(self, other):
        """Return whether the A side of other is a subgraph of this A side."""
        return other.edges_a <= self.edges_a and other.vertices_a <= self.vertices_a

    def to_dict(self):
        return {
            'boundary': [self.s, self.t],
            'A': [e.id for e in self.host.edges if e.id in self.edges_a],
            'B': [e.id for e in self.host.edges if e.id in self.edges_b],
            'isolated': {v: self.isolated[v] for v in self.host.vertices if v in self.isolated},
        }

    def __repr__(self):
        return f'Sp2Separation(s={self.s!r}, t={self.t!r}, A={sorted(self.edges_a)})'


HypothesisWitness = namedtuple('HypothesisWitness', ['x', 'y', 's', 't'])
HypothesisWitness.__doc__ = """A cover D = X ∪ Y by one-way triples (X, s, t) and (Y, t, s)."""

GadgetProvenance = namedtuple('GadgetProvenance', ['separation', 'v0', 'v1', 'inner', 'multiplicities', 'removed'])
GadgetProvenance.__doc__ = """The record of one gadget inserted by gadget_contract.

Attributes:
    separation (int): the index of the separation in the family.
    v0 (str): the terminal the threads of A leave.
    v1 (str): the terminal the threads of A enter.
    inner (tuple): the new vertices (L, M, R).
    multiplicities (tuple): the edge counts on v0->L, L->M, M->R and R->v1.
    removed (tuple): the deleted vertices V(A) - V(B).
"""

CutVertexWitness = namedtuple('CutVertexWitness', ['kind', 'vertex', 'paths'])
CutVertexWitness.__doc__ = """Witness returned by three_cutvertex_witness.

kind is 'cycle' when paths holds a directed path from r to vertex and one
back, and 'alternating' when paths holds a single thread leaving r with
exactly one pivot. That thread ends at vertex when such a thread exists and
is otherwise the shortest prefix past the first pivot of a thread from r to
vertex. Paths are edge id lists.
"""


def _two_connected(digraph):
    return digraph.is_biconnected() or (digraph.num_vertices == 2 and digraph.is_connected())


def _edge_groups(digraph, s, t):
    """Split the edges around {s, t} into the pieces an A side is built from.

    Returns (groups, pinned): groups are the edge lists of the components of
    D - {s, t} with their attachments, followed by one group per direct edge
    between s and t; pinned are the loops at s or t, which always stay in B.
    """
    groups = []
    for component in digraph.components(removed=[s, t]):
        groups.append([e.id for e in digraph.edges if e.tail in component or e.head in component])
    pinned = []
    for edge in digraph.edges:
        if {edge.tail, edge.head} == {s, t}:
            groups.append([edge.id])
        elif edge.tail == edge.head and edge.tail in (s, t):
            pinned.append(edge.id)
    return groups, pinned


def _separations_at(digraph, s, t):
    groups, pinned = _edge_groups(digraph, s, t)
    found = []
    for size in range(1, len(groups) + 1):
        for chosen in itertools.combinations(range(len(groups)), size):
            if size == len(groups) and not pinned:
                continue
            edges_a = [e for i in chosen for e in groups[i]]
            try:
                found.append(Sp2Separation(digraph, edges_a, s, t))
            except PreconditionError:
                continue
    return found


def all_sp2seps(digraph):
    """Return every series-parallel 2-separation of a digraph.

    Boundary pairs are taken in vertex order; for each pair the A side is
    a union of components of D - {s, t} (with their edges to s and t) and
    direct edges between s and t.
    """
    found = []
    for s, t in itertools.combinations(digraph.vertices, 2):
        found.extend(_separations_at(digraph, s, t))
    LOGGER.debug('%d series-parallel 2-separations', len(found))
    return found


def maximal_sp2seps(separations):
    """Return the separations whose A side is not strictly inside another A side."""
    return [sep for sep in separations
            if not any(other is not sep and other.contains(sep) and not sep.contains(other)
                       for other in separations)]


def sp2seps(digraph, mode='all'):
    """Enumerate series-parallel 2-separations.

    Args:
        digraph (MultiDigraph): the digraph.
        mode (str): 'all', 'maximal' for the inclusion-maximal A sides, or
            'cross-free' for a family whose A sides sit inside each other's
            B sides and cover every series-parallel 2-separation.

    Returns:
        list: Sp2Separation values in enumeration order.

    Raises:
        DomainError: if mode is unknown.
        HypothesisViolation: in cross-free mode, if D is covered by two
            one-way triples (X, s, t) and (Y, t, s).
        StructuralError: in cross-free mode, if D is not 2-connected.
    """
    if mode not in SEPARATION_MODES:
        raise DomainError(f'Unknown separation mode {mode!r}; use one of {SEPARATION_MODES}.')
    if mode == 'cross-free':
        witness = hypothesis_witness(digraph)
        if witness is not None:
            raise HypothesisViolation(
                f'D is covered by one-way triples on {witness.s!r} and {witness.t!r}.', witness
            )
        if not _two_connected(digraph):
            raise StructuralError('Cross-free families need a 2-connected underlying graph.')
    separations = all_sp2seps(digraph)
    if mode == 'all':
        return separations
    return maximal_sp2seps(separations)


def _one_way(digraph, s, t):
    if not digraph.has_vertex(s) or not digraph.has_vertex(t):
        return False
    triple = recognize(digraph, s, t)
    return triple is not None and triple.is_one_way


def hypothesis_witness(digraph):
    """Search for a cover D = X ∪ Y by one-way triples (X, s, t) and (Y, t, s).

    For each boundary pair the cover X = Y = D is tried first, then every
    split of the edges into X and Y. The witness is named so that the
    threads of X run from s to t.

    Returns:
        HypothesisWitness or None: the cover, or None when there is none.
    """
    edges = digraph.edges
    for s, t in itertools.combinations(digraph.vertices, 2):
        whole = recognize(digraph, s, t)
        if whole is not None and whole.is_one_way:
            return _oriented(digraph, digraph, s, t, whole.direction)
        for mask in range(1, (1 << len(edges)) - 1):
            x_ids = [e.id for i, e in enumerate(edges) if mask >> i & 1]
            y_ids = [e.id for i, e in enumerate(edges) if not mask >> i & 1]
            x_side = digraph.edge_subgraph(x_ids)
            y_side = digraph.edge_subgraph(y_ids)
            if set(x_side.vertices) | set(y_side.vertices) != set(digraph.vertices):
                continue
            if _one_way(x_side, s, t) and _one_way(y_side, t, s):
                return _oriented(x_side, y_side, s, t, recognize(x_side, s, t).direction)
    return None


def _oriented(x_side, y_side, s, t, direction):
    if direction == BACKWARD:
        return HypothesisWitness(x_side, y_side, t, s)
    return HypothesisWitness(x_side, y_side, s, t)


def _check_alt_input(t):
    if t < 1:
        raise DomainError(f'Alternating path length t={t} must be positive.')


def _sheltered(thread, shelters):
    vertices = thread.vertex_set()
    edges = set(thread.edges)
    return any(edges <= sep.edges_a and vertices <= sep.vertices_a for sep in shelters)


def unsheltered_alt_paths(digraph, t):
    """Return the t-alternating paths not inside the A side of any series-parallel 2-separation."""
    _check_alt_input(t)
    shelters = maximal_sp2seps(all_sp2seps(digraph))
    return [thread for thread in enumerate_threads(digraph)
            if thread.pivot_count == t and not _sheltered(thread, shelters)]


def _vertex_family(threads):
    """Map each inclusion-minimal vertex set to one thread realizing it."""
    by_set = {}
    for thread in threads:
        by_set.setdefault(thread.vertex_set(), thread)
    minimal = [vs for vs in by_set if not any(other < vs for other in by_set)]
    return {vs: by_set[vs] for vs in minimal}


def max_disjoint_unsheltered_alt_paths(digraph, t):
    """Find the most pairwise vertex-disjoint unsheltered t-alternating paths.

    Returns:
        tuple: (count, list of Thread) with the threads of one maximum
            packing.

    Raises:
        StructuralError: if D is not 2-connected.
    """
    if not _two_connected(digraph):
        raise StructuralError('Unsheltered path packing needs a 2-connected underlying graph.')
    family = _vertex_family(unsheltered_alt_paths(digraph, t))
    sets = sorted(family, key=lambda vs: (len(vs), sorted(digraph.index(v) for v in vs)))
    best = []

    def search(start, chosen, used):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + len(sets) - start <= len(best):
            return
        for position in range(start, len(sets)):
            candidate = sets[position]
            if candidate & used:
                continue
            chosen.append(candidate)
            search(position + 1, chosen, used | candidate)
            chosen.pop()

    search(0, [], frozenset())
    LOGGER.debug('Packing of %d unsheltered paths from %d vertex sets', len(best), len(sets))
    return len(best), [family[vs] for vs in best]


def min_hitting_set(digraph, t):
    """Return a minimum vertex set meeting every unsheltered t-alternating path.

    The minimal vertex sets of the unsheltered family are hit by branch and
    bound: branch on the vertices of the smallest set not yet hit.

    Raises:
        PreconditionError: if D is not 2-connected or has a
            (t+1)-alternating path.
    """
    _check_alt_input(t)
    if not _two_connected(digraph):
        raise PreconditionError('Hitting sets need a 2-connected underlying graph.')
    if max_pivots(digraph, stop_at=t + 1) > t:
        raise PreconditionError(f'D has a {t + 1}-alternating path.')
    sets = list(_vertex_family(unsheltered_alt_paths(digraph, t)))
    frequency = Counter(v for vs in sets for v in vs)
    best = frozenset(frequency)

    def search(chosen):
        nonlocal best
        if len(chosen) >= len(best):
            return
        missed = [vs for vs in sets if not vs & chosen]
        if not missed:
            best = frozenset(chosen)
            return
        target = min(missed, key=len)
        for vertex in sorted(target, key=lambda v: (-frequency[v], digraph.index(v))):
            search(chosen | {vertex})

    search(frozenset())
    LOGGER.debug('Hitting set of size %d for %d minimal paths', len(best), len(sets))
    return best


def _check_cross_free(digraph, family):
    for sep in family:
        if sep.host != digraph:
            raise PreconditionError(f'{sep!r} is not a separation of the given digraph.')
    for first, second in itertools.combinations(family, 2):
        if not (first.edges_a <= second.edges_b and second.edges_a <= first.edges_b):
            raise PreconditionError(f'{first!r} and {second!r} cross.')


def gadget_contract(digraph, family):
    """Replace the A side of every large separation of a cross-free family by a gadget.

    For each member with |V(A) - V(B)| >= 2, V(A) - V(B) is deleted and the
    directed path v0 -> L -> M -> R -> v1 is added, where v0 and v1 are the
    terminals of A in thread direction. The four segments are repeated as
    often as the degree of v0 in A, the maximum number of edge-disjoint
    directed v0 -> v1 paths in A (twice) and the degree of v1 in A.

    Args:
        digraph (MultiDigraph): the digraph.
        family (list): pairwise cross-free Sp2Separation values of digraph.

    Returns:
        tuple: (MultiDigraph, list of GadgetProvenance).

    Raises:
        PreconditionError: if two members cross or a member belongs to
            another digraph.
    """
    _check_cross_free(digraph, family)
    removed = set()
    added_vertices = []
    added_edges = []
    provenance = []
    for number, sep in enumerate(family):
        inner = sep.vertices_a - sep.vertices_b
        if len(inner) < 2:
            continue
        side = sep.side_a()
        v0, v1 = sep.s, sep.t
        flow = max_flow_value(side, v0, v1)
        counts = (side.degree(v0), flow, flow, side.degree(v1))
        names = tuple(digraph.fresh_vertex(f'gadget{number}.{part}') for part in 'LMR')
        spine = (v0,) + names + (v1,)
        for segment, tail, head, count in zip(GADGET_SEGMENTS, spine, spine[1:], counts):
            for copy in range(count):
                added_edges.append(Edge(digraph.fresh_edge_id(f'gadget{number}.{segment}.{copy}'), tail, head))
        removed |= inner
        added_vertices.extend(names)
        provenance.append(GadgetProvenance(number, v0, v1, names, counts,
                                           tuple(v for v in digraph.vertices if v in inner)))
    if not provenance:
        return digraph, provenance
    kept = digraph.remove_vertices(removed)
    contracted = MultiDigraph(list(kept.vertices) + added_vertices, list(kept.edges) + added_edges,
                              loops_allowed=digraph.loops_allowed)
    LOGGER.debug('Contracted %d separations, removed %d vertices', len(provenance), len(removed))
    return contracted, provenance


def strip(item, kind, apex=None):
    """Delete an apex set or all loops, recording what was deleted in the labels.

    With kind 'apex' and apex = (u_1, ..., u_n) every remaining vertex v is
    relabelled (old, a_1, b_1, ..., a_n, b_n), where a_j counts the edges
    from u_j to v and b_j the edges from v to u_j; counts compare with 0
    incomparable to positive counts. With kind 'loops' every vertex v is
    relabelled (old, number of loops at v) and the loops are deleted.

    Args:
        item (LabelledDigraph or MultiDigraph): the digraph.
        kind (str): 'apex' or 'loops'.
        apex (list): the apex vertices, in order, for kind 'apex'.

    Returns:
        LabelledDigraph: the stripped digraph over a product order.

    Raises:
        DomainError: if kind is unknown or apex is not a subset of V(D).
    """
    labelled = LabelledDigraph.wrap(item)
    digraph = labelled.digraph
    if kind == 'loops':
        loops = Counter(edge.tail for edge in digraph.loops())
        qo = ProductOrder([labelled.qo, NaturalOrder()])
        labels = {v: (labelled.labels[v], loops[v]) for v in digraph.vertices}
        return LabelledDigraph(digraph.without_loops(), qo, labels)
    if kind != 'apex':
        raise DomainError(f'Unknown strip kind {kind!r}; use one of {STRIP_KINDS}.')
    apex = list(apex or ())
    outside = [v for v in apex if not digraph.has_vertex(v)]
    if outside or len(set(apex)) != len(apex):
        raise DomainError(f'Apex vertices {apex} must be distinct vertices of D.')
    rest = digraph.remove_vertices(apex)
    labels = {}
    for vertex in rest.vertices:
        counts = []
        for u in apex:
            counts.append(len(digraph.edges_between(u, vertex)))
            counts.append(len(digraph.edges_between(vertex, u)))
        labels[vertex] = (labelled.labels[vertex],) + tuple(counts)
    qo = ProductOrder([labelled.qo] + [PresenceOrder()] * (2 * len(apex)))
    return LabelledDigraph(rest, qo, labels)


def _claim(pool, tail, head, owner):
    if not pool.get((tail, head)):
        raise PreconditionError(f'Not enough edges from {tail!r} to {head!r} for {owner!r}.')
    return pool[(tail, head)].pop(0)


def lift_stripped_embedding(guest, host, embedding, kind, guest_apex=None, host_apex=None):
    """Extend an embedding between stripped digraphs to the original digraphs.

    Loops at v map to distinct loops at the image of v. For apex stripping
    the j-th guest apex vertex maps to the j-th host apex vertex, edges
    between an apex vertex and a kept vertex map to parallel edges of the
    host, and edges among apex vertices to distinct host edges between their
    images.

    Args:
        guest (LabelledDigraph or MultiDigraph): the original guest.
        host (LabelledDigraph or MultiDigraph): the original host.
        embedding (Embedding): an embedding of the stripped guest into the
            stripped host.
        kind (str): 'apex' or 'loops'.
        guest_apex (list): the guest apex vertices for kind 'apex'.
        host_apex (list): the host apex vertices, same length.

    Returns:
        Embedding: the extended embedding, checked against the originals.

    Raises:
        PreconditionError: if the host lacks edges the extension needs or
            the apex sets have different sizes.
        InternalInvariantError: if the extension fails its check.
    """
    guest = LabelledDigraph.wrap(guest)
    host = LabelledDigraph.wrap(host)
    vertex_map = dict(embedding.vertex_map)
    edge_map = {e: list(path) for e, path in embedding.edge_map.items()}
    pool = {}
    for edge in host.digraph.edges:
        pool.setdefault((edge.tail, edge.head), []).append(edge.id)
    for path in edge_map.values():
        for edge_id in path:
            edge = host.digraph.edge(edge_id)
            pool[(edge.tail, edge.head)].remove(edge_id)
    if kind == 'loops':
        for edge in guest.digraph.loops():
            image = vertex_map[edge.tail]
            edge_map[edge.id] = [_claim(pool, image, image, edge.id)]
        pinned = ()
    elif kind == 'apex':
        guest_apex = list(guest_apex or ())
        host_apex = list(host_apex or ())
        if len(guest_apex) != len(host_apex):
            raise PreconditionError(f'Apex sets of sizes {len(guest_apex)} and {len(host_apex)} do not correspond.')
        vertex_map.update(zip(guest_apex, host_apex))
        for edge in guest.digraph.edges:
            if edge.id not in edge_map:
                tail, head = vertex_map[edge.tail], vertex_map[edge.head]
                edge_map[edge.id] = [_claim(pool, tail, head, edge.id)]
        pinned = tuple(zip(guest_apex, host_apex))
    else:
        raise DomainError(f'Unknown strip kind {kind!r}; use one of {STRIP_KINDS}.')
    lifted = Embedding(vertex_map, edge_map)
    verdict = check_embedding(guest, host, lifted, EmbeddingConstraints(qo=guest.qo, pinned=pinned))
    if not verdict:
        raise InternalInvariantError(f'Lifted embedding fails {verdict.violation}: {verdict.detail}.')
    return lifted


def three_cutvertex_witness(digraph, r, x, y):
    """Find the structure forced by three vertices of a 2-connected digraph.

    Tries x then y for a vertex z with a directed path from r to z and one
    from z to r, and otherwise looks for a thread between r and x or y with
    exactly one pivot. Failing that, a thread from r to x or y with more
    pivots is cut just past its first pivot. In a 2-connected digraph one of
    these exists.

    Returns:
        CutVertexWitness: the witness.

    Raises:
        PreconditionError: if the vertices are not distinct or D is not
            2-connected.
        InternalInvariantError: if neither witness exists.
    """
    digraph.check_vertices([r, x, y])
    if len({r, x, y}) != 3:
        raise PreconditionError(f'Vertices {r!r}, {x!r}, {y!r} must be distinct.')
    if not digraph.is_biconnected():
        raise PreconditionError('The three-vertex witness needs a 2-connected underlying graph.')
    for z in (x, y):
        there = route_units(digraph, [r], [z])
        back = route_units(digraph, [z], [r])
        if there and back:
            return CutVertexWitness('cycle', z, (there[0][2], back[0][2]))
    prefix = None
    for z in (x, y):
        for thread in threads_between(digraph, r, z):
            if thread.pivot_count == 1:
                return CutVertexWitness('alternating', z, (list(thread.edges),))
            if prefix is None and thread.pivot_count > 1:
                first = thread.vertices.index(thread.pivots()[0])
                prefix = CutVertexWitness('alternating', z, (list(thread.edges[:first + 1]),))
    if prefix is not None:
        return prefix
    raise InternalInvariantError(f'No witness for {r!r}, {x!r}, {y!r} in a 2-connected digraph.')
