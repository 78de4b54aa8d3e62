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
Series-parallel trees of blocks, their portraits, and the lift of a portrait
embedding to a strong immersion embedding of the underlying rooted digraphs.

The portrait of a rooted digraph (D, r) is its block-structure with every
edge that does not end at a childless block subdivided once. Around a middle
block (B, x, y) this gives the spine

    C(x) -> X(B) -> L(B) -> Y(B) -> C(y)

where X(B) and Y(B) carry the two truncations of (B, x, y) with respect to
the chosen separator.
"""

from collections import defaultdict, namedtuple
import logging

from immersion_wqo.blocks import block_cut_tree
from immersion_wqo.constants import (
    FORWARD,
    OMEGA,
    TAG_CUT_VERTEX,
    TAG_HEAD_TRUNCATION,
    TAG_LEAF_BLOCK,
    TAG_MIDDLE_BLOCK,
    TAG_ROOT,
    TAG_TAIL_TRUNCATION
)
from immersion_wqo.digraph import LabelledDigraph, RootedDigraph
from immersion_wqo.exceptions import InternalInvariantError, PreconditionError
from immersion_wqo.flows import route_units
from immersion_wqo.immersion import (
    Embedding,
    EmbeddingConstraints,
    check_embedding,
    find_embedding,
    simulates
)
from immersion_wqo.sp import recognize, separator, separator_from_side, truncate
from immersion_wqo.threads import threads_between
from immersion_wqo.tree_embedding import (
    RootedTree,
    TreeEmbedding,
    check_tree_embedding,
    find_tree_homeo_embedding
)

LOGGER = logging.getLogger(__name__)


class SpTreeDiagnosis(namedtuple('SpTreeDiagnosis', ['ok', 'bullet', 'detail'])):
    """The verdict of is_sp_tree; truthy when every condition holds.

    Attributes:
        ok (bool): the verdict.
        bullet (int or None): the first failing condition: 1 for the root
            blocks, 2 for the other blocks, 3 for the directed threads from
            the root to cut-vertices, 4 for a block with two child
            cut-vertices.
        detail (str or None): a description of the failure.
    """

    def __bool__(self):
        return self.ok


def is_sp_tree(digraph, root, block_test=None):
    """Decide whether (digraph, root) is a series-parallel tree of blocks.

    Args:
        digraph (MultiDigraph): a digraph with connected underlying graph.
        root (str): the root.
        block_test (callable): block_test(block, vertex) decides whether the
            rooted block belongs to the allowed family; all blocks pass when
            None.

    Returns:
        SpTreeDiagnosis: the verdict and the first failing condition.
    """
    tree = block_cut_tree(digraph, root)
    test = block_test or (lambda block, vertex: True)
    for bullet, at_root in ((1, True), (2, False)):
        for index in range(len(tree.blocks)):
            entry = tree.entry_vertex(index)
            if (entry == root) != at_root:
                continue
            if not test(tree.block_digraph(index), entry):
                return SpTreeDiagnosis(False, bullet, f'block {index} rooted at {entry!r} fails the block test')
    for vertex in tree.cut_vertices:
        if vertex == root:
            continue
        for thread in threads_between(digraph, root, vertex):
            if not thread.is_directed_from(root):
                return SpTreeDiagnosis(False, 3, f'thread {list(thread.edges)} from {root!r} '
                                                 f'to {vertex!r} is not directed')
    for index in range(len(tree.blocks)):
        below = tree.child_cut_vertices(index)
        if len(below) > 1:
            return SpTreeDiagnosis(False, 4, f'block {index} has child cut-vertices {below}')
    return SpTreeDiagnosis(True, None, None)


PortraitNode = namedtuple('PortraitNode', ['tag', 'payload', 'labels'])
PortraitNode.__doc__ = """The value of a portrait node.

Attributes:
    tag (int): 0 for the root, 1 for a cut-vertex, 2 for a middle block, 3
        and 4 for its truncations, 5 for a childless block.
    payload: a label for tags 0 and 1, an SpTriple for tags 2 to 4 and a
        RootedDigraph for tag 5.
    labels (dict or None): the labels of the payload digraph.
"""


class Portrait:
    """The portrait of a labelled series-parallel tree of blocks.

    Attributes:
        digraph (MultiDigraph): the digraph D.
        root (str): the root r.
        labels (dict): the vertex labels.
        qo (QuasiOrder): the label order.
        blocks (BlockCutTree): the block-structure of (D, r).
        middle (dict): map from middle block index to its (x, y).
        separators (dict): map from middle block index to its SeparatorCut.
        tree (RootedTree): the portrait tree; nodes are ('C', v), ('L', i),
            ('X', i) and ('Y', i), node labels are PortraitNode values.
    """

    def __init__(self, digraph, root, labels, qo, blocks, middle, separators, tree):
        self.digraph = digraph
        self.root = root
        self.labels = labels
        self.qo = qo
        self.blocks = blocks
        self.middle = middle
        self.separators = separators
        self.tree = tree

    def node(self, key):
        return self.tree.node_labels[key]

    def __repr__(self):
        return f'Portrait(root={self.root!r}, nodes={len(self.tree)})'


def build_portrait(item, root, separators=None, block_test=None):
    """Build the portrait of a series-parallel tree of blocks.

    Args:
        item (MultiDigraph or LabelledDigraph): the digraph; unlabelled
            digraphs get the one-element label order.
        root (str): the root.
        separators (dict): optional map from middle block index to the X
            side (or SeparatorCut) of its separator; the separator closest
            to the entry vertex is used otherwise.
        block_test (callable): passed to is_sp_tree.

    Returns:
        Portrait: the portrait.

    Raises:
        PreconditionError: if (D, r) is not a series-parallel tree of blocks
            or a separator is invalid.
    """
    labelled = LabelledDigraph.wrap(item)
    digraph = labelled.digraph
    labels = labelled.labels
    diagnosis = is_sp_tree(digraph, root, block_test)
    if not diagnosis:
        raise PreconditionError(f'Not a series-parallel tree of blocks: {diagnosis.detail}.')
    blocks = block_cut_tree(digraph, root)
    parent = {('C', root): None}
    node_labels = {('C', root): PortraitNode(TAG_ROOT, labels[root], None)}
    edge_labels = {}
    middle = {}
    chosen = {}
    separators = separators or {}

    for index in range(len(blocks.blocks)):
        block = blocks.block_digraph(index)
        entry = blocks.entry_vertex(index)
        above = ('C', entry)
        block_labels = {v: labels[v] for v in block.vertices}
        below = blocks.child_cut_vertices(index)
        if not below:
            parent[('L', index)] = above
            edge_labels[('L', index)] = OMEGA
            node_labels[('L', index)] = PortraitNode(
                TAG_LEAF_BLOCK, RootedDigraph(block, entry), block_labels
            )
            continue
        exit_vertex = below[0]
        triple = recognize(block, entry, exit_vertex)
        if triple is None or triple.direction != FORWARD:
            raise PreconditionError(f'Middle block {index} is not a one-way series-parallel triple '
                                    f'from {entry!r} to {exit_vertex!r}.')
        given = separators.get(index)
        if given is None:
            cut = separator(triple)
        else:
            cut = separator_from_side(triple, getattr(given, 'x_side', given))
        head_side, head_labels = truncate(triple, cut, 'X', block_labels)
        tail_side, tail_labels = truncate(triple, cut, 'Y', block_labels)
        middle[index] = (entry, exit_vertex)
        chosen[index] = cut
        spine = [
            (('X', index), OMEGA, PortraitNode(TAG_HEAD_TRUNCATION, head_side, head_labels)),
            (('L', index), cut.size, PortraitNode(TAG_MIDDLE_BLOCK, triple, block_labels)),
            (('Y', index), cut.size, PortraitNode(TAG_TAIL_TRUNCATION, tail_side, tail_labels)),
            (('C', exit_vertex), OMEGA, PortraitNode(TAG_CUT_VERTEX, labels[exit_vertex], None)),
        ]
        for key, label, value in spine:
            parent[key] = above
            edge_labels[key] = label
            node_labels[key] = value
            above = key

    tree = RootedTree(parent, node_labels, edge_labels)
    return Portrait(digraph, root, labels, labelled.qo, blocks, middle, chosen, tree)


def _payload_digraph(node, qo):
    payload = node.payload
    return LabelledDigraph(payload.digraph, qo, node.labels)


def _payload_constraints(first, second, qo):
    if first.tag == TAG_LEAF_BLOCK:
        pinned = ((first.payload.root, second.payload.root),)
    else:
        pinned = ((first.payload.s, second.payload.s), (first.payload.t, second.payload.t))
    return EmbeddingConstraints(qo=qo, pinned=pinned)


def portrait_node_leq(qo, guard=None):
    """Return the comparison of portrait node values.

    Tags must agree. Root and cut-vertex labels compare in qo; triples
    compare by simulation and childless blocks by rooted embedding. A
    successful digraph comparison returns its Embedding as the witness.
    """

    def compare(first, second):
        if first.tag != second.tag:
            return False
        if first.tag in (TAG_ROOT, TAG_CUT_VERTEX):
            return qo.leq(first.payload, second.payload)
        if first.tag == TAG_LEAF_BLOCK:
            found = find_embedding(_payload_digraph(first, qo), _payload_digraph(second, qo),
                                   _payload_constraints(first, second, qo), guard)
        else:
            found = simulates(second.payload, first.payload, qo, second.labels, first.labels, guard)
        return found if found is not None else False

    return compare


def _witness_leq(src, dst, witnesses):
    """Node comparison that accepts the supplied witnesses, checking each one."""
    qo = src.qo
    by_value = {}
    for key, witness in witnesses.items():
        by_value[id(src.node(key))] = witness

    def compare(first, second):
        if first.tag != second.tag:
            return False
        if first.tag in (TAG_ROOT, TAG_CUT_VERTEX):
            return qo.leq(first.payload, second.payload)
        witness = by_value.get(id(first))
        if witness is None:
            return True
        return bool(check_embedding(_payload_digraph(first, qo), _payload_digraph(second, dst.qo),
                                    witness, _payload_constraints(first, second, qo)))

    return compare


def _take(witness, vertices, edges, skip, vertex_map, edge_map):
    for vertex in vertices:
        if vertex not in skip:
            vertex_map[vertex] = witness.vertex_map[vertex]
    for edge_id in edges:
        edge_map[edge_id] = list(witness.edge_map[edge_id])


def _pop_by(paths, position):
    grouped = defaultdict(list)
    for path in paths:
        grouped[path[position]].append(path[2])
    return grouped


def _route_crossing(src, dst, index, first, last, crossing, eta_x, eta_y):
    """Route the crossing edges of a loose middle block through the block chain.

    Each crossing edge u -> v becomes the image of u -> y under eta_x, then a
    path inside the Y side of the first block to its exit vertex, a path
    through the blocks strictly between, a path inside the X side of the
    last block from its entry vertex, and the image of x -> v under eta_y.
    """
    host = dst.digraph
    count = len(crossing)
    y_first = dst.middle[first][1]
    x_last = dst.middle[last][0]
    heads = [host.edge(eta_x.edge_map[e.id][-1]).head for e in crossing]
    tails = [host.edge(eta_y.edge_map[e.id][0]).tail for e in crossing]

    y_side = dst.separators[first].y_side
    inside_first = [e for e in dst.blocks.block_edges[first]
                    if host.edge(e).tail in y_side and host.edge(e).head in y_side]
    x_side = dst.separators[last].x_side
    inside_last = [e for e in dst.blocks.block_edges[last]
                   if host.edge(e).tail in x_side and host.edge(e).head in x_side]
    chain = dst.tree.path_up(('X', last), ('Y', first))
    if chain is None:
        raise PreconditionError(f'Images of the truncations of block {index} are not on one root path.')
    between = [e for node in chain if node[0] == 'L' for e in dst.blocks.block_edges[node[1]]]

    ups = route_units(host, heads, [y_first] * count, inside_first)
    mids = route_units(host, [y_first] * count, [x_last] * count, between)
    downs = route_units(host, [x_last] * count, tails, inside_last)
    if ups is None or mids is None or downs is None:
        raise InternalInvariantError(f'Cannot route the {count} crossing edges of middle block {index}.')
    ups = _pop_by(ups, 0)
    downs = _pop_by(downs, 1)
    routed = {}
    for edge, head, tail, (_, _, through) in zip(crossing, heads, tails, mids):
        routed[edge.id] = (list(eta_x.edge_map[edge.id]) + ups[head].pop() + through
                           + downs[tail].pop() + list(eta_y.edge_map[edge.id]))
    return routed


def lift_portrait_embedding(src, dst, tree_embedding, witnesses=None):
    """Lift a portrait embedding to a rooted strong immersion embedding.

    Root and cut-vertices follow the tree embedding. A childless block, or a
    middle block whose truncation nodes land on a single middle block of dst
    (a tight block), follows the witness of its own node. A loose middle
    block follows the truncation witnesses on each side of its separator,
    and its crossing edges are routed through the chain of dst blocks
    between the two images.

    Args:
        src (Portrait): the portrait of (D_j, r_j).
        dst (Portrait): the portrait of (D_j', r_j').
        tree_embedding (TreeEmbedding): an embedding of src.tree into
            dst.tree.
        witnesses (dict): embeddings per src node key for the digraph
            payloads; merged over tree_embedding.witnesses.

    Returns:
        Embedding: an embedding of src into dst mapping r_j to r_j' with
            labels weakly increasing.

    Raises:
        PreconditionError: if the tree embedding or a witness is invalid or
            a needed witness is missing.
        InternalInvariantError: if the lifted embedding fails its check.
    """
    node_map = tree_embedding.node_map
    supplied = dict(tree_embedding.witnesses)
    supplied.update(witnesses or {})
    verdict = check_tree_embedding(src.tree, dst.tree, tree_embedding,
                                   node_leq=_witness_leq(src, dst, supplied))
    if not verdict:
        raise PreconditionError(f'Invalid portrait embedding: {verdict.violation} ({verdict.detail}).')

    def witness(key):
        if key not in supplied:
            raise PreconditionError(f'No witness for portrait node {key!r}.')
        return supplied[key]

    vertex_map = {}
    edge_map = {}
    for key in src.tree.nodes:
        if key[0] == 'C':
            vertex_map[key[1]] = node_map[key][1]
    fixed = set(vertex_map)
    host = src.digraph
    for index, block in enumerate(src.blocks.blocks):
        edges = src.blocks.block_edges[index]
        if index not in src.middle:
            _take(witness(('L', index)), block, edges, fixed, vertex_map, edge_map)
            continue
        first = node_map[('X', index)][1]
        last = node_map[('Y', index)][1]
        if first == last:
            _take(witness(('L', index)), block, edges, fixed, vertex_map, edge_map)
            continue
        cut = src.separators[index]
        eta_x = witness(('X', index))
        eta_y = witness(('Y', index))
        for vertex in block:
            if vertex not in fixed:
                vertex_map[vertex] = (eta_x if vertex in cut.x_side else eta_y).vertex_map[vertex]
        crossing = []
        for edge_id in edges:
            edge = host.edge(edge_id)
            in_x = (edge.tail in cut.x_side, edge.head in cut.x_side)
            if all(in_x):
                edge_map[edge_id] = list(eta_x.edge_map[edge_id])
            elif not any(in_x):
                edge_map[edge_id] = list(eta_y.edge_map[edge_id])
            elif in_x[0]:
                crossing.append(edge)
            else:
                raise PreconditionError(f'Edge {edge_id!r} of middle block {index} crosses its separator backwards.')
        if crossing:
            edge_map.update(_route_crossing(src, dst, index, first, last, crossing, eta_x, eta_y))

    lifted = Embedding(vertex_map, edge_map)
    constraints = EmbeddingConstraints(qo=src.qo, pinned=((src.root, dst.root),))
    verdict = check_embedding(LabelledDigraph(src.digraph, src.qo, src.labels),
                              LabelledDigraph(dst.digraph, dst.qo, dst.labels),
                              lifted, constraints)
    if not verdict:
        raise InternalInvariantError(f'Lifted embedding fails {verdict.violation}: {verdict.detail}.')
    return lifted


def lift_with_simulations(src, dst, node_map=None, witnesses=None, guard=None):
    """Find a portrait embedding with simulation witnesses and lift it.

    Args:
        src (Portrait): the portrait to embed.
        dst (Portrait): the host portrait.
        node_map (dict): a portrait node map to use; searched when None.
        witnesses (dict): witnesses to use instead of searching.
        guard (SearchGuard): size limits for the simulation searches.

    Returns:
        Embedding or None: the lifted embedding, or None when the portraits
            do not embed.
    """
    compare = portrait_node_leq(src.qo, guard)
    if node_map is None:
        found = find_tree_homeo_embedding(src.tree, dst.tree, node_leq=compare)
        if found is None:
            return None
    else:
        path_map = {}
        for up, child in src.tree.edges():
            path_map[child] = dst.tree.path_up(node_map[child], node_map[up])
        found = TreeEmbedding(node_map, path_map)
        supplied = dict(witnesses or {})
        for key, image in node_map.items():
            if key in supplied or src.node(key).tag in (TAG_ROOT, TAG_CUT_VERTEX):
                continue
            verdict = compare(src.node(key), dst.node(image))
            if not verdict:
                return None
            supplied[key] = verdict
        witnesses = supplied
    return lift_portrait_embedding(src, dst, found, witnesses)
