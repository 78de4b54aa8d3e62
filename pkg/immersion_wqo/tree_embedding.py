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
Homeomorphic embeddings of rooted trees with node labels and edge labels.

Edge labels are naturals or OMEGA; an edge of the first tree may only be
mapped onto a path whose edge labels are all at least its own label.
"""

import logging
import numbers

import networkx as nx

from immersion_wqo.constants import OMEGA
from immersion_wqo.exceptions import StructuralError
from immersion_wqo.immersion import EmbeddingCheck

LOGGER = logging.getLogger(__name__)


class RootedTree:
    """A rooted tree with labelled nodes and labelled edges.

    Attributes:
        parent (dict): map from each node to its parent, None at the root.
        node_labels (dict): map from each node to its label.
        edge_labels (dict): map from each non-root node to the label of the
            edge from its parent.
    """

    def __init__(self, parent, node_labels=None, edge_labels=None):
        """Create a RootedTree.

        Raises:
            StructuralError: if parent does not describe a rooted tree or a
                label is missing or invalid.
        """
        self.parent = dict(parent)
        roots = [node for node, up in self.parent.items() if up is None]
        if len(roots) != 1:
            raise StructuralError(f'A rooted tree needs exactly one root, found {len(roots)}.')
        self.root = roots[0]
        self._children = {node: [] for node in self.parent}
        for node, up in self.parent.items():
            if up is None:
                continue
            if up not in self._children:
                raise StructuralError(f'Parent {up!r} of {node!r} is not a node.')
            self._children[up].append(node)
        for node in self.parent:
            seen = set()
            current = node
            while current is not None:
                if current in seen:
                    raise StructuralError(f'Node {node!r} does not reach the root.')
                seen.add(current)
                current = self.parent[current]
        self.node_labels = dict(node_labels or {node: None for node in self.parent})
        if set(self.node_labels) != set(self.parent):
            raise StructuralError('Every tree node needs a label.')
        if edge_labels is None:
            edge_labels = {node: 0 for node in self.parent if node != self.root}
        self.edge_labels = dict(edge_labels)
        for node in self.parent:
            if node == self.root:
                continue
            label = self.edge_labels.get(node)
            if label != OMEGA and not (isinstance(label, numbers.Integral) and label >= 0):
                raise StructuralError(f'Edge into {node!r} has label {label!r}, not a natural or omega.')

    @property
    def nodes(self):
        return list(self.parent)

    def children(self, node):
        return list(self._children[node])

    def edges(self):
        """Return the (parent, child) pairs."""
        return [(up, node) for node, up in self.parent.items() if up is not None]

    def path_up(self, low, high):
        """Return the nodes from high down to low, or None if high is not an ancestor."""
        path = [low]
        while path[-1] != high:
            up = self.parent[path[-1]]
            if up is None:
                return None
            path.append(up)
        return list(reversed(path))

    def __len__(self):
        return len(self.parent)

    def __repr__(self):
        return f'RootedTree(root={self.root!r}, nodes={len(self.parent)})'


class TreeEmbedding:
    """A homeomorphic embedding of one rooted tree into another.

    Attributes:
        node_map (dict): the injective node map.
        path_map (dict): map from each non-root node c of the first tree to
            the nodes of the path from the image of its parent to its image.
        witnesses (dict): the non-boolean results of the node comparison,
            keyed by node of the first tree.
    """

    def __init__(self, node_map, path_map, witnesses=None):
        self.node_map = dict(node_map)
        self.path_map = dict(path_map)
        self.witnesses = dict(witnesses or {})

    def __repr__(self):
        return f'TreeEmbedding({self.node_map!r})'


def _comparator(node_leq, qo):
    if node_leq is not None:
        return node_leq
    if qo is not None:
        return qo.leq
    return lambda first, second: first == second


def _path_min(labels):
    return min(labels, default=OMEGA)


def find_tree_homeo_embedding(first, second, node_leq=None, qo=None):
    """Search for a homeomorphic embedding of first into second.

    Whether the subtree at u maps with u onto w is decided bottom-up: the
    children of u must be matched to distinct children of w, each child c
    reaching some node x below its branch along edges labelled at least the
    label of the edge into c, with c mapping onto x.

    Args:
        first (RootedTree): the tree to embed.
        second (RootedTree): the host tree.
        node_leq (callable): node label comparison; its truthy non-True
            results are kept as witnesses. Defaults to qo.leq or equality.
        qo (QuasiOrder): the node label order when node_leq is not given.

    Returns:
        TreeEmbedding or None: the embedding, or None when none exists.
    """
    compare = _comparator(node_leq, qo)
    label_cache = {}
    memo = {}

    def labels_fit(u, w):
        key = (u, w)
        if key not in label_cache:
            label_cache[key] = compare(first.node_labels[u], second.node_labels[w])
        return label_cache[key]

    def reachable(child, branch):
        """Yield (x, path) below branch with every edge label at least the gap."""
        gap = first.edge_labels[child]
        stack = [(branch, [branch])]
        while stack:
            node, path = stack.pop()
            if second.edge_labels[node] < gap:
                continue
            yield node, path
            for below in reversed(second.children(node)):
                stack.append((below, path + [below]))

    def embed(u, w):
        key = (u, w)
        if key in memo:
            return memo[key]
        memo[key] = None
        if not labels_fit(u, w):
            return None
        kids = first.children(u)
        branches = second.children(w)
        if len(kids) > len(branches):
            return None
        options = {}
        for child in kids:
            for branch in branches:
                for x, path in reachable(child, branch):
                    if embed(child, x) is not None:
                        options[(child, branch)] = (x, [w] + path)
                        break
        graph = nx.Graph()
        top = [('u', child) for child in kids]
        graph.add_nodes_from(top)
        graph.add_nodes_from(('w', branch) for branch in branches)
        graph.add_edges_from((('u', child), ('w', branch)) for child, branch in options)
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top) if kids else {}
        if any(('u', child) not in matching for child in kids):
            return None
        placement = {}
        for child in kids:
            branch = matching[('u', child)][1]
            placement[child] = options[(child, branch)]
        memo[key] = placement
        return placement

    for target in second.nodes:
        if embed(first.root, target) is None:
            continue
        node_map = {first.root: target}
        path_map = {}
        pending = [first.root]
        while pending:
            u = pending.pop()
            for child, (x, path) in memo[(u, node_map[u])].items():
                node_map[child] = x
                path_map[child] = path
                pending.append(child)
        witnesses = {}
        for u, w in node_map.items():
            verdict = labels_fit(u, w)
            if verdict is not True:
                witnesses[u] = verdict
        LOGGER.debug('Tree embedding found after %d subproblems', len(memo))
        return TreeEmbedding(node_map, path_map, witnesses)
    LOGGER.debug('No tree embedding after %d subproblems', len(memo))
    return None


def check_tree_embedding(first, second, embedding, node_leq=None, qo=None):
    """Check a homeomorphic embedding between rooted trees.

    Returns:
        EmbeddingCheck: the verdict with the first violated condition among
            injectivity, path, disjointness, labels and gaps.
    """
    compare = _comparator(node_leq, qo)
    node_map = embedding.node_map
    if set(node_map) != set(first.nodes) or not set(node_map.values()) <= set(second.nodes):
        raise StructuralError('The node map must send every node of the first tree to the second.')
    if len(set(node_map.values())) != len(node_map):
        return EmbeddingCheck(False, 'injectivity', 'two nodes share an image')
    for up, child in first.edges():
        path = embedding.path_map.get(child)
        if path is None or second.path_up(node_map[child], node_map[up]) != path or len(path) < 2:
            return EmbeddingCheck(False, 'path', f'edge into {child!r} is not a downward path')
    edges = first.edges()
    for i, (up1, child1) in enumerate(edges):
        for up2, child2 in edges[i + 1:]:
            shared = set(embedding.path_map[child1]) & set(embedding.path_map[child2])
            expected = {node_map[v] for v in {up1, child1} & {up2, child2}}
            if shared != expected:
                return EmbeddingCheck(False, 'disjointness',
                                      f'paths into {child1!r} and {child2!r} meet outside their common end')
    for node, image in node_map.items():
        if not compare(first.node_labels[node], second.node_labels[image]):
            return EmbeddingCheck(False, 'labels', f'label of {node!r} does not embed')
    for up, child in edges:
        path = embedding.path_map[child]
        if _path_min(second.edge_labels[n] for n in path[1:]) < first.edge_labels[child]:
            return EmbeddingCheck(False, 'gaps', f'edge into {child!r} crosses a smaller edge label')
    return EmbeddingCheck(True, None, None)
