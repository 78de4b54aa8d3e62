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
Contains the BlockCutTree class: the block-structure of a rooted digraph.
"""

import networkx as nx

from immersion_wqo.exceptions import StructuralError


class BlockCutTree:
    """The block-structure of a rooted digraph.

    Nodes are ('C', v) for the root and every cut-vertex v, and ('L', i) for
    the i-th block. Blocks are numbered in breadth-first order from the root.

    Attributes:
        host (MultiDigraph): the digraph.
        root (str): the root vertex.
        blocks (list): the vertex sets of the blocks.
        block_edges (list): the edge ids of each block.
        cut_vertices (list): cut-vertices of the underlying graph.
        parent (dict): map from every non-root node to its parent node.
        children (dict): map from every node to its ordered child nodes.
    """

    def __init__(self, host, root, blocks, block_edges, cut_vertices, parent, children):
        self.host = host
        self.root = root
        self.blocks = blocks
        self.block_edges = block_edges
        self.cut_vertices = cut_vertices
        self.parent = parent
        self.children = children

    @property
    def root_node(self):
        return ('C', self.root)

    @property
    def nodes(self):
        return list(self.children)

    def block_digraph(self, index):
        """Return block index as a subdigraph of the host."""
        return self.host.edge_subgraph(self.block_edges[index], self.blocks[index])

    def entry_vertex(self, index):
        """Return r or the cut-vertex shared by block index and its parent block."""
        return self.parent[('L', index)][1]

    def child_cut_vertices(self, index):
        return [node[1] for node in self.children[('L', index)]]

    def child_blocks(self, index):
        """Return the indices of the child blocks of block index."""
        return [child[1] for node in self.children[('L', index)] for child in self.children[node]]

    def parent_block(self, index):
        """Return the index of the parent block, or None at the root."""
        entry = self.parent[('L', index)]
        if entry == self.root_node:
            return None
        return self.parent[entry][1]

    def middle_blocks(self):
        """Return (index, x, y) for each block with a child block.

        x is the entry vertex of the block and y its child cut-vertex.
        Blocks with several child cut-vertices are reported once per child.
        """
        found = []
        for index in range(len(self.blocks)):
            for y in self.child_cut_vertices(index):
                found.append((index, self.entry_vertex(index), y))
        return found

    def leaf_blocks(self):
        """Return the indices of the blocks with no child block."""
        return [index for index in range(len(self.blocks)) if not self.children[('L', index)]]

    def block_of_vertex(self, vertex):
        """Return the index of the block closest to the root containing vertex."""
        for index, block in enumerate(self.blocks):
            if vertex in block:
                return index
        raise StructuralError(f'Vertex {vertex!r} is in no block.')

    def path_to_root(self, node):
        """Return the nodes from node up to the root, inclusive."""
        path = [node]
        while path[-1] != self.root_node:
            path.append(self.parent[path[-1]])
        return path


def block_cut_tree(host, root):
    """Compute the block-structure of a rooted digraph.

    Args:
        host (MultiDigraph): a digraph with connected underlying graph.
        root (str): the root vertex.

    Returns:
        BlockCutTree: the block-structure rooted at the node of root.

    Raises:
        StructuralError: if the digraph is disconnected or root is missing.
    """
    host.check_vertices([root])
    if not host.is_connected():
        raise StructuralError('The block-structure needs a connected underlying graph.')
    graph = host.underlying_simple()
    if graph.number_of_nodes() == 1:
        raw_blocks = [{root}]
    else:
        raw_blocks = [set(block) for block in nx.biconnected_components(graph)]
    cut_set = set(nx.articulation_points(graph))
    cut_vertices = [v for v in host.vertices if v in cut_set]
    order = host.index

    containing = {}
    for number, block in enumerate(raw_blocks):
        for vertex in block:
            containing.setdefault(vertex, []).append(number)

    blocks = []
    parent = {}
    children = {('C', root): []}
    renumber = {}
    frontier = [('C', root)]
    while frontier:
        next_frontier = []
        for node in frontier:
            vertex = node[1]
            candidates = [n for n in containing[vertex] if n not in renumber]
            candidates.sort(key=lambda n: sorted(order(v) for v in raw_blocks[n]))
            for raw in candidates:
                index = len(blocks)
                renumber[raw] = index
                blocks.append(frozenset(raw_blocks[raw]))
                block_node = ('L', index)
                parent[block_node] = node
                children[node].append(block_node)
                children[block_node] = []
                for member in sorted(raw_blocks[raw], key=order):
                    if member in cut_set and member != vertex and ('C', member) not in children:
                        cut_node = ('C', member)
                        parent[cut_node] = block_node
                        children[block_node].append(cut_node)
                        children[cut_node] = []
                        next_frontier.append(cut_node)
        frontier = next_frontier

    block_edges = [[] for _ in blocks]
    for edge in host.edges:
        if edge.tail == edge.head:
            home = next(i for i, block in enumerate(blocks) if edge.tail in block)
        else:
            home = next(i for i, block in enumerate(blocks)
                        if edge.tail in block and edge.head in block)
        block_edges[home].append(edge.id)

    return BlockCutTree(host, root, blocks, block_edges, cut_vertices, parent, children)
