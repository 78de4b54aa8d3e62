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
Unit tests for the immersion_wqo.blocks module.
"""

import unittest

from immersion_wqo.blocks import block_cut_tree
from immersion_wqo.digraph import MultiDigraph
from immersion_wqo.exceptions import StructuralError
from tests.mocks import directed_cycle, directed_path, two_triangles


class TestBlockCutTree(unittest.TestCase):
    """Tests for block_cut_tree."""

    def test_two_triangles(self):
        """Test a chain of two blocks joined at a cut-vertex."""
        tree = block_cut_tree(two_triangles(), 'r')
        self.assertEqual(tree.blocks, [frozenset({'r', 'a', 'c'}), frozenset({'c', 'b', 'd'})])
        self.assertEqual(tree.cut_vertices, ['c'])
        self.assertEqual(tree.children[('C', 'r')], [('L', 0)])
        self.assertEqual(tree.children[('L', 0)], [('C', 'c')])
        self.assertEqual(tree.children[('C', 'c')], [('L', 1)])
        self.assertEqual(tree.entry_vertex(1), 'c')
        self.assertEqual(tree.middle_blocks(), [(0, 'r', 'c')])
        self.assertEqual(tree.leaf_blocks(), [1])
        self.assertEqual(tree.child_blocks(0), [1])
        self.assertIsNone(tree.parent_block(0))
        self.assertEqual(tree.parent_block(1), 0)
        self.assertEqual(tree.block_edges, [['e0', 'e1', 'e2'], ['e3', 'e4', 'e5']])
        self.assertEqual(tree.path_to_root(('L', 1)), [('L', 1), ('C', 'c'), ('L', 0), ('C', 'r')])

    def test_root_in_middle(self):
        """Test a root that is itself a cut-vertex."""
        tree = block_cut_tree(directed_path(2), 'v1')
        self.assertEqual(tree.children[('C', 'v1')], [('L', 0), ('L', 1)])
        self.assertEqual(tree.leaf_blocks(), [0, 1])
        self.assertEqual(tree.block_of_vertex('v2'), 1)

    def test_single_block(self):
        """Test a 2-connected digraph and a single vertex."""
        tree = block_cut_tree(directed_cycle(4), 'v2')
        self.assertEqual(len(tree.blocks), 1)
        self.assertEqual(tree.block_digraph(0).num_edges, 4)
        lonely = block_cut_tree(MultiDigraph(['x']), 'x')
        self.assertEqual(lonely.blocks, [frozenset({'x'})])

    def test_loops_join_their_block(self):
        """Test that a loop belongs to the first block containing its vertex."""
        digraph = MultiDigraph.from_pairs([('a', 'b'), ('b', 'b')], loops_allowed=True)
        tree = block_cut_tree(digraph, 'a')
        self.assertEqual(tree.block_edges, [['e0', 'e1']])

    def test_disconnected(self):
        """Test that disconnected digraphs are rejected."""
        with self.assertRaises(StructuralError):
            block_cut_tree(MultiDigraph(['a', 'b']), 'a')
        with self.assertRaises(StructuralError):
            block_cut_tree(directed_path(1), 'z')


if __name__ == '__main__':
    unittest.main()
