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
Unit tests for the immersion_wqo.sptree module.
"""

import random
import unittest

from immersion_wqo.constants import (
    OMEGA,
    TAG_CUT_VERTEX,
    TAG_HEAD_TRUNCATION,
    TAG_LEAF_BLOCK,
    TAG_MIDDLE_BLOCK,
    TAG_ROOT,
    TAG_TAIL_TRUNCATION
)
from immersion_wqo.digraph import LabelledDigraph, MultiDigraph
from immersion_wqo.exceptions import PreconditionError
from immersion_wqo.immersion import Embedding, EmbeddingConstraints, check_embedding
from immersion_wqo.quasi_order import QuasiOrder
from immersion_wqo.sptree import (
    PortraitNode,
    build_portrait,
    is_sp_tree,
    lift_portrait_embedding,
    lift_with_simulations,
    portrait_node_leq
)
from immersion_wqo.tree_embedding import TreeEmbedding
from tests.mocks import directed_path, two_triangles


def undirected_thread_to_cut_vertex():
    """A triangle on r, a, c where the thread r -> a <- c is not directed, with c a cut-vertex."""
    return MultiDigraph.from_pairs([('r', 'a'), ('c', 'a'), ('r', 'c'), ('c', 'b')])


def seeded_chain(seed):
    """Return a seeded chain of one-way blocks c0 -> c1 -> ... and a middle block that is a single edge.

    Each block is a single edge, two parallel edges or a diamond; the last
    block has no child cut-vertex.
    """
    rng = random.Random(seed)
    count = rng.randint(2, 4)
    single = rng.randrange(count - 1)
    pairs = []
    for number in range(count):
        tail, head = f'c{number}', f'c{number + 1}'
        shape = 'edge' if number == single else rng.choice(('edge', 'pair', 'diamond'))
        if shape == 'edge':
            pairs.append((tail, head))
        elif shape == 'pair':
            pairs.extend([(tail, head), (tail, head)])
        else:
            for inner in (f'b{number}.a', f'b{number}.b'):
                pairs.extend([(tail, inner), (inner, head)])
    return pairs, (f'c{single}', f'c{single + 1}')


class TestIsSpTree(unittest.TestCase):
    """Tests for is_sp_tree."""

    def test_accepted(self):
        """Test a chain of a middle block and a childless block."""
        diagnosis = is_sp_tree(two_triangles(), 'r')
        self.assertTrue(diagnosis)
        self.assertIsNone(diagnosis.bullet)

    def test_block_tests(self):
        """Test block families failing at the root and elsewhere."""
        diagnosis = is_sp_tree(two_triangles(), 'r', lambda block, vertex: block.num_edges < 3)
        self.assertEqual(diagnosis.bullet, 1)
        diagnosis = is_sp_tree(two_triangles(), 'r', lambda block, vertex: vertex == 'r')
        self.assertEqual(diagnosis.bullet, 2)

    def test_thread_to_cut_vertex(self):
        """Test that threads from the root to cut-vertices must be directed."""
        diagnosis = is_sp_tree(undirected_thread_to_cut_vertex(), 'r')
        self.assertFalse(diagnosis)
        self.assertEqual(diagnosis.bullet, 3)
        self.assertIn("'c'", diagnosis.detail)


class TestBuildPortrait(unittest.TestCase):
    """Tests for build_portrait."""

    def test_two_triangles(self):
        """Test the spine around the middle block and the childless block."""
        portrait = build_portrait(two_triangles(), 'r')
        tree = portrait.tree
        self.assertEqual(tree.root, ('C', 'r'))
        self.assertEqual(tree.path_up(('L', 1), ('C', 'r')),
                         [('C', 'r'), ('X', 0), ('L', 0), ('Y', 0), ('C', 'c'), ('L', 1)])
        self.assertEqual([portrait.node(key).tag for key in tree.path_up(('L', 1), ('C', 'r'))],
                         [TAG_ROOT, TAG_HEAD_TRUNCATION, TAG_MIDDLE_BLOCK, TAG_TAIL_TRUNCATION,
                          TAG_CUT_VERTEX, TAG_LEAF_BLOCK])
        self.assertEqual(tree.edge_labels, {('X', 0): OMEGA, ('L', 0): 2, ('Y', 0): 2,
                                            ('C', 'c'): OMEGA, ('L', 1): OMEGA})
        self.assertEqual(portrait.middle, {0: ('r', 'c')})
        self.assertEqual(portrait.separators[0].x_side, frozenset({'r'}))

    def test_truncations(self):
        """Test the payloads of the two truncation nodes."""
        portrait = build_portrait(two_triangles(), 'r')
        head = portrait.node(('X', 0)).payload
        self.assertEqual((head.s, head.t), ('r', 'c'))
        self.assertEqual(sorted(e.id for e in head.digraph.edges), ['e0', 'e2'])
        tail = portrait.node(('Y', 0)).payload
        self.assertEqual(tail.digraph, portrait.node(('L', 0)).payload.digraph)
        leaf = portrait.node(('L', 1)).payload
        self.assertEqual(leaf.root, 'c')
        self.assertEqual(leaf.digraph.num_edges, 3)

    def test_given_separator(self):
        """Test a chosen separator and an invalid one."""
        portrait = build_portrait(two_triangles(), 'r', separators={0: {'r', 'a'}})
        self.assertEqual(portrait.separators[0].cut_edges, ('e1', 'e2'))
        with self.assertRaises(PreconditionError):
            build_portrait(two_triangles(), 'r', separators={0: {'r', 'a', 'c'}})

    def test_not_a_tree_of_blocks(self):
        """Test that a failing diagnosis is reported."""
        with self.assertRaises(PreconditionError):
            build_portrait(undirected_thread_to_cut_vertex(), 'r')

    def test_labels(self):
        """Test that root and cut-vertex nodes carry vertex labels."""
        qo = QuasiOrder.chain([0, 1])
        labels = {'r': 1, 'a': 0, 'c': 0, 'b': 1, 'd': 1}
        portrait = build_portrait(LabelledDigraph(two_triangles(), qo, labels), 'r')
        self.assertEqual(portrait.node(('C', 'r')), PortraitNode(TAG_ROOT, 1, None))
        self.assertEqual(portrait.node(('C', 'c')).payload, 0)
        self.assertEqual(portrait.node(('L', 1)).labels, {'c': 0, 'b': 1, 'd': 1})


class TestNodeComparison(unittest.TestCase):
    """Tests for portrait_node_leq."""

    def test_compare(self):
        """Test tag mismatches, label comparison and simulation witnesses."""
        portrait = build_portrait(two_triangles(), 'r')
        compare = portrait_node_leq(portrait.qo)
        self.assertFalse(compare(portrait.node(('X', 0)), portrait.node(('Y', 0))))
        self.assertTrue(compare(portrait.node(('C', 'r')), portrait.node(('C', 'c'))))
        witness = compare(portrait.node(('L', 0)), portrait.node(('L', 0)))
        self.assertIsInstance(witness, Embedding)
        self.assertIsInstance(compare(portrait.node(('L', 1)), portrait.node(('L', 1))), Embedding)


class TestLift(unittest.TestCase):
    """Tests for lifting portrait embeddings."""

    def test_tight_lift(self):
        """Test that a portrait embedding into itself lifts to the identity."""
        portrait = build_portrait(two_triangles(), 'r')
        lifted = lift_with_simulations(portrait, portrait)
        self.assertEqual(lifted, Embedding.identity(two_triangles()))

    def test_loose_lift(self):
        """Test a middle block stretched over two host blocks."""
        src = build_portrait(directed_path(2), 'v0')
        dst = build_portrait(directed_path(3), 'v0')
        lifted = lift_with_simulations(src, dst)
        self.assertEqual(lifted.vertex_map, {'v0': 'v0', 'v1': 'v2', 'v2': 'v3'})
        self.assertEqual(lifted.edge_map, {'e0': ['e0', 'e1'], 'e1': ['e2']})
        self.assertTrue(check_embedding(directed_path(2), directed_path(3), lifted))

    def test_seeded_chains(self):
        """Test tight lifts into doubled chains and loose lifts into chains with a subdivided bridge."""
        pinned = EmbeddingConstraints(pinned=(('c0', 'c0'),))
        for seed in range(10):
            pairs, bridge = seeded_chain(seed)
            src = MultiDigraph.from_pairs(pairs)
            subdivided = [pair for pair in pairs if pair != bridge] + [(bridge[0], 'w'), ('w', bridge[1])]
            for dst in (MultiDigraph.from_pairs(pairs + pairs), MultiDigraph.from_pairs(subdivided)):
                lifted = lift_with_simulations(build_portrait(src, 'c0'), build_portrait(dst, 'c0'))
                self.assertIsNotNone(lifted, (seed, dst.edges))
                self.assertTrue(check_embedding(src, dst, lifted, pinned), (seed, dst.edges))

    def test_no_portrait_embedding(self):
        """Test portraits that do not embed."""
        src = build_portrait(directed_path(3), 'v0')
        dst = build_portrait(directed_path(2), 'v0')
        self.assertIsNone(lift_with_simulations(src, dst))

    def test_invalid_tree_embedding(self):
        """Test that an invalid node map is refused."""
        portrait = build_portrait(directed_path(2), 'v0')
        node_map = {key: ('C', 'v0') for key in portrait.tree.nodes}
        with self.assertRaises(PreconditionError):
            lift_portrait_embedding(portrait, portrait, TreeEmbedding(node_map, {}))

    def test_missing_witness(self):
        """Test that digraph nodes need witnesses."""
        portrait = build_portrait(directed_path(2), 'v0')
        node_map = {key: key for key in portrait.tree.nodes}
        path_map = {child: [up, child] for up, child in portrait.tree.edges()}
        with self.assertRaises(PreconditionError):
            lift_portrait_embedding(portrait, portrait, TreeEmbedding(node_map, path_map))

    def test_given_node_map(self):
        """Test lifting along a given node map with searched witnesses."""
        portrait = build_portrait(directed_path(2), 'v0')
        node_map = {key: key for key in portrait.tree.nodes}
        lifted = lift_with_simulations(portrait, portrait, node_map=node_map)
        self.assertEqual(lifted, Embedding.identity(directed_path(2)))


if __name__ == '__main__':
    unittest.main()
