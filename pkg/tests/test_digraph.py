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
Unit tests for the immersion_wqo.digraph module.
"""

import unittest

from immersion_wqo.digraph import (
    Edge,
    LabelledDigraph,
    MultiDigraph,
    RootedDigraph,
    Separation,
    are_isomorphic
)
from immersion_wqo.exceptions import DomainError, StructuralError
from immersion_wqo.quasi_order import QuasiOrder
from tests.mocks import diamond, digon, directed_cycle, directed_path


class TestMultiDigraph(unittest.TestCase):
    """Tests for the MultiDigraph class."""

    def test_from_pairs_ids_and_order(self):
        """Test that from_pairs numbers edges and keeps first-appearance vertex order."""
        digraph = MultiDigraph.from_pairs([('b', 'a'), ('a', 'c')], vertices=['z'])
        self.assertEqual(digraph.vertices, ('z', 'b', 'a', 'c'))
        self.assertEqual(digraph.edges, (Edge('e0', 'b', 'a'), Edge('e1', 'a', 'c')))
        self.assertEqual(digraph.num_vertices, 4)
        self.assertEqual(digraph.num_edges, 2)

    def test_parallel_edges_kept(self):
        """Test that parallel edges are distinct edges."""
        digraph = MultiDigraph.from_pairs([('s', 't'), ('s', 't')])
        self.assertEqual(len(digraph.edges_between('s', 't')), 2)
        self.assertEqual(digraph.degree('s'), 2)

    def test_duplicate_edge_id(self):
        """Test that a repeated edge id is rejected."""
        with self.assertRaises(StructuralError):
            MultiDigraph(['a', 'b'], [('e', 'a', 'b'), ('e', 'b', 'a')])

    def test_duplicate_vertex(self):
        """Test that a repeated vertex is rejected."""
        with self.assertRaises(StructuralError):
            MultiDigraph(['a', 'a'])

    def test_loop_not_allowed(self):
        """Test that loops need loops_allowed."""
        with self.assertRaises(StructuralError):
            MultiDigraph.from_pairs([('a', 'a')])
        looped = MultiDigraph.from_pairs([('a', 'a')], loops_allowed=True)
        self.assertEqual(looped.loops(), [Edge('e0', 'a', 'a')])
        self.assertEqual(looped.degree('a'), 2)
        self.assertEqual(looped.incident_edges('a'), [Edge('e0', 'a', 'a')])
        self.assertEqual(looped.without_loops().num_edges, 0)

    def test_unknown_edge_and_vertex(self):
        """Test lookups of missing ids."""
        digraph = digon()
        with self.assertRaises(StructuralError):
            digraph.edge('missing')
        with self.assertRaises(StructuralError):
            digraph.index('missing')
        with self.assertRaises(StructuralError):
            digraph.check_vertices(['a', 'missing'])

    def test_subgraphs(self):
        """Test edge and induced subgraphs and vertex removal."""
        digraph = diamond()
        side = digraph.edge_subgraph(['e0', 'e1'])
        self.assertEqual(side.vertices, ('s', 'a', 't'))
        self.assertEqual(digraph.edge_subgraph([], extra_vertices=['b']).vertices, ('b',))
        induced = digraph.induced_subgraph(['s', 'a', 'b'])
        self.assertEqual([e.id for e in induced.edges], ['e0', 'e2'])
        self.assertEqual(digraph.remove_vertices(['a']).num_edges, 2)
        self.assertEqual(digraph.remove_edges(['e0']).num_vertices, 4)

    def test_reverse_keeps_ids(self):
        """Test that reversing keeps edge ids."""
        reversed_path = directed_path(2).reverse()
        self.assertEqual(reversed_path.edge('e0'), Edge('e0', 'v1', 'v0'))

    def test_equality_ignores_order(self):
        """Test that equality compares vertex and edge sets."""
        first = MultiDigraph(['a', 'b'], [('e', 'a', 'b')])
        second = MultiDigraph(['b', 'a'], [('e', 'a', 'b')])
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))

    def test_connectivity(self):
        """Test connectivity, 2-connectivity and cut-vertices."""
        self.assertTrue(directed_cycle(3).is_biconnected())
        self.assertFalse(digon().is_biconnected())
        self.assertTrue(digon().is_connected())
        path = directed_path(3)
        self.assertEqual(path.cut_vertices(), ['v1', 'v2'])
        self.assertEqual(path.components(removed=['v1']), [{'v0'}, {'v2', 'v3'}])
        self.assertFalse(MultiDigraph().is_connected())

    def test_fresh_ids(self):
        """Test that fresh ids avoid existing ones."""
        digraph = MultiDigraph(['x', 'x~1'], [('e0', 'x', 'x~1')])
        self.assertEqual(digraph.fresh_vertex('x'), 'x~2')
        self.assertEqual(digraph.fresh_vertex('y'), 'y')
        self.assertEqual(digraph.fresh_edge_id('e0'), 'e0~1')

    def test_to_networkx(self):
        """Test the networkx export keeps multiplicities."""
        graph = MultiDigraph.from_pairs([('s', 't'), ('s', 't')]).to_networkx()
        self.assertEqual(graph.number_of_edges('s', 't'), 2)


class TestLabelledDigraph(unittest.TestCase):
    """Tests for the LabelledDigraph class."""

    def test_unlabelled(self):
        """Test that unlabelled digraphs share one label."""
        labelled = LabelledDigraph.unlabelled(digon())
        self.assertEqual(set(labelled.labels.values()), {'*'})
        self.assertIs(LabelledDigraph.wrap(labelled), labelled)

    def test_missing_label(self):
        """Test that every vertex needs a label."""
        with self.assertRaises(StructuralError):
            LabelledDigraph(digon(), QuasiOrder.antichain(['x']), {'a': 'x'})

    def test_foreign_label(self):
        """Test that labels must belong to the order."""
        with self.assertRaises(DomainError):
            LabelledDigraph(digon(), QuasiOrder.antichain(['x']), {'a': 'x', 'b': 'y'})

    def test_restrict(self):
        """Test restricting labels to a subdigraph."""
        labelled = LabelledDigraph(diamond(), QuasiOrder.antichain([1, 2]),
                                   {'s': 1, 'a': 2, 't': 1, 'b': 2})
        restricted = labelled.restrict(diamond().edge_subgraph(['e0']))
        self.assertEqual(restricted.labels, {'s': 1, 'a': 2})


class TestSeparation(unittest.TestCase):
    """Tests for the Separation class."""

    def test_boundary(self):
        """Test the sides and boundary of a separation."""
        separation = Separation(diamond(), ['e0', 'e1'])
        self.assertEqual(separation.edges_b, frozenset({'e2', 'e3'}))
        self.assertEqual(separation.boundary, ('s', 't'))
        self.assertEqual(separation.order, 2)
        self.assertEqual(separation.side_a().vertices, ('s', 'a', 't'))

    def test_isolated_vertices_default_to_b(self):
        """Test that isolated vertices go to side B unless assigned."""
        host = MultiDigraph(['lonely'], [('e0', 'a', 'b')])
        self.assertIn('lonely', Separation(host, ['e0']).vertices_b)
        self.assertIn('lonely', Separation(host, ['e0'], isolated={'lonely': 'A'}).vertices_a)
        with self.assertRaises(StructuralError):
            Separation(host, ['e0'], isolated={'a': 'A'})

    def test_bad_edge_sets(self):
        """Test that the sides must partition the edges."""
        with self.assertRaises(StructuralError):
            Separation(diamond(), ['e0'], ['e0', 'e1', 'e2', 'e3'])
        with self.assertRaises(StructuralError):
            Separation(diamond(), ['e0'], ['e1'])
        with self.assertRaises(StructuralError):
            Separation(diamond(), ['nope'])


class TestIsomorphism(unittest.TestCase):
    """Tests for are_isomorphic and RootedDigraph."""

    def test_multiplicities_matter(self):
        """Test that edge multiplicities are preserved."""
        double = MultiDigraph.from_pairs([('a', 'b'), ('a', 'b')])
        single_each_way = MultiDigraph.from_pairs([('x', 'y'), ('y', 'x')])
        self.assertFalse(are_isomorphic(double, single_each_way))
        self.assertTrue(are_isomorphic(digon(), single_each_way))

    def test_labels_matter(self):
        """Test label-exact isomorphism."""
        qo = QuasiOrder.antichain(['x', 'y'])
        first = LabelledDigraph(digon(), qo, {'a': 'x', 'b': 'x'})
        second = LabelledDigraph(digon(), qo, {'a': 'x', 'b': 'y'})
        self.assertFalse(are_isomorphic(first, second))
        self.assertTrue(are_isomorphic(first, second, exact_labels=False))

    def test_rooted_digraph_checks_root(self):
        """Test that the root must be a vertex."""
        with self.assertRaises(StructuralError):
            RootedDigraph(digon(), 'z')


if __name__ == '__main__':
    unittest.main()
