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
Unit tests for the immersion_wqo.immersion module.
"""

import unittest

from hypothesis import given

from immersion_wqo.digraph import LabelledDigraph, MultiDigraph
from immersion_wqo.exceptions import PreconditionError, ResourceGuardError, StructuralError
from immersion_wqo.generators import zigzag
from immersion_wqo.immersion import (
    VIOLATIONS,
    Embedding,
    EmbeddingConstraints,
    SearchGuard,
    check_embedding,
    compose_embeddings,
    find_embedding,
    shortcut,
    simulates
)
from immersion_wqo.quasi_order import QuasiOrder
from immersion_wqo.sp import recognize
from tests.mocks import (
    PROPERTY_SETTINGS,
    all_digraphs,
    diamond,
    digon,
    directed_cycle,
    directed_path,
    parallel_pair,
    small_digraphs
)
from tests.oracles import brute_force_embedding


class TestCheckEmbedding(unittest.TestCase):
    """Tests for check_embedding."""

    def assertViolation(self, verdict, violation):
        self.assertIn(violation, VIOLATIONS)
        self.assertFalse(verdict)
        self.assertEqual(verdict.violation, violation)

    def test_identity(self):
        """Test that every digraph embeds into itself."""
        verdict = check_embedding(diamond(), diamond(), Embedding.identity(diamond()))
        self.assertTrue(verdict)
        self.assertIsNone(verdict.violation)

    def test_injectivity(self):
        """Test two guest vertices with the same image."""
        embedding = Embedding({'v0': 's', 'v1': 's'}, {'e0': ['e0']})
        self.assertViolation(check_embedding(directed_path(1), diamond(), embedding), 'injectivity')

    def test_path(self):
        """Test an edge mapped to a walk that ends elsewhere."""
        embedding = Embedding({'v0': 's', 'v1': 't'}, {'e0': ['e0']})
        self.assertViolation(check_embedding(directed_path(1), diamond(), embedding), 'path')
        embedding = Embedding({'v0': 's', 'v1': 't'}, {'e0': []})
        self.assertViolation(check_embedding(directed_path(1), diamond(), embedding), 'path')

    def test_edge_disjointness(self):
        """Test two guest edges sharing a host edge."""
        embedding = Embedding({'s': 's', 't': 't'}, {'e0': ['e0', 'e1'], 'e1': ['e0', 'e1']})
        verdict = check_embedding(parallel_pair(), diamond(), embedding)
        self.assertViolation(verdict, 'edge-disjointness')
        self.assertIn("'e0'", verdict.detail)

    def test_vertex_avoidance(self):
        """Test a path through the image of another guest vertex."""
        guest = MultiDigraph(['x', 'y', 'z'], [('g0', 'x', 'y')])
        embedding = Embedding({'x': 's', 'y': 't', 'z': 'a'}, {'g0': ['e0', 'e1']})
        self.assertViolation(check_embedding(guest, diamond(), embedding), 'vertex-avoidance')

    def test_pinned(self):
        """Test a certificate that ignores a pinned pair."""
        constraints = EmbeddingConstraints(pinned=[('s', 't')])
        verdict = check_embedding(diamond(), diamond(), Embedding.identity(diamond()), constraints)
        self.assertViolation(verdict, 'pinned')

    def test_labels(self):
        """Test that labels must weakly increase."""
        qo = QuasiOrder.chain(['low', 'high'])
        guest = LabelledDigraph(directed_path(1), qo, {'v0': 'high', 'v1': 'low'})
        host = LabelledDigraph(directed_path(1), qo, {'v0': 'low', 'v1': 'high'})
        identity = Embedding.identity(directed_path(1))
        self.assertViolation(check_embedding(guest, host, identity), 'labels')
        self.assertTrue(check_embedding(host, guest, identity, EmbeddingConstraints(use_labels=False)))
        self.assertTrue(check_embedding(directed_path(1), host, identity))

    def test_malformed_certificate(self):
        """Test maps that do not cover the guest or name missing host items."""
        with self.assertRaises(StructuralError):
            check_embedding(directed_path(1), diamond(), Embedding({'v0': 's'}, {'e0': ['e0']}))
        with self.assertRaises(StructuralError):
            check_embedding(directed_path(1), diamond(), Embedding({'v0': 's', 'v1': 'a'}, {'e0': ['e9']}))
        with self.assertRaises(StructuralError):
            check_embedding(directed_path(1), diamond(), Embedding({'v0': 's', 'v1': 'z'}, {'e0': ['e0']}))

    def test_document_form(self):
        """Test the vmap and emap document of a certificate."""
        embedding = Embedding.identity(directed_path(1))
        self.assertEqual(embedding.to_dict(), {'vmap': {'v0': 'v0', 'v1': 'v1'}, 'emap': {'e0': ['e0']}})
        self.assertEqual(Embedding.from_dict(embedding.to_dict()), embedding)


class TestFindEmbedding(unittest.TestCase):
    """Tests for find_embedding."""

    def test_found(self):
        """Test embeddings that exist, including paths through unused vertices."""
        for guest, host in [(zigzag(1), diamond()), (digon(), directed_cycle(3)), (directed_path(2), diamond())]:
            found = find_embedding(guest, host)
            self.assertIsNotNone(found)
            self.assertTrue(check_embedding(guest, host, found))

    def test_not_found(self):
        """Test embeddings ruled out by direction or size."""
        self.assertIsNone(find_embedding(directed_cycle(3), diamond()))
        self.assertIsNone(find_embedding(directed_cycle(3), digon()))
        self.assertIsNone(find_embedding(zigzag(2), diamond()))

    def test_pinned(self):
        """Test pinned vertices and inconsistent pins."""
        found = find_embedding(directed_path(1), diamond(), EmbeddingConstraints(pinned=[('v0', 'b')]))
        self.assertEqual(found.vertex_map, {'v0': 'b', 'v1': 't'})
        self.assertIsNone(find_embedding(directed_path(1), diamond(), EmbeddingConstraints(pinned=[('v0', 't')])))
        with self.assertRaises(PreconditionError):
            find_embedding(directed_path(2), diamond(), EmbeddingConstraints(pinned=[('v0', 's'), ('v1', 's')]))

    def test_labels(self):
        """Test that labels restrict the vertex map."""
        qo = QuasiOrder.chain(['low', 'high'])
        host = LabelledDigraph(directed_path(2), qo, {'v0': 'low', 'v1': 'low', 'v2': 'high'})
        guest = LabelledDigraph(directed_path(1), qo, {'v0': 'low', 'v1': 'high'})
        found = find_embedding(guest, host)
        self.assertEqual(found.vertex_map['v1'], 'v2')
        guest = LabelledDigraph(directed_path(1), qo, {'v0': 'high', 'v1': 'high'})
        self.assertIsNone(find_embedding(guest, host))

    def test_guard(self):
        """Test that oversized instances are refused."""
        with self.assertRaises(ResourceGuardError):
            find_embedding(directed_path(1), diamond(), guard=SearchGuard(max_vertices=1))
        with self.assertRaises(ResourceGuardError):
            find_embedding(directed_path(1), diamond(), guard=SearchGuard(max_edges=3))

    @PROPERTY_SETTINGS
    @given(small_digraphs(max_vertices=3, max_edges=3), small_digraphs(max_vertices=4, max_edges=5))
    def test_agrees_with_brute_force(self, guest, host):
        """Test the search against enumeration of all vertex maps and path choices."""
        found = find_embedding(guest, host)
        expected = brute_force_embedding(guest, host)
        self.assertEqual(found is None, expected is None)
        if found is not None:
            self.assertTrue(check_embedding(guest, host, found))

    def test_agrees_with_brute_force_exhaustively(self):
        """Test the search on every pair of small digraphs up to isomorphism."""
        hosts = list(all_digraphs(4, 4))
        for guest in all_digraphs(3, 4):
            for host in hosts:
                found = find_embedding(guest, host)
                expected = brute_force_embedding(guest, host)
                self.assertEqual(found is None, expected is None, (guest.edges, host.edges))
                if found is not None:
                    self.assertTrue(check_embedding(guest, host, found))


class TestSimulationAndComposition(unittest.TestCase):
    """Tests for simulates, shortcut and compose_embeddings."""

    def test_simulates(self):
        """Test that the diamond simulates a single edge but not the reverse."""
        edge = recognize(MultiDigraph.from_pairs([('p', 'q')]), 'p', 'q')
        triple = recognize(diamond(), 's', 't')
        found = simulates(triple, edge)
        self.assertEqual((found.vertex_map['p'], found.vertex_map['q']), ('s', 't'))
        self.assertIsNone(simulates(edge, triple))
        self.assertIsNone(simulates(recognize(diamond(), 't', 's'), edge))

    def test_simulates_needs_order_for_labels(self):
        """Test that labels without a quasi-order are refused."""
        triple = recognize(diamond(), 's', 't')
        with self.assertRaises(PreconditionError):
            simulates(triple, triple, host_labels={v: 0 for v in diamond().vertices})
        with self.assertRaises(PreconditionError):
            simulates(diamond(), triple)

    def test_shortcut(self):
        """Test that detours of a walk are cut out."""
        target = MultiDigraph.from_pairs([('a', 'b'), ('b', 'c'), ('c', 'b'), ('b', 'd')])
        self.assertEqual(shortcut(target, 'a', ['e0', 'e1', 'e2', 'e3']), ['e0', 'e3'])
        self.assertEqual(shortcut(directed_cycle(3), 'v0', ['e0', 'e1', 'e2'], closed=True), ['e0', 'e1', 'e2'])

    def test_compose(self):
        """Test that composed embeddings are valid."""
        guest, middle, host = directed_path(1), directed_path(2), diamond()
        first = find_embedding(guest, middle)
        second = find_embedding(middle, host)
        composed = compose_embeddings(first, second, host)
        self.assertTrue(check_embedding(guest, host, composed))
        self.assertEqual(compose_embeddings(first, Embedding.identity(middle), middle), first)


if __name__ == '__main__':
    unittest.main()
