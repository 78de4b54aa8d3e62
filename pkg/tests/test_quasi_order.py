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
Unit tests for the immersion_wqo.quasi_order module.
"""

import unittest

from hypothesis import given
from hypothesis import strategies as st

from immersion_wqo.exceptions import DomainError
from immersion_wqo.quasi_order import (
    NaturalOrder,
    PresenceOrder,
    ProductOrder,
    QuasiOrder,
    higman_embedding,
    higman_leq,
    qo_combine
)
from tests.mocks import PROPERTY_SETTINGS


class TestQuasiOrder(unittest.TestCase):
    """Tests for the QuasiOrder class."""

    def test_reflexive_closure(self):
        """Test that the diagonal is added on construction."""
        qo = QuasiOrder(['x', 'y'], [('x', 'y')])
        self.assertTrue(qo.leq('x', 'x'))
        self.assertTrue(qo.leq('x', 'y'))
        self.assertFalse(qo.leq('y', 'x'))
        self.assertEqual(qo.pairs(), [('x', 'x'), ('x', 'y'), ('y', 'y')])
        self.assertEqual(qo.matrix(), [[True, True], [False, True]])

    def test_missing_diagonal_without_closure(self):
        """Test that a missing diagonal pair is an error when closure is off."""
        with self.assertRaises(DomainError):
            QuasiOrder(['x'], [], close_reflexive=False)

    def test_transitivity_checked(self):
        """Test that a non-transitive relation is rejected."""
        with self.assertRaises(DomainError):
            QuasiOrder(['x', 'y', 'z'], [('x', 'y'), ('y', 'z')])

    def test_foreign_element(self):
        """Test that pairs and comparisons reject foreign elements."""
        with self.assertRaises(DomainError):
            QuasiOrder(['x'], [('x', 'y')])
        with self.assertRaises(DomainError):
            QuasiOrder.antichain(['x']).leq('x', 'y')

    def test_repeated_element(self):
        """Test that elements must be distinct."""
        with self.assertRaises(DomainError):
            QuasiOrder(['x', 'x'])

    def test_equivalent_elements(self):
        """Test that a quasi-order may identify distinct elements."""
        qo = QuasiOrder(['x', 'y'], [('x', 'y'), ('y', 'x')])
        self.assertTrue(qo.equivalent('x', 'y'))

    def test_chain_and_counts(self):
        """Test the chain and count constructors."""
        chain = QuasiOrder.chain(['a', 'b', 'c'])
        self.assertTrue(chain.leq('a', 'c'))
        self.assertFalse(chain.leq('c', 'b'))
        self.assertTrue(QuasiOrder.counts(3).leq(0, 2))
        presence = QuasiOrder.presence_counts(3)
        self.assertFalse(presence.leq(0, 2))
        self.assertTrue(presence.leq(1, 3))
        self.assertFalse(QuasiOrder.antichain([1, 2]).comparable(1, 2))

    def test_restrict(self):
        """Test the suborder on a subset."""
        restricted = QuasiOrder.chain(['a', 'b', 'c']).restrict(['c', 'a'])
        self.assertEqual(restricted.elements, ('c', 'a'))
        self.assertTrue(restricted.leq('a', 'c'))

    def test_equality(self):
        """Test that equal relations give equal orders."""
        self.assertEqual(QuasiOrder(['x', 'y'], [('x', 'y')]), QuasiOrder.chain(['x', 'y']))
        self.assertNotEqual(QuasiOrder.antichain(['x', 'y']), QuasiOrder.chain(['x', 'y']))


class TestLazyOrders(unittest.TestCase):
    """Tests for the orders decided by rules."""

    def test_natural_order(self):
        """Test the natural numbers."""
        order = NaturalOrder()
        self.assertTrue(order.leq(2, 5))
        self.assertNotIn(-1, order)
        self.assertNotIn(True, order)
        self.assertFalse(order.is_finite)
        with self.assertRaises(DomainError):
            order.pairs()

    def test_presence_order(self):
        """Test that zero is incomparable to positive counts."""
        order = PresenceOrder()
        self.assertTrue(order.leq(0, 0))
        self.assertFalse(order.leq(0, 1))
        self.assertFalse(order.leq(1, 0))
        self.assertTrue(order.leq(1, 4))

    def test_product(self):
        """Test the componentwise order."""
        order = qo_combine('product', QuasiOrder.chain(['a', 'b']), NaturalOrder())
        self.assertTrue(order.leq(('a', 1), ('b', 2)))
        self.assertFalse(order.leq(('b', 1), ('a', 2)))
        self.assertNotIn(('a',), order)
        finite = ProductOrder([QuasiOrder.antichain([1]), QuasiOrder.antichain(['x', 'y'])])
        self.assertEqual(finite.elements, ((1, 'x'), (1, 'y')))

    def test_disjoint_union(self):
        """Test that the two parts of a tagged union are incomparable."""
        order = qo_combine('disjoint-union', QuasiOrder.chain(['a', 'b']), QuasiOrder.antichain(['c']))
        self.assertTrue(order.leq((0, 'a'), (0, 'b')))
        self.assertFalse(order.leq((0, 'a'), (1, 'c')))
        self.assertEqual(len(order.elements), 3)

    def test_unknown_combination(self):
        """Test an unknown combination."""
        with self.assertRaises(DomainError):
            qo_combine('sum', QuasiOrder.trivial(), QuasiOrder.trivial())


class TestHigman(unittest.TestCase):
    """Tests for the subsequence order."""

    def test_witness(self):
        """Test the index map of a subsequence embedding."""
        chain = QuasiOrder.counts(5)
        self.assertEqual(higman_embedding([1, 3], [0, 2, 1, 4], chain), [1, 3])
        self.assertIsNone(higman_embedding([3, 3], [0, 4, 1], chain))
        self.assertTrue(higman_leq([], [], chain))

    def test_foreign_entry(self):
        """Test that entries must belong to the order."""
        with self.assertRaises(DomainError):
            higman_leq([9], [1], QuasiOrder.counts(2))

    @PROPERTY_SETTINGS
    @given(st.lists(st.integers(min_value=0, max_value=4), max_size=6),
           st.lists(st.integers(min_value=0, max_value=4), max_size=6))
    def test_witness_is_increasing_and_dominating(self, first, second):
        """Test that any witness is strictly increasing and pointwise above."""
        chain = QuasiOrder.counts(4)
        witness = higman_embedding(first, second, chain)
        self.assertTrue(higman_leq(first, first, chain))
        self.assertTrue(higman_leq(first, first + second, chain))
        if witness is not None:
            self.assertEqual(len(witness), len(first))
            self.assertEqual(witness, sorted(set(witness)))
            for entry, index in zip(first, witness):
                self.assertLessEqual(entry, second[index])


if __name__ == '__main__':
    unittest.main()
