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
Contains the QuasiOrder class, combinators and the Higman sequence order.
"""

import itertools

from immersion_wqo.constants import UNLABELLED
from immersion_wqo.exceptions import DomainError


class QuasiOrder:
    """A finite set with a reflexive and transitive relation.

    Attributes:
        elements (tuple): the ground set in its given order.
    """

    def __init__(self, elements, pairs=(), close_reflexive=True):
        """Create a QuasiOrder from the pairs (x, y) with x <= y.

        Args:
            elements (iterable): the hashable ground set elements.
            pairs (iterable): ordered pairs of the relation.
            close_reflexive (bool): add every (x, x); otherwise a missing
                diagonal pair is an error.

        Raises:
            DomainError: if an element is repeated, a pair names a foreign
                element, or the relation is not reflexive and transitive.
        """
        self.elements = tuple(elements)
        self._members = set(self.elements)
        if len(self._members) != len(self.elements):
            raise DomainError('Quasi-order elements must be distinct.')
        relation = set()
        for pair in pairs:
            low, high = pair
            for element in (low, high):
                if element not in self._members:
                    raise DomainError(f'Element {element!r} of pair {pair!r} is not in the ground set.')
            relation.add((low, high))
        for element in self.elements:
            if (element, element) not in relation:
                if not close_reflexive:
                    raise DomainError(f'Relation is not reflexive at {element!r}.')
                relation.add((element, element))
        above = {element: set() for element in self.elements}
        for low, high in relation:
            above[low].add(high)
        for low, middles in above.items():
            for middle in middles:
                missing = above[middle] - middles
                if missing:
                    raise DomainError(
                        f'Relation is not transitive: {low!r} <= {middle!r} <= {sorted(missing, key=repr)[0]!r}.'
                    )
        self._relation = frozenset(relation)

    @classmethod
    def antichain(cls, elements):
        """The equality order on elements."""
        return cls(elements)

    @classmethod
    def chain(cls, elements):
        """The linear order in which elements are listed increasingly."""
        elements = tuple(elements)
        return cls(elements, [(elements[i], elements[j])
                              for i in range(len(elements)) for j in range(i, len(elements))])

    @classmethod
    def trivial(cls):
        """The one-element order used for unlabelled digraphs."""
        return cls([UNLABELLED])

    @classmethod
    def counts(cls, bound):
        """The chain 0 <= 1 <= ... <= bound."""
        return cls.chain(range(bound + 1))

    @classmethod
    def presence_counts(cls, bound):
        """The counts 0..bound where 0 is incomparable to positive counts."""
        return cls(range(bound + 1),
                   [(i, j) for i in range(1, bound + 1) for j in range(i, bound + 1)])

    @property
    def is_finite(self):
        return True

    def __contains__(self, element):
        try:
            return element in self._members
        except TypeError:
            return False

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, QuasiOrder) or type(other) is not type(self):
            return NotImplemented
        return self._members == other._members and self._relation == other._relation

    def __hash__(self):
        return hash((frozenset(self._members), self._relation))

    def __repr__(self):
        return f'QuasiOrder(elements={list(self.elements)!r})'

    def check(self, element):
        """Raise DomainError unless element belongs to the ground set."""
        if element not in self:
            raise DomainError(f'{element!r} is not an element of the quasi-order.')

    def _leq(self, low, high):
        return (low, high) in self._relation

    def leq(self, low, high):
        """Return whether low <= high.

        Raises:
            DomainError: if either argument is foreign.
        """
        self.check(low)
        self.check(high)
        return self._leq(low, high)

    def equivalent(self, first, second):
        return self.leq(first, second) and self.leq(second, first)

    def comparable(self, first, second):
        return self.leq(first, second) or self.leq(second, first)

    def pairs(self):
        """Return the relation as a list of pairs in element order."""
        return [(low, high) for low in self.elements for high in self.elements
                if self._leq(low, high)]

    def matrix(self):
        """Return the relation as a boolean matrix indexed by element order."""
        return [[self._leq(low, high) for high in self.elements] for low in self.elements]

    def restrict(self, elements):
        """Return the explicit suborder induced on some elements."""
        elements = list(dict.fromkeys(elements))
        for element in elements:
            self.check(element)
        return QuasiOrder(elements, [(a, b) for a in elements for b in elements if self._leq(a, b)])


class _LazyOrder(QuasiOrder):
    """An order decided by a rule rather than by a stored relation."""

    def __init__(self):
        pass

    @property
    def is_finite(self):
        return False

    @property
    def elements(self):
        raise DomainError(f'{self!r} cannot be listed.')

    def pairs(self):
        raise DomainError('An infinite order has no finite pair list.')

    def matrix(self):
        raise DomainError('An infinite order has no finite matrix.')


class NaturalOrder(_LazyOrder):
    """The natural numbers ordered by <=. Members are non-negative ints."""

    def __contains__(self, element):
        return isinstance(element, int) and not isinstance(element, bool) and element >= 0

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(type(self).__name__)

    def __repr__(self):
        return f'{type(self).__name__}()'

    def _leq(self, low, high):
        return low <= high


class PresenceOrder(NaturalOrder):
    """Natural numbers where 0 is incomparable to every positive number."""

    def _leq(self, low, high):
        if low == 0 or high == 0:
            return low == high
        return low <= high


class ProductOrder(_LazyOrder):
    """The componentwise order on tuples drawn from factor orders."""

    def __init__(self, factors):
        self.factors = tuple(factors)

    @property
    def is_finite(self):
        return all(factor.is_finite for factor in self.factors)

    @property
    def elements(self):
        if not self.is_finite:
            raise DomainError('A product with an infinite factor cannot be listed.')
        return tuple(itertools.product(*(factor.elements for factor in self.factors)))

    def __contains__(self, element):
        return (isinstance(element, tuple) and len(element) == len(self.factors)
                and all(part in factor for part, factor in zip(element, self.factors)))

    def __eq__(self, other):
        return type(other) is type(self) and other.factors == self.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f'ProductOrder({list(self.factors)!r})'

    def _leq(self, low, high):
        return all(factor._leq(a, b) for factor, a, b in zip(self.factors, low, high))

    def pairs(self):
        elements = self.elements
        return [(a, b) for a in elements for b in elements if self._leq(a, b)]

    def matrix(self):
        elements = self.elements
        return [[self._leq(a, b) for b in elements] for a in elements]


class DisjointUnionOrder(ProductOrder):
    """The tagged union of two orders; elements are (0, x) or (1, y)."""

    @property
    def elements(self):
        return tuple((tag, element) for tag, factor in enumerate(self.factors)
                     for element in factor.elements)

    def __contains__(self, element):
        return (isinstance(element, tuple) and len(element) == 2
                and element[0] in (0, 1) and element[1] in self.factors[element[0]])

    def __repr__(self):
        return f'DisjointUnionOrder({list(self.factors)!r})'

    def _leq(self, low, high):
        if low[0] != high[0]:
            return False
        return self.factors[low[0]]._leq(low[1], high[1])


def qo_combine(kind, first, second):
    """Combine two quasi-orders.

    Args:
        kind (str): 'product' for the componentwise order on pairs or
            'disjoint-union' for the tagged union.
        first (QuasiOrder): the first order.
        second (QuasiOrder): the second order.

    Returns:
        QuasiOrder: the combined order.

    Raises:
        DomainError: if kind is unknown.
    """
    if kind == 'product':
        return ProductOrder([first, second])
    if kind == 'disjoint-union':
        return DisjointUnionOrder([first, second])
    raise DomainError(f'Unknown combination {kind!r}; use product or disjoint-union.')


def higman_embedding(first, second, qo):
    """Find a strictly increasing index map witnessing first <= second.

    Greedy matching of each entry of first to the earliest feasible entry of
    second is complete for the subsequence order.

    Args:
        first (sequence): entries of qo.
        second (sequence): entries of qo.
        qo (QuasiOrder): the entry order.

    Returns:
        list or None: the indices into second, or None.

    Raises:
        DomainError: if an entry is not an element of qo.
    """
    for entry in itertools.chain(first, second):
        qo.check(entry)
    witness = []
    position = 0
    for entry in first:
        while position < len(second) and not qo.leq(entry, second[position]):
            position += 1
        if position == len(second):
            return None
        witness.append(position)
        position += 1
    return witness


def higman_leq(first, second, qo):
    """Return whether first embeds into second under the subsequence order."""
    return higman_embedding(first, second, qo) is not None
