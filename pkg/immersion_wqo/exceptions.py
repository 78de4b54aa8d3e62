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
Contains the exceptions raised by immersion-wqo.
"""


class ImmersionWqoException(Exception):
    """An error occurred building or analyzing a digraph."""
    pass


class StructuralError(ImmersionWqoException):
    """A structure is malformed, e.g. a dangling id or a thread that is not a path."""
    pass


class DomainError(ImmersionWqoException):
    """A value lies outside the domain of the requested operation."""
    pass


class PreconditionError(ImmersionWqoException):
    """An input has the wrong shape for the requested operation.

    This is distinct from a negative verdict: a triple that is not one-way is
    not "outside A_k", it is not a valid question to ask.
    """
    pass


class HypothesisViolation(PreconditionError):
    """A digraph is covered by two one-way series-parallel triples.

    Attributes:
        witness (HypothesisWitness): the cover (X, Y, s, t).
    """
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class ResourceGuardError(ImmersionWqoException):
    """An exact search would exceed the configured size guard."""
    pass


class InternalInvariantError(ImmersionWqoException):
    """A construction guaranteed to succeed has failed."""
    pass


class InterchangeError(ImmersionWqoException):
    """An interchange document could not be read."""
    pass
