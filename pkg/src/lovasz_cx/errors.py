"""Exception types raised across the package."""

from __future__ import annotations


class LovaszError(Exception):
    """Base class for all package errors."""


# graph core
class IndexOutOfRange(LovaszError, IndexError):
    pass


class LoopRejected(LovaszError, ValueError):
    pass


class OrderTooLarge(LovaszError, ValueError):
    pass


class MalformedHeader(LovaszError, ValueError):
    pass


class TrailingBits(LovaszError, ValueError):
    pass


class InvalidCharacter(LovaszError, ValueError):
    pass


# groups
class UnknownDescriptor(LovaszError, ValueError):
    pass


class NotLatinSquare(LovaszError, ValueError):
    pass


class NotAssociative(LovaszError, ValueError):
    pass


class NoIdentity(LovaszError, ValueError):
    pass


class UnboundGenerator(LovaszError, KeyError):
    pass


# families
class DegenerateParameter(LovaszError, ValueError):
    pass


class EdgeCollision(LovaszError, ValueError):
    pass


class NotAPermutation(LovaszError, ValueError):
    pass


class AsymmetricConnectionSet(LovaszError, ValueError):
    pass


class IdentityInConnectionSet(LovaszError, ValueError):
    pass


class NotAGpGraph(LovaszError, ValueError):
    pass


class SpecSyntaxError(LovaszError, ValueError):
    pass


# hypergraph
class IsolatedVertex(LovaszError, ValueError):
    pass


class NotIndependent(LovaszError, ValueError):
    pass


# verifier
class NotRegular(LovaszError, ValueError):
    pass


class NotEdgeColorable(LovaszError, ValueError):
    pass


class BudgetExceeded(LovaszError, RuntimeError):
    def __init__(self, message: str, completed=()):
        super().__init__(message)
        self.completed = tuple(completed)


class PreconditionViolated(LovaszError, ValueError):
    pass


class InternalProofViolation(LovaszError, AssertionError):
    pass


# harness
class ResumeMismatch(LovaszError, ValueError):
    pass


class CorpusEntryMissing(LovaszError, FileNotFoundError):
    pass
