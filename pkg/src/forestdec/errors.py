"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ForestDecError(Exception):
    """Base class for all package errors."""


class LoopArc(ForestDecError):
    """An arc whose tail equals its head was supplied."""


class OutOfRange(ForestDecError):
    """An arc endpoint lies outside the declared vertex range."""


class UnknownVertex(ForestDecError):
    """A vertex id does not belong to the digraph or graph."""


class UnknownArc(ForestDecError):
    """An arc id does not belong to the digraph."""


class PreconditionViolated(ForestDecError):
    """Input does not satisfy the structural precondition of an operation."""


class IncompleteLabeling(ForestDecError):
    """A decomposition does not label exactly the arcs of its digraph."""


class NotAPath(ForestDecError):
    """The underlying graph is not a path."""


class NotACycle(ForestDecError):
    """The underlying graph is not a cycle."""


class UnsupportedXSet(ForestDecError):
    """An X-set contains neither {{}, {1, 2}} nor {{1}, {2}}."""


class BadParameter(ForestDecError):
    """A numeric parameter lies outside the domain of a constructor."""


class InvalidSource(ForestDecError):
    """A source instance fails validation for the requested reduction."""


class NotDiregular(InvalidSource):
    """A digraph is not 2-diregular."""


class UnsatisfiedPrecondition(ForestDecError):
    """An assignment does not satisfy the source instance."""


class InvalidDecomposition(ForestDecError):
    """A decomposition fails verification."""


class UnsupportedSpec(ForestDecError):
    """No polynomial-time solver handles the requested bounds."""


class ParseError(ForestDecError):
    """An input file could not be parsed."""
