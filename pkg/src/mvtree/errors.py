"""Exception hierarchy.

Input errors describe malformed data (bad edge lists, out-of-range vertices,
oversized exhaustive requests). Precondition errors describe well-formed
input on which an operation is undefined (legs of a path, line graph of a
single edge). The CLI maps the two families to distinct exit codes.
"""


class MutualVisibilityError(ValueError):
    """Base class for every error raised by this package."""


class InputError(MutualVisibilityError):
    pass


class PreconditionError(MutualVisibilityError):
    pass


class NotATree(InputError):
    pass


class NotAGraph(InputError):
    pass


class VertexOutOfRange(InputError, IndexError):
    pass


class TooLarge(InputError):
    """Requested instance exceeds an exhaustive-search limit."""


class EmptySeed(PreconditionError):
    pass


class EmptyQ(PreconditionError):
    pass


class Overlap(PreconditionError):
    pass


class NoBranchVertex(PreconditionError):
    pass


class TooSmall(PreconditionError):
    pass


class NoEdges(PreconditionError):
    pass


class TooFewEdges(PreconditionError):
    pass


class NotBlockGraph(PreconditionError):
    pass


class PreconditionViolated(PreconditionError):
    pass
