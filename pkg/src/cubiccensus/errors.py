"""Exception hierarchy shared by every module of the package."""


class CubicCensusError(Exception):
    """Base class for all errors raised by cubiccensus."""


class GraphConstructionError(CubicCensusError, ValueError):
    pass


class SelfLoopError(GraphConstructionError):
    pass


class DuplicateEdgeError(GraphConstructionError):
    pass


class VertexOutOfRangeError(GraphConstructionError):
    pass


class TooManyVerticesError(GraphConstructionError):
    pass


class NotConnectedError(CubicCensusError, ValueError):
    pass


class NotCubicError(CubicCensusError, ValueError):
    pass


class PreconditionViolatedError(CubicCensusError, ValueError):
    pass


class NotLadderBridgeError(PreconditionViolatedError):
    pass


class ParameterOutOfRangeError(CubicCensusError, ValueError):
    pass


class CyclomaticTooLargeError(CubicCensusError, ValueError):
    pass


class EdgeCountTooLargeError(CubicCensusError, ValueError):
    pass


class NotDivisibleError(CubicCensusError, ArithmeticError):
    """An exact division that must succeed did not; indicates a bug."""


class NonIntegerResultError(CubicCensusError, ArithmeticError):
    """A closed form that must be integral was not; indicates a bug."""


class MalformedInputError(CubicCensusError, ValueError):
    pass
