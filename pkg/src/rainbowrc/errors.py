"""Exception hierarchy shared by every module of the package."""


class RainbowError(Exception):
    """Base class for all package errors."""


class GraphFormatError(RainbowError, ValueError):
    """Edge-list text could not be turned into a simple graph."""


class MalformedHeader(GraphFormatError):
    pass


class MalformedEdge(GraphFormatError):
    pass


class VertexOutOfRange(GraphFormatError, IndexError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class LoopEdge(GraphFormatError):
    pass


class NotTwoConnected(RainbowError):
    pass


class NoEvenCycle(RainbowError):
    pass


class NoEar(RainbowError):
    pass


class BudgetExceeded(RainbowError):
    """A bounded exhaustive search ran out of node expansions.

    Callers must treat the outcome as unknown, never as a negative answer.
    """


class Disconnected(RainbowError):
    pass


class UncoloredEdge(RainbowError):
    pass


class NotRainbowConnected(RainbowError):
    pass


class EarTooShort(RainbowError):
    pass


class EvenEar(RainbowError):
    pass


class OddEar(RainbowError):
    pass


class NotAChord(RainbowError):
    pass


class TooFewShortEars(RainbowError):
    pass


class FeetNotInStage(RainbowError):
    pass


class RepairExhausted(RainbowError):
    """No candidate for an under-determined reused color passed verification."""

    def __init__(self, message, trace=None, stage=None):
        super().__init__(message)
        self.trace = trace
        self.stage = stage


class ConstructionUnverified(RainbowError):
    """A finished coloring failed the final verification gate."""

    def __init__(self, message, trace=None, pair=None):
        super().__init__(message)
        self.trace = trace
        self.pair = pair


class InfeasibleParameters(RainbowError, ValueError):
    pass
