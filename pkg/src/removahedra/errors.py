"""Exception hierarchy shared across the package."""


class RemovahedraError(Exception):
    """Base class for all package errors."""


class ParseError(RemovahedraError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class EmptyBlock(RemovahedraError):
    pass


class UnknownElement(RemovahedraError):
    pass


class MissingSingleton(RemovahedraError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"missing singleton block {{{element}}}")


class UnionMissing(RemovahedraError):
    def __init__(self, block_a, block_b):
        self.witness = (block_a, block_b)
        super().__init__(
            f"blocks {sorted(block_a)} and {sorted(block_b)} intersect "
            "but their union is not a block"
        )


class NotConnected(RemovahedraError):
    pass


class GroundTooLarge(RemovahedraError):
    pass


class NotIntersectionClosed(RemovahedraError):
    pass


class BlockNotInBuildingSet(RemovahedraError):
    pass


class GroundSetMember(RemovahedraError):
    """A nested set may not contain the full ground set."""


class NotNested(RemovahedraError):
    pass


class NotMaximal(RemovahedraError):
    pass


class NotAdjacent(RemovahedraError):
    pass


class NoFlipFound(RemovahedraError):
    """Internal inconsistency: a wall of the fan has no opposite chamber."""


class MultipleFlipsFound(RemovahedraError):
    """Internal inconsistency: a wall of the fan has several opposite chambers."""


class CrossCheckFailed(RemovahedraError):
    """Two independent computations of the same quantity disagree."""


class GammaTooSmall(RemovahedraError):
    pass


class NonGenericFunctional(RemovahedraError):
    pass


class NotGenerating(RemovahedraError):
    pass


class Unbounded(RemovahedraError):
    pass


class EmptyPolytope(RemovahedraError):
    pass
