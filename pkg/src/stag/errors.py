"""Exception types shared across the package."""


class StagError(Exception):
    """Base class for all library errors."""


class ParseError(StagError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class Disconnected(StagError):
    pass


class HasBridge(StagError):
    def __init__(self, edge_id):
        self.edge_id = edge_id
        super().__init__(f"graph has a bridge (edge {edge_id})")


class TooLarge(StagError):
    pass


class TooManyTrees(StagError):
    pass


class Acyclic(StagError):
    pass


class EdgeInTree(StagError):
    pass


class NotTwoConnected(StagError):
    pass


class NoWitness(StagError):
    pass


class Unannotated(StagError):
    pass


class NotAStag(StagError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class NotMinimal(StagError):
    pass


class ValidationFailed(StagError):
    pass
