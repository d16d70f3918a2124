"""Exception hierarchy shared by every module."""


class CWGraphError(Exception):
    """Base class for all library errors."""


class ParseError(CWGraphError):
    """Malformed graph input; carries the offending line number."""

    def __init__(self, message, lineno=None):
        super().__init__(message if lineno is None else f"line {lineno}: {message}")
        self.lineno = lineno


class LoopEdge(CWGraphError):
    pass


class EmptyGraph(CWGraphError):
    pass


class UnknownVertex(CWGraphError):
    pass


class Disconnected(CWGraphError):
    pass


class NotAnEdge(CWGraphError):
    pass


class SizeGuard(CWGraphError):
    """Input exceeds an enumeration cap; caps are configuration, not semantics."""


class NotCameronWalker(CWGraphError):
    pass


class InvalidDecomposition(CWGraphError):
    pass


class InvalidSize(CWGraphError):
    pass


class NotAClique(CWGraphError):
    pass


class NotAPartition(CWGraphError):
    pass


class InvalidParams(CWGraphError):
    pass


class NotCompleteBipartiteSupport(CWGraphError):
    pass


class LengthMismatch(CWGraphError):
    pass


class NotAPermutation(CWGraphError):
    pass


class NotCohenMacaulay(CWGraphError):
    pass


class NotInFamily(CWGraphError):
    pass


class BudgetExceeded(CWGraphError):
    pass
