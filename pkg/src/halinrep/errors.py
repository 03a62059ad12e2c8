"""Exception types raised across the package."""

from __future__ import annotations


class HalinRepError(Exception):
    """Base class for every error raised by halinrep."""


class TooSmall(HalinRepError):
    pass


class NotTuc(HalinRepError):
    """The graph is not a tree-union-cycle graph; ``reason`` says why."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class NotInternal(HalinRepError):
    pass


class IsWheel(HalinRepError):
    pass


class DegenerateShape(HalinRepError):
    pass


class DegenerateHeight(HalinRepError):
    pass


class MissingShape(HalinRepError):
    pass


class GridTooSmall(HalinRepError):
    pass


class GraphFormatError(HalinRepError):
    """Malformed graph file. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, line: int | None = None) -> None:
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class DuplicateEdge(GraphFormatError):
    pass


class IdOutOfRange(GraphFormatError):
    pass


class DocumentFormatError(HalinRepError):
    pass
