"""Exception types raised by the analyzer."""

from __future__ import annotations


class AosrmError(Exception):
    """Base class for all analyzer errors."""


class RootNotFound(AosrmError):
    pass


class IoFailure(AosrmError):
    def __init__(self, message: str, cause: BaseException | None = None):
        super().__init__(message)
        self.cause = cause


class LexError(AosrmError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnterminatedLiteral(LexError):
    pass


class UnterminatedComment(LexError):
    pass


class ParseFailure(AosrmError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class UnknownType(AosrmError, KeyError):
    pass


class InvalidTally(AosrmError, ValueError):
    pass
