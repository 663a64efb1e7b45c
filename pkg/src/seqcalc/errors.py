"""Exception hierarchy shared by every seqcalc module.

Two families matter to the CLI: ``UsageError`` (bad input text, exit code 2)
and ``DomainError`` (structurally valid input that violates an operation's
precondition, exit code 3).
"""

from __future__ import annotations


class SeqCalcError(Exception):
    """Base class for all seqcalc errors."""


class DomainError(SeqCalcError):
    """A precondition of an operation was violated."""


class UsageError(SeqCalcError):
    """Input text could not be understood."""


class LengthMismatch(DomainError):
    def __init__(self, left: int, right: int, what: str = "sequences"):
        super().__init__(f"{what} have different lengths: {left} != {right}")
        self.left = left
        self.right = right


class ZeroEntry(DomainError):
    def __init__(self, index: int):
        super().__init__(f"zero entry at index {index}")
        self.index = index


class OutOfRange(DomainError):
    def __init__(self, message: str):
        super().__init__(message)


class InvertedBounds(DomainError):
    def __init__(self, a: int, b: int):
        super().__init__(f"lower bound {a} exceeds upper bound {b}")
        self.a = a
        self.b = b


class TooShort(DomainError):
    def __init__(self, length: int, minimum: int):
        super().__init__(f"sequence of length {length} is too short (need >= {minimum})")
        self.length = length
        self.minimum = minimum


class NegativePower(DomainError):
    def __init__(self, exponent: int):
        super().__init__(f"operator powers must be nonnegative, got {exponent}")
        self.exponent = exponent


class BadParameter(DomainError):
    def __init__(self, message: str):
        super().__init__(message)


class ParseError(UsageError):
    """Operator expression syntax error, with byte offset and expected tokens."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        expect = " or ".join(expected)
        super().__init__(f"at offset {offset}: expected {expect}, found {found}")
        self.offset = offset
        self.expected = expected
        self.found = found


class FormatError(UsageError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class NonContiguousIndex(UsageError):
    def __init__(self, expected: int, got: int, line: int):
        super().__init__(f"line {line}: expected index {expected}, got {got}")
        self.expected = expected
        self.got = got
        self.line = line


class UnknownCheck(UsageError):
    def __init__(self, name: str, catalog: tuple[str, ...]):
        super().__init__(f"unknown check {name!r}; known: {', '.join(catalog)}")
        self.name = name
