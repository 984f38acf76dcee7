"""Exception types. Indices carried by exceptions are 1-based."""

from __future__ import annotations


class LatinTabError(Exception):
    pass


class PartitionError(LatinTabError, ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class TableauError(LatinTabError, ValueError):
    """Base class for filling validation failures."""


class ShapeMismatch(TableauError):
    def __init__(self, row, message=None):
        super().__init__(message or f"row {row} does not match the shape")
        self.row = row


class RowNotPermutation(TableauError):
    def __init__(self, row, entries=None):
        msg = f"row {row} is not a permutation of 1..{len(entries)}" if entries is not None else f"row {row} is not a permutation"
        super().__init__(msg)
        self.row = row
        self.entries = entries


class ColumnRepeat(TableauError):
    def __init__(self, column, value, rows):
        super().__init__(f"value {value} repeats in column {column} (rows {rows[0]} and {rows[1]})")
        self.column = column
        self.value = value
        self.rows = tuple(rows)


class IllegalTransform(LatinTabError, ValueError):
    pass


class ParseError(LatinTabError, ValueError):
    def __init__(self, line, column, reason):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class ComponentTooLarge(LatinTabError):
    def __init__(self, cap):
        super().__init__(f"isotopy component exceeds the cap of {cap} vertices")
        self.cap = cap


class InvariantViolation(LatinTabError, AssertionError):
    """A computed quantity contradicts a proven statement. Either the statement
    is false or there is a bug; both are reported loudly."""


class NonRegularComponent(InvariantViolation):
    pass


class InexactDivision(InvariantViolation):
    pass


class CliqueTheoremViolation(InvariantViolation):
    pass


class CriterionMismatch(InvariantViolation):
    pass
