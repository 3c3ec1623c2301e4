"""Exception hierarchy shared by every module."""


class QLRAError(Exception):
    """Base class for all errors raised by this package."""


class NotInPositiveCone(QLRAError, ValueError):
    """A split-complex number with non-positive squared modulus was given
    where the positive cone is required."""


class KindMismatch(QLRAError, ValueError):
    pass


class DegenerateDenominator(QLRAError, ZeroDivisionError):
    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{message} at {location}")
        self.location = location


class NonProbability(QLRAError, ValueError):
    pass


class ParseError(QLRAError, ValueError):
    def __init__(self, message, line=None, column=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.column = column
        self.field = field


class SchemaError(ParseError):
    pass


class InfeasibleRow(QLRAError, ValueError):
    def __init__(self, message, row=None):
        super().__init__(message if row is None else f"row {row + 1}: {message}")
        self.row = row


class NoMixedRow(InfeasibleRow):
    """A row mixes |lambda| <= 1 and |lambda| > 1 coefficients; no phase
    construction is available for it."""


class NoUnitaryCombination(QLRAError, ValueError):
    pass


class ZeroState(QLRAError, ValueError):
    pass


class ExhaustedRejection(QLRAError, RuntimeError):
    pass


class InvalidData(QLRAError, ValueError):
    """Context data failed validation; ``report`` holds the failing checks."""

    def __init__(self, report):
        names = ", ".join(c.constraint for c in report.failures[:5])
        super().__init__(f"data failed validation: {names}")
        self.report = report
