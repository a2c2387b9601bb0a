"""Exception hierarchy shared by all modules."""


class FilterGermError(Exception):
    """Base class for every error raised by this package."""


class MalformedTable(FilterGermError, ValueError):
    pass


class ValidationError(FilterGermError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class MeetMissing(FilterGermError, ValueError):
    pass


class TooLarge(FilterGermError):
    pass


class NotIdempotentFilter(FilterGermError, ValueError):
    pass


class NotProper(FilterGermError, ValueError):
    pass


class BadPatchSet(FilterGermError, ValueError):
    pass


class DomainError(FilterGermError, ValueError):
    pass


class NotComposable(FilterGermError, ValueError):
    pass


class BadBase(FilterGermError, ValueError):
    pass


class ParseError(FilterGermError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class MissingZero(FilterGermError, ValueError):
    pass
