"""Exception types shared across the package."""


class CompSpectrumError(Exception):
    """Base class for every error this package raises on bad data or usage."""


class InvalidInputError(CompSpectrumError, ValueError):
    """Input data or parameters violate a precondition."""


class TooShortError(InvalidInputError):
    """Sequence is too short for the requested operation."""


class NoOccurrenceError(CompSpectrumError, ValueError):
    """Requested pair does not occur in the sequence."""


class InsufficientDataError(CompSpectrumError, ValueError):
    """Not enough points for a meaningful fit."""


class SeriesParseError(CompSpectrumError, ValueError):
    """A series file contains a line that cannot be parsed."""

    def __init__(self, path, line_no, line):
        super().__init__(f"{path}:{line_no}: cannot parse {line!r}")
        self.path = str(path)
        self.line_no = line_no
        self.line = line
