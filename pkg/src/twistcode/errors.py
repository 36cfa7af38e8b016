"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Operand shapes are incompatible."""


class ParseError(ValueError):
    """A text file could not be parsed.

    ``line`` is the 1-based line number of the offending line, when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ValueError):
    """Inputs parse but violate a structural requirement (degrees, lengths, ranges)."""


class LocalSystemShapeError(ValidationError):
    """A restriction map is missing or has the wrong shape."""
