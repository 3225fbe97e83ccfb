"""Exception hierarchy shared by every module."""


class LensGridError(Exception):
    """Base class. The CLI maps these to exit status 1."""


class InvalidDiagram(LensGridError):
    pass


class NonCoprime(InvalidDiagram):
    pass


class QOutOfRange(InvalidDiagram):
    pass


class ColumnCollision(InvalidDiagram):
    pass


class CellCollision(InvalidDiagram):
    pass


class BadOffset(InvalidDiagram):
    pass


class Interleaved(LensGridError):
    pass


class NoSuchSite(LensGridError):
    pass


class PatternMismatch(LensGridError):
    pass


class NotACycle(LensGridError):
    pass


class GradingMismatch(LensGridError):
    pass


class UnsupportedType(LensGridError):
    pass


class WrongStabilizationType(LensGridError):
    pass


class NotACommutationPair(LensGridError):
    pass


class DomainError(LensGridError):
    pass


class ParseError(Exception):
    """Malformed text input. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")
