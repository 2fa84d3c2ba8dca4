"""Error types shared by every layer of the interpreter."""


class AbacusError(Exception):
    """Base class for all user-facing errors."""


class DivisionByZero(AbacusError):
    pass


class DomainError(AbacusError):
    pass


class RangeError(AbacusError):
    pass


class DimensionError(AbacusError):
    pass


class SingularMatrixError(AbacusError):
    pass


class FormatError(AbacusError):
    pass


class IoError(AbacusError):
    pass


class UndefinedVariable(AbacusError):
    pass


class UndefinedFunction(AbacusError):
    pass


class UnknownCommand(AbacusError):
    pass


class EvalTypeError(AbacusError):
    """Operation applied to operands of unsupported classes."""


class ColumnIndexError(AbacusError):
    pass


class ParseError(AbacusError):
    """Lexing or parsing failure, with a position inside the source."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.message = message
        self.line = line
        self.col = col
