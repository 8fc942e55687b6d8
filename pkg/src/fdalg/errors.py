"""Exception hierarchy shared by every fdalg module."""


class AlgebraError(Exception):
    """Base class for all errors raised by fdalg."""


class MixedFields(AlgebraError, TypeError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class BadField(AlgebraError, ValueError):
    pass


class ParseError(AlgebraError, ValueError):
    """Malformed text input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSquare(AlgebraError, ValueError):
    pass


class DimensionMismatch(AlgebraError, ValueError):
    pass


class Singular(AlgebraError, ArithmeticError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class DuplicateTriple(AlgebraError, ValueError):
    pass


class MixedAlgebras(AlgebraError, TypeError):
    pass


class UnknownBuiltin(AlgebraError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown builtin"


class NoUnit(AlgebraError, ArithmeticError):
    pass


class NoRightInverse(AlgebraError, ArithmeticError):
    pass


class NotRepresentable(AlgebraError, ArithmeticError):
    pass


class NonassociativeUnsupported(AlgebraError, ValueError):
    pass
